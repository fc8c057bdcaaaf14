#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "job.hpp"

namespace surfcohom::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Integers that fit in 64 bits are JSON numbers; larger ones are strings.
inline Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

inline Json group_json(const AbelianGroup& g, const std::vector<NamedClass>& named = {}) {
    Json j;
    j["description"] = g.str();
    j["free_rank"] = g.free_rank;
    j["torsion"] = to_json(IntVector(g.torsion.begin(), g.torsion.end()));
    Json gens = Json::array();
    for (const auto& v : g.generators) gens.push_back(to_json(v));
    j["generators"] = gens;
    if (!named.empty()) {
        Json n = Json::array();
        for (const auto& c : named) n.push_back(Json{{"label", c.label}, {"cocycle", to_json(c.cocycle)}});
        j["named_generators"] = n;
    }
    return j;
}

inline Json surface_json(const SurfacePresentation& pres) {
    return Json{{"kind", pres.is_orientable() ? "orientable" : "nonorientable"},
                {"genus", pres.genus()},
                {"relator", format_word(pres.relator())}};
}

inline Json cohomology_task(const CoefficientModule& m) {
    const auto rep = cohomology_groups(m);
    const auto lyndon = h2_lyndon(m);
    if (!lyndon.isomorphic(rep.H2))
        throw IdentityCheckFailure("H2 of " + m.name() + " is " + rep.H2.str() + " but the Lyndon route gives " +
                                   lyndon.str());
    Json j;
    j["task"] = "cohomology";
    j["module"] = m.name();
    j["rank"] = m.rank();
    j["H0"] = group_json(rep.H0, rep.h0_named);
    j["H1"] = group_json(rep.H1, rep.h1_named);
    j["H2"] = group_json(rep.H2, rep.h2_named);
    j["H2_lyndon"] = lyndon.str();
    return j;
}

inline Json cup_table_task(const CoefficientModule& m, const CoefficientModule& n) {
    const Resolution res(m.presentation());
    const CochainComplex cm(res, m), cn(res, n);
    const CupTable t = cup_table(cm, cn, delta11_closed(res.presentation()));
    Json j;
    j["task"] = "cup_table";
    j["left"] = m.name();
    j["right"] = n.name();
    j["H2"] = group_json(t.H2);
    j["rows"] = t.row_labels;
    j["columns"] = t.col_labels;
    Json rows_json = Json::array();
    for (std::size_t i = 0; i < t.row_cocycles.size(); ++i) rows_json.push_back(to_json(t.row_cocycles[i]));
    Json cols_json = Json::array();
    for (std::size_t i = 0; i < t.col_cocycles.size(); ++i) cols_json.push_back(to_json(t.col_cocycles[i]));
    j["row_cocycles"] = rows_json;
    j["column_cocycles"] = cols_json;
    Json entries = Json::array();
    for (std::size_t a = 0; a < t.row_labels.size(); ++a)
        for (std::size_t b = 0; b < t.col_labels.size(); ++b)
            entries.push_back(Json{{"left", t.row_labels[a]},
                                   {"right", t.col_labels[b]},
                                   {"coordinates", to_json(t.entries[a][b])},
                                   {"class", t.describe(a, b)}});
    j["entries"] = entries;
    const auto& pres = res.presentation();
    if (!pres.is_orientable() && m.name() == "theta1" && n.name() == "theta2" && pres.genus() >= 4)
        j["notes"] = Json::array(
            {"theta2 generators beyond y1* and y1*+y2* are y_k*-y_{k+1}*; the sums y_k*+y_{k+1}* for k >= 3 "
             "are not cocycles, so products with them are not listed"});
    return j;
}

inline Json bundles_task(const CoefficientModule& m) {
    const auto c = classify_torus_bundles(m);
    Json j;
    j["task"] = "classify_bundles";
    j["module"] = m.name();
    j["rank"] = m.rank();
    j["via_cohomology"] = group_json(c.via_cohomology);
    j["direct"] = group_json(c.direct);
    return j;
}

inline Json resolution_json(const SurfacePresentation& pres) {
    const Resolution res(pres);
    Json j;
    j["task"] = "resolution";
    j["surface"] = surface_json(pres);
    Json d1;
    for (const auto& l : res.p1_basis()) d1[l.str()] = res.d1(l).str();
    j["d1"] = d1;
    Json d2;
    for (const auto& l : res.p1_basis()) d2[l.str()] = res.d2().coordinate(l).str();
    j["d2"] = d2;
    j["delta0"] = format_tensor(delta0());
    Json d1j;
    for (const auto& l : res.p1_basis()) d1j[l.str()] = format_tensor(delta1(l));
    j["delta1"] = d1j;
    j["delta02"] = format_tensor(delta02());
    const TensorElement closed = delta11_closed(pres);
    j["delta11"] = format_tensor(closed);
    j["delta11_terms"] = closed.size();
    j["delta11_matches_recursive"] = closed == delta11_recursive(res);
    return j;
}

/// Chain-map identities for every ordered pair of modules on the surface.
inline Json verify_task(const SurfacePresentation& pres, const std::map<std::string, CoefficientModule>& mods,
                        bool corrupt, bool& passed) {
    const Resolution res(pres);
    const TensorElement d11 = corrupt ? corrupted_delta11(pres) : delta11_closed(pres);
    Json j;
    j["task"] = "verify";
    passed = d11 == delta11_recursive(res);
    j["delta11_matches_recursive"] = passed;
    Json checks = Json::array();
    for (const auto& [mn, m] : mods)
        for (const auto& [nn, n] : mods) {
            const auto r = verify_chain_identity(res, m, n, d11);
            for (const auto& c : r.checks) {
                passed = passed && c.passed;
                Json e{{"left", mn}, {"right", nn}, {"identity", c.name}, {"component", c.component},
                       {"passed", c.passed}};
                if (!c.passed) e["detail"] = c.detail;
                checks.push_back(e);
            }
        }
    j["checks"] = checks;
    j["passed"] = passed;
    return j;
}

struct RunResult {
    Json report;
    int exit_code = 0;
    std::string failure;  // first identity failure, for stderr
};

inline RunResult run_job(const JobSpec& job, std::uint64_t seed, bool corrupt_delta11 = false) {
    const auto pres = job.presentation();
    const auto mods = build_modules(job);
    RunResult out;
    out.report["schema_version"] = schema_version;
    out.report["command"] = "run";
    out.report["seed"] = seed;
    out.report["surface"] = surface_json(pres);
    Json tasks = Json::array();
    for (const auto& t : job.tasks) {
        switch (t.kind) {
        case TaskKind::Cohomology:
            tasks.push_back(cohomology_task(mods.at(t.modules[0])));
            break;
        case TaskKind::CupTable:
            tasks.push_back(cup_table_task(mods.at(t.modules[0]), mods.at(t.modules[1])));
            break;
        case TaskKind::ClassifyBundles:
            tasks.push_back(bundles_task(mods.at(t.modules[0])));
            break;
        case TaskKind::Resolution:
            tasks.push_back(resolution_json(pres));
            break;
        case TaskKind::Verify: {
            bool passed = true;
            Json v = verify_task(pres, mods, corrupt_delta11, passed);
            if (!passed && out.exit_code == 0) {
                out.exit_code = 2;
                for (const auto& c : v["checks"])
                    if (!c["passed"].get<bool>()) {
                        out.failure = c["identity"].get<std::string>() + " failed on the " +
                                      c["component"].get<std::string>() + " component for (" +
                                      c["left"].get<std::string>() + ", " + c["right"].get<std::string>() +
                                      "): " + c["detail"].get<std::string>();
                        break;
                    }
                if (out.failure.empty()) out.failure = "closed and recursive Δ11 differ";
            }
            tasks.push_back(std::move(v));
            break;
        }
        }
    }
    out.report["tasks"] = tasks;
    out.report["status"] = out.exit_code == 0 ? "ok" : "identity-check-failure";
    return out;
}

inline RunResult run_verify(const VerifyOptions& opt) {
    const VerifyReport r = verify_suite(opt);
    RunResult out;
    out.report["schema_version"] = schema_version;
    out.report["command"] = "verify";
    out.report["seed"] = opt.seed;
    out.report["orientable_genera"] = Json::array({1, opt.genus_max});
    out.report["nonorientable_genera"] = Json::array({2, opt.genus_max + 1});
    Json suites = Json::array();
    for (const auto& s : r.suites) {
        Json e{{"name", s.name}, {"cases", s.cases}, {"passed", s.passed()}};
        if (!s.passed()) {
            e["failures"] = s.failures;
            out.failure += (out.failure.empty() ? "" : "\n  ") + s.name + ": " + s.failures.front();
        }
        suites.push_back(e);
    }
    out.report["suites"] = suites;
    out.report["passed"] = r.ok();
    out.exit_code = r.ok() ? 0 : 2;
    return out;
}

inline RunResult run_resolution(const SurfacePresentation& pres) {
    RunResult out;
    out.report["schema_version"] = schema_version;
    out.report["command"] = "resolution";
    out.report["surface"] = surface_json(pres);
    Json r = resolution_json(pres);
    r.erase("surface");
    out.report["resolution"] = r;
    if (!r["delta11_matches_recursive"].get<bool>()) {
        out.exit_code = 2;
        out.failure = "closed and recursive Δ11 differ";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text rendering walks the same JSON tree, so both outputs carry the same
// numbers.

namespace detail {

inline bool is_flat(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& e : j)
        if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
    return true;
}

inline std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

inline std::string inline_text(const Json& j) {
    if (!j.is_array()) return scalar_text(j);
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
        s += (first ? "" : ", ") + inline_text(e);
        first = false;
    }
    return s + "]";
}

inline void render(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_flat(v)) {
                os << pad << k << ": " << inline_text(v) << '\n';
            } else {
                os << pad << k << ":\n";
                render(os, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_flat(e)) {
                os << pad << "- " << inline_text(e) << '\n';
            } else {
                os << pad << "-\n";
                render(os, e, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

} // namespace detail

inline std::string render_text(const Json& report) {
    std::ostringstream os;
    detail::render(os, report, 0);
    return os.str();
}

inline std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

} // namespace surfcohom::cli
