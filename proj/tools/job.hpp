#pragma once

// Job files are YAML documents; see docs/job-format.md for the grammar.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "surfcohom/surfcohom.hpp"

namespace surfcohom::cli {

struct ModuleSpec {
    std::string name;
    std::size_t rank = 1;
    std::vector<std::pair<std::string, IntMatrix>> action;  // in file order
    int line = 0, column = 0;
};

enum class TaskKind { Cohomology, CupTable, ClassifyBundles, Resolution, Verify };

struct TaskSpec {
    TaskKind kind;
    std::vector<std::string> modules;
    int line = 0, column = 0;
};

struct JobSpec {
    SurfaceKind kind = SurfaceKind::Orientable;
    int genus = 1;
    std::vector<ModuleSpec> modules;
    std::vector<TaskSpec> tasks;

    SurfacePresentation presentation() const { return SurfacePresentation(kind, genus); }
};

namespace detail {

[[noreturn]] inline void fail(const std::string& what, const YAML::Node& node) {
    const auto m = node.Mark();
    throw ParseError(what, m.line + 1, m.column + 1);
}

inline long long as_integer(const YAML::Node& node, const std::string& what) {
    if (!node.IsScalar()) fail(what + " must be an integer", node);
    const std::string& s = node.Scalar();
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        fail(what + " must be an integer, got '" + s + "'", node);
    }
    if (used != s.size()) fail(what + " must be an integer, got '" + s + "'", node);
    return v;
}

inline std::string as_string(const YAML::Node& node, const std::string& what) {
    if (!node.IsScalar()) fail(what + " must be a scalar", node);
    return node.Scalar();
}

inline void only_keys(const YAML::Node& map, std::initializer_list<const char*> allowed,
                      const std::string& where) {
    for (const auto& kv : map) {
        const std::string key = kv.first.Scalar();
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail("unknown key '" + key + "' in " + where, kv.first);
    }
}

inline IntMatrix parse_matrix(const YAML::Node& node, std::size_t rank, const std::string& what) {
    if (!node.IsSequence()) fail(what + " must be a list of rows", node);
    if (node.size() != rank)
        fail(what + " has " + std::to_string(node.size()) + " rows, expected " + std::to_string(rank), node);
    IntMatrix m(rank, rank);
    for (std::size_t r = 0; r < rank; ++r) {
        const YAML::Node row = node[r];
        if (!row.IsSequence()) fail(what + " row " + std::to_string(r + 1) + " must be a list", row);
        if (row.size() != rank)
            fail(what + " row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                     " entries, expected " + std::to_string(rank),
                 row);
        for (std::size_t c = 0; c < rank; ++c) m(r, c) = as_integer(row[c], what + " entry");
    }
    return m;
}

} // namespace detail

inline JobSpec parse_job(const YAML::Node& root) {
    using detail::fail;
    if (!root.IsMap()) fail("job file must be a mapping", root);
    detail::only_keys(root, {"surface", "modules", "tasks"}, "job");
    JobSpec job;

    const YAML::Node surface = root["surface"];
    if (!surface) fail("missing 'surface' section", root);
    if (!surface.IsMap()) fail("'surface' must be a mapping", surface);
    detail::only_keys(surface, {"kind", "genus"}, "surface");
    if (!surface["kind"]) fail("surface needs 'kind'", surface);
    if (!surface["genus"]) fail("surface needs 'genus'", surface);
    const std::string kind = detail::as_string(surface["kind"], "surface kind");
    if (kind == "orientable")
        job.kind = SurfaceKind::Orientable;
    else if (kind == "nonorientable")
        job.kind = SurfaceKind::NonOrientable;
    else
        fail("surface kind must be 'orientable' or 'nonorientable', got '" + kind + "'", surface["kind"]);
    const long long genus = detail::as_integer(surface["genus"], "genus");
    const long long min_genus = job.kind == SurfaceKind::Orientable ? 1 : 2;
    if (genus < min_genus || genus > 64)
        fail("genus " + std::to_string(genus) + " out of range [" + std::to_string(min_genus) + ", 64]",
             surface["genus"]);
    job.genus = static_cast<int>(genus);

    if (const YAML::Node mods = root["modules"]) {
        if (!mods.IsMap()) fail("'modules' must be a mapping of name to module", mods);
        for (const auto& kv : mods) {
            ModuleSpec spec;
            spec.name = kv.first.Scalar();
            spec.line = kv.first.Mark().line + 1;
            spec.column = kv.first.Mark().column + 1;
            const YAML::Node body = kv.second;
            if (!body.IsMap()) fail("module '" + spec.name + "' must be a mapping", body);
            detail::only_keys(body, {"rank", "action"}, "module '" + spec.name + "'");
            if (!body["rank"]) fail("module '" + spec.name + "' needs 'rank'", body);
            const long long rank = detail::as_integer(body["rank"], "rank");
            if (rank < 1 || rank > 16) fail("rank must be in [1, 16]", body["rank"]);
            spec.rank = static_cast<std::size_t>(rank);
            if (const YAML::Node action = body["action"]) {
                if (!action.IsMap()) fail("'action' must map generator names to matrices", action);
                for (const auto& g : action) {
                    const std::string gen = g.first.Scalar();
                    spec.action.emplace_back(
                        gen, detail::parse_matrix(g.second, spec.rank,
                                                  "matrix of " + gen + " in module '" + spec.name + "'"));
                }
            }
            job.modules.push_back(std::move(spec));
        }
    }

    const YAML::Node tasks = root["tasks"];
    if (!tasks) fail("missing 'tasks' section", root);
    if (!tasks.IsSequence()) fail("'tasks' must be a list", tasks);
    for (const auto& t : tasks) {
        TaskSpec task;
        task.line = t.Mark().line + 1;
        task.column = t.Mark().column + 1;
        if (t.IsScalar()) {
            const std::string name = t.Scalar();
            if (name == "resolution")
                task.kind = TaskKind::Resolution;
            else if (name == "verify")
                task.kind = TaskKind::Verify;
            else
                fail("unknown task '" + name + "'", t);
        } else if (t.IsMap() && t.size() == 1) {
            const auto kv = *t.begin();
            const std::string name = kv.first.Scalar();
            if (name == "cohomology" || name == "classify_bundles") {
                task.kind = name == "cohomology" ? TaskKind::Cohomology : TaskKind::ClassifyBundles;
                task.modules.push_back(detail::as_string(kv.second, name + " argument"));
            } else if (name == "cup_table") {
                task.kind = TaskKind::CupTable;
                if (!kv.second.IsSequence() || kv.second.size() != 2)
                    fail("cup_table takes a list of two module names", kv.second);
                for (const auto& m : kv.second) task.modules.push_back(detail::as_string(m, "module name"));
            } else {
                fail("unknown task '" + name + "'", kv.first);
            }
        } else {
            fail("a task is a name or a single-key mapping", t);
        }
        job.tasks.push_back(std::move(task));
    }
    return job;
}

inline JobSpec parse_job_text(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
    return parse_job(root);
}

inline JobSpec load_job(const std::string& path) {
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::BadFile&) {
        throw ParseError("cannot read job file '" + path + "'");
    } catch (const YAML::ParserException& e) {
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
    return parse_job(root);
}

/// Resolves a generator name such as "a1" or "b2" against the presentation.
inline Generator parse_generator(const std::string& name, const SurfacePresentation& pres) {
    const Word w = parse_word(name, pres);
    if (w.size() != 1 || w[0].exponent != 1) throw ParseError("'" + name + "' is not a generator name");
    return w[0].generator;
}

/// Job modules plus the built-in rank-1 systems, validated.
inline std::map<std::string, CoefficientModule> build_modules(const JobSpec& job) {
    const auto pres = job.presentation();
    std::map<std::string, CoefficientModule> out;
    for (auto& m : builtin_modules(pres)) out.emplace(m.name(), m);
    for (const auto& spec : job.modules) {
        if (out.count(spec.name))
            throw ParseError("module name '" + spec.name + "' is already defined", spec.line, spec.column);
        std::map<Generator, IntMatrix> action;
        for (const auto& [gen, mat] : spec.action) {
            Generator g;
            try {
                g = parse_generator(gen, pres);
            } catch (const ParseError& e) {
                throw ParseError("module '" + spec.name + "': unknown generator '" + gen + "' for " + pres.str(),
                                 spec.line, spec.column);
            }
            if (action.count(g))
                throw ParseError("module '" + spec.name + "': generator '" + gen + "' given twice", spec.line,
                                 spec.column);
            action.emplace(g, mat);
        }
        const std::string where = "module '" + spec.name + "': ";
        try {
            out.emplace(spec.name, make_module(spec.rank, action, pres, spec.name));
        } catch (const DeterminantNotUnit& e) {
            throw DeterminantNotUnit(where + e.what());
        } catch (const RelatorNotRespected& e) {
            throw RelatorNotRespected(where + e.what());
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(where + e.what());
        }
    }
    for (const auto& t : job.tasks)
        for (const auto& name : t.modules)
            if (!out.count(name)) throw ParseError("undefined module '" + name + "'", t.line, t.column);
    return out;
}

} // namespace surfcohom::cli
