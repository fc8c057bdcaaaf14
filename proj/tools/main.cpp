#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "report.hpp"

using namespace surfcohom;
using namespace surfcohom::cli;

namespace {

const char* error_kind(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const DeterminantNotUnit*>(&e)) return "DeterminantNotUnit";
    if (dynamic_cast<const RelatorNotRespected*>(&e)) return "RelatorNotRespected";
    if (dynamic_cast<const PresentationMismatch*>(&e)) return "PresentationMismatch";
    if (dynamic_cast<const NotACocycle*>(&e)) return "NotACocycle";
    if (dynamic_cast<const NotInvariant*>(&e)) return "NotInvariant";
    if (dynamic_cast<const CompositeNotZero*>(&e)) return "CompositeNotZero";
    if (dynamic_cast<const IdentityCheckFailure*>(&e)) return "IdentityCheckFailure";
    return "InvalidArgument";
}

int emit(const RunResult& r, const std::string& json_path) {
    std::cout << render_text(r.report);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << '\n';
            return 1;
        }
        out << render_json(r.report);
    }
    if (r.exit_code != 0) std::cerr << "identity check failed: " << r.failure << '\n';
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of surface groups with local coefficients"};
    app.require_subcommand(1);

    std::string json_path;
    std::uint64_t seed = 42;
    int genus_max = 5;
    bool corrupt = false;
    app.add_option("--json", json_path, "Also write the report as JSON to this path");
    app.add_option("--seed", seed, "Seed for randomized cases")->capture_default_str();
    app.add_option("--genus-max", genus_max, "Largest orientable genus checked by verify (nonorientable up to +1)")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    app.add_flag("--corrupt-delta11", corrupt)->group("");  // test hook

    auto* run = app.add_subcommand("run", "Run the tasks of a job file");
    run->fallthrough();
    std::string job_path;
    run->add_option("job", job_path, "Job file (YAML)")->required();

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->fallthrough();

    auto* resolution = app.add_subcommand("resolution", "Print the resolution and diagonal of a surface group");
    resolution->fallthrough();
    std::string kind = "orientable";
    int genus = 1;
    resolution->add_option("--kind", kind, "orientable or nonorientable")
        ->check(CLI::IsMember({"orientable", "nonorientable"}))
        ->capture_default_str();
    resolution->add_option("--genus", genus, "Genus")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) return emit(run_job(load_job(job_path), seed, corrupt), json_path);
        if (*verify) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.genus_max = genus_max;
            opt.corrupt_delta11 = corrupt;
            return emit(run_verify(opt), json_path);
        }
        const auto pres = SurfacePresentation(kind == "orientable" ? SurfaceKind::Orientable
                                                                   : SurfaceKind::NonOrientable,
                                              genus);
        return emit(run_resolution(pres), json_path);
    } catch (const IdentityCheckFailure& e) {
        std::cerr << "error: IdentityCheckFailure: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << error_kind(e) << ": " << e.what() << '\n';
        return 1;
    }
}
