#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trihedral/report_io.hpp"
#include "trihedral/sweep.hpp"
#include "trihedral/triangulate.hpp"

using namespace trihedral;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

Int env_oracle_bound(Int fallback) {
    const char* env = std::getenv("TRIHEDRAL_ORACLE_BOUND");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v < 0)
        throw input_error("TRIHEDRAL_ORACLE_BOUND must be a nonnegative integer");
    return static_cast<Int>(v);
}

int exit_code_for(const ResolutionReport& rep) {
    if (!rep.failed_stage.empty()) return 3;  // pipeline invariant broke mid-run
    return rep.verified ? 0 : 1;
}

std::string sweep_text(const SweepResult& res) {
    std::ostringstream os;
    for (const auto& row : res.rows) {
        os << (row.verified ? "ok   " : "FAIL ") << "r=" << row.r << " |G'|="
           << row.group_order << " type=" << row.group_type << " chi=" << row.euler
           << " classes=" << row.classes << "  " << row.label;
        if (!row.failure_detail.empty()) os << "  [" << row.failure_detail << "]";
        os << "\n";
    }
    os << "cases=" << res.cases_total << " failed=" << res.cases_failed << "\n";
    return os.str();
}

ordered_json sweep_json(const SweepResult& res) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : res.rows) {
        ordered_json r;
        r["label"] = row.label;
        r["r"] = row.r;
        r["group_order"] = row.group_order;
        r["group_type"] = row.group_type;
        r["euler"] = row.euler;
        r["classes"] = row.classes;
        r["verified"] = row.verified;
        r["failure_detail"] = row.failure_detail;
        rows.push_back(std::move(r));
    }
    ordered_json j;
    j["cases_total"] = res.cases_total;
    j["cases_failed"] = res.cases_failed;
    j["rows"] = rows;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crepant-resolution Euler verifier for trihedral singularities"};
    app.require_subcommand(1);
    // Global options (--format, --oracle-bound) may appear after the
    // subcommand name as well.
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    Int oracle_bound = kDefaultOracleBound;
    CLI::Option* bound_opt = app.add_option(
        "--oracle-bound", oracle_bound,
        "largest |G| the brute-force class oracle will accept (0 disables)");

    std::string analyze_path, verify_path, tri_path, tri_out, tri_svg;
    CLI::App* analyze = app.add_subcommand("analyze", "full pipeline report");
    analyze->add_option("file", analyze_path, "group spec JSON")->required();

    CLI::App* triangulate =
        app.add_subcommand("triangulate", "emit the symmetric triangulation");
    triangulate->add_option("file", tri_path, "group spec JSON")->required();
    triangulate->add_option("--out", tri_out, "triangulation JSON output path")
        ->required();
    triangulate->add_option("--svg", tri_svg, "optional SVG figure path");

    CLI::App* verify = app.add_subcommand("verify", "check chi = class count");
    verify->add_option("file", verify_path, "group spec JSON")->required();

    Int max_r = 30;
    bool two_gen = false;
    Int two_gen_max_r = 12;
    CLI::App* sweep = app.add_subcommand("sweep", "verify families of groups");
    sweep->add_option("--max-r", max_r, "largest exponent for cyclic diagonal parts");
    sweep->add_flag("--two-gen", two_gen, "also sweep two-generator diagonal parts");
    sweep->add_option("--two-gen-max-r", two_gen_max_r,
                      "largest exponent for the two-generator sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; anything else is bad input.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!bound_opt->count()) oracle_bound = env_oracle_bound(oracle_bound);

        if (analyze->parsed() || verify->parsed()) {
            const GroupSpec spec =
                load_spec_file(analyze->parsed() ? analyze_path : verify_path);
            ReportOptions opts;
            opts.label = spec.label;
            opts.oracle_bound = oracle_bound;
            const ResolutionReport rep = build_report(group_from_spec(spec), opts);
            if (analyze->parsed()) {
                if (format == "json")
                    std::cout << report_to_json(rep).dump(2) << "\n";
                else
                    std::cout << report_to_text(rep);
            } else {
                if (format == "json") {
                    ordered_json j;
                    j["chi"] = rep.euler_final;
                    j["classes"] = rep.conj_enum;
                    j["verified"] = rep.verified;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "chi=" << rep.euler_final << " classes=" << rep.conj_enum
                              << " verified=" << (rep.verified ? "true" : "false")
                              << "\n";
                }
            }
            return exit_code_for(rep);
        }

        if (triangulate->parsed()) {
            const GroupSpec spec = load_spec_file(tri_path);
            const Triangulation tri =
                build_symmetric_triangulation(group_from_spec(spec));
            write_file(tri_out, triangulation_to_json(tri).dump(2) + "\n");
            if (!tri_svg.empty()) write_file(tri_svg, triangulation_to_svg(tri));
            if (format == "json") {
                ordered_json j;
                j["triangles"] = static_cast<Int>(tri.triangles.size());
                j["points"] = static_cast<Int>(tri.points.size());
                j["out"] = tri_out;
                j["svg"] = tri_svg.empty() ? ordered_json(nullptr) : ordered_json(tri_svg);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "wrote " << tri_out << " (" << tri.triangles.size()
                          << " triangles, " << tri.points.size() << " vertices)";
                if (!tri_svg.empty()) std::cout << " and " << tri_svg;
                std::cout << "\n";
            }
            return 0;
        }

        SweepOptions opts;
        opts.max_r = max_r;
        opts.two_gen = two_gen;
        opts.two_gen_max_r = two_gen_max_r;
        opts.oracle_bound = oracle_bound;
        opts.skip_oracle = (oracle_bound == 0);
        const SweepResult res = run_sweep(opts);
        if (format == "json")
            std::cout << sweep_json(res).dump(2) << "\n";
        else
            std::cout << sweep_text(res);
        return res.cases_failed == 0 ? 0 : 1;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
