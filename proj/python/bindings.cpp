#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trihedral/report_io.hpp"
#include "trihedral/sweep.hpp"

namespace py = pybind11;
using namespace trihedral;

// input_error derives std::invalid_argument and invariant_violation derives
// std::logic_error, so pybind's default translator already raises ValueError
// and RuntimeError respectively.

namespace {

DiagonalGroup group_of(Int r, const std::vector<std::array<Int, 3>>& gens) {
    return generate_diagonal_group(r, gens);
}

py::object json_to_py(const ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Crepant resolutions of trihedral quotient singularities: symmetric "
        "triangulations, Euler numbers and conjugacy class counts.";

    m.def(
        "analyze",
        [](Int r, const std::vector<std::array<Int, 3>>& generators,
           const std::string& label, Int oracle_bound) {
            ReportOptions opts{label, oracle_bound};
            return json_to_py(report_to_json(build_report(group_of(r, generators), opts)));
        },
        py::arg("r"), py::arg("generators"), py::arg("label") = "",
        py::arg("oracle_bound") = kDefaultOracleBound,
        "Run the full pipeline and return the verification report as a dict.");

    m.def(
        "verify",
        [](Int r, const std::vector<std::array<Int, 3>>& generators, Int oracle_bound) {
            ReportOptions opts{"", oracle_bound};
            ResolutionReport rep = build_report(group_of(r, generators), opts);
            py::dict out;
            out["chi"] = rep.euler_final;
            out["classes"] = rep.conj_enum;
            out["verified"] = rep.verified;
            return out;
        },
        py::arg("r"), py::arg("generators"),
        py::arg("oracle_bound") = kDefaultOracleBound,
        "Euler number, class count and the verified flag.");

    m.def(
        "triangulate",
        [](Int r, const std::vector<std::array<Int, 3>>& generators) {
            return json_to_py(
                triangulation_to_json(build_symmetric_triangulation(group_of(r, generators))));
        },
        py::arg("r"), py::arg("generators"),
        "Symmetric crepant triangulation of the junior simplex as a dict.");

    m.def(
        "triangulation_svg",
        [](Int r, const std::vector<std::array<Int, 3>>& generators) {
            return triangulation_to_svg(build_symmetric_triangulation(group_of(r, generators)));
        },
        py::arg("r"), py::arg("generators"),
        "SVG rendering of the symmetric triangulation.");

    m.def(
        "report_text",
        [](Int r, const std::vector<std::array<Int, 3>>& generators,
           const std::string& label, Int oracle_bound) {
            ReportOptions opts{label, oracle_bound};
            return report_to_text(build_report(group_of(r, generators), opts));
        },
        py::arg("r"), py::arg("generators"), py::arg("label") = "",
        py::arg("oracle_bound") = kDefaultOracleBound,
        "Human-readable verification report.");

    m.def(
        "sweep",
        [](Int max_r, bool two_gen, Int two_gen_max_r, Int oracle_bound,
           bool skip_oracle) {
            SweepOptions opts{max_r, two_gen, two_gen_max_r, oracle_bound, skip_oracle};
            SweepResult res = run_sweep(opts);
            py::list rows;
            for (const SweepRow& row : res.rows) {
                py::dict d;
                d["label"] = row.label;
                d["r"] = row.r;
                d["group_order"] = row.group_order;
                d["group_type"] = row.group_type;
                d["euler"] = row.euler;
                d["classes"] = row.classes;
                d["verified"] = row.verified;
                d["failure_detail"] = row.failure_detail;
                rows.append(d);
            }
            py::dict out;
            out["cases_total"] = res.cases_total;
            out["cases_failed"] = res.cases_failed;
            out["rows"] = rows;
            return out;
        },
        py::arg("max_r") = 30, py::arg("two_gen") = false,
        py::arg("two_gen_max_r") = 12, py::arg("oracle_bound") = kDefaultOracleBound,
        py::arg("skip_oracle") = false,
        "Verify every deduplicated group up to the given exponent bounds.");
}
