#include "trihedral/resolution.hpp"

#include <algorithm>

namespace trihedral {

Int fixed_point_count(GroupType type) {
    return type == GroupType::TypeI ? 1 : 3;
}

Int euler_toric(const Triangulation& tri) {
    return static_cast<Int>(tri.triangles.size());
}

Int euler_quotient(Int n, Int k) {
    if ((n - k) % 3 != 0)
        throw input_error("(n-k) not divisible by 3: n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    return (n - k) / 3 + k;
}

Int euler_final(Int n, Int k) {
    if ((n - k) % 3 != 0)
        throw input_error("(n-k) not divisible by 3: n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    return (n - k) / 3 + 3 * k;
}

ResolutionReport build_report(const DiagonalGroup& gp, const ReportOptions& opts) {
    ResolutionReport rep;
    rep.label = opts.label;
    rep.r = gp.r;
    for (const auto& g : gp.generators) rep.generators.push_back({g.a, g.b, g.c});
    rep.notes =
        "crepancy is machine-checked at the toric stage only (every added ray is "
        "junior); the final 3:1 quotient step preserves crepancy by construction "
        "and is not re-verified";

    std::string stage;
    try {
        stage = "group";
        const Int n = gp.order();
        rep.group_order_Gprime = n;
        rep.group_order_G = 3 * n;

        stage = "classify";
        rep.group_type = classify_type(gp);  // throws on mod-3 inconsistency
        rep.k = fixed_point_count(rep.group_type);
        rep.m = rep.group_type == GroupType::TypeI ? (n - 1) / 3 : n / 3;
        rep.checks.type_consistent = true;

        stage = "junior";
        const PhiSplit split = split_phi(gp);  // throws on 2:1 / 1:1 violation
        rep.phi1_size = static_cast<Int>(split.phi1.size());
        rep.phi2_size = static_cast<Int>(split.phi2.size());
        rep.phi_size = rep.phi1_size + rep.phi2_size;
        rep.g1_size = split.g1_size;
        rep.g2_size = split.g2_size;
        rep.checks.phi_split_consistent = true;

        stage = "lattice";
        const PlaneLattice lat = build_plane_lattice(gp);
        rep.lattice_index = lat.index;
        rep.checks.lattice_index_matches = (lat.index == n);

        stage = "triangulate";
        const Triangulation tri = build_symmetric_triangulation(gp);
        rep.triangle_count = static_cast<Int>(tri.triangles.size());

        stage = "validate";
        const TriangulationCheck check = validate_triangulation(tri, lat, gp);
        rep.checks.triangulation_valid = check.all();
        if (!check.all()) rep.failure_detail = check.detail;

        stage = "euler";
        rep.euler_toric = trihedral::euler_toric(tri);
        rep.checks.triangle_count_matches = (rep.euler_toric == n);
        rep.checks.crepant_toric =
            std::all_of(tri.points.begin(), tri.points.end(), [](const LatticePoint& p) {
                return p.p + p.q + p.s == p.r;
            });
        Int fixed_triangles = 0;
        for (const auto& orbit : tri.orbits)
            if (orbit.size() == 1) ++fixed_triangles;
        const bool center_vertex =
            gp.r % 3 == 0 &&
            std::binary_search(tri.points.begin(), tri.points.end(),
                               LatticePoint{gp.r / 3, gp.r / 3, gp.r / 3, gp.r});
        rep.checks.fixed_structure_consistent =
            rep.group_type == GroupType::TypeI
                ? (fixed_triangles == 1 && !center_vertex)
                : (fixed_triangles == 0 && center_vertex);
        rep.euler_quotient = trihedral::euler_quotient(n, rep.k);
        rep.euler_final = trihedral::euler_final(n, rep.k);

        stage = "classes";
        rep.conj_formula = conjugacy_count_formula(gp);
        const std::vector<TrihedralElement> group = enumerate_group(gp);
        rep.conj_enum = conjugacy_classes_enum(group, gp.generators);
        rep.orbifold_euler = trihedral::orbifold_euler(group);
        rep.checks.euler_eq_formula = (rep.euler_final == rep.conj_formula);
        rep.checks.euler_eq_enum = (rep.euler_final == rep.conj_enum);
        rep.checks.euler_eq_orbifold = (rep.euler_final == rep.orbifold_euler);

        stage = "oracle";
        if (rep.group_order_G <= opts.oracle_bound) {
            rep.oracle_classes = conjugacy_count_bruteforce(gp, opts.oracle_bound);
            rep.checks.oracle_classes_agree = (*rep.oracle_classes == rep.euler_final);
        }
    } catch (const std::exception& e) {
        rep.failed_stage = stage;
        rep.failure_detail = e.what();
    }
    rep.verified = rep.failed_stage.empty() && rep.checks.all();
    return rep;
}

}  // namespace trihedral
