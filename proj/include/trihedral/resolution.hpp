#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trihedral/oracle.hpp"
#include "trihedral/triangulate.hpp"

namespace trihedral {

/// Number of rotation-fixed points on the exceptional set of the toric
/// resolution: 1 for Type I, 3 for Type II.
Int fixed_point_count(GroupType type);

/// Euler number of the toric resolution = number of maximal cones =
/// number of triangles.  Must equal |G'|.
Int euler_toric(const Triangulation& tri);

/// Euler number of the A3-quotient of the toric resolution:
/// (n - k)/3 + k.  Throws input_error when 3 does not divide n - k.
Int euler_quotient(Int n, Int k);

/// Euler number after resolving the k fixed structures, each
/// contributing 3: (n - k)/3 + 3k.
Int euler_final(Int n, Int k);

/// One boolean per verified identity; `all()` folds them, treating a
/// skipped oracle comparison as neutral.
struct ReportChecks {
    bool type_consistent = false;
    bool phi_split_consistent = false;
    bool lattice_index_matches = false;
    bool triangulation_valid = false;
    bool triangle_count_matches = false;
    bool crepant_toric = false;
    bool fixed_structure_consistent = false;
    bool euler_eq_formula = false;
    bool euler_eq_enum = false;
    bool euler_eq_orbifold = false;
    std::optional<bool> oracle_classes_agree;  // unset when over the bound

    friend bool operator==(const ReportChecks&, const ReportChecks&) = default;

    bool all() const {
        return type_consistent && phi_split_consistent && lattice_index_matches &&
               triangulation_valid && triangle_count_matches && crepant_toric &&
               fixed_structure_consistent && euler_eq_formula && euler_eq_enum &&
               euler_eq_orbifold && oracle_classes_agree.value_or(true);
    }
};

/// Every derived quantity of one pipeline run.  On a stage failure the
/// report is still emitted with the fields computed so far,
/// `failed_stage` set, and verified = false.
struct ResolutionReport {
    std::string label;
    Int r = 1;
    std::vector<std::array<Int, 3>> generators;

    Int group_order_Gprime = 0;
    Int group_order_G = 0;
    GroupType group_type = GroupType::TypeI;
    Int m = 0;
    Int k = 0;
    Int phi_size = 0;
    Int phi1_size = 0;
    Int phi2_size = 0;
    Int g1_size = 0;
    Int g2_size = 0;
    Int lattice_index = 0;
    Int euler_toric = 0;
    Int euler_quotient = 0;
    Int euler_final = 0;
    Int conj_formula = 0;
    Int conj_enum = 0;
    Int orbifold_euler = 0;
    std::optional<Int> oracle_classes;
    Int triangle_count = 0;

    ReportChecks checks;
    std::string failed_stage;    // empty when the pipeline completed
    std::string failure_detail;
    /// Scope statement: which part of the crepancy claim is machine-checked.
    std::string notes;
    bool verified = false;

    friend bool operator==(const ResolutionReport&, const ResolutionReport&) = default;
};

struct ReportOptions {
    std::string label;
    Int oracle_bound = kDefaultOracleBound;
};

/// Runs the whole pipeline: type and counts, junior points, plane
/// lattice, triangulation, validators, Euler numbers, the three class
/// counts, and the brute-force oracle when within bound.
ResolutionReport build_report(const DiagonalGroup& gp, const ReportOptions& opts = {});

}  // namespace trihedral
