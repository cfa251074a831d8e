#pragma once

#include <optional>
#include <vector>

#include "trihedral/lattice.hpp"

namespace trihedral {

/// Exact rational, reduced with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(Int num, Int den);

/// L1 distance from a t=1 point to the simplex center (1/3, 1/3, 1/3):
/// |p/r - 1/3| + |q/r - 1/3| + |s/r - 1/3|.
Rational distance_to_center(const LatticePoint& pt);

/// Shape of the middle of the symmetric triangulation.
///   WholeSimplex            Phi empty; the simplex itself is one triangle.
///   CentralTriangle         Type I: rotation orbit of the d-minimal P.
///   StarAtCenter            Type II with Phi = {center}: three triangles
///                           center-e^i-e^j.
///   CentralTriangleWithStar Type II: orbit triangle of P, star-subdivided
///                           at the center.
enum class CentralKind { WholeSimplex, CentralTriangle, StarAtCenter, CentralTriangleWithStar };

struct CentralConfig {
    CentralKind kind = CentralKind::WholeSimplex;
    std::optional<LatticePoint> apex;    // P; rotations give P', P''
    std::optional<LatticePoint> center;  // (1,1,1)/3 scaled, Type II only
};

/// Picks P as the d-minimal point of Phi (Type II: Phi minus the center)
/// inside the closed domain {x >= z, y >= z}, ties broken by
/// lexicographic (p, q, s).  Every rotation orbit meets the domain, so
/// failure to find P for nonempty Phi raises invariant_violation.
CentralConfig find_central_config(const std::vector<LatticePoint>& phi,
                                  GroupType type, Int r);

/// A3-symmetric unimodular triangulation of the junior simplex.
/// `points` is sorted and is exactly Phi plus the corners; `triangles`
/// hold point indices in canonical form; `orbits` partitions triangle
/// indices under rotation.
struct Triangulation {
    Int r = 1;
    std::vector<LatticePoint> points;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::vector<int>> orbits;
    CentralConfig central;
};

/// Removes backtracking spurs from a polygon cycle: a vertex whose
/// outgoing edge exactly reverses the incoming direction is dropped
/// (the degenerate quadrangle with P on the edge e^1-e^2 reduces to the
/// corner triangle).  Returns the enclosed simple polygon, or an empty
/// list when nothing remains.
std::vector<LatticePoint> canonicalize_region_cycle(std::vector<LatticePoint> cycle);

/// Points of `candidates` lying in the closed polygon but not among its
/// vertices; these must all become vertices of the region triangulation.
std::vector<LatticePoint> points_in_region(const std::vector<LatticePoint>& polygon,
                                           const std::vector<LatticePoint>& candidates);

/// Full triangulation of a canonicalized region: fan from the first
/// vertex (in lex order) whose fan is strictly valid, then insert every
/// remaining lattice point by splitting its containing triangle or edge.
/// Any triangulation using all lattice points of the region consists of
/// empty lattice triangles, hence is unimodular; no flips are needed.
std::vector<std::array<LatticePoint, 3>> triangulate_region(
    const std::vector<LatticePoint>& polygon,
    const std::vector<LatticePoint>& interior_points);

/// The symmetric crepant triangulation: central configuration plus the
/// quadrangle (e^1, e^2, P, P') triangulated once and rotated twice.
/// Runs the exhaustive validator before returning; failures raise
/// invariant_violation naming the broken invariant.
Triangulation build_symmetric_triangulation(const DiagonalGroup& gp);

/// Orbit partition of the triangle set under rotation.  Type I has
/// exactly one orbit of size 1 (the central triangle); Type II has only
/// size-3 orbits.
std::vector<std::vector<int>> triangle_orbits(const Triangulation& tri);

}  // namespace trihedral
