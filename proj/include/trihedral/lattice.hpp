#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "trihedral/group.hpp"

namespace trihedral {

/// Rational point (p/r, q/r, s/r) of the overlattice N.  Group elements
/// map to points with 0 <= p,q,s < r; the simplex corners e^i appear as
/// (r,0,0)/r etc.  All points of one computation share the denominator.
struct LatticePoint {
    Int p = 0;
    Int q = 0;
    Int s = 0;
    Int r = 1;

    auto operator<=>(const LatticePoint&) const = default;
};

/// age(g) = (a+b+c)/r, in {0, 1, 2}.  Age 1 ("junior") elements index the
/// exceptional divisors of the toric resolution.
Int age(const DiagonalElement& d);

/// The lattice point of a group element.
LatticePoint point_of(const DiagonalElement& d);

/// Corner e^i of the junior simplex, i in {0, 1, 2}.
LatticePoint simplex_corner(int i, Int r);

/// Rotation on points: (p, q, s) -> (q, s, p); permutes the corners
/// e^1 -> e^3 -> e^2 -> e^1 and matches rotate_diagonal on group elements.
LatticePoint rotate(const LatticePoint& pt);

/// The set Phi of age-1 elements of G' as simplex points, sorted.
std::vector<LatticePoint> junior_points(const DiagonalGroup& gp);

/// Partition of Phi by vanishing coordinates along with the matching
/// counts in G' \ {e}: elements with abc != 0 map 2:1 onto phi1 (inverse
/// pairs share a junior point), elements with a zero coordinate map 1:1
/// onto phi2.
struct PhiSplit {
    std::vector<LatticePoint> phi1;  // all coordinates nonzero
    std::vector<LatticePoint> phi2;  // some coordinate zero
    Int g1_size = 0;
    Int g2_size = 0;
};

/// Splits Phi and checks g1 = 2*|phi1|, g2 = |phi2|,
/// g1 + g2 = |G'| - 1; violation raises invariant_violation.
PhiSplit split_phi(const DiagonalGroup& gp);

/// Exact chart on the rank-2 lattice N intersect {t = 0}.  The basis is
/// the column Hermite form of {e^2-e^1, e^3-e^1} and {v-e^1 : v in Phi},
/// expressed in the frame (e^2-e^1, e^3-e^1): a plane vector with
/// numerators (p,q,s), p+q+s = 0, has frame numerators (q, s) over r.
/// The Hermite basis is lower triangular: b1 = (d1, off), b2 = (0, d2).
struct PlaneLattice {
    Int r = 1;
    LatticePoint origin;                         // e^1, affine origin on t = 1
    std::array<std::array<Int, 3>, 2> basis{};   // basis numerators over r
    Int index = 1;                               // [N : L] = |G'|

    Int d1 = 1, off = 0, d2 = 1;                 // Hermite form in the frame
};

/// Builds the plane lattice and verifies index == |G'|
/// (invariant_violation otherwise).
PlaneLattice build_plane_lattice(const DiagonalGroup& gp);

/// Integer coordinates of pt - e^1 in the Hermite basis, or nullopt when
/// pt is not in N.  Requires t(pt) = 1 (i.e. p+q+s == r).
std::optional<std::pair<Int, Int>> try_plane_coords(const PlaneLattice& lat,
                                                    const LatticePoint& pt);

/// As try_plane_coords but throws input_error on failure.
std::pair<Int, Int> to_plane_coords(const PlaneLattice& lat, const LatticePoint& pt);

/// Inverse chart: e^1 + u*b1 + v*b2, a point on t = 1.
LatticePoint from_plane_coords(const PlaneLattice& lat, Int u, Int v);

/// All lattice points of the junior simplex, found by scanning the
/// triples p+q+s = r, p,q,s >= 0 and testing N-membership through the
/// plane chart.  Equals Phi plus the three corners.
std::vector<LatticePoint> simplex_lattice_points(const PlaneLattice& lat);

}  // namespace trihedral
