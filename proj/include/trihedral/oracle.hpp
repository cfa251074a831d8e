#pragma once

#include <string>
#include <vector>

#include "trihedral/triangulate.hpp"

namespace trihedral {

/// Default cap on |G| for the brute-force counters; override per call or
/// through the CLI environment variable.
inline constexpr Int kDefaultOracleBound = 30000;

/// Exact 3x3 monomial matrix: row i has its only nonzero entry w^expo[i]
/// in column col[i], w = exp(2*pi*i/r).  Multiplication and inversion are
/// done matrix-style, sharing no code with the (shift, diag) group law,
/// so the two paths witness each other.
struct MonomialMatrix {
    Int r = 1;
    std::array<int, 3> col{0, 1, 2};
    std::array<Int, 3> expo{0, 0, 0};

    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
    auto operator<=>(const MonomialMatrix&) const = default;
};

MonomialMatrix to_matrix(const TrihedralElement& g);
MonomialMatrix matrix_identity(Int r);
MonomialMatrix matmul(const MonomialMatrix& x, const MonomialMatrix& y);
MonomialMatrix matinv(const MonomialMatrix& x);

/// Per-check results of the exhaustive triangulation validator.
struct TriangulationCheck {
    bool empty_triangles = false;   // no lattice point beside the 3 vertices
    bool area_sum = false;          // normalized areas sum to |G'|, each equal 1
    bool vertices_complete = false; // vertex set is exactly the simplex lattice
    bool rho_invariant = false;     // rotation maps the triangle set onto itself
    bool edge_pairing = false;      // interior edges twice (opposed), boundary once
    std::string detail;             // first failure, empty when all pass

    bool all() const {
        return empty_triangles && area_sum && vertices_complete && rho_invariant &&
               edge_pairing;
    }
};

/// Exhaustive legality check by direct lattice scanning.  The simplex
/// lattice is recomputed here from residues of G' (membership of
/// (p,q,s)/r in N iff the reduced triple lies in G'), independently of
/// the Hermite chart.
TriangulationCheck validate_triangulation(const Triangulation& tri,
                                          const PlaneLattice& lat,
                                          const DiagonalGroup& gp);

/// Class count of G = <G', T> using monomial-matrix arithmetic only.
/// Throws input_error when 3|G'| exceeds the bound.
Int conjugacy_count_bruteforce(const DiagonalGroup& gp, Int bound = kDefaultOracleBound);

/// #{(g, h) : gh = hg} over matrices; equals class count times |G|.
Int commuting_pairs(const DiagonalGroup& gp, Int bound = kDefaultOracleBound);

}  // namespace trihedral
