#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trihedral/errors.hpp"

namespace trihedral {

using Int = std::int64_t;

/// Largest supported group exponent.  Keeps every intermediate integer
/// (residues, plane coordinates, 2x2 determinants) comfortably inside
/// 64 bits and closure sets inside memory.
inline constexpr Int kMaxExponent = 10000;

/// Residue triple (a, b, c) mod r representing diag(w^a, w^b, w^c) with
/// w = exp(2*pi*i/r).  Always reduced into [0, r) and a+b+c == 0 (mod r),
/// so the matrix lies in SL(3,C).
struct DiagonalElement {
    Int r = 1;
    Int a = 0;
    Int b = 0;
    Int c = 0;

    auto operator<=>(const DiagonalElement&) const = default;

    bool is_identity() const { return a == 0 && b == 0 && c == 0; }
    /// True for the a=b=c triples, the only elements fixed by rotation.
    bool is_symmetric() const { return a == b && b == c; }
};

/// Validates and reduces (a, b, c) mod r.  Throws input_error when r < 1,
/// r > kMaxExponent, or a+b+c != 0 (mod r).
DiagonalElement make_diagonal(Int r, Int a, Int b, Int c);

/// Conjugation by the cyclic permutation matrix: (a, b, c) -> (b, c, a).
DiagonalElement rotate_diagonal(const DiagonalElement& d);

DiagonalElement add(const DiagonalElement& x, const DiagonalElement& y);
DiagonalElement negate(const DiagonalElement& x);

/// The full diagonal part G' of a trihedral group <H, T>: closed under
/// componentwise addition mod r and under rotation.  `elements` is sorted
/// and contains the identity; `generators` records the reduced input
/// triples used to build the group.
struct DiagonalGroup {
    Int r = 1;
    std::vector<DiagonalElement> elements;
    std::vector<DiagonalElement> generators;

    Int order() const { return static_cast<Int>(elements.size()); }
    bool contains(const DiagonalElement& d) const;
};

/// Smallest set containing `gens` that is closed under addition mod r and
/// rotation; always contains the identity.  Rotation closure is required
/// because G' is the diagonal part of <H, T>, which contains every
/// T-conjugate of H.
DiagonalGroup generate_diagonal_group(Int r, std::span<const std::array<Int, 3>> gens);

/// Type I:  |G'| == 1 (mod 3), no element diag(w,w,w) of order 3.
/// Type II: |G'| == 0 (mod 3), contains diag(w,w,w) with w^3 = 1.
enum class GroupType { TypeI, TypeII };

std::string to_string(GroupType t);

/// Classifies by membership of (r/3, r/3, r/3) and cross-checks against
/// |G'| mod 3; disagreement raises invariant_violation.
GroupType classify_type(const DiagonalGroup& gp);

/// diag * T^shift, the general element of a trihedral group.
struct TrihedralElement {
    int shift = 0;  // 0, 1 or 2
    DiagonalElement diag;

    auto operator<=>(const TrihedralElement&) const = default;
};

TrihedralElement identity_element(Int r);

/// Group law: D(d1) T^s1 * D(d2) T^s2 = D(d1 + rot^s1(d2)) T^(s1+s2 mod 3).
/// Throws input_error when the exponents differ.
TrihedralElement compose(const TrihedralElement& g, const TrihedralElement& h);

TrihedralElement inverse(const TrihedralElement& g);

/// All 3*|G'| elements of G = <G', T>, sorted.
std::vector<TrihedralElement> enumerate_group(const DiagonalGroup& gp);

/// Number of conjugacy classes, computed as orbits of g -> x g x^-1 by
/// breadth-first closure over a conjugating set.  `conjugating_gens`
/// should generate G' (together with T it then generates G); when empty,
/// every diagonal element of G is used.
Int conjugacy_classes_enum(const std::vector<TrihedralElement>& group,
                           std::span<const DiagonalElement> conjugating_gens = {});

/// Closed form: Type I with |G'| = 3m+1 gives m+3, Type II with
/// |G'| = 3m gives m+8.
Int conjugacy_count_formula(const DiagonalGroup& gp);

/// Orbifold Euler characteristic of the linear action on C^3:
/// (1/|G|) * #{(g,h) : gh = hg}.  Every fixed set of a pair is a linear
/// subspace with Euler number 1, so only the pair count matters.  The
/// quotient is exact; a remainder raises invariant_violation.
Int orbifold_euler(const std::vector<TrihedralElement>& group);

/// True iff x^i y^j z^k is fixed by every element of G', i.e.
/// a*i + b*j + c*k == 0 (mod r) for all (a,b,c) in G'.
bool is_invariant_monomial(const DiagonalGroup& gp, Int i, Int j, Int k);

}  // namespace trihedral
