#include "trihedral/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace trihedral {

namespace {

// g = gcd(a, b) >= 0 together with x*a + y*b = g.
struct ExtGcd {
    Int g, x, y;
};

ExtGcd ext_gcd(Int a, Int b) {
    if (b == 0) return a < 0 ? ExtGcd{-a, -1, 0} : ExtGcd{a, 1, 0};
    ExtGcd sub = ext_gcd(b, a % b);
    return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

Int pos_mod(Int x, Int m) {
    Int v = x % m;
    return v < 0 ? v + m : v;
}

}  // namespace

Int age(const DiagonalElement& d) {
    return (d.a + d.b + d.c) / d.r;
}

LatticePoint point_of(const DiagonalElement& d) {
    return {d.a, d.b, d.c, d.r};
}

LatticePoint simplex_corner(int i, Int r) {
    switch (i) {
        case 0: return {r, 0, 0, r};
        case 1: return {0, r, 0, r};
        case 2: return {0, 0, r, r};
    }
    throw input_error("simplex corner index out of range: " + std::to_string(i));
}

LatticePoint rotate(const LatticePoint& pt) {
    return {pt.q, pt.s, pt.p, pt.r};
}

std::vector<LatticePoint> junior_points(const DiagonalGroup& gp) {
    std::vector<LatticePoint> out;
    for (const auto& d : gp.elements)
        if (age(d) == 1) out.push_back(point_of(d));
    std::sort(out.begin(), out.end());
    return out;
}

PhiSplit split_phi(const DiagonalGroup& gp) {
    PhiSplit split;
    for (const auto& d : gp.elements) {
        if (d.is_identity()) continue;
        const bool full_support = d.a != 0 && d.b != 0 && d.c != 0;
        (full_support ? split.g1_size : split.g2_size) += 1;
        if (age(d) != 1) continue;
        (full_support ? split.phi1 : split.phi2).push_back(point_of(d));
    }
    std::sort(split.phi1.begin(), split.phi1.end());
    std::sort(split.phi2.begin(), split.phi2.end());

    const Int n1 = static_cast<Int>(split.phi1.size());
    const Int n2 = static_cast<Int>(split.phi2.size());
    if (split.g1_size != 2 * n1 || split.g2_size != n2 ||
        split.g1_size + split.g2_size != gp.order() - 1)
        throw invariant_violation("junior split sizes inconsistent: g1=" +
                                  std::to_string(split.g1_size) + " g2=" +
                                  std::to_string(split.g2_size) + " |Phi1|=" +
                                  std::to_string(n1) + " |Phi2|=" + std::to_string(n2) +
                                  " |G'|=" + std::to_string(gp.order()));
    return split;
}

PlaneLattice build_plane_lattice(const DiagonalGroup& gp) {
    const Int r = gp.r;
    PlaneLattice lat;
    lat.r = r;
    lat.origin = simplex_corner(0, r);

    // Frame numerators (q, s) over r of the t=0 generators: the corner
    // differences e^2-e^1, e^3-e^1 and v-e^1 for junior v.
    std::vector<std::pair<Int, Int>> frame{{r, 0}, {0, r}};
    for (const auto& v : junior_points(gp)) frame.emplace_back(v.q, v.s);

    // Column Hermite form, first component: d1 = gcd of the u's, carrying
    // the combination's second component along.
    Int d1 = 0, t = 0;
    for (const auto& [u, v] : frame) {
        ExtGcd e = ext_gcd(d1, u);
        t = e.x * t + e.y * v;
        d1 = e.g;
    }
    // Second component after clearing the first: d2 = gcd of the residues.
    Int d2 = 0;
    for (const auto& [u, v] : frame) d2 = std::gcd(d2, v - (u / d1) * t);
    const Int off = pos_mod(t, d2);

    lat.d1 = d1;
    lat.off = off;
    lat.d2 = d2;
    lat.basis[0] = {-(d1 + off), d1, off};
    lat.basis[1] = {-d2, 0, d2};

    if ((r * r) % (d1 * d2) != 0)
        throw invariant_violation("plane lattice determinant " + std::to_string(d1 * d2) +
                                  " does not divide r^2");
    lat.index = (r * r) / (d1 * d2);
    if (lat.index != gp.order())
        throw invariant_violation("plane lattice index " + std::to_string(lat.index) +
                                  " != |G'| = " + std::to_string(gp.order()));
    return lat;
}

std::optional<std::pair<Int, Int>> try_plane_coords(const PlaneLattice& lat,
                                                    const LatticePoint& pt) {
    if (pt.r != lat.r || pt.p + pt.q + pt.s != pt.r)
        throw input_error("point is not on the t=1 plane over denominator " +
                          std::to_string(lat.r));
    // pt - e^1 has frame numerators (q, s); solve against the triangular basis.
    if (pt.q % lat.d1 != 0) return std::nullopt;
    const Int u = pt.q / lat.d1;
    const Int rest = pt.s - u * lat.off;
    if (rest % lat.d2 != 0) return std::nullopt;
    return std::make_pair(u, rest / lat.d2);
}

std::pair<Int, Int> to_plane_coords(const PlaneLattice& lat, const LatticePoint& pt) {
    auto coords = try_plane_coords(lat, pt);
    if (!coords)
        throw input_error("point (" + std::to_string(pt.p) + "," + std::to_string(pt.q) +
                          "," + std::to_string(pt.s) + ")/" + std::to_string(pt.r) +
                          " is not a lattice point");
    return *coords;
}

LatticePoint from_plane_coords(const PlaneLattice& lat, Int u, Int v) {
    const auto& b1 = lat.basis[0];
    const auto& b2 = lat.basis[1];
    return {lat.r + u * b1[0] + v * b2[0], u * b1[1] + v * b2[1], u * b1[2] + v * b2[2],
            lat.r};
}

std::vector<LatticePoint> simplex_lattice_points(const PlaneLattice& lat) {
    std::vector<LatticePoint> out;
    for (Int p = 0; p <= lat.r; ++p)
        for (Int q = 0; q <= lat.r - p; ++q) {
            LatticePoint pt{p, q, lat.r - p - q, lat.r};
            if (try_plane_coords(lat, pt)) out.push_back(pt);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace trihedral
