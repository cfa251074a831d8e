#include <doctest.h>

#include <algorithm>
#include <set>

#include "trihedral/lattice.hpp"

using namespace trihedral;

namespace {

DiagonalGroup cyclic(Int r, Int a, Int b, Int c) {
    std::array<Int, 3> g{a, b, c};
    return generate_diagonal_group(r, std::span<const std::array<Int, 3>>(&g, 1));
}

DiagonalGroup trivial_group() {
    return generate_diagonal_group(1, {});
}

}  // namespace

TEST_CASE("age") {
    CHECK(age(make_diagonal(7, 1, 2, 4)) == 1);
    CHECK(age(make_diagonal(7, 5, 3, 6)) == 2);
    CHECK(age(make_diagonal(7, 0, 0, 0)) == 0);
    CHECK(age(make_diagonal(3, 2, 2, 2)) == 2);
    CHECK(age(make_diagonal(2, 1, 1, 0)) == 1);
}

TEST_CASE("points, corners and rotation") {
    CHECK(point_of(make_diagonal(7, 1, 2, 4)) == LatticePoint{1, 2, 4, 7});
    CHECK(simplex_corner(0, 7) == LatticePoint{7, 0, 0, 7});
    CHECK(simplex_corner(1, 7) == LatticePoint{0, 7, 0, 7});
    CHECK(simplex_corner(2, 7) == LatticePoint{0, 0, 7, 7});

    // Point rotation matches conjugation on group elements.
    CHECK(rotate(LatticePoint{1, 2, 4, 7}) == LatticePoint{2, 4, 1, 7});
    CHECK(rotate(simplex_corner(0, 7)) == simplex_corner(2, 7));
    CHECK(rotate(simplex_corner(2, 7)) == simplex_corner(1, 7));
    CHECK(rotate(simplex_corner(1, 7)) == simplex_corner(0, 7));
    for (Int k = 1; k < 7; ++k) {
        DiagonalElement d = make_diagonal(7, k, (2 * k) % 7, (4 * k) % 7);
        CHECK(rotate(point_of(d)) == point_of(rotate_diagonal(d)));
    }
}

TEST_CASE("junior_points") {
    std::vector<LatticePoint> j7 = junior_points(cyclic(7, 1, 2, 4));
    std::vector<LatticePoint> expect7{
        {1, 2, 4, 7}, {2, 4, 1, 7}, {4, 1, 2, 7}};
    CHECK(j7 == expect7);

    CHECK(junior_points(trivial_group()).empty());
    CHECK(junior_points(cyclic(3, 1, 1, 1)) ==
          std::vector<LatticePoint>{{1, 1, 1, 3}});

    // Junior sets are rotation-invariant.
    for (const DiagonalGroup& gp :
         {cyclic(7, 1, 2, 4), cyclic(2, 1, 1, 0), cyclic(6, 1, 1, 4)}) {
        std::vector<LatticePoint> phi = junior_points(gp);
        std::set<LatticePoint> set(phi.begin(), phi.end());
        CHECK(set.size() == phi.size());
        for (const LatticePoint& v : phi) CHECK(set.count(rotate(v)) == 1);
    }
}

TEST_CASE("split_phi") {
    PhiSplit s7 = split_phi(cyclic(7, 1, 2, 4));
    CHECK(s7.phi1.size() == 3);
    CHECK(s7.phi2.empty());
    CHECK(s7.g1_size == 6);
    CHECK(s7.g2_size == 0);

    PhiSplit s2 = split_phi(cyclic(2, 1, 1, 0));
    CHECK(s2.phi1.empty());
    CHECK(s2.phi2.size() == 3);
    CHECK(s2.g1_size == 0);
    CHECK(s2.g2_size == 3);

    PhiSplit s1 = split_phi(trivial_group());
    CHECK(s1.phi1.empty());
    CHECK(s1.phi2.empty());
    CHECK(s1.g1_size == 0);
    CHECK(s1.g2_size == 0);

    // Mixed case: three interior orbit points plus the center in phi1,
    // one edge-midpoint orbit in phi2.
    PhiSplit s6 = split_phi(cyclic(6, 1, 1, 4));
    CHECK(s6.phi1.size() == 4);
    CHECK(s6.phi2.size() == 3);
    CHECK(s6.g1_size == 8);
    CHECK(s6.g2_size == 3);
}

TEST_CASE("plane lattice of the trivial group is the unit lattice") {
    PlaneLattice lat = build_plane_lattice(trivial_group());
    CHECK(lat.index == 1);
    CHECK(lat.origin == LatticePoint{1, 0, 0, 1});
    CHECK(lat.basis[0] == std::array<Int, 3>{-1, 1, 0});
    CHECK(lat.basis[1] == std::array<Int, 3>{-1, 0, 1});
    CHECK(to_plane_coords(lat, LatticePoint{0, 1, 0, 1}) == std::pair<Int, Int>{1, 0});
    CHECK(to_plane_coords(lat, LatticePoint{0, 0, 1, 1}) == std::pair<Int, Int>{0, 1});
    CHECK(to_plane_coords(lat, LatticePoint{1, 0, 0, 1}) == std::pair<Int, Int>{0, 0});
}

TEST_CASE("plane lattice index equals the group order") {
    CHECK(build_plane_lattice(cyclic(7, 1, 2, 4)).index == 7);
    CHECK(build_plane_lattice(cyclic(3, 1, 1, 1)).index == 3);
    CHECK(build_plane_lattice(cyclic(2, 1, 1, 0)).index == 4);
    CHECK(build_plane_lattice(cyclic(6, 1, 1, 4)).index == 12);
}

TEST_CASE("plane chart round-trips") {
    DiagonalGroup gp = cyclic(7, 1, 2, 4);
    PlaneLattice lat = build_plane_lattice(gp);
    CHECK(to_plane_coords(lat, simplex_corner(0, 7)) == std::pair<Int, Int>{0, 0});

    for (const LatticePoint& pt : simplex_lattice_points(lat)) {
        auto [u, v] = to_plane_coords(lat, pt);
        CHECK(from_plane_coords(lat, u, v) == pt);
    }

    // Points of the plane t=1 outside N get no coordinates.
    CHECK_FALSE(try_plane_coords(lat, LatticePoint{1, 1, 5, 7}).has_value());
    CHECK_FALSE(try_plane_coords(lat, LatticePoint{3, 3, 1, 7}).has_value());

    // Mismatched denominator or wrong plane are input errors.
    CHECK_THROWS_AS(try_plane_coords(lat, LatticePoint{1, 1, 1, 3}), input_error);
    CHECK_THROWS_AS(try_plane_coords(lat, LatticePoint{1, 1, 1, 7}), input_error);
    CHECK_THROWS_AS(to_plane_coords(lat, LatticePoint{1, 1, 5, 7}), input_error);

    // Inverse chart always lands on t = 1.
    for (Int u = -3; u <= 3; ++u)
        for (Int v = -3; v <= 3; ++v) {
            LatticePoint pt = from_plane_coords(lat, u, v);
            CHECK(pt.p + pt.q + pt.s == pt.r);
        }
}

TEST_CASE("simplex_lattice_points equals juniors plus corners") {
    for (const DiagonalGroup& gp :
         {trivial_group(), cyclic(7, 1, 2, 4), cyclic(2, 1, 1, 0),
          cyclic(3, 1, 1, 1), cyclic(6, 1, 1, 4)}) {
        CAPTURE(gp.r);
        PlaneLattice lat = build_plane_lattice(gp);
        std::vector<LatticePoint> pts = simplex_lattice_points(lat);
        CHECK(std::is_sorted(pts.begin(), pts.end()));

        std::vector<LatticePoint> expect = junior_points(gp);
        for (int i = 0; i < 3; ++i) expect.push_back(simplex_corner(i, gp.r));
        std::sort(expect.begin(), expect.end());
        CHECK(pts == expect);

        // Cross-check by residue scan, bypassing the chart entirely.
        std::vector<LatticePoint> scan;
        for (Int p = 0; p <= gp.r; ++p)
            for (Int q = 0; p + q <= gp.r; ++q) {
                Int s = gp.r - p - q;
                if (gp.contains(DiagonalElement{gp.r, p % gp.r, q % gp.r, s % gp.r}))
                    scan.push_back(LatticePoint{p, q, s, gp.r});
            }
        std::sort(scan.begin(), scan.end());
        CHECK(pts == scan);
    }
}
