#include "trihedral/triangulate.hpp"

#include <algorithm>
#include <numeric>

#include "trihedral/oracle.hpp"

namespace trihedral {

namespace {

// All planar predicates run in the affine chart (p, q) of the t=1 plane
// (s = r-p-q is redundant); orientation and incidence are affine notions,
// so any chart gives the same answers.

Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return (b.p - a.p) * (c.q - a.q) - (b.q - a.q) * (c.p - a.p);
}

Int shoelace2(const std::vector<LatticePoint>& poly) {
    Int sum = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % n];
        sum += a.p * b.q - b.p * a.q;
    }
    return sum;
}

std::vector<LatticePoint> oriented_ccw(std::vector<LatticePoint> poly) {
    const Int area2 = shoelace2(poly);
    if (area2 == 0) throw invariant_violation("region polygon has zero area");
    if (area2 < 0) std::reverse(poly.begin(), poly.end());
    return poly;
}

bool in_closed_triangle(const std::array<LatticePoint, 3>& t, const LatticePoint& x) {
    return det3(t[0], t[1], x) >= 0 && det3(t[1], t[2], x) >= 0 &&
           det3(t[2], t[0], x) >= 0;
}

// Fan of a CCW polygon from the lexicographically first vertex whose fan
// triangles are all strictly positively oriented.  The lex-minimal vertex
// itself can fail when it sits between two collinear neighbors.
std::vector<std::array<LatticePoint, 3>> fan_triangles(
    const std::vector<LatticePoint>& poly) {
    const std::size_t n = poly.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&poly](std::size_t a, std::size_t b) { return poly[a] < poly[b]; });

    for (std::size_t apex : order) {
        std::vector<std::array<LatticePoint, 3>> tris;
        bool ok = true;
        for (std::size_t step = 1; step + 1 < n && ok; ++step) {
            const LatticePoint& a = poly[(apex + step) % n];
            const LatticePoint& b = poly[(apex + step + 1) % n];
            if (det3(poly[apex], a, b) <= 0)
                ok = false;
            else
                tris.push_back({poly[apex], a, b});
        }
        if (ok) return tris;
    }
    throw invariant_violation("region polygon admits no valid fan apex");
}

// Numerator of the center distance over the common denominator 3r.
Int center_distance_num(const LatticePoint& pt) {
    auto term = [&pt](Int x) { return std::abs(3 * x - pt.r); };
    return term(pt.p) + term(pt.q) + term(pt.s);
}

}  // namespace

Rational make_rational(Int num, Int den) {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Int g = std::gcd(num < 0 ? -num : num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Rational distance_to_center(const LatticePoint& pt) {
    if (pt.p + pt.q + pt.s != pt.r)
        throw input_error("center distance of a point off the t=1 plane");
    return make_rational(center_distance_num(pt), 3 * pt.r);
}

CentralConfig find_central_config(const std::vector<LatticePoint>& phi,
                                  GroupType type, Int r) {
    CentralConfig cfg;
    if (type == GroupType::TypeII) {
        if (r % 3 != 0)
            throw invariant_violation("type II group with 3 not dividing r");
        const LatticePoint c{r / 3, r / 3, r / 3, r};
        if (std::find(phi.begin(), phi.end(), c) == phi.end())
            throw invariant_violation("type II group whose center is not a junior point");
        cfg.center = c;
    }

    std::vector<LatticePoint> candidates;
    for (const auto& v : phi) {
        if (cfg.center && v == *cfg.center) continue;
        if (v.p >= v.s && v.q >= v.s) candidates.push_back(v);
    }
    if (candidates.empty()) {
        const std::size_t excluded = cfg.center ? 1 : 0;
        if (phi.size() > excluded)
            throw invariant_violation("no junior point in the domain {x,y >= z}");
        cfg.kind = cfg.center ? CentralKind::StarAtCenter : CentralKind::WholeSimplex;
        return cfg;
    }

    const LatticePoint* best = &candidates.front();
    for (const auto& v : candidates) {
        const Int dv = center_distance_num(v);
        const Int db = center_distance_num(*best);
        if (dv < db || (dv == db && v < *best)) best = &v;
    }
    cfg.apex = *best;
    cfg.kind = cfg.center ? CentralKind::CentralTriangleWithStar
                          : CentralKind::CentralTriangle;
    return cfg;
}

std::vector<LatticePoint> canonicalize_region_cycle(std::vector<LatticePoint> cycle) {
    // Consecutive duplicates first, so direction vectors below are nonzero.
    for (std::size_t i = 0; i < cycle.size();) {
        if (cycle.size() < 2) break;
        if (cycle[i] == cycle[(i + 1) % cycle.size()])
            cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    bool changed = true;
    while (changed && cycle.size() >= 3) {
        changed = false;
        const std::size_t n = cycle.size();
        for (std::size_t i = 0; i < n; ++i) {
            const LatticePoint& prev = cycle[(i + n - 1) % n];
            const LatticePoint& cur = cycle[i];
            const LatticePoint& next = cycle[(i + 1) % n];
            const Int ix = cur.p - prev.p, iy = cur.q - prev.q;
            const Int ox = next.p - cur.p, oy = next.q - cur.q;
            const Int cross = ix * oy - iy * ox;
            const Int dot = ix * ox + iy * oy;
            if (cross == 0 && dot < 0) {  // exact backtrack: drop spur vertex
                cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (cycle.size() < 3 || shoelace2(cycle) == 0) return {};
    return cycle;
}

std::vector<LatticePoint> points_in_region(const std::vector<LatticePoint>& polygon,
                                           const std::vector<LatticePoint>& candidates) {
    if (polygon.size() < 3) return {};
    const auto fan = fan_triangles(oriented_ccw(polygon));
    std::vector<LatticePoint> out;
    for (const auto& c : candidates) {
        if (std::find(polygon.begin(), polygon.end(), c) != polygon.end()) continue;
        for (const auto& t : fan)
            if (in_closed_triangle(t, c)) {
                out.push_back(c);
                break;
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<LatticePoint, 3>> triangulate_region(
    const std::vector<LatticePoint>& polygon,
    const std::vector<LatticePoint>& interior_points) {
    if (polygon.size() < 3) {
        if (!interior_points.empty())
            throw invariant_violation("interior points in a degenerate region");
        return {};
    }
    auto tris = fan_triangles(oriented_ccw(polygon));

    std::vector<LatticePoint> pts = interior_points;
    std::sort(pts.begin(), pts.end());
    for (const auto& x : pts) {
        std::vector<std::array<LatticePoint, 3>> next;
        bool placed = false;
        for (const auto& t : tris) {
            if (!in_closed_triangle(t, x)) {
                next.push_back(t);
                continue;
            }
            placed = true;
            const Int d01 = det3(t[0], t[1], x);
            const Int d12 = det3(t[1], t[2], x);
            const Int d20 = det3(t[2], t[0], x);
            const int zeros = (d01 == 0) + (d12 == 0) + (d20 == 0);
            if (zeros == 0) {  // strict interior: 3-split
                next.push_back({t[0], t[1], x});
                next.push_back({t[1], t[2], x});
                next.push_back({t[2], t[0], x});
            } else if (zeros == 1) {  // on one edge: 2-split along it
                if (d01 == 0) {
                    next.push_back({t[0], x, t[2]});
                    next.push_back({x, t[1], t[2]});
                } else if (d12 == 0) {
                    next.push_back({t[1], x, t[0]});
                    next.push_back({x, t[2], t[0]});
                } else {
                    next.push_back({t[2], x, t[1]});
                    next.push_back({x, t[0], t[1]});
                }
            } else {
                throw invariant_violation("insertion point coincides with a vertex");
            }
        }
        if (!placed)
            throw invariant_violation("lattice point escapes its region during insertion");
        tris = std::move(next);
    }
    return tris;
}

Triangulation build_symmetric_triangulation(const DiagonalGroup& gp) {
    const Int r = gp.r;
    const PlaneLattice lat = build_plane_lattice(gp);
    const std::vector<LatticePoint> all_pts = simplex_lattice_points(lat);
    const std::vector<LatticePoint> phi = junior_points(gp);
    const GroupType type = classify_type(gp);

    Triangulation tri;
    tri.r = r;
    tri.points = all_pts;
    tri.central = find_central_config(phi, type, r);

    std::vector<std::array<LatticePoint, 3>> faces;
    if (!tri.central.apex) {
        // No off-center junior points: the simplex is one region (its only
        // possible inner vertex is the type II center).
        const std::vector<LatticePoint> simplex{
            simplex_corner(0, r), simplex_corner(1, r), simplex_corner(2, r)};
        faces = triangulate_region(simplex, points_in_region(simplex, all_pts));
    } else {
        const LatticePoint p0 = *tri.central.apex;
        const LatticePoint p1 = rotate(p0);
        const std::vector<LatticePoint> central{p0, p1, rotate(p1)};
        faces = triangulate_region(central, points_in_region(central, all_pts));

        const std::vector<LatticePoint> quad = canonicalize_region_cycle(
            {simplex_corner(0, r), simplex_corner(1, r), p0, p1});
        auto wing = triangulate_region(quad, points_in_region(quad, all_pts));
        for (int rot = 0; rot < 3; ++rot) {
            faces.insert(faces.end(), wing.begin(), wing.end());
            for (auto& t : wing)
                t = {rotate(t[0]), rotate(t[1]), rotate(t[2])};
        }
    }

    auto index_of = [&all_pts](const LatticePoint& pt) {
        auto it = std::lower_bound(all_pts.begin(), all_pts.end(), pt);
        if (it == all_pts.end() || *it != pt)
            throw invariant_violation("triangle vertex is not a simplex lattice point");
        return static_cast<int>(it - all_pts.begin());
    };
    for (const auto& f : faces) {
        if (det3(f[0], f[1], f[2]) <= 0)
            throw invariant_violation("triangle with non-positive orientation");
        std::array<int, 3> ix{index_of(f[0]), index_of(f[1]), index_of(f[2])};
        // Canonical form: least index first, cyclic order (= orientation) kept.
        while (ix[0] != std::min({ix[0], ix[1], ix[2]}))
            ix = {ix[1], ix[2], ix[0]};
        tri.triangles.push_back(ix);
    }
    std::sort(tri.triangles.begin(), tri.triangles.end());
    if (std::adjacent_find(tri.triangles.begin(), tri.triangles.end()) !=
        tri.triangles.end())
        throw invariant_violation("duplicate triangle in assembled triangulation");

    const TriangulationCheck check = validate_triangulation(tri, lat, gp);
    if (!check.all())
        throw invariant_violation("triangulation validation failed: " + check.detail);

    tri.orbits = triangle_orbits(tri);
    return tri;
}

std::vector<std::vector<int>> triangle_orbits(const Triangulation& tri) {
    auto rotated_index = [&tri](int tidx) {
        std::array<int, 3> ix{};
        for (int v = 0; v < 3; ++v) {
            const LatticePoint pt = rotate(tri.points[tri.triangles[tidx][v]]);
            auto it = std::lower_bound(tri.points.begin(), tri.points.end(), pt);
            if (it == tri.points.end() || *it != pt)
                throw invariant_violation("vertex set is not rotation-closed");
            ix[v] = static_cast<int>(it - tri.points.begin());
        }
        while (ix[0] != std::min({ix[0], ix[1], ix[2]}))
            ix = {ix[1], ix[2], ix[0]};
        auto it = std::lower_bound(tri.triangles.begin(), tri.triangles.end(), ix);
        if (it == tri.triangles.end() || *it != ix)
            throw invariant_violation("triangle set is not rotation-closed");
        return static_cast<int>(it - tri.triangles.begin());
    };

    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(tri.triangles.size(), false);
    for (int i = 0; i < static_cast<int>(tri.triangles.size()); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit{i};
        seen[i] = true;
        for (int j = rotated_index(i); j != i; j = rotated_index(j)) {
            seen[j] = true;
            orbit.push_back(j);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace trihedral
