#include "trihedral/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace trihedral {

namespace {

Int mod(Int x, Int m) {
    Int v = x % m;
    return v < 0 ? v + m : v;
}

Int det2(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b,
         const std::pair<Int, Int>& c) {
    return (b.first - a.first) * (c.second - a.second) -
           (b.second - a.second) * (c.first - a.first);
}

Int det_pq(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return (b.p - a.p) * (c.q - a.q) - (b.q - a.q) * (c.p - a.p);
}

bool on_simplex_boundary(const LatticePoint& a, const LatticePoint& b) {
    return (a.p == 0 && b.p == 0) || (a.q == 0 && b.q == 0) || (a.s == 0 && b.s == 0);
}

std::vector<MonomialMatrix> all_matrices(const DiagonalGroup& gp) {
    std::vector<MonomialMatrix> out;
    out.reserve(3 * gp.elements.size());
    for (int s = 0; s < 3; ++s)
        for (const auto& d : gp.elements) out.push_back(to_matrix({s, d}));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

MonomialMatrix to_matrix(const TrihedralElement& g) {
    MonomialMatrix m;
    m.r = g.diag.r;
    const std::array<Int, 3> expo{g.diag.a, g.diag.b, g.diag.c};
    for (int i = 0; i < 3; ++i) {
        m.col[i] = (i + g.shift) % 3;
        m.expo[i] = expo[static_cast<std::size_t>(i)];
    }
    return m;
}

MonomialMatrix matrix_identity(Int r) {
    MonomialMatrix m;
    m.r = r;
    return m;
}

MonomialMatrix matmul(const MonomialMatrix& x, const MonomialMatrix& y) {
    if (x.r != y.r)
        throw input_error("matrix exponent mismatch: " + std::to_string(x.r) + " vs " +
                          std::to_string(y.r));
    // Row i of x has its entry theta^x.expo[i] in column x.col[i]; that
    // column of y contributes its own single entry.
    MonomialMatrix z;
    z.r = x.r;
    for (int i = 0; i < 3; ++i) {
        z.col[i] = y.col[x.col[i]];
        z.expo[i] = mod(x.expo[i] + y.expo[x.col[i]], x.r);
    }
    return z;
}

MonomialMatrix matinv(const MonomialMatrix& x) {
    MonomialMatrix z;
    z.r = x.r;
    for (int i = 0; i < 3; ++i) {
        z.col[x.col[i]] = i;
        z.expo[x.col[i]] = mod(-x.expo[i], x.r);
    }
    return z;
}

TriangulationCheck validate_triangulation(const Triangulation& tri,
                                          const PlaneLattice& lat,
                                          const DiagonalGroup& gp) {
    TriangulationCheck res;
    auto fail = [&res](const std::string& msg) {
        if (res.detail.empty()) res.detail = msg;
    };
    const Int r = tri.r;
    if (r != gp.r || r != lat.r) {
        fail("triangulation, lattice and group disagree on r");
        return res;
    }

    // Independent rebuild of the simplex lattice: membership of (p,q,s)/r
    // in N is equivalent to the reduced residue triple lying in G'.
    std::vector<LatticePoint> scan;
    for (Int p = 0; p <= r; ++p)
        for (Int q = 0; q <= r - p; ++q) {
            const Int s = r - p - q;
            if (gp.contains(DiagonalElement{r, p % r, q % r, s % r}))
                scan.push_back({p, q, s, r});
        }
    std::sort(scan.begin(), scan.end());

    res.vertices_complete = (tri.points == scan);
    if (!res.vertices_complete)
        fail("vertex set has " + std::to_string(tri.points.size()) +
             " points, simplex lattice has " + std::to_string(scan.size()));

    // Exact plane-chart coordinates for the unimodularity determinant.
    const int npts = static_cast<int>(tri.points.size());
    std::vector<std::pair<Int, Int>> chart(static_cast<std::size_t>(npts));
    for (int i = 0; i < npts; ++i) {
        auto uv = try_plane_coords(lat, tri.points[static_cast<std::size_t>(i)]);
        if (!uv) {
            res.vertices_complete = false;
            fail("vertex outside the plane lattice chart");
            return res;
        }
        chart[static_cast<std::size_t>(i)] = *uv;
    }

    for (const auto& t : tri.triangles)
        for (int v : t)
            if (v < 0 || v >= npts) {
                fail("triangle vertex index out of range");
                return res;
            }

    // Per-triangle: chart determinant (+-1 <=> unimodular) and the direct
    // emptiness scan; the two criteria must agree triangle by triangle.
    bool empties_ok = true;
    bool areas_ok = true;
    Int total_area = 0;
    std::multiset<std::pair<int, int>> directed;
    for (const auto& t : tri.triangles) {
        std::array<int, 3> ix = t;
        Int d = det2(chart[static_cast<std::size_t>(ix[0])],
                     chart[static_cast<std::size_t>(ix[1])],
                     chart[static_cast<std::size_t>(ix[2])]);
        if (d == 0) {
            areas_ok = false;
            empties_ok = false;
            fail("degenerate (zero-area) triangle");
            continue;
        }
        if (d < 0) {  // normalize to CCW for the edge cycle
            std::swap(ix[1], ix[2]);
            d = -d;
        }
        total_area += d;
        const bool unimodular = (d == 1);

        const LatticePoint& a = tri.points[static_cast<std::size_t>(ix[0])];
        const LatticePoint& b = tri.points[static_cast<std::size_t>(ix[1])];
        const LatticePoint& c = tri.points[static_cast<std::size_t>(ix[2])];
        Int inside = 0;
        for (const auto& pt : scan)
            if (det_pq(a, b, pt) >= 0 && det_pq(b, c, pt) >= 0 && det_pq(c, a, pt) >= 0)
                ++inside;
        const bool empty = (inside == 3);
        if (empty != unimodular) {
            empties_ok = false;
            fail("emptiness scan and chart determinant disagree on a triangle");
        } else if (!empty) {
            empties_ok = false;
            fail("triangle contains " + std::to_string(inside) + " lattice points");
        }
        if (!unimodular) areas_ok = false;

        for (int e = 0; e < 3; ++e) directed.insert({ix[e], ix[(e + 1) % 3]});
    }
    res.empty_triangles = empties_ok;
    res.area_sum = areas_ok && (total_area == gp.order());
    if (!res.area_sum && res.detail.empty())
        fail("normalized area sum " + std::to_string(total_area) + " != |G'| = " +
             std::to_string(gp.order()));

    // Rotation invariance of the triangle set, as unordered vertex triples.
    std::set<std::array<Int, 9>> keys;
    auto key_of = [](std::array<LatticePoint, 3> v) {
        std::sort(v.begin(), v.end());
        return std::array<Int, 9>{v[0].p, v[0].q, v[0].s, v[1].p, v[1].q,
                                  v[1].s, v[2].p, v[2].q, v[2].s};
    };
    for (const auto& t : tri.triangles)
        keys.insert(key_of({tri.points[static_cast<std::size_t>(t[0])],
                            tri.points[static_cast<std::size_t>(t[1])],
                            tri.points[static_cast<std::size_t>(t[2])]}));
    res.rho_invariant = (keys.size() == tri.triangles.size());
    if (res.rho_invariant)
        for (const auto& t : tri.triangles) {
            const auto rk =
                key_of({rotate(tri.points[static_cast<std::size_t>(t[0])]),
                        rotate(tri.points[static_cast<std::size_t>(t[1])]),
                        rotate(tri.points[static_cast<std::size_t>(t[2])])});
            if (!keys.count(rk)) {
                res.rho_invariant = false;
                break;
            }
        }
    if (!res.rho_invariant) fail("triangle set is not rotation-invariant");

    // Directed-edge pairing: with all triangles CCW, each interior edge
    // must occur once per direction and each boundary edge exactly once.
    bool pairing = true;
    for (const auto& e : directed) {
        if (directed.count(e) != 1) {
            pairing = false;
            break;
        }
        const bool reversed = directed.count({e.second, e.first}) == 1;
        const bool boundary =
            on_simplex_boundary(tri.points[static_cast<std::size_t>(e.first)],
                                tri.points[static_cast<std::size_t>(e.second)]);
        if (reversed == boundary) {
            pairing = false;
            break;
        }
    }
    res.edge_pairing = pairing;
    if (!pairing) fail("directed-edge pairing violated");
    return res;
}

Int conjugacy_count_bruteforce(const DiagonalGroup& gp, Int bound) {
    const Int size = 3 * gp.order();
    if (size > bound)
        throw input_error("|G| = " + std::to_string(size) + " exceeds oracle bound " +
                          std::to_string(bound));
    const std::vector<MonomialMatrix> group = all_matrices(gp);

    std::vector<MonomialMatrix> conj{to_matrix({1, DiagonalElement{gp.r, 0, 0, 0}})};
    for (const auto& g : gp.generators) conj.push_back(to_matrix({0, g}));
    std::vector<MonomialMatrix> conj_inv;
    conj_inv.reserve(conj.size());
    for (const auto& x : conj) conj_inv.push_back(matinv(x));

    auto index_of = [&group](const MonomialMatrix& m) {
        auto it = std::lower_bound(group.begin(), group.end(), m);
        if (it == group.end() || !(*it == m))
            throw invariant_violation("conjugate escapes the oracle element set");
        return static_cast<std::size_t>(it - group.begin());
    };

    std::vector<bool> visited(group.size(), false);
    Int classes = 0;
    for (std::size_t start = 0; start < group.size(); ++start) {
        if (visited[start]) continue;
        ++classes;
        std::deque<std::size_t> queue{start};
        visited[start] = true;
        while (!queue.empty()) {
            const MonomialMatrix g = group[queue.front()];
            queue.pop_front();
            for (std::size_t i = 0; i < conj.size(); ++i) {
                const std::size_t j = index_of(matmul(matmul(conj[i], g), conj_inv[i]));
                if (!visited[j]) {
                    visited[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    return classes;
}

Int commuting_pairs(const DiagonalGroup& gp, Int bound) {
    const Int size = 3 * gp.order();
    if (size > bound)
        throw input_error("|G| = " + std::to_string(size) + " exceeds oracle bound " +
                          std::to_string(bound));
    const std::vector<MonomialMatrix> group = all_matrices(gp);
    Int pairs = static_cast<Int>(group.size());  // every element commutes with itself
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j)
            if (matmul(group[i], group[j]) == matmul(group[j], group[i])) pairs += 2;
    return pairs;
}

}  // namespace trihedral
