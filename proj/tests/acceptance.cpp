// Acceptance gate: end-to-end checks of the resolution pipeline, one
// pass/fail line per criterion.  Exits with the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "trihedral/sweep.hpp"

using namespace trihedral;

namespace {

constexpr double kSmallCaseBudgetSec = 1.0;
constexpr double kSweepBudgetSec = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

DiagonalGroup cyclic(Int r, Int a, Int b, Int c) {
    std::array<Int, 3> g{a, b, c};
    return generate_diagonal_group(r, std::span<const std::array<Int, 3>>(&g, 1));
}

int find_point(const Triangulation& tri, const LatticePoint& pt) {
    auto it = std::find(tri.points.begin(), tri.points.end(), pt);
    return it == tri.points.end() ? -1 : static_cast<int>(it - tri.points.begin());
}

bool erase_triangle(Triangulation& tri, std::set<int> key) {
    auto it = std::find_if(tri.triangles.begin(), tri.triangles.end(),
                           [&](const std::array<int, 3>& t) {
                               return std::set<int>{t[0], t[1], t[2]} == key;
                           });
    if (it == tri.triangles.end()) return false;
    tri.triangles.erase(it);
    return true;
}

// The generator sets covered by the sweep, deduplicated the same way:
// by reduced exponent and scaled element set.
std::vector<std::pair<Int, std::vector<std::array<Int, 3>>>> sweep_specs(
    Int max_r, Int two_gen_max_r) {
    std::set<std::pair<Int, std::vector<std::array<Int, 3>>>> seen;
    std::vector<std::pair<Int, std::vector<std::array<Int, 3>>>> specs;
    auto key_of = [](const DiagonalGroup& gp) {
        Int g = gp.r;
        for (const DiagonalElement& e : gp.elements)
            g = std::gcd(g, std::gcd(e.a, std::gcd(e.b, e.c)));
        std::vector<std::array<Int, 3>> elems;
        for (const DiagonalElement& e : gp.elements)
            elems.push_back({e.a / g, e.b / g, e.c / g});
        std::sort(elems.begin(), elems.end());
        return std::make_pair(gp.r / g, elems);
    };
    auto add = [&](Int r, std::vector<std::array<Int, 3>> gens) {
        DiagonalGroup gp = generate_diagonal_group(r, gens);
        if (seen.insert(key_of(gp)).second) specs.emplace_back(r, std::move(gens));
    };
    for (Int r = 1; r <= max_r; ++r)
        for (Int a = 0; a < r; ++a)
            for (Int b = 0; b < r; ++b)
                add(r, {{a, b, ((-(a + b)) % r + r) % r}});
    for (Int r = 1; r <= two_gen_max_r; ++r) {
        std::vector<std::array<Int, 3>> singles;
        for (Int a = 0; a < r; ++a)
            for (Int b = 0; b < r; ++b)
                singles.push_back({a, b, ((-(a + b)) % r + r) % r});
        for (std::size_t i = 0; i < singles.size(); ++i)
            for (std::size_t j = i + 1; j < singles.size(); ++j)
                add(r, {singles[i], singles[j]});
    }
    return specs;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Outcome criterion_order7() {
    Outcome out;
    ResolutionReport rep = build_report(cyclic(7, 1, 2, 4), {.label = "g7"});
    out.require(rep.group_type == GroupType::TypeI, "type");
    out.require(rep.k == 1, "k");
    out.require(rep.m == 2, "m");
    out.require(rep.euler_final == 5, "chi");
    out.require(rep.conj_formula == 5 && rep.conj_enum == 5 && rep.orbifold_euler == 5,
                "class counts");
    out.require(rep.oracle_classes && *rep.oracle_classes == 5, "oracle count");
    out.require(rep.triangle_count == 7, "triangle count");
    out.require(rep.checks.all(), "checks");
    out.require(rep.verified, "verified flag");
    return out;
}

Outcome criterion_order4() {
    Outcome out;
    ResolutionReport rep = build_report(cyclic(2, 1, 1, 0), {.label = "g2"});
    out.require(rep.group_order_G == 12, "|G| = 12");
    out.require(rep.euler_final == 4, "chi = 4");
    out.require(rep.conj_enum == 4 && rep.orbifold_euler == 4, "4 classes");
    out.require(rep.triangle_count == 4, "4 triangles");
    out.require(rep.verified, "verified flag");

    // The wing quadrangle is degenerate here: its apex lies on the edge
    // e1-e2, so the cycle must collapse to the corner triangle ...
    std::vector<LatticePoint> collapsed = canonicalize_region_cycle(
        {{2, 0, 0, 2}, {0, 2, 0, 2}, {1, 1, 0, 2}, {1, 0, 1, 2}});
    out.require(collapsed == std::vector<LatticePoint>{
                                 {2, 0, 0, 2}, {1, 1, 0, 2}, {1, 0, 1, 2}},
                "quadrangle collapse");
    // ... and the final triangulation is the medial subdivision: the
    // corner triangle plus the rotation-fixed medial triangle.
    Triangulation tri = build_symmetric_triangulation(cyclic(2, 1, 1, 0));
    int a = find_point(tri, {2, 0, 0, 2});
    int b = find_point(tri, {1, 1, 0, 2});
    int c = find_point(tri, {1, 0, 1, 2});
    int d = find_point(tri, {0, 1, 1, 2});
    bool corner_found = false, medial_found = false;
    for (const auto& t : tri.triangles) {
        std::set<int> key{t[0], t[1], t[2]};
        if (key == std::set<int>{a, b, c}) corner_found = true;
        if (key == std::set<int>{b, c, d}) medial_found = true;
    }
    out.require(corner_found, "corner triangle present");
    out.require(medial_found, "medial triangle present");
    return out;
}

Outcome criterion_order3() {
    Outcome out;
    ResolutionReport rep = build_report(cyclic(3, 1, 1, 1), {.label = "g3"});
    out.require(rep.group_type == GroupType::TypeII, "type II");
    out.require(rep.k == 3, "k = 3");
    out.require(rep.euler_final == 9, "chi = 9");
    out.require(rep.conj_enum == 9, "9 classes");
    out.require(rep.triangle_count == 3, "3 triangles");
    out.require(rep.verified, "verified flag");

    Triangulation tri = build_symmetric_triangulation(cyclic(3, 1, 1, 1));
    Int fixed_vertices = 0;
    for (const LatticePoint& pt : tri.points)
        if (rotate(pt) == pt) ++fixed_vertices;
    out.require(fixed_vertices == 1, "exactly one rotation-fixed vertex");
    for (const auto& orbit : tri.orbits)
        out.require(orbit.size() == 3, "no rotation-fixed triangle");
    return out;
}

Outcome criterion_sweep(SweepResult& result) {
    Outcome out;
    result = run_sweep({.max_r = 30, .two_gen = true, .two_gen_max_r = 12});
    out.require(result.cases_total > 0, "non-empty sweep");
    out.require(result.cases_total == static_cast<Int>(result.rows.size()),
                "row count");
    for (const SweepRow& row : result.rows) {
        if (!row.verified) {
            out.require(false, row.label + ": " + row.failure_detail);
            break;
        }
        out.require(row.euler == row.classes, row.label + ": euler != classes");
    }
    out.require(result.cases_failed == 0, "failed cases");
    return out;
}

Outcome criterion_closed_form() {
    Outcome out;
    for (Int m = 0; m <= 10000; ++m) {
        if (euler_final(3 * m + 1, 1) != m + 3) {
            out.require(false, "type I mismatch at m=" + std::to_string(m));
            break;
        }
        if (euler_final(3 * m, 3) != m + 8) {
            out.require(false, "type II mismatch at m=" + std::to_string(m));
            break;
        }
    }
    return out;
}

Outcome criterion_defect_detection() {
    Outcome out;
    DiagonalGroup gp = cyclic(7, 1, 2, 4);
    PlaneLattice lat = build_plane_lattice(gp);
    Triangulation good = build_symmetric_triangulation(gp);
    int i_p = find_point(good, {2, 4, 1, 7});
    int i_p1 = find_point(good, {4, 1, 2, 7});
    int i_e1 = find_point(good, {7, 0, 0, 7});
    int i_e2 = find_point(good, {0, 7, 0, 7});
    out.require(i_p >= 0 && i_p1 >= 0 && i_e1 >= 0 && i_e2 >= 0, "vertex lookup");
    if (!out.ok) return out;

    // Defect 1: flip the diagonal of the wing quadrangle.  The flipped
    // pair has a triangle with a fourth lattice point on its boundary and
    // a zero-area companion.
    Triangulation flipped = good;
    out.require(erase_triangle(flipped, {i_p, i_p1, i_e1}), "flip setup (1)");
    out.require(erase_triangle(flipped, {i_p, i_e1, i_e2}), "flip setup (2)");
    if (!out.ok) return out;
    flipped.triangles.push_back({i_p1, i_e1, i_e2});
    flipped.triangles.push_back({i_p1, i_e2, i_p});
    out.require(!validate_triangulation(flipped, lat, gp).all(),
                "flipped diagonal not caught");

    // Defect 2: drop one triangle.
    Triangulation dropped = good;
    dropped.triangles.pop_back();
    out.require(!validate_triangulation(dropped, lat, gp).all(),
                "missing triangle not caught");

    // Defect 3: relabel a vertex of one triangle.
    Triangulation relabeled = good;
    std::array<int, 3>& t = relabeled.triangles.front();
    int other = 0;
    while (other == t[0] || other == t[1] || other == t[2]) ++other;
    t[0] = other;
    out.require(!validate_triangulation(relabeled, lat, gp).all(),
                "relabeled vertex not caught");
    return out;
}

Outcome criterion_matrix_witness() {
    Outcome out;
    Int groups_checked = 0;
    for (const auto& [r, gens] : sweep_specs(30, 12)) {
        DiagonalGroup gp = generate_diagonal_group(r, gens);
        if (3 * gp.order() > 300) continue;
        std::vector<TrihedralElement> group = enumerate_group(gp);
        for (const TrihedralElement& g : group)
            for (const TrihedralElement& h : group)
                if (to_matrix(compose(g, h)) != matmul(to_matrix(g), to_matrix(h))) {
                    out.require(false, "law mismatch at r=" + std::to_string(r));
                    return out;
                }
        ++groups_checked;
    }
    out.require(groups_checked > 0, "no groups in range");
    return out;
}

}  // namespace

int main() {
    int failures = 0;
    int index = 0;
    auto run = [&](const char* name, auto&& body, double budget_sec) {
        ++index;
        Clock::time_point t0 = Clock::now();
        Outcome out = body();
        double elapsed = seconds_since(t0);
        if (elapsed > budget_sec) {
            out.ok = false;
            if (out.detail.empty())
                out.detail = "exceeded " + std::to_string(budget_sec) + "s budget";
        }
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL",
                    index, name, elapsed, out.detail.empty() ? "" : " - ",
                    out.detail.c_str());
        if (!out.ok) ++failures;
        return out.ok;
    };

    run("order-7 cyclic: chi = 5 = classes, 7 unimodular triangles",
        criterion_order7, kSmallCaseBudgetSec);
    run("order-4 Klein: chi = 4 = classes of the 12-element group, "
        "degenerate quadrangle handled",
        criterion_order4, kSmallCaseBudgetSec);
    run("order-3 scalars: star triangulation, one fixed vertex, chi = 9",
        criterion_order3, kSmallCaseBudgetSec);

    SweepResult sweep;
    bool sweep_ok = run(
        "sweep r<=30 plus two-generator r<=12: every case verified",
        [&] { return criterion_sweep(sweep); }, kSweepBudgetSec);
    if (sweep_ok)
        std::printf("     sweep covered %lld distinct groups\n",
                    static_cast<long long>(sweep.cases_total));

    run("closed form chi(3m+1) = m+3 and chi(3m) = m+8 up to m = 10000",
        criterion_closed_form, kSweepBudgetSec);
    run("three injected triangulation defects are each detected",
        criterion_defect_detection, kSmallCaseBudgetSec);
    run("matrix product law agrees with composition on every group with |G| <= 300",
        criterion_matrix_witness, kSweepBudgetSec);

    std::printf("acceptance: %d/7 criteria passed\n", 7 - failures);
    return failures;
}
