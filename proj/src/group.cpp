#include "trihedral/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace trihedral {

namespace {

Int mod(Int x, Int m) {
    Int v = x % m;
    return v < 0 ? v + m : v;
}

std::string triple_str(Int r, Int a, Int b, Int c) {
    return "1/" + std::to_string(r) + "(" + std::to_string(a) + "," +
           std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

DiagonalElement make_diagonal(Int r, Int a, Int b, Int c) {
    if (r < 1 || r > kMaxExponent)
        throw input_error("exponent r out of range [1, " +
                          std::to_string(kMaxExponent) + "]: " + std::to_string(r));
    DiagonalElement d{r, mod(a, r), mod(b, r), mod(c, r)};
    if ((d.a + d.b + d.c) % r != 0)
        throw input_error("generator " + triple_str(r, a, b, c) +
                          " is not in SL(3,C): a+b+c != 0 (mod r)");
    return d;
}

DiagonalElement rotate_diagonal(const DiagonalElement& d) {
    return {d.r, d.b, d.c, d.a};
}

DiagonalElement add(const DiagonalElement& x, const DiagonalElement& y) {
    if (x.r != y.r)
        throw input_error("exponent mismatch: " + std::to_string(x.r) + " vs " +
                          std::to_string(y.r));
    return {x.r, mod(x.a + y.a, x.r), mod(x.b + y.b, x.r), mod(x.c + y.c, x.r)};
}

DiagonalElement negate(const DiagonalElement& x) {
    return {x.r, mod(-x.a, x.r), mod(-x.b, x.r), mod(-x.c, x.r)};
}

bool DiagonalGroup::contains(const DiagonalElement& d) const {
    return std::binary_search(elements.begin(), elements.end(), d);
}

DiagonalGroup generate_diagonal_group(Int r, std::span<const std::array<Int, 3>> gens) {
    DiagonalGroup gp;
    gp.r = r;
    for (const auto& g : gens)
        gp.generators.push_back(make_diagonal(r, g[0], g[1], g[2]));

    // Rotation commutes with componentwise addition, so closing the
    // rotated copies of the generators under addition alone closes the
    // result under both operations.
    std::vector<DiagonalElement> rot_gens;
    for (const auto& g : gp.generators) {
        DiagonalElement d = g;
        for (int i = 0; i < 3; ++i) {
            rot_gens.push_back(d);
            d = rotate_diagonal(d);
        }
    }

    const DiagonalElement id = make_diagonal(r, 0, 0, 0);
    std::set<DiagonalElement> seen{id};
    std::deque<DiagonalElement> queue{id};
    while (!queue.empty()) {
        DiagonalElement e = queue.front();
        queue.pop_front();
        for (const auto& g : rot_gens) {
            DiagonalElement f = add(e, g);
            if (seen.insert(f).second) queue.push_back(f);
        }
    }
    gp.elements.assign(seen.begin(), seen.end());

    for (const auto& e : gp.elements)
        if (!gp.contains(rotate_diagonal(e)))
            throw invariant_violation("diagonal closure not rotation-invariant");
    return gp;
}

std::string to_string(GroupType t) {
    return t == GroupType::TypeI ? "I" : "II";
}

GroupType classify_type(const DiagonalGroup& gp) {
    bool has_central = false;
    if (gp.r % 3 == 0)
        has_central = gp.contains(DiagonalElement{gp.r, gp.r / 3, gp.r / 3, gp.r / 3});
    const GroupType type = has_central ? GroupType::TypeII : GroupType::TypeI;

    const Int residue = gp.order() % 3;
    const bool order_ok =
        (type == GroupType::TypeI && residue == 1) ||
        (type == GroupType::TypeII && residue == 0);
    if (!order_ok)
        throw invariant_violation("type " + to_string(type) + " but |G'| = " +
                                  std::to_string(gp.order()) + " (mod 3 mismatch)");
    return type;
}

TrihedralElement identity_element(Int r) {
    return {0, make_diagonal(r, 0, 0, 0)};
}

TrihedralElement compose(const TrihedralElement& g, const TrihedralElement& h) {
    DiagonalElement d = h.diag;
    for (int i = 0; i < g.shift; ++i) d = rotate_diagonal(d);
    return {(g.shift + h.shift) % 3, add(g.diag, d)};
}

TrihedralElement inverse(const TrihedralElement& g) {
    const int s = (3 - g.shift) % 3;
    DiagonalElement d = negate(g.diag);
    for (int i = 0; i < s; ++i) d = rotate_diagonal(d);
    return {s, d};
}

std::vector<TrihedralElement> enumerate_group(const DiagonalGroup& gp) {
    std::vector<TrihedralElement> out;
    out.reserve(3 * gp.elements.size());
    for (int s = 0; s < 3; ++s)
        for (const auto& d : gp.elements) out.push_back({s, d});
    std::sort(out.begin(), out.end());
    return out;
}

Int conjugacy_classes_enum(const std::vector<TrihedralElement>& group,
                           std::span<const DiagonalElement> conjugating_gens) {
    if (group.empty()) throw input_error("conjugacy count of an empty set");
    std::vector<TrihedralElement> sorted(group.begin(), group.end());
    std::sort(sorted.begin(), sorted.end());
    const Int r = sorted.front().diag.r;

    std::vector<TrihedralElement> conj;
    conj.push_back({1, DiagonalElement{r, 0, 0, 0}});  // T itself
    if (conjugating_gens.empty()) {
        for (const auto& g : sorted)
            if (g.shift == 0) conj.push_back(g);
    } else {
        for (const auto& d : conjugating_gens) conj.push_back({0, d});
    }
    std::vector<TrihedralElement> conj_inv;
    conj_inv.reserve(conj.size());
    for (const auto& x : conj) conj_inv.push_back(inverse(x));

    auto index_of = [&sorted](const TrihedralElement& g) -> std::size_t {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), g);
        if (it == sorted.end() || *it != g)
            throw input_error("set is not closed under conjugation");
        return static_cast<std::size_t>(it - sorted.begin());
    };

    std::vector<bool> visited(sorted.size(), false);
    Int classes = 0;
    for (std::size_t start = 0; start < sorted.size(); ++start) {
        if (visited[start]) continue;
        ++classes;
        std::deque<std::size_t> queue{start};
        visited[start] = true;
        while (!queue.empty()) {
            const TrihedralElement g = sorted[queue.front()];
            queue.pop_front();
            for (std::size_t i = 0; i < conj.size(); ++i) {
                const std::size_t j = index_of(compose(conj[i], compose(g, conj_inv[i])));
                if (!visited[j]) {
                    visited[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    return classes;
}

Int conjugacy_count_formula(const DiagonalGroup& gp) {
    const Int n = gp.order();
    switch (classify_type(gp)) {
        case GroupType::TypeI:
            return (n - 1) / 3 + 3;  // n = 3m+1 -> m+3
        case GroupType::TypeII:
            return n / 3 + 8;        // n = 3m   -> m+8
    }
    throw invariant_violation("unreachable group type");
}

Int orbifold_euler(const std::vector<TrihedralElement>& group) {
    if (group.empty()) throw input_error("orbifold Euler number of an empty set");
    Int pairs = 0;
    for (const auto& g : group)
        for (const auto& h : group)
            if (compose(g, h) == compose(h, g)) ++pairs;
    const Int n = static_cast<Int>(group.size());
    if (pairs % n != 0)
        throw invariant_violation("commuting pair count " + std::to_string(pairs) +
                                  " not divisible by |G| = " + std::to_string(n));
    return pairs / n;
}

bool is_invariant_monomial(const DiagonalGroup& gp, Int i, Int j, Int k) {
    const Int r = gp.r;
    const Int ri = ((i % r) + r) % r;
    const Int rj = ((j % r) + r) % r;
    const Int rk = ((k % r) + r) % r;
    for (const auto& d : gp.elements)
        if ((d.a * ri + d.b * rj + d.c * rk) % r != 0) return false;
    return true;
}

}  // namespace trihedral
