#include "trihedral/sweep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace trihedral {

namespace {

using GenList = std::vector<std::array<Int, 3>>;

// Canonical form of the generated matrix group: divide out the common
// factor of r and all residues, then list the scaled element set.  Two
// generator lists describe the same trihedral singularity exactly when
// these keys coincide (e.g. 1/4(2,2,0) and 1/2(1,1,0)).
std::pair<Int, GenList> canonical_key(const DiagonalGroup& gp) {
    Int g = gp.r;
    for (const auto& e : gp.elements) g = std::gcd(g, std::gcd(e.a, std::gcd(e.b, e.c)));
    GenList elems;
    elems.reserve(gp.elements.size());
    for (const auto& e : gp.elements) elems.push_back({e.a / g, e.b / g, e.c / g});
    std::sort(elems.begin(), elems.end());
    return {gp.r / g, std::move(elems)};
}

std::string label_of(Int r, const GenList& gens) {
    if (gens.empty()) return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << "+";
        os << "1/" << r << "(" << gens[i][0] << "," << gens[i][1] << ","
           << gens[i][2] << ")";
    }
    return os.str();
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
    if (opts.max_r < 1 || opts.max_r > kMaxExponent)
        throw input_error("sweep max_r out of range: " + std::to_string(opts.max_r));

    // Dedupe by generated group; the map is keyed canonically and stores
    // the first-seen spec, which enumeration order makes (r, gens)-minimal.
    std::map<std::pair<Int, GenList>, std::pair<Int, GenList>> specs;
    auto consider = [&specs](Int r, const GenList& gens) {
        const DiagonalGroup gp = generate_diagonal_group(r, gens);
        specs.emplace(canonical_key(gp), std::make_pair(r, gens));
    };

    for (Int r = 1; r <= opts.max_r; ++r)
        for (Int a = 0; a < r; ++a)
            for (Int b = 0; b < r; ++b)
                consider(r, {{a, b, (2 * r - a - b) % r}});

    if (opts.two_gen) {
        const Int cap = std::min(opts.two_gen_max_r, kMaxExponent);
        for (Int r = 1; r <= cap; ++r) {
            GenList triples;
            for (Int a = 0; a < r; ++a)
                for (Int b = 0; b < r; ++b)
                    triples.push_back({a, b, (2 * r - a - b) % r});
            for (std::size_t i = 0; i < triples.size(); ++i)
                for (std::size_t j = i + 1; j < triples.size(); ++j)
                    consider(r, {triples[i], triples[j]});
        }
    }

    std::vector<std::pair<Int, GenList>> ordered;
    ordered.reserve(specs.size());
    for (const auto& [key, spec] : specs) ordered.push_back(spec);
    std::sort(ordered.begin(), ordered.end());

    SweepResult result;
    for (const auto& [r, gens] : ordered) {
        const DiagonalGroup gp = generate_diagonal_group(r, gens);
        ReportOptions ropts;
        ropts.label = label_of(r, gens);
        ropts.oracle_bound = opts.skip_oracle ? 0 : opts.oracle_bound;
        const ResolutionReport rep = build_report(gp, ropts);

        SweepRow row;
        row.label = ropts.label;
        row.r = r;
        row.group_order = rep.group_order_Gprime;
        row.group_type = rep.failed_stage.empty() ? to_string(rep.group_type) : "?";
        row.euler = rep.euler_final;
        row.classes = rep.conj_enum;
        row.verified = rep.verified;
        if (!rep.verified)
            row.failure_detail = rep.failed_stage.empty()
                                     ? rep.failure_detail
                                     : rep.failed_stage + ": " + rep.failure_detail;
        result.rows.push_back(std::move(row));
    }
    result.cases_total = static_cast<Int>(result.rows.size());
    for (const auto& row : result.rows)
        if (!row.verified) ++result.cases_failed;
    return result;
}

}  // namespace trihedral
