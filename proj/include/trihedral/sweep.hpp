#pragma once

#include <vector>

#include "trihedral/resolution.hpp"

namespace trihedral {

struct SweepOptions {
    Int max_r = 30;
    bool two_gen = false;
    Int two_gen_max_r = 12;
    Int oracle_bound = kDefaultOracleBound;
    /// Skip the brute-force class count on each case (formula and
    /// enumeration identities are still checked).
    bool skip_oracle = false;
};

struct SweepRow {
    std::string label;
    Int r = 1;
    Int group_order = 1;
    std::string group_type;
    Int euler = 0;
    Int classes = 0;
    bool verified = false;
    std::string failure_detail;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    Int cases_total = 0;
    Int cases_failed = 0;
};

/// Runs the full verification pipeline on every cyclic diagonal group
/// <1/r(a,b,c)> with r <= max_r, plus (optionally) every two-generator
/// diagonal group with r <= two_gen_max_r.  Distinct generator sets
/// presenting the same abstract trihedral singularity are deduplicated
/// by a canonical key (reduced order plus sorted scaled element set).
SweepResult run_sweep(const SweepOptions& opts);

}  // namespace trihedral
