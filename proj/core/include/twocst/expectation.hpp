#pragma once

#include "twocst/convert.hpp"
#include "twocst/instance.hpp"
#include "twocst/rational.hpp"
#include "twocst/tree.hpp"

#include <cstdint>
#include <vector>

namespace twocst {

struct ExpectationOptions {
    //! Most case-d forks tolerated across the whole execution tree.
    int max_branch_points = 20;
    //! Audit every step of every execution with check_step_contract.
    bool check_contracts = false;
};

struct ExpectationResult {
    Rat expected_cost;
    std::vector<Rat> per_atom_expected_depth; // by atom order index
    std::uint64_t executions = 0;
};

//! Replays the conversion once per distinct coin outcome, weighting each
//! execution by 2^-flips, and returns the exact expectation of the located
//! tree's cost and of every atom's depth. Later flips may only exist under
//! specific earlier outcomes, so the runs form an execution tree explored by
//! script extension. Throws BranchLimitError past options.max_branch_points.
ExpectationResult exact_expected_cost(const Tree& nil_tree, const Instance& instance,
                                      const ExpectationOptions& options = {});

struct BestConversion {
    Tree tree;
    Rat cost;
    ConversionTrace trace;
};

//! Cheapest execution of the conversion (first in yes-before-no order on
//! ties). Its cost never exceeds the exact expectation.
BestConversion best_conversion(const Tree& nil_tree, const Instance& instance,
                               const ExpectationOptions& options = {});

} // namespace twocst
