#pragma once

#include "twocst/instance.hpp"
#include "twocst/tree.hpp"

#include <vector>

namespace twocst {

struct SolverOptions {
    //! Exact search is exponential in n; refuse instances above this.
    int max_n = 10;
};

struct SolveResult {
    Rat cost;
    Tree tree;
};

//! Minimum-cost correct non-redundant tree of the given kind, by memoized
//! exact search over query states (a contiguous atom range minus keys already
//! ruled out by failed equality tests). Equal-cost candidates are broken
//! deterministically: smallest comparison key first, Eq before Less on the
//! same key. Throws SolverLimitError when n exceeds options.max_n.
SolveResult optimal(const Instance& instance, TreeKind kind,
                    const SolverOptions& options = {});

//! Independent oracle: plain recursive enumeration of every correct
//! non-redundant tree of the kind (no memo, dominated shapes included),
//! returning a minimum-cost one. The returned cost is recomputed from the
//! winning tree by atom search and cross-checked against the fold.
//! Restricted to n <= 4.
SolveResult brute_force_optimal(const Instance& instance, TreeKind kind);

//! Minimum-cost successful-only tree over an ordered item sequence, items
//! acting as keys 1..m with the given weights and nothing in between.
//! Restricted to inequality comparisons so that every internal node maps to
//! an inequality on the original key space when items are merged key+interval
//! pairs. Weights need not be normalized; cost is in weight units.
//! Throws std::invalid_argument on an empty weight list.
SolveResult successful_only_optimal_over_items(const std::vector<Rat>& weights);

//! Brute-force counterpart of the item solver, m <= 6.
SolveResult brute_force_items(const std::vector<Rat>& weights);

} // namespace twocst
