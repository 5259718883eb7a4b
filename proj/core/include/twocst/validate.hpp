#pragma once

#include "twocst/instance.hpp"
#include "twocst/search.hpp"
#include "twocst/tree.hpp"

#include <string>
#include <vector>

namespace twocst {

struct ValidationReport {
    //! Every routed atom reaches a compatible leaf and all referenced keys
    //! and intervals are inside the instance.
    bool correct = false;
    //! Paths of nodes no routed atom passes through.
    std::vector<std::string> redundant_nodes;
    std::vector<std::string> violations;

    bool redundant() const { return !redundant_nodes.empty(); }
};

//! Routing check per kind:
//!  - Key k must reach KeyLeaf(k) (all kinds).
//!  - Interval i must reach IntervalLeaf(i) for Loc; IntervalLeaf(i) or
//!    NilLeaf for Nil; intervals are unrouted for SuccessfulOnly.
//! On non-redundant trees also checks the leaf-count invariants
//! (exactly 2n+1 for Loc, within [n+1, 2n+1] for Nil).
ValidationReport validate(const Tree& tree, const Instance& instance, TreeKind kind);

//! Splices out every node whose query set (over all 2n+1 atoms) is empty.
//! Keeps correctness and never deepens any atom; idempotent.
Tree prune_redundant(const Tree& tree, int n);

//! Replaces every IntervalLeaf with a NilLeaf (loc -> nil relabeling).
Tree relabel_intervals_to_nil(const Tree& tree);

} // namespace twocst
