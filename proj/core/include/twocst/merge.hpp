#pragma once

#include "twocst/instance.hpp"
#include "twocst/rational.hpp"
#include "twocst/tree.hpp"

namespace twocst {

struct MergeResult {
    Tree tree;
    Rat cost;
};

//! Locating tree by way of the successful-only model: each key k and the
//! interval directly above it merge into one item of weight beta_k + alpha_k
//! (the lowest interval is an item of its own), an optimal inequality-only
//! item tree is built, and every merged item's leaf is split back apart with
//! a single equality comparison.
MergeResult merge_convert(const Instance& instance);

} // namespace twocst
