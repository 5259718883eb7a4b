#pragma once

#include "twocst/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twocst {

//! The ten replacement cases of the equality-elimination step, keyed by the
//! shape of the short prefix walked from the converted Eq(B) node toward the
//! bottom leaf that the value B would reach:
//!   a1/a2: the walk hits that leaf after one/two nodes; the leaf is split.
//!   b:     the next node compares against a key A < B.
//!   c1/c2: the walk meets Less(B) immediately / below Less(D); no change.
//!   d:     Less(D) above a comparison to A < B; resolved by a fair coin.
//!   e/f:   Less(D) above Less(C)/Eq(C) with B < C < D.
//!   g/h:   Eq(D) above Less(X) with X == D / X > D.
enum class CaseType { A1, A2, B, C1, C2, D, E, F, G, H };

const char* case_name(CaseType c); // "a1".."h"

enum class Coin : std::uint8_t { Yes, No };

//! Everything apply_replacement needs, captured by classify against a
//! specific tree state. Exactly the fields a case demands are set; subtree
//! handles are shared pointers into the classified tree, which lets
//! apply_replacement detect stale bindings.
struct CaseBindings {
    CaseType type{};
    std::string node_path; // path of the converted Eq(B) node
    int b = 0;
    std::optional<Comparison> diamond; // the comparison to A < B (cases b, d)
    std::optional<int> d_key;          // D > B       (a2, c2, d..h)
    std::optional<int> c_key;          // C in (B, D) (e, f)
    std::optional<int> x_key;          // X >= D      (g, h)
    NodePtr t1, t2, t3;                // matched subtrees, null when absent
    NodePtr break_leaf;                // the leaf split by a1/a2
    std::string break_leaf_path;
};

struct ConvertStep {
    std::string path; // of the converted node, in the tree state at that step
    CaseType type{};
    std::optional<Coin> coin; // present iff type == D
};

struct ConversionTrace {
    std::optional<std::uint64_t> seed; // absent for scripted/deterministic runs
    std::vector<ConvertStep> steps;

    bool operator==(const ConversionTrace&) const;
};

inline bool operator==(const ConvertStep& a, const ConvertStep& b) {
    return a.path == b.path && a.type == b.type && a.coin == b.coin;
}

inline bool ConversionTrace::operator==(const ConversionTrace& other) const {
    return seed == other.seed && steps == other.steps;
}

} // namespace twocst
