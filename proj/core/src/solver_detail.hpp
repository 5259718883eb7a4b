#pragma once

// Shared state mechanics for the exact solvers: a query state is the set of
// atoms that can still reach a node, always a contiguous order-index range
// minus keys excluded by failed equality tests. The brute-force oracle reuses
// only these primitives, not the memoized recurrence.

#include "twocst/atom.hpp"
#include "twocst/instance.hpp"
#include "twocst/rational.hpp"
#include "twocst/tree.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace twocst::detail {

struct Universe {
    int n = 0;
    TreeKind kind = TreeKind::Loc;
    bool allow_eq = true;
    std::vector<Int> w;      // atom weights scaled to integers; interval
                             // entries are zeroed for SuccessfulOnly
    std::vector<Int> prefix; // prefix[i] = sum of w[0..i)
    Int scale = 1;           // exact cost = integer value / scale
};

//! Scales exact rational atom weights to integers by the lcm of denominators.
Universe make_universe(int n, const std::vector<Rat>& atom_weights, TreeKind kind,
                       bool allow_eq);

struct State {
    int lo = 0, hi = 0;      // inclusive atom order-index range
    std::uint64_t excl = 0;  // keys ruled out, bit k-1 per key k
    bool operator==(const State&) const = default;
};

struct StateHash {
    std::size_t operator()(const State& s) const {
        std::uint64_t h = static_cast<std::uint64_t>(s.lo) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(s.hi) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h ^= s.excl + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

//! Is the atom at `idx` still in the state and routed by the universe's kind?
bool present(const Universe& u, const State& s, int idx);

//! Trims lo/hi to present atoms so equal sets compare equal.
State canonical(const Universe& u, State s);

int count_present(const Universe& u, const State& s);
int count_present_keys(const Universe& u, const State& s);
std::optional<Atom> single_present_atom(const Universe& u, const State& s);
std::optional<int> single_present_key(const Universe& u, const State& s);

Int mass(const Universe& u, const State& s);

//! Leaf a state may legally stop at, if any:
//!   Loc: exactly one atom left; Nil: no keys left, or exactly one key alone;
//!   SuccessfulOnly: exactly one key left.
std::optional<Leaf> admissible_leaf(const Universe& u, const State& s);

struct Split {
    Comparison cmp;
    State yes, no; // canonical
};

//! Admissible comparisons in deterministic tie-break order: keys ascending,
//! Eq before Less on the same key. Both sides keep at least one routed atom.
std::vector<Split> admissible_splits(const Universe& u, const State& s);

State top_state(const Universe& u);

NodePtr leaf_node(const Leaf& leaf);

} // namespace twocst::detail
