#include "twocst/optimal.hpp"

#include "twocst/errors.hpp"
#include "solver_detail.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <unordered_map>

namespace twocst {

namespace detail {

Universe make_universe(int n, const std::vector<Rat>& atom_weights, TreeKind kind,
                       bool allow_eq) {
    Universe u;
    u.n = n;
    u.kind = kind;
    u.allow_eq = allow_eq;
    Int lcm = 1;
    for (const Rat& r : atom_weights)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(r));
    u.scale = lcm;
    u.w.resize(atom_weights.size());
    for (std::size_t i = 0; i < atom_weights.size(); ++i) {
        const bool routed_weight = kind != TreeKind::SuccessfulOnly || i % 2 == 1;
        u.w[i] = routed_weight
                     ? boost::multiprecision::numerator(atom_weights[i]) *
                           (lcm / boost::multiprecision::denominator(atom_weights[i]))
                     : Int(0);
    }
    u.prefix.resize(u.w.size() + 1);
    u.prefix[0] = 0;
    for (std::size_t i = 0; i < u.w.size(); ++i)
        u.prefix[i + 1] = u.prefix[i] + u.w[i];
    return u;
}

bool present(const Universe& u, const State& s, int idx) {
    if (idx < s.lo || idx > s.hi)
        return false;
    if (idx % 2 == 0)
        return u.kind != TreeKind::SuccessfulOnly;
    return (s.excl >> ((idx - 1) / 2) & 1) == 0;
}

State canonical(const Universe& u, State s) {
    while (s.lo <= s.hi && !present(u, s, s.lo))
        ++s.lo;
    while (s.hi >= s.lo && !present(u, s, s.hi))
        --s.hi;
    if (s.lo > s.hi)
        return State{1, 0, 0}; // canonical empty
    // Excluded keys outside the range are irrelevant; drop them.
    std::uint64_t mask = 0;
    for (int idx = s.lo + 1; idx < s.hi; ++idx)
        if (idx % 2 == 1)
            mask |= std::uint64_t{1} << ((idx - 1) / 2);
    s.excl &= mask;
    return s;
}

int count_present(const Universe& u, const State& s) {
    int count = 0;
    for (int idx = s.lo; idx <= s.hi; ++idx)
        if (present(u, s, idx))
            ++count;
    return count;
}

int count_present_keys(const Universe& u, const State& s) {
    int count = 0;
    for (int idx = s.lo % 2 == 1 ? s.lo : s.lo + 1; idx <= s.hi; idx += 2)
        if (present(u, s, idx))
            ++count;
    return count;
}

std::optional<Atom> single_present_atom(const Universe& u, const State& s) {
    std::optional<Atom> found;
    for (int idx = s.lo; idx <= s.hi; ++idx) {
        if (!present(u, s, idx))
            continue;
        if (found)
            return std::nullopt;
        found = Atom::from_index(idx);
    }
    return found;
}

std::optional<int> single_present_key(const Universe& u, const State& s) {
    std::optional<int> found;
    for (int idx = s.lo % 2 == 1 ? s.lo : s.lo + 1; idx <= s.hi; idx += 2) {
        if (!present(u, s, idx))
            continue;
        if (found)
            return std::nullopt;
        found = (idx + 1) / 2;
    }
    return found;
}

Int mass(const Universe& u, const State& s) {
    if (s.lo > s.hi)
        return 0;
    Int total = u.prefix[s.hi + 1] - u.prefix[s.lo];
    for (int idx = s.lo; idx <= s.hi; ++idx)
        if (idx % 2 == 1 && (s.excl >> ((idx - 1) / 2) & 1))
            total -= u.w[idx];
    return total;
}

std::optional<Leaf> admissible_leaf(const Universe& u, const State& s) {
    switch (u.kind) {
    case TreeKind::Loc: {
        const auto atom = single_present_atom(u, s);
        if (!atom)
            return std::nullopt;
        if (atom->is_key())
            return Leaf{LeafKind::Key, atom->key_value()};
        return Leaf{LeafKind::Interval, atom->interval_index()};
    }
    case TreeKind::Nil: {
        const int keys = count_present_keys(u, s);
        if (keys == 0)
            return Leaf{LeafKind::Nil, 0};
        if (keys == 1 && count_present(u, s) == 1)
            return Leaf{LeafKind::Key, *single_present_key(u, s)};
        return std::nullopt;
    }
    case TreeKind::SuccessfulOnly: {
        const auto key = single_present_key(u, s);
        if (!key)
            return std::nullopt;
        return Leaf{LeafKind::Key, *key};
    }
    }
    return std::nullopt;
}

namespace {

bool nonempty(const Universe& u, const State& s) {
    if (u.kind == TreeKind::SuccessfulOnly)
        return count_present_keys(u, s) > 0;
    return s.lo <= s.hi;
}

} // namespace

std::vector<Split> admissible_splits(const Universe& u, const State& s) {
    std::vector<Split> splits;
    for (int k = 1; k <= u.n; ++k) {
        const int kidx = 2 * k - 1;
        if (u.allow_eq && present(u, s, kidx)) {
            State yes{kidx, kidx, 0};
            State no = s;
            no.excl |= std::uint64_t{1} << (k - 1);
            no = canonical(u, no);
            if (nonempty(u, no))
                splits.push_back({{CmpOp::Eq, k}, canonical(u, yes), no});
        }
        if (kidx > s.lo && kidx <= s.hi) {
            State yes = canonical(u, State{s.lo, kidx - 1, s.excl});
            State no = canonical(u, State{kidx, s.hi, s.excl});
            if (nonempty(u, yes) && nonempty(u, no))
                splits.push_back({{CmpOp::Less, k}, yes, no});
        }
    }
    return splits;
}

State top_state(const Universe& u) {
    return canonical(u, State{0, static_cast<int>(u.w.size()) - 1, 0});
}

NodePtr leaf_node(const Leaf& leaf) {
    switch (leaf.kind) {
    case LeafKind::Key:
        return make_key_leaf(leaf.value);
    case LeafKind::Interval:
        return make_interval_leaf(leaf.value);
    case LeafKind::Nil:
        break;
    }
    return make_nil_leaf();
}

} // namespace detail

namespace {

using detail::State;
using detail::StateHash;
using detail::Universe;

struct MemoEntry {
    Int value;
    NodePtr tree;
};

class ExactSolver {
public:
    explicit ExactSolver(const Universe& u) : u_(u) {}

    MemoEntry solve(const State& s) {
        auto it = memo_.find(s);
        if (it != memo_.end())
            return it->second;
        MemoEntry best;
        if (const auto leaf = detail::admissible_leaf(u_, s)) {
            best = {Int(0), detail::leaf_node(*leaf)};
        }
        else {
            const Int here = detail::mass(u_, s);
            bool have = false;
            for (const auto& split : detail::admissible_splits(u_, s)) {
                const MemoEntry yes = solve(split.yes);
                const MemoEntry no = solve(split.no);
                const Int value = here + yes.value + no.value;
                if (!have || value < best.value) {
                    best = {value, make_internal(split.cmp, yes.tree, no.tree)};
                    have = true;
                }
            }
            if (!have)
                throw InternalError("exact solver: state admits neither leaf nor split");
        }
        memo_.emplace(s, best);
        return best;
    }

private:
    const Universe& u_;
    std::unordered_map<State, MemoEntry, StateHash> memo_;
};

SolveResult solve_universe(const Universe& u) {
    // Degenerate universes (no keys in successful-only mode) get a bare leaf.
    const State top = detail::top_state(u);
    if (u.kind == TreeKind::SuccessfulOnly && detail::count_present_keys(u, top) == 0)
        return {Rat(0), Tree{make_nil_leaf()}};
    ExactSolver solver(u);
    const MemoEntry entry = solver.solve(top);
    return {Rat(entry.value) / Rat(u.scale), Tree{entry.tree}};
}

} // namespace

SolveResult optimal(const Instance& instance, TreeKind kind, const SolverOptions& options) {
    const int hard_cap = 31; // atom masks and key masks are 64-bit
    if (instance.n() > options.max_n || instance.n() > hard_cap)
        throw SolverLimitError("optimal: n=" + std::to_string(instance.n()) +
                               " exceeds the solver limit " +
                               std::to_string(std::min(options.max_n, hard_cap)));
    const Universe u =
        detail::make_universe(instance.n(), instance.atom_weights(), kind, true);
    return solve_universe(u);
}

SolveResult successful_only_optimal_over_items(const std::vector<Rat>& weights) {
    if (weights.empty())
        throw std::invalid_argument("successful_only_optimal_over_items: no items");
    if (weights.size() > 31)
        throw SolverLimitError("successful_only_optimal_over_items: too many items");
    const int m = static_cast<int>(weights.size());
    std::vector<Rat> atom_weights(atom_count(m), Rat(0));
    for (int j = 1; j <= m; ++j) {
        if (weights[j - 1] < 0)
            throw std::invalid_argument(
                "successful_only_optimal_over_items: negative weight");
        atom_weights[2 * j - 1] = weights[j - 1];
    }
    const Universe u =
        detail::make_universe(m, atom_weights, TreeKind::SuccessfulOnly, false);
    return solve_universe(u);
}

} // namespace twocst
