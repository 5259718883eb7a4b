#include "twocst/optimal.hpp"

#include "twocst/errors.hpp"
#include "twocst/search.hpp"
#include "solver_detail.hpp"

#include <stdexcept>

namespace twocst {

namespace {

using detail::State;
using detail::Universe;

struct Candidate {
    Int value;
    NodePtr tree;
};

// Exhaustive recursion, deliberately unmemoized: every correct non-redundant
// tree over the state is generated, including ones that split a set some
// other tree stops at, and the cheapest is kept (first in enumeration order
// on ties).
Candidate enumerate(const Universe& u, const State& s) {
    bool have = false;
    Candidate best;
    if (const auto leaf = detail::admissible_leaf(u, s)) {
        best = {Int(0), detail::leaf_node(*leaf)};
        have = true;
    }
    const Int here = detail::mass(u, s);
    for (const auto& split : detail::admissible_splits(u, s)) {
        const Candidate yes = enumerate(u, split.yes);
        const Candidate no = enumerate(u, split.no);
        const Int value = here + yes.value + no.value;
        if (!have || value < best.value) {
            best = {value, make_internal(split.cmp, yes.tree, no.tree)};
            have = true;
        }
    }
    if (!have)
        throw InternalError("brute force: state admits neither leaf nor split");
    return best;
}

SolveResult enumerate_universe(const Universe& u, const Instance& check_against,
                               TreeKind kind) {
    const State top = detail::top_state(u);
    if (u.kind == TreeKind::SuccessfulOnly && detail::count_present_keys(u, top) == 0)
        return {Rat(0), Tree{make_nil_leaf()}};
    const Candidate winner = enumerate(u, top);
    const Rat folded = Rat(winner.value) / Rat(u.scale);
    // Cost the winning tree along the ordinary atom-search route; the fold
    // and the search must agree or the enumeration is broken.
    const Rat searched = cost(Tree{winner.tree}, check_against, kind);
    if (searched != folded)
        throw InternalError("brute force: folded cost disagrees with searched cost");
    return {searched, Tree{winner.tree}};
}

} // namespace

SolveResult brute_force_optimal(const Instance& instance, TreeKind kind) {
    if (instance.n() > 4)
        throw SolverLimitError("brute_force_optimal: n must be <= 4");
    const Universe u =
        detail::make_universe(instance.n(), instance.atom_weights(), kind, true);
    return enumerate_universe(u, instance, kind);
}

SolveResult brute_force_items(const std::vector<Rat>& weights) {
    if (weights.empty())
        throw std::invalid_argument("brute_force_items: no items");
    if (weights.size() > 6)
        throw SolverLimitError("brute_force_items: m must be <= 6");
    const int m = static_cast<int>(weights.size());
    std::vector<Rat> atom_weights(atom_count(m), Rat(0));
    std::vector<Rat> beta(m), alpha(m + 1, Rat(0));
    Rat total = 0;
    for (const Rat& w : weights) {
        if (w < 0)
            throw std::invalid_argument("brute_force_items: negative weight");
        total += w;
    }
    for (int j = 1; j <= m; ++j) {
        atom_weights[2 * j - 1] = weights[j - 1];
        beta[j - 1] = weights[j - 1];
    }
    const Universe u =
        detail::make_universe(m, atom_weights, TreeKind::SuccessfulOnly, false);
    const State top = detail::top_state(u);
    const Candidate winner = enumerate(u, top);
    // Weights are not a probability distribution here, so cross-check by a
    // direct weighted depth sum instead of an Instance.
    const Tree tree{winner.tree};
    Rat searched = 0;
    for (int j = 1; j <= m; ++j)
        searched += weights[j - 1] * search(tree, Atom::key(j)).depth;
    if (searched != Rat(winner.value) / Rat(u.scale))
        throw InternalError("brute_force_items: folded cost disagrees with searched cost");
    return {searched, tree};
}

} // namespace twocst
