#include "twocst/expectation.hpp"

#include "twocst/errors.hpp"
#include "twocst/search.hpp"

#include <optional>
#include <utility>

namespace twocst {

namespace {

//! Drives process() over every coin script. A script that runs out mid-way
//! marks a fresh branch point; both extensions are then explored.
template <typename Fn>
void explore(const Tree& input, const Instance& instance,
             const ExpectationOptions& options, const ProcessOptions& popts,
             std::vector<Coin>& script, int& branch_points, Fn&& fn) {
    std::optional<ProcessResult> result;
    {
        ScriptedCoins coins(script);
        try {
            result = process(input, instance, coins, popts);
        } catch (const CoinScriptExhausted&) {
        }
    }
    if (!result) {
        ++branch_points;
        if (branch_points > options.max_branch_points)
            throw BranchLimitError("conversion branched more than " +
                                   std::to_string(options.max_branch_points) +
                                   " times");
        script.push_back(Coin::Yes);
        explore(input, instance, options, popts, script, branch_points, fn);
        script.back() = Coin::No;
        explore(input, instance, options, popts, script, branch_points, fn);
        script.pop_back();
        return;
    }
    fn(*result, script.size());
}

} // namespace

ExpectationResult exact_expected_cost(const Tree& nil_tree, const Instance& instance,
                                      const ExpectationOptions& options) {
    ExpectationResult out;
    out.per_atom_expected_depth.assign(atom_count(instance.n()), Rat(0));
    std::vector<Coin> script;
    int branch_points = 0;
    const ProcessOptions popts{options.check_contracts};
    explore(nil_tree, instance, options, popts, script, branch_points,
            [&](const ProcessResult& r, std::size_t flips) {
                const Rat prob = Rat(1) / Rat(Int(1) << flips);
                out.expected_cost += prob * cost(r.tree, instance, TreeKind::Loc);
                const std::vector<int> depths = depth_vector(r.tree, instance.n());
                for (std::size_t i = 0; i < depths.size(); ++i)
                    out.per_atom_expected_depth[i] += prob * depths[i];
                ++out.executions;
            });
    return out;
}

BestConversion best_conversion(const Tree& nil_tree, const Instance& instance,
                               const ExpectationOptions& options) {
    std::optional<BestConversion> best;
    std::vector<Coin> script;
    int branch_points = 0;
    const ProcessOptions popts{options.check_contracts};
    explore(nil_tree, instance, options, popts, script, branch_points,
            [&](ProcessResult& r, std::size_t) {
                Rat c = cost(r.tree, instance, TreeKind::Loc);
                if (!best || c < best->cost)
                    best = BestConversion{std::move(r.tree), std::move(c),
                                          std::move(r.trace)};
            });
    if (!best)
        throw InternalError("best_conversion: no execution completed");
    return std::move(*best);
}

} // namespace twocst
