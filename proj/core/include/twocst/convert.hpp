#pragma once

#include "twocst/convert_types.hpp"
#include "twocst/instance.hpp"
#include "twocst/tree.hpp"

#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace twocst {

//! Answers the fair coin drawn by case d.
class CoinSource {
public:
    virtual ~CoinSource() = default;
    virtual Coin flip() = 0;
    //! Recorded in traces; absent for non-seeded sources.
    virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

class RandomCoins final : public CoinSource {
public:
    explicit RandomCoins(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    Coin flip() override;
    std::optional<std::uint64_t> seed() const override { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

//! Thrown by ScriptedCoins::flip past the end of the script. The expectation
//! evaluator relies on it to discover branch points.
class CoinScriptExhausted : public std::exception {
public:
    const char* what() const noexcept override { return "coin script exhausted"; }
};

//! Replays a fixed flip sequence; pure replay makes conversions repeatable.
class ScriptedCoins final : public CoinSource {
public:
    ScriptedCoins() = default;
    explicit ScriptedCoins(std::vector<Coin> script) : script_(std::move(script)) {}
    Coin flip() override;
    std::size_t used() const { return next_; }

private:
    std::vector<Coin> script_;
    std::size_t next_ = 0;
};

//! Determines which replacement applies to the equality node at node_path by
//! walking the search path of its key from the no child: the walk stops at a
//! leaf, at a second comparison to the same key, at a comparison to a smaller
//! key, or after two comparisons to larger keys. Shapes that cannot occur in
//! the intermediate trees of process (for example an equality node to a larger
//! key whose no child is not a less-than) raise InternalError.
CaseBindings classify(const Tree& tree, std::string_view node_path);

//! Rebuilds the subtree at bindings.node_path according to the case. The coin
//! must be present exactly for case d. Throws std::invalid_argument if the
//! tree no longer matches the bindings. Every node of the installed subtree,
//! shared subtrees included, is flagged processed.
Tree apply_replacement(const Tree& tree, const CaseBindings& bindings,
                       std::optional<Coin> coin);

struct StepContractReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

//! Audits one replacement step: the result must stay correct in the
//! bottom-leaf model, no leaf may keep a break due to the converted key, the
//! per-case depth contract must hold atom by atom, and a split leaf must not
//! come from an earlier step's installed subtree.
StepContractReport check_step_contract(const Tree& before, const Tree& after,
                                       const CaseBindings& bindings,
                                       const Instance& instance);

//! Case d only: applies both coins and checks that the two depth-change
//! vectors agree with the averaged contract (the converted key gains one
//! under either coin; every other atom's changes are opposite, each within
//! one).
StepContractReport check_d_pair(const Tree& before, const CaseBindings& bindings,
                                const Instance& instance);

struct ProcessOptions {
    //! Audit every step with check_step_contract and throw InternalError on
    //! any violation.
    bool check_contracts = false;
};

struct ProcessResult {
    Tree tree;
    ConversionTrace trace;
};

//! Eliminates every equality node of a correct non-redundant bottom-leaf tree
//! bottom-up, then prunes dead branches and labels each surviving bottom leaf
//! with its single interval. The result locates all 2n+1 atoms. Throws
//! InvalidTreeError on bad input and InternalError if an intermediate shape
//! contradicts the conversion's guarantees.
ProcessResult process(const Tree& nil_tree, const Instance& instance,
                      CoinSource& coins, const ProcessOptions& options = {});

} // namespace twocst
