#include "twocst/convert.hpp"
#include "twocst/errors.hpp"
#include "twocst/expectation.hpp"
#include "twocst/gen.hpp"
#include "twocst/merge.hpp"
#include "twocst/optimal.hpp"
#include "twocst/search.hpp"
#include "twocst/validate.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace twocst;
using namespace twocst::testing;

namespace {

NodePtr bot() { return make_nil_leaf(); }
NodePtr K(int k) { return make_key_leaf(k); }

Instance uniform(int n) {
    const Rat w(1, atom_count(n));
    return Instance::create(n, std::vector<Rat>(static_cast<std::size_t>(n), w),
                            std::vector<Rat>(static_cast<std::size_t>(n) + 1, w));
}

bool mentions(const StepContractReport& r, const char* text) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const std::string& v) {
                           return v.find(text) != std::string::npos;
                       });
}

//! Applies the step named by classify at `path` and requires the audited
//! contract to hold; returns the rewritten tree.
Tree step(const Tree& tree, const std::string& path, const Instance& inst,
          CaseType expect, std::optional<Coin> coin = std::nullopt) {
    const CaseBindings bind = classify(tree, path);
    REQUIRE(bind.type == expect);
    const Tree after = apply_replacement(tree, bind, coin);
    const StepContractReport r = check_step_contract(tree, after, bind, inst);
    CHECK(r.violations == std::vector<std::string>{});
    return after;
}

} // namespace

TEST_CASE("classify names each elimination case from the local shape") {
    // Bottom leaf right below: split in place.
    const Tree a1{make_eq(1, K(1), bot())};
    CHECK(classify(a1, "").type == CaseType::A1);
    CHECK(classify(a1, "").break_leaf_path == "N");

    const Tree a2{make_eq(1, K(1), make_less(2, bot(), make_eq(2, K(2), bot())))};
    const CaseBindings ba2 = classify(a2, "");
    CHECK(ba2.type == CaseType::A2);
    CHECK(ba2.d_key == 2);
    CHECK(ba2.break_leaf_path == "NY");

    // A comparison to a smaller key: rotate the equality below a new cut.
    const Tree b_eq{make_eq(2, K(2), make_eq(1, K(1), bot()))};
    const CaseBindings bb = classify(b_eq, "");
    CHECK(bb.type == CaseType::B);
    CHECK(bb.diamond == Comparison{CmpOp::Eq, 1});
    const Tree b_less{make_eq(2, K(2), make_less(1, bot(), make_eq(1, K(1), bot())))};
    CHECK(classify(b_less, "").diamond == Comparison{CmpOp::Less, 1});

    // The key's own cut already follows: nothing to do.
    const Tree c1{make_eq(1, K(1), make_less(1, bot(), bot()))};
    CHECK(classify(c1, "").type == CaseType::C1);
    const Tree c2{make_eq(
        1, K(1), make_less(2, make_less(1, bot(), bot()), make_eq(2, K(2), bot())))};
    const CaseBindings bc2 = classify(c2, "");
    CHECK(bc2.type == CaseType::C2);
    CHECK(bc2.d_key == 2);

    const Tree d{make_eq(2, K(2),
                         make_less(3, make_eq(1, K(1), bot()), make_eq(3, K(3), bot())))};
    const CaseBindings bd = classify(d, "");
    CHECK(bd.type == CaseType::D);
    CHECK(bd.diamond == Comparison{CmpOp::Eq, 1});
    CHECK(bd.d_key == 3);

    const Tree e{make_eq(1, K(1),
                         make_less(3, make_less(2, bot(), make_eq(2, K(2), bot())),
                                   make_eq(3, K(3), bot())))};
    const CaseBindings be = classify(e, "");
    CHECK(be.type == CaseType::E);
    CHECK(be.c_key == 2);
    CHECK(be.d_key == 3);

    const Tree f{make_eq(1, K(1),
                         make_less(3, make_eq(2, K(2), bot()), make_eq(3, K(3), bot())))};
    const CaseBindings bf = classify(f, "");
    CHECK(bf.type == CaseType::F);
    CHECK(bf.c_key == 2);
    CHECK(bf.d_key == 3);

    const Tree g{make_eq(1, K(1), make_eq(2, K(2), make_less(2, bot(), bot())))};
    const CaseBindings bg = classify(g, "");
    CHECK(bg.type == CaseType::G);
    CHECK(bg.d_key == 2);
    CHECK(bg.x_key == 2);

    const Tree h{make_eq(1, K(1),
                         make_eq(2, K(2), make_less(3, bot(), make_eq(3, K(3), bot()))))};
    const CaseBindings bh = classify(h, "");
    CHECK(bh.type == CaseType::H);
    CHECK(bh.d_key == 2);
    CHECK(bh.x_key == 3);

    CHECK_THROWS_AS(classify(a1, "Y"), std::invalid_argument);
    CHECK_THROWS_AS(classify(c1, "N"), std::invalid_argument);
}

TEST_CASE("classify rejects shapes the conversion can never produce") {
    // An equality to a larger key must sit above a less-than cut.
    const Tree leaf_below{make_eq(1, K(1), make_eq(2, K(2), bot()))};
    CHECK_THROWS_AS(classify(leaf_below, ""), InternalError);
    const Tree eq_below{make_eq(1, K(1), make_eq(2, K(2), make_eq(3, K(3), bot())))};
    CHECK_THROWS_AS(classify(eq_below, ""), InternalError);
    // Under Less(D) only keys smaller than D may appear.
    const Tree big_under{make_eq(1, K(1), make_less(2, make_less(3, bot(), bot()), bot()))};
    CHECK_THROWS_AS(classify(big_under, ""), InternalError);
    // A second equality to the same key cannot survive non-redundancy.
    const Tree dup{make_eq(1, K(1), make_eq(1, K(1), bot()))};
    CHECK_THROWS_AS(classify(dup, ""), InternalError);
    // Cases that rotate the equality need its key leaf on the yes side.
    const Tree no_leaf{make_eq(2, make_less(1, bot(), bot()), make_eq(1, K(1), bot()))};
    CHECK_THROWS_AS(classify(no_leaf, ""), InternalError);
}

TEST_CASE("split cases a1 and a2 cut the straddling leaf by the converted key") {
    const Instance u1 = uniform(1);
    const Tree a1{make_eq(1, K(1), bot())};
    const Tree after1 = step(a1, "", u1, CaseType::A1);
    CHECK(same_tree(after1, Tree{make_eq(1, K(1), make_less(1, bot(), bot()))}));
    // Only the split leaf's atoms get deeper.
    CHECK(depth_vector(after1, 1) == std::vector<int>{2, 1, 2});

    const Instance u2 = uniform(2);
    const Tree a2{make_eq(1, K(1), make_less(2, bot(), make_eq(2, K(2), bot())))};
    const Tree after2 = step(a2, "", u2, CaseType::A2);
    CHECK(same_tree(
        after2,
        Tree{make_eq(1, K(1),
                     make_less(2, make_less(1, bot(), bot()), make_eq(2, K(2), bot())))}));
    CHECK(depth_vector(after2, 2) == std::vector<int>{3, 1, 3, 3, 3});
}

TEST_CASE("case b rotates the equality under the new cut at its key") {
    const Instance u2 = uniform(2);
    const Tree before{make_eq(2, K(2), make_eq(1, K(1), bot()))};
    const Tree after = step(before, "", u2, CaseType::B);
    CHECK(same_tree(after,
                    Tree{make_less(2, make_eq(1, K(1), bot()),
                                   make_eq(2, K(2), bot()))}));
}

TEST_CASE("cases c1 and c2 change nothing but retire the equality") {
    const Instance u1 = uniform(1);
    const Tree c1{make_eq(1, K(1), make_less(1, bot(), bot()))};
    const Tree after1 = step(c1, "", u1, CaseType::C1);
    CHECK(same_tree(after1, c1));
    CHECK(node_at(after1, "")->processed);
    CHECK(node_at(after1, "NY")->processed);

    const Instance u2 = uniform(2);
    const Tree c2{make_eq(
        1, K(1), make_less(2, make_less(1, bot(), bot()), make_eq(2, K(2), bot())))};
    const Tree after2 = step(c2, "", u2, CaseType::C2);
    CHECK(same_tree(after2, c2));
}

TEST_CASE("case d resolves the blocking cut with either coin") {
    const Instance u3 = uniform(3);
    const Tree before{make_eq(
        2, K(2), make_less(3, make_eq(1, K(1), bot()), make_eq(3, K(3), bot())))};
    const CaseBindings bind = classify(before, "");
    REQUIRE(bind.type == CaseType::D);

    const Tree yes = apply_replacement(before, bind, Coin::Yes);
    CHECK(same_tree(
        yes, Tree{make_less(2, make_eq(1, K(1), bot()),
                            make_eq(2, K(2),
                                    make_less(3, bot(), make_eq(3, K(3), bot()))))}));
    const Tree no = apply_replacement(before, bind, Coin::No);
    CHECK(same_tree(
        no, Tree{make_less(3,
                           make_eq(2, K(2),
                                   make_less(2, make_eq(1, K(1), bot()), bot())),
                           make_eq(3, K(3), bot()))}));

    CHECK(check_step_contract(before, yes, bind, u3).ok());
    CHECK(check_step_contract(before, no, bind, u3).ok());
    CHECK(check_d_pair(before, bind, u3).ok());

    const Tree not_d{make_eq(2, K(2), make_eq(1, K(1), bot()))};
    CHECK_THROWS_AS(check_d_pair(not_d, classify(not_d, ""), uniform(2)),
                    std::invalid_argument);
}

TEST_CASE("cases e through h hoist the cut at the nearby key") {
    const Instance u3 = uniform(3);

    const Tree e{make_eq(1, K(1),
                         make_less(3, make_less(2, bot(), make_eq(2, K(2), bot())),
                                   make_eq(3, K(3), bot())))};
    const Tree after_e = step(e, "", u3, CaseType::E);
    CHECK(same_tree(
        after_e,
        Tree{make_less(2, make_eq(1, K(1), make_less(1, bot(), bot())),
                       make_less(3, make_eq(2, K(2), bot()), make_eq(3, K(3), bot())))}));

    const Tree f{make_eq(1, K(1),
                         make_less(3, make_eq(2, K(2), bot()), make_eq(3, K(3), bot())))};
    const Tree after_f = step(f, "", u3, CaseType::F);
    CHECK(same_tree(
        after_f,
        Tree{make_less(2, make_eq(1, K(1), make_less(1, bot(), bot())),
                       make_less(3, make_eq(2, K(2), bot()), make_eq(3, K(3), bot())))}));
    // The atoms beyond the far cut keep their depth.
    CHECK(depth_vector(f, 3)[5] == depth_vector(after_f, 3)[5]);
    CHECK(depth_vector(f, 3)[6] == depth_vector(after_f, 3)[6]);

    const Instance u2 = uniform(2);
    const Tree g{make_eq(1, K(1), make_eq(2, K(2), make_less(2, bot(), bot())))};
    const Tree after_g = step(g, "", u2, CaseType::G);
    CHECK(same_tree(
        after_g,
        Tree{make_less(2, make_eq(1, K(1), make_less(1, bot(), bot())),
                       make_eq(2, K(2), bot()))}));

    const Tree h{make_eq(1, K(1),
                         make_eq(2, K(2), make_less(3, bot(), make_eq(3, K(3), bot()))))};
    const Tree after_h = step(h, "", u3, CaseType::H);
    CHECK(same_tree(
        after_h,
        Tree{make_less(2, make_eq(1, K(1), make_less(1, bot(), bot())),
                       make_eq(2, K(2),
                               make_less(3, bot(), make_eq(3, K(3), bot()))))}));
}

TEST_CASE("replacements demand a coin exactly for case d") {
    const Tree a1{make_eq(1, K(1), bot())};
    CHECK_THROWS_AS(apply_replacement(a1, classify(a1, ""), Coin::Yes),
                    std::invalid_argument);
    const Tree d{make_eq(
        2, K(2), make_less(3, make_eq(1, K(1), bot()), make_eq(3, K(3), bot())))};
    CHECK_THROWS_AS(apply_replacement(d, classify(d, ""), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("stale bindings are rejected instead of rewriting the wrong tree") {
    const Tree tree = fig1_nil_tree();
    const CaseBindings bind = classify(tree, "N");
    // Same shape, different nodes: subtree identity is pointer based.
    CHECK_THROWS_AS(apply_replacement(fig1_nil_tree(), bind, std::nullopt),
                    std::invalid_argument);

    // A step never converts the same node twice.
    Tree t1{make_eq(1, K(1), bot())};
    t1 = apply_replacement(t1, classify(t1, ""), std::nullopt);
    CHECK(classify(t1, "").type == CaseType::C1);
    CHECK_THROWS_AS(apply_replacement(t1, classify(t1, ""), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("replacement installs its whole subtree as processed") {
    const Tree a1{make_eq(1, K(1), bot())};
    const Tree after = apply_replacement(a1, classify(a1, ""), std::nullopt);
    for (const char* path : {"", "Y", "N", "NY", "NN"})
        CHECK(node_at(after, path)->processed);
    // The original tree is untouched.
    CHECK_FALSE(node_at(a1, "")->processed);
}

TEST_CASE("the contract check flags broken replacements") {
    const Instance u2 = uniform(2);
    const Tree before{make_eq(2, K(2), make_eq(1, K(1), bot()))};
    const CaseBindings bind = classify(before, "");
    const Tree good = apply_replacement(before, bind, std::nullopt);

    // Swapping the new cut's children misroutes everything below it.
    const StepContractReport swapped =
        check_step_contract(before, swap_children(good, ""), bind, u2);
    CHECK_FALSE(swapped.ok());
    CHECK(mentions(swapped, "not a correct bottom-leaf tree"));

    // Leaving the tree alone keeps the break and skips the key's extra step.
    const StepContractReport idle = check_step_contract(before, before, bind, u2);
    CHECK_FALSE(idle.ok());
    CHECK(mentions(idle, "keeps a break"));
    CHECK(mentions(idle, "must gain exactly one"));
}

TEST_CASE("the contract check refuses to split a leaf an earlier step installed") {
    Tree inner{make_eq(1, K(1), bot())};
    inner = apply_replacement(inner, classify(inner, ""), std::nullopt);
    const NodePtr recycled = node_at(inner, "NY");
    REQUIRE(recycled->processed);

    const Tree outer{make_eq(2, K(2), recycled)};
    const CaseBindings bind = classify(outer, "");
    REQUIRE(bind.type == CaseType::A1);
    const Tree after = apply_replacement(outer, bind, std::nullopt);
    const StepContractReport r = check_step_contract(outer, after, bind, uniform(2));
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, "installed by an earlier step"));
}

TEST_CASE("processing the uniform fifths tree replays the worked conversion") {
    const Instance fig1 = fig1_instance();
    ScriptedCoins coins;
    const ProcessResult r =
        process(fig1_nil_tree(), fig1, coins, ProcessOptions{true});

    CHECK(same_tree(r.tree, fig1_loc_tree()));
    CHECK(cost(r.tree, fig1, TreeKind::Loc) == Rat(12, 5));
    CHECK_FALSE(r.trace.seed.has_value());
    REQUIRE(r.trace.steps.size() == 2);
    CHECK(r.trace.steps[0] == ConvertStep{"N", CaseType::A1, std::nullopt});
    CHECK(r.trace.steps[1] == ConvertStep{"", CaseType::G, std::nullopt});

    // Interval depths grow while each key pays at most one more comparison.
    CHECK(depth_vector(r.tree, 2) == std::vector<int>{3, 2, 3, 2, 2});
    CHECK(coins.used() == 0);
}

TEST_CASE("processing locates every atom even on trivial inputs") {
    const Instance empty = Instance::create(0, {}, {Rat(1)});
    ScriptedCoins coins;
    const ProcessResult r0 = process(Tree{bot()}, empty, coins);
    CHECK(same_tree(r0.tree, Tree{make_interval_leaf(0)}));
    CHECK(r0.trace.steps.empty());

    const Instance u1 = uniform(1);
    const ProcessResult r1 = process(Tree{make_eq(1, K(1), bot())}, u1, coins);
    CHECK(same_tree(
        r1.tree,
        Tree{make_eq(1, K(1),
                     make_less(1, make_interval_leaf(0), make_interval_leaf(1)))}));
    CHECK(cost(r1.tree, u1, TreeKind::Loc) == Rat(5, 3));
}

TEST_CASE("processing rejects inputs outside its contract") {
    const Instance fig1 = fig1_instance();
    ScriptedCoins coins;

    CHECK_THROWS_AS(process(swap_children(fig1_nil_tree(), ""), fig1, coins),
                    InvalidTreeError);

    const Tree dup{make_eq(
        1, K(1),
        make_eq(1, K(1), make_eq(2, K(2), bot())))};
    CHECK_THROWS_AS(process(dup, fig1, coins), InvalidTreeError);

    // Already-located leaves are not bottom leaves.
    CHECK_THROWS_AS(process(fig1_loc_tree(), fig1, coins), InvalidTreeError);
}

TEST_CASE("a coin script shorter than the conversion surfaces as exhaustion") {
    const Instance u3 = uniform(3);
    const Tree d_tree{make_eq(
        2, K(2), make_less(3, make_eq(1, K(1), bot()), make_eq(3, K(3), bot())))};
    ScriptedCoins empty;
    CHECK_THROWS_AS(process(d_tree, u3, empty), CoinScriptExhausted);

    ScriptedCoins one({Coin::No});
    const ProcessResult r = process(d_tree, u3, one, ProcessOptions{true});
    CHECK(one.used() == 1);
    REQUIRE(r.trace.steps.size() == 3);
    CHECK(r.trace.steps[2].coin == Coin::No);
}

TEST_CASE("the exact expectation averages the two coin outcomes of a d step") {
    const Instance u3 = uniform(3);
    const Tree d_tree{make_eq(
        2, K(2), make_less(3, make_eq(1, K(1), bot()), make_eq(3, K(3), bot())))};

    ScriptedCoins yes({Coin::Yes}), no({Coin::No});
    const Rat cy = cost(process(d_tree, u3, yes).tree, u3, TreeKind::Loc);
    const Rat cn = cost(process(d_tree, u3, no).tree, u3, TreeKind::Loc);

    const ExpectationResult ex = exact_expected_cost(d_tree, u3);
    CHECK(ex.executions == 2);
    CHECK(ex.expected_cost == (cy + cn) / 2);
    CHECK(ex.expected_cost <= cost(d_tree, u3, TreeKind::Nil) + 1);

    const BestConversion best = best_conversion(d_tree, u3);
    CHECK(best.cost == std::min(cy, cn));
    CHECK(best.cost <= ex.expected_cost);
    CHECK(cost(best.tree, u3, TreeKind::Loc) == best.cost);

    CHECK_THROWS_AS(exact_expected_cost(d_tree, u3, ExpectationOptions{0, false}),
                    BranchLimitError);
}

TEST_CASE("seeded conversions are reproducible and replayable from their trace") {
    for (int n : {3, 5}) {
        const Instance inst = random_instance(n, 90 + static_cast<std::uint64_t>(n));
        const Tree tree = random_nil_tree(n, 17 + static_cast<std::uint64_t>(n));

        RandomCoins c1(31), c2(31);
        const ProcessResult a = process(tree, inst, c1);
        const ProcessResult b = process(tree, inst, c2);
        CHECK(a.trace.seed == 31);
        CHECK(same_tree(a.tree, b.tree));
        CHECK(a.trace == b.trace);

        std::vector<Coin> script;
        for (const ConvertStep& s : a.trace.steps)
            if (s.coin)
                script.push_back(*s.coin);
        ScriptedCoins replay(script);
        const ProcessResult c = process(tree, inst, replay);
        CHECK(same_tree(c.tree, a.tree));
        CHECK(c.trace.steps == a.trace.steps);
        CHECK_FALSE(c.trace.seed.has_value());
    }
}

TEST_CASE("every execution of random conversions meets the audited bounds") {
    const ExpectationOptions audited{4096, true};
    for (std::uint64_t t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(t % 5);
        const Instance inst = random_instance(n, 5000 + t);
        const Tree tree =
            t % 2 == 0 ? optimal(inst, TreeKind::Nil).tree : random_nil_tree(n, t);
        const Rat base = cost(tree, inst, TreeKind::Nil);

        const ExpectationResult ex = exact_expected_cost(tree, inst, audited);
        CHECK(ex.expected_cost <= base + 1);
        CHECK(ex.executions >= 1);

        const std::vector<int> db = depth_vector(tree, n);
        REQUIRE(ex.per_atom_expected_depth.size() == db.size());
        Rat weighted(0);
        for (std::size_t i = 0; i < db.size(); ++i) {
            CHECK(ex.per_atom_expected_depth[i] <= db[i] + 1);
            weighted += inst.atom_weights()[i] * ex.per_atom_expected_depth[i];
        }
        CHECK(weighted == ex.expected_cost);

        const BestConversion best = best_conversion(tree, inst, audited);
        CHECK(best.cost <= ex.expected_cost);
        CHECK(validate(best.tree, inst, TreeKind::Loc).correct);
    }
}

TEST_CASE("merging each key with its left interval bounds the located cost") {
    const Instance fig1 = fig1_instance();
    const MergeResult m = merge_convert(fig1);
    CHECK(m.cost == Rat(12, 5));
    const ValidationReport v = validate(m.tree, fig1, TreeKind::Loc);
    CHECK(v.correct);
    CHECK_FALSE(v.redundant());

    const Instance empty = Instance::create(0, {}, {Rat(1)});
    CHECK(same_tree(merge_convert(empty).tree, Tree{make_interval_leaf(0)}));

    for (std::uint64_t t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(t % 6);
        const Instance inst = random_instance(n, 8800 + t);
        const MergeResult r = merge_convert(inst);
        CHECK(validate(r.tree, inst, TreeKind::Loc).correct);
        CHECK(r.cost == cost(r.tree, inst, TreeKind::Loc));
        CHECK(r.cost <= optimal(inst, TreeKind::Nil).cost + 2);
    }
}
