#include "twocst/errors.hpp"
#include "twocst/gen.hpp"
#include "twocst/optimal.hpp"
#include "twocst/search.hpp"
#include "twocst/validate.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace twocst;
using namespace twocst::testing;

TEST_CASE("uniform fifths instance has costs 9/5, 12/5, and 2/5") {
    const Instance fig1 = fig1_instance();

    const SolveResult nil = optimal(fig1, TreeKind::Nil);
    CHECK(nil.cost == Rat(9, 5));
    CHECK(same_tree(nil.tree, fig1_nil_tree()));

    const SolveResult loc = optimal(fig1, TreeKind::Loc);
    CHECK(loc.cost == Rat(12, 5));
    std::vector<int> depths = depth_vector(loc.tree, 2);
    std::sort(depths.begin(), depths.end());
    CHECK(depths == std::vector<int>{2, 2, 2, 3, 3});

    const SolveResult succ = optimal(fig1, TreeKind::SuccessfulOnly);
    CHECK(succ.cost == Rat(2, 5));
}

TEST_CASE("near-flat family keeps the bottom-leaf cost at 1 while located cost nears 2") {
    for (const Rat& eps : {Rat(1, 4), Rat(1, 10), Rat(1, 100)}) {
        const Instance inst = tightness_instance(eps);
        CHECK(optimal(inst, TreeKind::Nil).cost == Rat(1));
        CHECK(optimal(inst, TreeKind::Loc).cost == Rat(2) - eps);
    }
}

TEST_CASE("solver outputs validate as correct non-redundant trees of their kind") {
    for (int n = 0; n <= 5; ++n) {
        const Instance inst = random_instance(n, 42 + static_cast<std::uint64_t>(n));
        for (TreeKind kind :
             {TreeKind::Loc, TreeKind::Nil, TreeKind::SuccessfulOnly}) {
            const SolveResult r = optimal(inst, kind);
            const ValidationReport v = validate(r.tree, inst, kind);
            CHECK(v.correct);
            CHECK_FALSE(v.redundant());
            CHECK(cost(r.tree, inst, kind) == r.cost);
            if (kind == TreeKind::Loc)
                CHECK(count_leaves(r.tree) == atom_count(n));
        }
    }
}

TEST_CASE("memoized solver matches plain enumeration on all three kinds") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        const int n = static_cast<int>(t % 5);
        const Instance inst = random_instance(n, 777 + t);
        for (TreeKind kind :
             {TreeKind::Loc, TreeKind::Nil, TreeKind::SuccessfulOnly}) {
            CHECK(optimal(inst, kind).cost == brute_force_optimal(inst, kind).cost);
        }
    }
}

TEST_CASE("equal-cost ties break deterministically") {
    const Instance fig1 = fig1_instance();
    for (TreeKind kind :
         {TreeKind::Loc, TreeKind::Nil, TreeKind::SuccessfulOnly}) {
        const SolveResult a = optimal(fig1, kind);
        const SolveResult b = optimal(fig1, kind);
        CHECK(same_tree(a.tree, b.tree));
    }
}

TEST_CASE("located trees cost at least as much as bottom-leaf trees") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(t % 6);
        const Instance inst = random_instance(n, 31000 + t);
        const Rat nil = optimal(inst, TreeKind::Nil).cost;
        const Rat loc = optimal(inst, TreeKind::Loc).cost;
        const Rat succ = optimal(inst, TreeKind::SuccessfulOnly).cost;
        CHECK(nil <= loc);
        CHECK(succ <= nil);
    }
}

TEST_CASE("solvers refuse instances beyond their size limits") {
    std::vector<Rat> beta(11, Rat(1, 22));
    std::vector<Rat> alpha(12, Rat(1, 24));
    const Instance big = Instance::create(11, beta, alpha);
    CHECK_THROWS_AS(optimal(big, TreeKind::Nil), SolverLimitError);
    CHECK(optimal(big, TreeKind::Nil, SolverOptions{12}).cost > Rat(0));

    const Instance n5 = random_instance(5, 7);
    CHECK_THROWS_AS(brute_force_optimal(n5, TreeKind::Nil), SolverLimitError);
    CHECK_THROWS_AS(brute_force_items(std::vector<Rat>(7, Rat(1))), SolverLimitError);
}

TEST_CASE("degenerate instances solve to single leaves") {
    const Instance empty = Instance::create(0, {}, {Rat(1)});
    const SolveResult loc = optimal(empty, TreeKind::Loc);
    CHECK(loc.cost == Rat(0));
    CHECK(same_tree(loc.tree, Tree{make_interval_leaf(0)}));
    CHECK(optimal(empty, TreeKind::Nil).cost == Rat(0));
    CHECK(optimal(empty, TreeKind::SuccessfulOnly).cost == Rat(0));
}

TEST_CASE("zero-weight keys still have to be routed") {
    const Rat h(1, 2);
    const Instance inst = Instance::create(1, {Rat(0)}, {h, h});
    const SolveResult nil = optimal(inst, TreeKind::Nil);
    CHECK(nil.cost == Rat(1));
    CHECK(validate(nil.tree, inst, TreeKind::Nil).correct);
    // The key's leaf exists even though it carries no mass.
    CHECK(search(nil.tree, Atom::key(1)).leaf->leaf ==
          Leaf{LeafKind::Key, 1});
}

TEST_CASE("item solver uses inequality comparisons only and matches enumeration") {
    // Weighted alphabetic tree over three items: put the two heavy items at
    // depth mix (2, 2, 1).
    const SolveResult r =
        successful_only_optimal_over_items({Rat(1, 5), Rat(2, 5), Rat(2, 5)});
    CHECK(r.cost == Rat(8, 5));
    for_each_node(r.tree, 0, [](const std::string&, const NodePtr& node, AtomMask) {
        if (!node->is_leaf())
            CHECK(node->cmp.op == CmpOp::Less);
    });

    CHECK(successful_only_optimal_over_items({Rat(3)}).cost == Rat(0));
    CHECK_THROWS_AS(successful_only_optimal_over_items({}), std::invalid_argument);

    std::mt19937_64 rng(555);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = 1 + rng() % 6;
        std::vector<Rat> w;
        for (std::size_t i = 0; i < m; ++i)
            w.push_back(Rat(1 + rng() % 20));
        CHECK(successful_only_optimal_over_items(w).cost ==
              brute_force_items(w).cost);
    }
}
