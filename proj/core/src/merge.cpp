#include "twocst/merge.hpp"

#include "twocst/errors.hpp"
#include "twocst/optimal.hpp"
#include "twocst/search.hpp"
#include "twocst/validate.hpp"

namespace twocst {

namespace {

//! Item j covers atoms {key j-1, interval j-1} for j >= 2 and {interval 0}
//! for j = 1, so the item comparison "< j" coincides with "< j-1" on atoms.
NodePtr map_item_tree(const NodePtr& node) {
    if (node->is_leaf()) {
        if (node->leaf.kind != LeafKind::Key)
            throw InternalError("merge_convert: item tree has a non-key leaf");
        const int item = node->leaf.value;
        if (item == 1)
            return make_interval_leaf(0);
        return make_eq(item - 1, make_key_leaf(item - 1),
                       make_interval_leaf(item - 1));
    }
    if (node->cmp.op != CmpOp::Less)
        throw InternalError("merge_convert: item tree uses an equality comparison");
    return make_less(node->cmp.key - 1, map_item_tree(node->yes),
                     map_item_tree(node->no));
}

} // namespace

MergeResult merge_convert(const Instance& instance) {
    const int n = instance.n();
    std::vector<Rat> items;
    items.reserve(n + 1);
    items.push_back(instance.alpha()[0]);
    for (int k = 1; k <= n; ++k)
        items.push_back(instance.beta()[k - 1] + instance.alpha()[k]);

    const SolveResult solved = successful_only_optimal_over_items(items);
    Tree tree{map_item_tree(solved.tree.root)};

    const ValidationReport v = validate(tree, instance, TreeKind::Loc);
    if (!v.correct || v.redundant())
        throw InternalError("merge_convert: produced an invalid located tree");
    Rat total = cost(tree, instance, TreeKind::Loc);
    return {std::move(tree), std::move(total)};
}

} // namespace twocst
