#include "twocst/validate.hpp"

namespace twocst {

namespace {

bool leaf_compatible(const Leaf& leaf, Atom atom, TreeKind kind) {
    if (atom.is_key())
        return leaf.kind == LeafKind::Key && leaf.value == atom.key_value();
    switch (kind) {
    case TreeKind::Loc:
        return leaf.kind == LeafKind::Interval && leaf.value == atom.interval_index();
    case TreeKind::Nil:
        return leaf.kind == LeafKind::Nil ||
               (leaf.kind == LeafKind::Interval && leaf.value == atom.interval_index());
    case TreeKind::SuccessfulOnly:
        return true; // intervals are unrouted
    }
    return false;
}

AtomMask routed_mask(int n, TreeKind kind) {
    AtomMask mask = full_mask(n);
    if (kind == TreeKind::SuccessfulOnly) {
        AtomMask keys = 0;
        for (int k = 1; k <= n; ++k)
            keys |= AtomMask{1} << (2 * k - 1);
        mask &= keys;
    }
    return mask;
}

} // namespace

ValidationReport validate(const Tree& tree, const Instance& instance, TreeKind kind) {
    const int n = instance.n();
    ValidationReport report;

    bool in_range = true;
    for_each_node(tree, n, [&](const std::string& path, const NodePtr& node, AtomMask) {
        if (!node->is_leaf()) {
            if (node->cmp.key < 1 || node->cmp.key > n) {
                report.violations.push_back("comparison key out of range at '" + path + "'");
                in_range = false;
            }
            return;
        }
        const Leaf& leaf = node->leaf;
        if ((leaf.kind == LeafKind::Key && (leaf.value < 1 || leaf.value > n)) ||
            (leaf.kind == LeafKind::Interval && (leaf.value < 0 || leaf.value > n))) {
            report.violations.push_back("leaf label out of range at '" + path + "'");
            in_range = false;
        }
        if (kind == TreeKind::SuccessfulOnly && leaf.kind != LeafKind::Key && n > 0)
            report.violations.push_back("non-key leaf in successful-only tree at '" + path +
                                        "'");
    });
    if (!in_range) {
        report.correct = false;
        return report;
    }

    bool routing_ok = true;
    for (int idx = 0; idx < atom_count(n); ++idx) {
        const Atom a = Atom::from_index(idx);
        if (kind == TreeKind::SuccessfulOnly && !a.is_key())
            continue;
        const SearchResult r = search(tree, a);
        if (!leaf_compatible(r.leaf->leaf, a, kind)) {
            routing_ok = false;
            report.violations.push_back("atom " + atom_label(a) +
                                        " lands on an incompatible leaf at '" + r.path + "'");
        }
    }
    report.correct = routing_ok;

    // The root is exempt: with no routed atoms at all (successful-only, n=0)
    // the whole tree is one unsplicable leaf.
    const AtomMask routed = routed_mask(n, kind);
    for_each_node(tree, n, [&](const std::string& path, const NodePtr&, AtomMask mask) {
        if (!path.empty() && (mask & routed) == 0)
            report.redundant_nodes.push_back(path);
    });

    if (routing_ok && report.redundant_nodes.empty()) {
        const int leaves = count_leaves(tree);
        if (kind == TreeKind::Loc && leaves != atom_count(n))
            report.violations.push_back("loc tree must have exactly 2n+1 leaves, found " +
                                        std::to_string(leaves));
        if (kind == TreeKind::Nil && (leaves < n + 1 || leaves > atom_count(n)))
            report.violations.push_back("nil tree leaf count " + std::to_string(leaves) +
                                        " outside [n+1, 2n+1]");
    }
    return report;
}

namespace {

NodePtr prune_node(const NodePtr& node, AtomMask mask) {
    if (node->is_leaf())
        return node;
    auto [yes, no] = split_mask(mask, node->cmp);
    if (yes == 0)
        return prune_node(node->no, mask);
    if (no == 0)
        return prune_node(node->yes, mask);
    auto copy = std::make_shared<Node>(*node);
    copy->yes = prune_node(node->yes, yes);
    copy->no = prune_node(node->no, no);
    return copy;
}

} // namespace

Tree prune_redundant(const Tree& tree, int n) {
    return Tree{prune_node(tree.root, full_mask(n))};
}

namespace {

NodePtr relabel_node(const NodePtr& node) {
    if (node->is_leaf()) {
        if (node->leaf.kind != LeafKind::Interval)
            return node;
        auto copy = std::make_shared<Node>(*node);
        copy->leaf = {LeafKind::Nil, 0};
        return copy;
    }
    auto copy = std::make_shared<Node>(*node);
    copy->yes = relabel_node(node->yes);
    copy->no = relabel_node(node->no);
    return copy;
}

} // namespace

Tree relabel_intervals_to_nil(const Tree& tree) { return Tree{relabel_node(tree.root)}; }

} // namespace twocst
