#include "twocst/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace twocst {

NodePtr make_internal(Comparison cmp, NodePtr yes, NodePtr no) {
    if (!yes || !no)
        throw std::invalid_argument("make_internal: children must be non-null");
    auto node = std::make_shared<Node>();
    node->cmp = cmp;
    node->yes = std::move(yes);
    node->no = std::move(no);
    return node;
}

NodePtr make_eq(int key, NodePtr yes, NodePtr no) {
    return make_internal({CmpOp::Eq, key}, std::move(yes), std::move(no));
}

NodePtr make_less(int key, NodePtr yes, NodePtr no) {
    return make_internal({CmpOp::Less, key}, std::move(yes), std::move(no));
}

NodePtr make_key_leaf(int key) {
    auto node = std::make_shared<Node>();
    node->leaf = {LeafKind::Key, key};
    return node;
}

NodePtr make_interval_leaf(int i) {
    auto node = std::make_shared<Node>();
    node->leaf = {LeafKind::Interval, i};
    return node;
}

NodePtr make_nil_leaf() {
    auto node = std::make_shared<Node>();
    node->leaf = {LeafKind::Nil, 0};
    return node;
}

NodePtr node_at(const Tree& tree, std::string_view path) {
    NodePtr cur = tree.root;
    for (char step : path) {
        if (!cur || cur->is_leaf())
            throw std::invalid_argument("node_at: path walks off a leaf");
        if (step == 'Y')
            cur = cur->yes;
        else if (step == 'N')
            cur = cur->no;
        else
            throw std::invalid_argument("node_at: path characters must be Y or N");
    }
    if (!cur)
        throw std::invalid_argument("node_at: empty tree");
    return cur;
}

namespace {

NodePtr splice(const NodePtr& node, std::string_view path, const NodePtr& replacement) {
    if (path.empty())
        return replacement;
    if (!node || node->is_leaf())
        throw std::invalid_argument("with_subtree: path walks off a leaf");
    auto copy = std::make_shared<Node>(*node);
    if (path.front() == 'Y')
        copy->yes = splice(node->yes, path.substr(1), replacement);
    else if (path.front() == 'N')
        copy->no = splice(node->no, path.substr(1), replacement);
    else
        throw std::invalid_argument("with_subtree: path characters must be Y or N");
    return copy;
}

template <typename Fn>
void visit(const NodePtr& node, std::string& path, Fn&& fn) {
    fn(static_cast<const std::string&>(path), node);
    if (node->is_leaf())
        return;
    path.push_back('Y');
    visit(node->yes, path, fn);
    path.back() = 'N';
    visit(node->no, path, fn);
    path.pop_back();
}

} // namespace

Tree with_subtree(const Tree& tree, std::string_view path, NodePtr replacement) {
    if (!replacement)
        throw std::invalid_argument("with_subtree: null replacement");
    return Tree{splice(tree.root, path, replacement)};
}

int count_leaves(const Tree& tree) {
    int count = 0;
    std::string path;
    visit(tree.root, path, [&](const std::string&, const NodePtr& n) {
        if (n->is_leaf())
            ++count;
    });
    return count;
}

int count_internal(const Tree& tree) {
    int count = 0;
    std::string path;
    visit(tree.root, path, [&](const std::string&, const NodePtr& n) {
        if (!n->is_leaf())
            ++count;
    });
    return count;
}

std::vector<std::string> leaf_paths(const Tree& tree) {
    std::vector<std::string> paths;
    std::string path;
    visit(tree.root, path, [&](const std::string& p, const NodePtr& n) {
        if (n->is_leaf())
            paths.push_back(p);
    });
    return paths;
}

std::vector<std::string> eq_node_paths(const Tree& tree, int key) {
    std::vector<std::string> paths;
    std::string path;
    visit(tree.root, path, [&](const std::string& p, const NodePtr& n) {
        if (!n->is_leaf() && n->cmp.op == CmpOp::Eq && n->cmp.key == key)
            paths.push_back(p);
    });
    return paths;
}

int max_key_referenced(const Tree& tree) {
    int max_key = 0;
    std::string path;
    visit(tree.root, path, [&](const std::string&, const NodePtr& n) {
        if (!n->is_leaf())
            max_key = std::max(max_key, n->cmp.key);
        else if (n->leaf.kind == LeafKind::Key)
            max_key = std::max(max_key, n->leaf.value);
    });
    return max_key;
}

int max_interval_referenced(const Tree& tree) {
    int max_i = -1;
    std::string path;
    visit(tree.root, path, [&](const std::string&, const NodePtr& n) {
        if (n->is_leaf() && n->leaf.kind == LeafKind::Interval)
            max_i = std::max(max_i, n->leaf.value);
    });
    return max_i;
}

namespace {

bool same_node(const NodePtr& a, const NodePtr& b) {
    if (a->is_leaf() != b->is_leaf())
        return false;
    if (a->is_leaf())
        return a->leaf == b->leaf;
    return a->cmp == b->cmp && same_node(a->yes, b->yes) && same_node(a->no, b->no);
}

} // namespace

bool same_tree(const Tree& a, const Tree& b) { return same_node(a.root, b.root); }

} // namespace twocst
