#include "twocst/search.hpp"

#include <stdexcept>

namespace twocst {

bool answer(Atom atom, Comparison cmp) {
    const int boundary = 2 * cmp.key - 1;
    if (cmp.op == CmpOp::Eq)
        return atom.index() == boundary;
    return atom.index() < boundary;
}

SearchResult search(const Tree& tree, Atom atom) {
    SearchResult result;
    result.path.clear();
    NodePtr cur = tree.root;
    while (!cur->is_leaf()) {
        if (answer(atom, cur->cmp)) {
            result.path.push_back('Y');
            cur = cur->yes;
        }
        else {
            result.path.push_back('N');
            cur = cur->no;
        }
    }
    result.leaf = cur;
    result.depth = static_cast<int>(result.path.size());
    return result;
}

std::vector<int> depth_vector(const Tree& tree, int n) {
    std::vector<int> depths(atom_count(n));
    for (int idx = 0; idx < atom_count(n); ++idx)
        depths[idx] = search(tree, Atom::from_index(idx)).depth;
    return depths;
}

namespace {

void require_in_range(const Tree& tree, const Instance& instance, const char* who) {
    if (max_key_referenced(tree) > instance.n() ||
        max_interval_referenced(tree) > instance.n())
        throw std::invalid_argument(std::string(who) +
                                    ": tree references keys or intervals outside the instance");
}

} // namespace

Rat cost(const Tree& tree, const Instance& instance, TreeKind kind) {
    require_in_range(tree, instance, "cost");
    Rat total = 0;
    for (int idx = 0; idx < atom_count(instance.n()); ++idx) {
        const Atom a = Atom::from_index(idx);
        if (kind == TreeKind::SuccessfulOnly && !a.is_key())
            continue;
        total += instance.weight(a) * search(tree, a).depth;
    }
    return total;
}

Rat leaf_weight_cost(const Tree& tree, const Instance& instance) {
    require_in_range(tree, instance, "leaf_weight_cost");
    Rat total = 0;
    for_each_node(tree, instance.n(), [&](const std::string& path, const NodePtr& node,
                                          AtomMask mask) {
        if (!node->is_leaf())
            return;
        const int depth = static_cast<int>(path.size());
        switch (node->leaf.kind) {
        case LeafKind::Key:
            total += instance.beta()[node->leaf.value - 1] * depth;
            break;
        case LeafKind::Interval:
            total += instance.alpha()[node->leaf.value] * depth;
            break;
        case LeafKind::Nil:
            for (int idx = 0; idx < atom_count(instance.n()); ++idx)
                if ((mask >> idx & 1) && idx % 2 == 0)
                    total += instance.alpha()[idx / 2] * depth;
            break;
        }
    });
    return total;
}

AtomMask full_mask(int n) {
    if (n < 0 || atom_count(n) > 63)
        throw std::invalid_argument("full_mask: n out of range for mask width");
    return (AtomMask{1} << atom_count(n)) - 1;
}

std::pair<AtomMask, AtomMask> split_mask(AtomMask mask, Comparison cmp) {
    // All atoms strictly below the key's order index answer yes to Less,
    // exactly the key's index answers yes to Eq.
    const int boundary = 2 * cmp.key - 1;
    const AtomMask below = (AtomMask{1} << boundary) - 1;
    AtomMask yes;
    if (cmp.op == CmpOp::Eq)
        yes = mask & (AtomMask{1} << boundary);
    else
        yes = mask & below;
    return {yes, mask & ~yes};
}

AtomMask query_mask(const Tree& tree, int n, std::string_view path) {
    NodePtr cur = tree.root;
    AtomMask mask = full_mask(n);
    for (char step : path) {
        if (cur->is_leaf())
            throw std::invalid_argument("query_mask: path walks off a leaf");
        auto [yes, no] = split_mask(mask, cur->cmp);
        if (step == 'Y') {
            cur = cur->yes;
            mask = yes;
        }
        else if (step == 'N') {
            cur = cur->no;
            mask = no;
        }
        else {
            throw std::invalid_argument("query_mask: path characters must be Y or N");
        }
    }
    return mask;
}

std::vector<Atom> query_set(const Tree& tree, int n, std::string_view path) {
    const AtomMask mask = query_mask(tree, n, path);
    std::vector<Atom> atoms;
    for (int idx = 0; idx < atom_count(n); ++idx)
        if (mask >> idx & 1)
            atoms.push_back(Atom::from_index(idx));
    return atoms;
}

namespace {

void walk(const NodePtr& node, std::string& path, AtomMask mask,
          const std::function<void(const std::string&, const NodePtr&, AtomMask)>& fn) {
    fn(path, node, mask);
    if (node->is_leaf())
        return;
    auto [yes, no] = split_mask(mask, node->cmp);
    path.push_back('Y');
    walk(node->yes, path, yes, fn);
    path.back() = 'N';
    walk(node->no, path, no, fn);
    path.pop_back();
}

} // namespace

void for_each_node(const Tree& tree, int n,
                   const std::function<void(const std::string&, const NodePtr&,
                                            AtomMask)>& fn) {
    std::string path;
    walk(tree.root, path, full_mask(n), fn);
}

} // namespace twocst
