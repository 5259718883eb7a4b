#include "twocst/breaks.hpp"

#include "twocst/errors.hpp"
#include "twocst/search.hpp"

#include <stdexcept>

namespace twocst {

std::string find_break_leaf(const Tree& tree, int key) {
    const auto eq_paths = eq_node_paths(tree, key);
    if (eq_paths.empty())
        throw std::invalid_argument("find_break_leaf: no Eq(" + std::to_string(key) +
                                    ") node");
    if (eq_paths.size() > 1)
        throw std::invalid_argument("find_break_leaf: several Eq(" + std::to_string(key) +
                                    ") nodes");

    // Searching the exact value `key` from the Eq node's no child: equality
    // tests against other keys answer no, Less(k') answers yes iff key < k'.
    std::string path = eq_paths.front() + "N";
    NodePtr cur = node_at(tree, path);
    while (!cur->is_leaf()) {
        const bool yes = cur->cmp.op == CmpOp::Less && key < cur->cmp.key;
        path.push_back(yes ? 'Y' : 'N');
        cur = yes ? cur->yes : cur->no;
    }
    if (cur->leaf.kind == LeafKind::Key)
        throw InvalidTreeError("find_break_leaf: value search for key " +
                               std::to_string(key) + " ended on a key leaf");
    return path;
}

bool has_break(const Tree& tree, int n, std::string_view leaf_path, int key) {
    if (key < 1 || key > n)
        throw std::invalid_argument("has_break: key outside 1..n");
    if (!node_at(tree, leaf_path)->is_leaf())
        throw std::invalid_argument("has_break: path does not name a leaf");
    const AtomMask mask = query_mask(tree, n, leaf_path);
    const int boundary = 2 * key - 1;
    const AtomMask below = (AtomMask{1} << boundary) - 1;
    const AtomMask above = full_mask(n) & ~below & ~(AtomMask{1} << boundary);
    return (mask & below) != 0 && (mask & above) != 0;
}

} // namespace twocst
