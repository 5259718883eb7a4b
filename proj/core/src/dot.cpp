#include "twocst/dot.hpp"

#include <sstream>

namespace twocst {

namespace {

std::string leaf_text(const Leaf& leaf) {
    switch (leaf.kind) {
    case LeafKind::Key:
        return std::to_string(leaf.value);
    case LeafKind::Interval:
        return "(" + std::to_string(leaf.value) + "," + std::to_string(leaf.value + 1) +
               ")";
    case LeafKind::Nil:
        return "⊥";
    }
    return "?";
}

int emit(std::ostream& out, const NodePtr& node, int& next_id) {
    const int id = next_id++;
    if (node->is_leaf()) {
        out << "  n" << id << " [label=\"" << leaf_text(node->leaf) << "\", shape=box];\n";
        return id;
    }
    out << "  n" << id << " [label=\"" << (node->cmp.op == CmpOp::Eq ? "=" : "<")
        << node->cmp.key << "\"];\n";
    const int yes_id = emit(out, node->yes, next_id);
    out << "  n" << id << " -> n" << yes_id << " [label=\"yes\"];\n";
    const int no_id = emit(out, node->no, next_id);
    out << "  n" << id << " -> n" << no_id << " [label=\"no\"];\n";
    return id;
}

} // namespace

std::string to_dot(const Tree& tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    int next_id = 0;
    emit(out, tree.root, next_id);
    out << "}\n";
    return out.str();
}

} // namespace twocst
