#pragma once

#include "twocst/atom.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace twocst {

enum class CmpOp : std::uint8_t { Eq, Less };

//! A two-way comparison against a key: "q = key" or "q < key".
struct Comparison {
    CmpOp op;
    int key;
    bool operator==(const Comparison&) const = default;
};

enum class LeafKind : std::uint8_t { Key, Interval, Nil };

struct Leaf {
    LeafKind kind = LeafKind::Nil;
    int value = 0; // key for Key leaves, interval index for Interval leaves
    bool operator==(const Leaf&) const = default;
};

//! Which leaves a tree may use and which atoms it must route:
//!  - Loc: every atom gets its own labeled leaf (key or interval).
//!  - Nil: keys get key leaves; intervals may share unlabeled bottom leaves.
//!  - SuccessfulOnly: only key queries are routed; leaves are key leaves.
enum class TreeKind { Loc, Nil, SuccessfulOnly };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

//! Immutable tree node; internal iff `yes` and `no` are set. Rewrites share
//! subtrees structurally, so node identity is positional (a Y/N path from the
//! root), never pointer based.
struct Node {
    Comparison cmp{}; // meaningful iff internal
    NodePtr yes, no;  // both null for leaves
    Leaf leaf{};      // meaningful iff leaf
    // Conversion bookkeeping: true once the node has been part of a
    // replacement subtree installed by a conversion step. Ignored by
    // structural equality and serialization.
    bool processed = false;

    bool is_leaf() const { return yes == nullptr; }
};

struct Tree {
    NodePtr root;
};

NodePtr make_internal(Comparison cmp, NodePtr yes, NodePtr no);
NodePtr make_eq(int key, NodePtr yes, NodePtr no);
NodePtr make_less(int key, NodePtr yes, NodePtr no);
NodePtr make_key_leaf(int key);
NodePtr make_interval_leaf(int i);
NodePtr make_nil_leaf();

//! Follows a Y/N path from the root; throws std::invalid_argument if the path
//! walks off a leaf or contains other characters.
NodePtr node_at(const Tree& tree, std::string_view path);

//! Returns a tree with the subtree at `path` replaced (ancestors path-copied).
Tree with_subtree(const Tree& tree, std::string_view path, NodePtr replacement);

int count_leaves(const Tree& tree);
int count_internal(const Tree& tree);

//! Paths of all leaves, in Y-before-N traversal order.
std::vector<std::string> leaf_paths(const Tree& tree);

//! Paths of all internal Eq(key) nodes, in Y-before-N traversal order.
std::vector<std::string> eq_node_paths(const Tree& tree, int key);

//! Largest key referenced by any comparison or leaf label (0 for none).
int max_key_referenced(const Tree& tree);
//! Largest interval index referenced by any interval leaf (-1 for none).
int max_interval_referenced(const Tree& tree);

//! Shape and labels only; the processed flag is ignored.
bool same_tree(const Tree& a, const Tree& b);

} // namespace twocst
