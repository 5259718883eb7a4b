#pragma once

#include "twocst/instance.hpp"
#include "twocst/tree.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace twocst {

//! Does `atom` answer yes to `cmp`? Yes answers descend to the yes child.
//! In order-index terms with boundary b = 2*key - 1:
//!   Eq(key):   index == b
//!   Less(key): index < b   (so interval (i,i+1) is below key iff i+1 <= key)
bool answer(Atom atom, Comparison cmp);

struct SearchResult {
    NodePtr leaf;
    std::string path; // Y/N path from the root to the leaf
    int depth;        // comparisons performed == path length
};

SearchResult search(const Tree& tree, Atom atom);

//! Depth of every atom's leaf, indexed by atom order index (size 2n+1).
std::vector<int> depth_vector(const Tree& tree, int n);

//! Expected comparison count: sum over routed atoms of weight * depth, exact.
//! SuccessfulOnly counts key atoms only; Loc and Nil count all atoms.
//! Throws std::invalid_argument if the tree references keys or intervals
//! outside the instance.
Rat cost(const Tree& tree, const Instance& instance, TreeKind kind = TreeKind::Loc);

//! Leaf-sum form of the cost: labeled leaves contribute their label's weight,
//! bottom leaves the failure mass of their query set. Agrees with cost() on
//! every correct tree whose reachable leaves are compatibly labeled.
Rat leaf_weight_cost(const Tree& tree, const Instance& instance);

//! Bitmask over atom order indices 0..2n. Requires n <= 31.
using AtomMask = std::uint64_t;

AtomMask full_mask(int n);
//! Splits `mask` into the atoms answering yes/no to `cmp`.
std::pair<AtomMask, AtomMask> split_mask(AtomMask mask, Comparison cmp);

//! Atoms whose root-to-leaf search passes through the node at `path`.
//! Throws std::invalid_argument if the path is not in the tree.
AtomMask query_mask(const Tree& tree, int n, std::string_view path);
std::vector<Atom> query_set(const Tree& tree, int n, std::string_view path);

//! Top-down traversal handing every node its path and query mask
//! (Y child before N child).
void for_each_node(const Tree& tree, int n,
                   const std::function<void(const std::string& path, const NodePtr&,
                                            AtomMask)>& fn);

} // namespace twocst
