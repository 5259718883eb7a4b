#pragma once

#include "twocst/tree.hpp"

#include <string>
#include <string_view>

namespace twocst {

//! The unique bottom leaf reached by searching the exact value `key` starting
//! from the no child of the tree's single Eq(key) node. Returns the leaf's
//! path. Throws std::invalid_argument if the tree has no or several Eq(key)
//! nodes, and InvalidTreeError if the walk ends on a labeled leaf.
std::string find_break_leaf(const Tree& tree, int key);

//! Does the leaf's query set contain atoms on both sides of key `key`?
//! Such a leaf forces extra comparisons on any locating refinement.
//! Throws std::invalid_argument for keys outside 1..n or non-leaf paths.
bool has_break(const Tree& tree, int n, std::string_view leaf_path, int key);

} // namespace twocst
