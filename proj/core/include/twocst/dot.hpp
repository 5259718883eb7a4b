#pragma once

#include "twocst/tree.hpp"

#include <string>

namespace twocst {

//! Graphviz rendering: internal nodes "=k" / "<k", leaves "k", "(i,i+1)",
//! or the bottom symbol; yes edges are emitted before no edges. Output is
//! deterministic for a given tree.
std::string to_dot(const Tree& tree);

} // namespace twocst
