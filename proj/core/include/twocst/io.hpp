#pragma once

#include "twocst/convert_types.hpp"
#include "twocst/instance.hpp"
#include "twocst/tree.hpp"

#include <string>

namespace twocst {

//! Instance files: {"n": 2, "beta": ["1/5","1/5"], "alpha": ["1/5","1/5","1/5"]}
//! with rationals as "p/q" or integer strings. serialize_* emit the canonical
//! form (fixed field order, lowest terms, no whitespace), so
//! serialize(parse(serialize(x))) is byte-identical to serialize(x).
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

//! Tree files: internal {"op":"eq"|"less","key":K,"yes":...,"no":...},
//! leaves {"leaf":"key","key":K} / {"leaf":"interval","i":I} / {"leaf":"nil"}.
Tree parse_tree(const std::string& text);
std::string serialize_tree(const Tree& tree);

//! Trace files: {"seed":S|null,"steps":[{"path":"NY..","case":"g","coin":null|"yes"|"no"},...]}
ConversionTrace parse_trace(const std::string& text);
std::string serialize_trace(const ConversionTrace& trace);

//! Whole-file helpers; throw ParseError on I/O failure too.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace twocst
