#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace twocst {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

//! Parses "p/q" or "p" (arbitrary precision, q > 0 after sign normalization).
//! Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

//! Lowest terms, "p/q" with q > 1 or plain "p" for integers.
std::string format_rational(const Rat& value);

inline double to_double(const Rat& value) { return value.convert_to<double>(); }

} // namespace twocst
