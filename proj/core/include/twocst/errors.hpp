#pragma once

#include <stdexcept>
#include <string>

namespace twocst {

//! Malformed or invalid input text (JSON files, rational literals).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

//! Instance size exceeds the configured exact-solver limit.
class SolverLimitError : public std::runtime_error {
public:
    explicit SolverLimitError(const std::string& what) : std::runtime_error(what) {}
};

//! A tree failed a structural precondition (wrong kind, redundant, incorrect).
class InvalidTreeError : public std::runtime_error {
public:
    explicit InvalidTreeError(const std::string& what) : std::runtime_error(what) {}
};

//! Coin-branch enumeration exceeded the configured branch-point budget.
class BranchLimitError : public std::runtime_error {
public:
    explicit BranchLimitError(const std::string& what) : std::runtime_error(what) {}
};

//! A state the conversion case analysis proves unreachable was reached,
//! or a runtime contract that must hold by construction failed.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace twocst
