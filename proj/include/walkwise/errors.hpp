#pragma once

#include <stdexcept>
#include <string>

namespace walkwise {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid arguments or broken preconditions (bad vertex ids, absent edges, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Malformed input files; message carries the offending line number/token.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Work refused because it would exceed a configured resource budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// A check that is expected to hold by construction failed (e.g. a witness
// sub-matrix came out rank-deficient). Indicates a bug, not bad input.
class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& msg) : Error(msg) {}
};

} // namespace walkwise
