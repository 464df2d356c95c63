#pragma once

#include <stdexcept>
#include <string>

namespace fairchore {

/// Malformed or out-of-contract input (bad file, nonpositive weight, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Instance falls outside the classes the solvers handle.
class UnsupportedInstanceError : public std::runtime_error {
public:
    explicit UnsupportedInstanceError(const std::string& what) : std::runtime_error(what) {}
};

/// A guaranteed-by-theory condition failed; signals a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Oracle work would exceed the configured budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairchore
