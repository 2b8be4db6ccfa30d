#pragma once

#include <stdexcept>
#include <string>

namespace wormbound {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for malformed search plans, stage boxes or input files.
class InvalidPlan : public std::runtime_error {
public:
    explicit InvalidPlan(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wormbound
