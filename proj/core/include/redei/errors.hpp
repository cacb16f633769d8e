#pragma once

#include <stdexcept>
#include <string>

namespace redei {

/// Input outside an operation's domain (bad parameter, failed precondition).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An identity that must hold by construction did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace redei
