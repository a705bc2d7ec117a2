#pragma once

#include <stdexcept>
#include <string>

namespace onsager {

/// Raised when an operation's documented precondition is violated.
/// The CLI maps this to exit code 1.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File-system or container-format failures. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical breakdown (NaN/Inf) or an internal contradiction.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

}  // namespace onsager
