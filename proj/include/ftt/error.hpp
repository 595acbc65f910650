#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ftt {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad n, tol <= 0, size mismatch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative method ran out of budget. Carries the last bracket it held.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double lo, double hi)
        : Error(what + " (last bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "])"),
          lo_(lo), hi_(hi) {}

    [[nodiscard]] double lo() const noexcept { return lo_; }
    [[nodiscard]] double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// A result left the representable range of double.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree did not.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace ftt
