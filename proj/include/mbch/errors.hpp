#pragma once

#include <stdexcept>
#include <string>

namespace mbch {

/// Raised when an operation is applied outside its algebraic domain
/// (non-unit inverse, logarithm of a series without unit constant term, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by exact division when the divisor does not divide the dividend.
/// Every closed formula in the library relies on guaranteed divisibility, so
/// seeing this outside of tests means a formula was applied incorrectly.
class InexactDivision : public DomainError {
public:
    InexactDivision() : DomainError("inexact division") {}
};

}  // namespace mbch
