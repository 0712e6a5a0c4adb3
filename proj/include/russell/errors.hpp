#pragma once

#include <stdexcept>

namespace russell {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument sits on a pole (e.g. gamma at a nonpositive integer).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The requested value is infinite (e.g. 2F1 at z = 1 with c - a - b <= 0).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative evaluation exhausted its budget before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace russell
