#pragma once

#include <cstddef>
#include <functional>

namespace russell {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    /// True iff error_estimate <= tol * max(1, |value|).
    bool converged = false;
};

inline constexpr double kMinFiniteTolerance = 1e-13;
inline constexpr double kMinSemiInfiniteTolerance = 1e-12;
inline constexpr std::size_t kDefaultEvaluationBudget = 200'000;

/// Adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
///
/// Subintervals are kept in a max-heap keyed by their local error estimate and
/// the worst one is bisected until the summed estimate satisfies
/// err <= tol * max(1, |value|) or the evaluation budget is spent.
/// Throws DomainError unless a < b and tol >= 1e-13.
QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol,
                                  std::size_t max_evaluations = kDefaultEvaluationBudget);

/// Double-exponential (exp-sinh) quadrature of f over [lower, inf).
///
/// x = lower + exp(pi/2 sinh t); trapezoid sums are refined by halving the
/// step until two successive sums agree to tol * max(1, |value|). f must decay
/// at least exponentially. Non-finite samples far in either tail end that tail.
/// Throws DomainError for tol < 1e-12.
QuadratureResult integrate_semi_infinite(const Integrand& f, double tol, double lower = 0.0);

}  // namespace russell
