#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "russell/errors.hpp"

namespace russell {

/// Relative threshold of the series stopping rule.
inline constexpr double kSeriesEpsilon = 1e-16;

/// Number of consecutive negligible terms required before stopping.
inline constexpr int kSeriesQuietTerms = 3;

inline constexpr std::size_t kDefaultSeriesBudget = 1'000'000;

/// Sums term(0) + term(1) + ... until kSeriesQuietTerms consecutive terms
/// satisfy |term| <= rel_tol * |partial sum|.
///
/// Requiring several quiet terms in a row keeps series with isolated zero
/// terms (odd/even gaps, terminating polynomials) from stopping early.
/// Throws ConvergenceError once `budget` terms have been consumed.
template <class TermFn>
double sum_series(TermFn&& term, double rel_tol = kSeriesEpsilon,
                  std::size_t budget = kDefaultSeriesBudget) {
    double sum = 0.0;
    double compensation = 0.0;
    int quiet = 0;
    for (std::size_t n = 0; n < budget; ++n) {
        const double t = term(n);
        // Kahan summation; long alternating series otherwise drift.
        const double y = t - compensation;
        const double s = sum + y;
        compensation = (s - sum) - y;
        sum = s;
        if (!std::isfinite(sum)) {
            throw ConvergenceError("series partial sum is not finite at term " +
                                   std::to_string(n));
        }
        if (std::abs(t) <= rel_tol * std::abs(sum)) {
            if (++quiet >= kSeriesQuietTerms) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("series did not converge within " + std::to_string(budget) +
                           " terms");
}

}  // namespace russell
