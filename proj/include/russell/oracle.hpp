#pragma once

// Independent evaluators for cross-checking identities: the reduction
// recursion for x^r sin^p x cos^q x moments, product formulas for the
// odd-sine moments, the hypergeometric antiderivative of t sin t cos^m t,
// and a plain series summer.

#include <cstddef>
#include <functional>

namespace russell::oracle {

struct MomentIndex {
    unsigned r;
    unsigned p;
    unsigned q;
};

inline constexpr unsigned kMaxMomentOrder = 60;

/// int_0^pi x^r sin^p x cos^q x dx by the reduction recursion in q.
///
/// Each step lowers q by two (and r, p, q by one in the mixed term), with the
/// boundary terms evaluated exactly at 0 and pi. Base cases: r = 0 uses the
/// Beta-function closed form; q <= 1 with r > 0 falls back to Gauss-Kronrod
/// quadrature. Throws DomainError if r + p + q > 60.
double moment_recursive(MomentIndex idx);

/// 2^j j! pi / ((2m+1)(2m+3)...(2m+2j+1)) = int_0^pi t sin^{2j+1}t cos^{2m}t dt.
double lemma1_closed_form(unsigned j, unsigned m);

/// int_0^pi t sin t cos^m t dt for any integer m >= 0 via the Beta-function form
/// sqrt(pi)/(2(m+1)) Gamma(m/2+1)/Gamma(m/2+3/2) [1-(-1)^m] - pi/(m+1) (-1)^{m+1}.
double odd_power_moment_first_entry(unsigned m);

/// F(t) = -cos^{m+1}t / ((m+1)(m+2)) [cos t 2F1(1/2, m/2+1; m/2+2; cos^2 t) + (m+2) t],
/// an antiderivative of t sin t cos^m t on [0, pi] for even m.
/// Throws DomainError for odd m.
double lemma2_antiderivative(double t, unsigned m);

/// Sums terms(0) + terms(1) + ... with the three-quiet-terms stopping rule.
/// Throws ConvergenceError after 10^6 terms.
double series_sum(const std::function<double(std::size_t)>& terms, double tol = 1e-16);

}  // namespace russell::oracle
