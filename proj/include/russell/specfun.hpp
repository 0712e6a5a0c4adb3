#pragma once

// Scalar special functions over double precision: the gamma family,
// rising factorials, generalized binomials, Bernoulli numbers, the
// Gauss hypergeometric function, the Lerch transcendent and a handful of
// trigonometric/hyperbolic kernel expansions.
//
// Every function here is pure. Errors are reported with the exceptions in
// russell/errors.hpp.

#include <vector>

namespace russell {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// Gamma function. Lanczos approximation on [0.5, inf), reflection below.
/// Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// 1 / gamma(x), returning exactly 0 at the poles.
double reciprocal_gamma(double x);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, unsigned n);

/// Generalized binomial coefficient C(alpha, j) = (-1)^j (-alpha)_j / j!.
double binomial_general(double alpha, unsigned j);

/// Upper incomplete gamma Gamma(a, x) for a > 0, x >= 0.
double upper_incomplete_gamma(double a, double x);

/// Lower incomplete gamma gamma(a, x) for a > 0, x >= 0.
double lower_incomplete_gamma(double a, double x);

/// Sum_{n>=0} x^n / (n! (n + r + 1)), i.e. the integral
/// int_0^inf exp(-(r+1) z + x e^{-z}) dz. Requires r > -1.
double r1_series(double r, double x);

// ---------------------------------------------------------------------------
// Hypergeometric and Lerch
// ---------------------------------------------------------------------------

struct HypergeometricArgs {
    double a;
    double b;
    double c;
    double z;
};

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.
///
/// Region dispatch:
///   * |z| <= 1/2                  direct power series
///   * z < -1/2                    Pfaff transformation to z/(z-1) in (1/3, 1)
///   * 1/2 < z < 1                 1-z connection formula; when c-a-b is within
///                                 1e-3 of an integer the direct series is
///                                 summed instead (slow but convergent)
///   * z = 1                       Gauss summation, requires c - a - b > 0
///   * a or b a nonpositive integer  terminating polynomial
///
/// Throws DomainError for z > 1 or c a nonpositive integer, DivergenceError
/// at z = 1 with c - a - b <= 0.
double gauss_2f1(const HypergeometricArgs& args);

inline double gauss_2f1(double a, double b, double c, double z) {
    return gauss_2f1(HypergeometricArgs{a, b, c, z});
}

/// Arguments of Phi(z, s, b) = sum_{n>=0} z^n / (n + b)^s.
struct LerchArgs {
    double z;
    double s;
    double b;
};

/// Lerch transcendent on |z| < 1, b > 0. Throws DomainError otherwise.
double lerch_phi(const LerchArgs& args);

inline double lerch_phi(double z, double s, double b) { return lerch_phi(LerchArgs{z, s, b}); }

// ---------------------------------------------------------------------------
// Bernoulli numbers and the log-cosine expansions
// ---------------------------------------------------------------------------

inline constexpr unsigned kMaxBernoulliIndex = 60;

/// B_0 .. B_nmax (B_1 = -1/2) from sum_{j<=n} C(n+1, j) B_j = 0.
/// Throws DomainError for nmax > 60.
std::vector<double> bernoulli_numbers(unsigned nmax);

/// Sign attached to the k-th coefficient 2^{2k-1}(2^{2k}-1)B_{2k}/(k(2k)!)
/// of the x^{2k} power series of ln cos x.
enum class LogCosSign {
    Unsigned,     // coefficient used as written
    Alternating,  // multiplied by (-1)^k
};

/// Decides the sign convention by comparing both candidates against the
/// sine-power expansion -1/2 sum sin^{2k}x / k at a probe point. Cached.
LogCosSign resolve_log_cos_sign();

/// ln cos x from the Bernoulli power series (k = 1..30) under `sign`.
/// Accurate for |x| <= 0.8.
double log_cos_bernoulli(double x, LogCosSign sign);

/// ln cos x from the Bernoulli power series using resolve_log_cos_sign().
double log_cos_bernoulli(double x);

/// ln cos x = -1/2 sum_{k>=1} sin^{2k} x / k, |x| < pi/2.
double log_cos_sine_powers(double x);

// ---------------------------------------------------------------------------
// Finite and kernel expansions
// ---------------------------------------------------------------------------

struct CosineTerm {
    unsigned frequency;  // the harmonic 2(m - k)
    double coefficient;  // 2 C(2m, k) / 4^m
};

/// cos^{2m} x = constant + sum coefficient * cos(frequency * x).
struct CosinePowerExpansion {
    unsigned m = 0;
    double constant = 0.0;  // C(2m, m) / 4^m
    std::vector<CosineTerm> terms;

    double operator()(double x) const;

    /// Integral of the expansion over [0, t], evaluated term by term.
    double integral(double t) const;
};

/// Throws DomainError for m == 0.
CosinePowerExpansion cos_power_expansion(unsigned m);

/// (1 + p cos x) / (1 + 2 p cos x + p^2).
double cosine_kernel(double p, double x);

/// Partial sum sum_{k<terms} (-p)^k cos(kx) of the cosine kernel.
double cosine_kernel_partial_sum(double p, double x, unsigned terms);

/// 2 sum_{j>=0} e^{-(2j+1) y} = 1/sinh y, y > 0.
double csch_series(double y);

/// 2 sum_{j>=0} (-1)^j e^{-(2j+1) y} = 1/cosh y, y > 0.
double sech_series(double y);

}  // namespace russell
