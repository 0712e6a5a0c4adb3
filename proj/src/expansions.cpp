#include <cmath>
#include <string>
#include <vector>

#include "russell/errors.hpp"
#include "russell/series.hpp"
#include "russell/specfun.hpp"

namespace russell {

std::vector<double> bernoulli_numbers(unsigned nmax) {
    if (nmax > kMaxBernoulliIndex) {
        throw DomainError("bernoulli_numbers: nmax must not exceed " +
                          std::to_string(kMaxBernoulliIndex));
    }
    // Tangent numbers T_k by the in-place recurrence of Brent and Harvey: every
    // update adds nonnegative terms, so the relative error stays near k^2 eps.
    // B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
    std::vector<long double> b(nmax + 1, 0.0L);
    b[0] = 1.0L;
    if (nmax >= 1) b[1] = -0.5L;
    const unsigned kmax = nmax / 2;
    std::vector<long double> t(kmax + 1, 0.0L);
    if (kmax >= 1) t[1] = 1.0L;
    for (unsigned k = 2; k <= kmax; ++k) t[k] = static_cast<long double>(k - 1) * t[k - 1];
    for (unsigned k = 2; k <= kmax; ++k) {
        for (unsigned j = k; j <= kmax; ++j) {
            t[j] = static_cast<long double>(j - k) * t[j - 1] + static_cast<long double>(j - k + 2) * t[j];
        }
    }
    for (unsigned k = 1; k <= kmax; ++k) {
        const long double four_k = std::ldexp(1.0L, static_cast<int>(2 * k));
        const long double mag = 2.0L * k * t[k] / (four_k * (four_k - 1.0L));
        b[2 * k] = (k % 2 == 1) ? mag : -mag;
    }
    return {b.begin(), b.end()};
}

namespace {

constexpr unsigned kLogCosTerms = kMaxBernoulliIndex / 2;

// |2^{2k-1}(2^{2k}-1) B_{2k} / (k (2k)!)| with the sign of B_{2k}, k = 1..30.
const std::vector<long double>& log_cos_coefficients() {
    static const std::vector<long double> coeffs = [] {
        const std::vector<double> bern = bernoulli_numbers(kMaxBernoulliIndex);
        std::vector<long double> out(kLogCosTerms + 1, 0.0L);
        long double factorial = 1.0L;  // (2k)!
        for (unsigned k = 1; k <= kLogCosTerms; ++k) {
            factorial *= static_cast<long double>(2 * k - 1) * static_cast<long double>(2 * k);
            const long double pow2 = std::ldexp(1.0L, static_cast<int>(2 * k));
            out[k] = 0.5L * pow2 * (pow2 - 1.0L) * static_cast<long double>(bern[2 * k]) /
                     (static_cast<long double>(k) * factorial);
        }
        return out;
    }();
    return coeffs;
}

}  // namespace

double log_cos_bernoulli(double x, LogCosSign sign) {
    const auto& coeffs = log_cos_coefficients();
    const long double x2 = static_cast<long double>(x) * x;
    long double power = 1.0L;
    long double sum = 0.0L;
    for (unsigned k = 1; k <= kLogCosTerms; ++k) {
        power *= x2;
        const long double s = (sign == LogCosSign::Alternating && k % 2 == 1) ? -1.0L : 1.0L;
        sum += s * coeffs[k] * power;
    }
    return static_cast<double>(sum);
}

double log_cos_sine_powers(double x) {
    if (!(std::abs(x) < kPi / 2)) throw DomainError("log_cos_sine_powers: requires |x| < pi/2");
    const double s2 = std::sin(x) * std::sin(x);
    double power = 1.0;
    return -0.5 * sum_series([&](std::size_t n) {
               if (n == 0) return 0.0;
               power *= s2;
               return power / static_cast<double>(n);
           });
}

LogCosSign resolve_log_cos_sign() {
    static const LogCosSign resolved = [] {
        constexpr double probe = 0.5;
        const double reference = log_cos_sine_powers(probe);
        const double unsigned_err = std::abs(log_cos_bernoulli(probe, LogCosSign::Unsigned) - reference);
        const double alt_err = std::abs(log_cos_bernoulli(probe, LogCosSign::Alternating) - reference);
        return alt_err < unsigned_err ? LogCosSign::Alternating : LogCosSign::Unsigned;
    }();
    return resolved;
}

double log_cos_bernoulli(double x) { return log_cos_bernoulli(x, resolve_log_cos_sign()); }

double CosinePowerExpansion::operator()(double x) const {
    double sum = constant;
    for (const auto& t : terms) sum += t.coefficient * std::cos(t.frequency * x);
    return sum;
}

double CosinePowerExpansion::integral(double t) const {
    double sum = constant * t;
    for (const auto& term : terms) {
        sum += term.coefficient * std::sin(term.frequency * t) / term.frequency;
    }
    return sum;
}

CosinePowerExpansion cos_power_expansion(unsigned m) {
    if (m == 0) throw DomainError("cos_power_expansion: requires m >= 1");
    CosinePowerExpansion out;
    out.m = m;
    const double scale = std::ldexp(1.0, -2 * static_cast<int>(m));
    double binom = 1.0;  // C(2m, k)
    for (unsigned k = 0; k < m; ++k) {
        out.terms.push_back({2 * (m - k), 2.0 * binom * scale});
        binom = binom * static_cast<double>(2 * m - k) / static_cast<double>(k + 1);
    }
    out.constant = binom * scale;
    return out;
}

double cosine_kernel(double p, double x) {
    const double c = std::cos(x);
    return (1.0 + p * c) / (1.0 + 2.0 * p * c + p * p);
}

double cosine_kernel_partial_sum(double p, double x, unsigned terms) {
    double sum = 0.0;
    double power = 1.0;
    for (unsigned k = 0; k < terms; ++k) {
        sum += power * std::cos(k * x);
        power *= -p;
    }
    return sum;
}

double csch_series(double y) {
    if (!(y > 0.0)) throw DomainError("csch_series: requires y > 0");
    const double ratio = std::exp(-2.0 * y);
    double term = 2.0 * std::exp(-y);
    return sum_series([&](std::size_t n) {
        if (n > 0) term *= ratio;
        return term;
    });
}

double sech_series(double y) {
    if (!(y > 0.0)) throw DomainError("sech_series: requires y > 0");
    const double ratio = -std::exp(-2.0 * y);
    double term = 2.0 * std::exp(-y);
    return sum_series([&](std::size_t n) {
        if (n > 0) term *= ratio;
        return term;
    });
}

}  // namespace russell
