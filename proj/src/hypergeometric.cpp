#include <cmath>
#include <string>

#include "russell/errors.hpp"
#include "russell/series.hpp"
#include "russell/specfun.hpp"

namespace russell {

namespace {

// Distance of c - a - b from the nearest integer below which the connection
// formula's two gamma-weighted terms cancel too badly to be trusted.
constexpr double kIntegerGap = 1e-3;

// Budget for the direct series when it is used close to z = 1.
constexpr std::size_t kSlowSeriesBudget = 4'000'000;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

double direct_series(double a, double b, double c, double z,
                     std::size_t budget = kDefaultSeriesBudget) {
    double term = 1.0;
    return sum_series(
        [&](std::size_t n) {
            if (n == 0) return term;
            const double k = static_cast<double>(n - 1);
            term *= (a + k) * (b + k) / ((c + k) * static_cast<double>(n)) * z;
            return term;
        },
        kSeriesEpsilon, budget);
}

double gauss_summation(double a, double b, double c) {
    return gamma(c) * gamma(c - a - b) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
}

// 1/2 < z < 1 with c - a - b away from the integers.
double connection_near_one(double a, double b, double c, double z) {
    const double d = c - a - b;
    const double w = 1.0 - z;
    const double gc = gamma(c);
    const double first = gc * gamma(d) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b) *
                         direct_series(a, b, 1.0 - d, w);
    const double second = std::pow(w, d) * gc * gamma(-d) * reciprocal_gamma(a) *
                          reciprocal_gamma(b) * direct_series(c - a, c - b, 1.0 + d, w);
    return first + second;
}

}  // namespace

double gauss_2f1(const HypergeometricArgs& args) {
    const auto [a, b, c, z] = args;
    if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(z)) {
        throw DomainError("gauss_2f1: NaN argument");
    }
    if (is_nonpositive_integer(c)) {
        throw DomainError("gauss_2f1: c = " + std::to_string(c) + " is a nonpositive integer");
    }
    if (z > 1.0) throw DomainError("gauss_2f1: z > 1 is outside the real-valued domain");
    if (z == 0.0 || a == 0.0 || b == 0.0) return 1.0;

    const double d = c - a - b;
    if (z == 1.0) {
        if (d <= 0.0) {
            throw DivergenceError("gauss_2f1: diverges at z = 1 when c - a - b <= 0");
        }
        return gauss_summation(a, b, c);
    }
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        return direct_series(a, b, c, z);  // a polynomial in z
    }
    if (std::abs(z) <= 0.5) return direct_series(a, b, c, z);
    if (z < -0.5) {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)).
        return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1.0));
    }
    if (std::abs(d - std::nearbyint(d)) < kIntegerGap) {
        return direct_series(a, b, c, z, kSlowSeriesBudget);
    }
    return connection_near_one(a, b, c, z);
}

double lerch_phi(const LerchArgs& args) {
    const auto [z, s, b] = args;
    if (!(std::abs(z) < 1.0)) throw DomainError("lerch_phi: requires |z| < 1");
    if (!(b > 0.0)) throw DomainError("lerch_phi: requires b > 0");
    double power = 1.0;
    return sum_series([&](std::size_t n) {
        const double t = power / std::pow(static_cast<double>(n) + b, s);
        power *= z;
        return t;
    });
}

}  // namespace russell
