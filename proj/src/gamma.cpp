#include <array>
#include <cmath>
#include <string>

#include "russell/errors.hpp"
#include "russell/series.hpp"
#include "russell/specfun.hpp"

namespace russell {

namespace {

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kSqrtTwoPi = 2.506628274631000502415765284811;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(kPi * r);
}

// Gamma for x >= 0.5.
double lanczos_gamma(double x) {
    x -= 1.0;
    double acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
    const double t = x + kLanczosG + 0.5;
    // t^(x+1/2) split in two so that Gamma(171) does not overflow early.
    const double half = std::pow(t, 0.5 * (x + 0.5));
    return kSqrtTwoPi * half * (std::exp(-t) * half) * acc;
}

}  // namespace

double gamma(double x) {
    if (std::isnan(x)) return x;
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at " + std::to_string(x));
    }
    if (x < 0.5) {
        return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
    }
    return lanczos_gamma(x);
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) return sin_pi(x) * lanczos_gamma(1.0 - x) / kPi;
    return 1.0 / lanczos_gamma(x);
}

double pochhammer(double a, unsigned n) {
    double result = 1.0;
    for (unsigned i = 0; i < n; ++i) result *= a + static_cast<double>(i);
    return result;
}

double binomial_general(double alpha, unsigned j) {
    // (-1)^j (-alpha)_j / j! folded into one running product so that neither
    // the Pochhammer symbol nor j! overflows on its own.
    double result = 1.0;
    for (unsigned i = 0; i < j; ++i) {
        result *= -(-alpha + static_cast<double>(i)) / static_cast<double>(i + 1);
    }
    return result;
}

namespace {

constexpr double kTiny = 1e-300;

// gamma(a, x) by its power series; x >= 0.
double lower_gamma_series(double a, double x) {
    if (x == 0.0) return 0.0;
    double term = 1.0 / a;
    double ap = a;
    const double sum = sum_series([&](std::size_t n) {
        if (n == 0) return term;
        ap += 1.0;
        term *= x / ap;
        return term;
    });
    return sum * std::exp(-x + a * std::log(x));
}

// Gamma(a, x) by the Legendre continued fraction (modified Lentz).
double upper_gamma_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= 1e-16) {
            return std::exp(-x + a * std::log(x)) * h;
        }
    }
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
}

void check_incomplete_args(double a, double x, const char* who) {
    if (!(a > 0.0)) throw DomainError(std::string(who) + ": requires a > 0");
    if (!(x >= 0.0)) throw DomainError(std::string(who) + ": requires x >= 0");
}

}  // namespace

double upper_incomplete_gamma(double a, double x) {
    check_incomplete_args(a, x, "upper_incomplete_gamma");
    if (x == 0.0) return gamma(a);
    if (x < a + 1.0) return gamma(a) - lower_gamma_series(a, x);
    return upper_gamma_fraction(a, x);
}

double lower_incomplete_gamma(double a, double x) {
    check_incomplete_args(a, x, "lower_incomplete_gamma");
    if (x < a + 1.0) return lower_gamma_series(a, x);
    return gamma(a) - upper_gamma_fraction(a, x);
}

double r1_series(double r, double x) {
    if (!(r > -1.0)) throw DomainError("r1_series: requires r > -1");
    double power = 1.0;  // x^n / n!
    return sum_series([&](std::size_t n) {
        if (n > 0) power *= x / static_cast<double>(n);
        return power / (static_cast<double>(n) + r + 1.0);
    });
}

}  // namespace russell
