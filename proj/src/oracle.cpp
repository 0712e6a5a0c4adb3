#include "russell/oracle.hpp"

#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "russell/errors.hpp"
#include "russell/quadrature.hpp"
#include "russell/series.hpp"
#include "russell/specfun.hpp"

namespace russell::oracle {

namespace {

// sin and cos at the endpoints, exactly.
struct Endpoint {
    double x;
    double sin;
    double cos;
};
constexpr Endpoint kAtZero{0.0, 0.0, 1.0};
constexpr Endpoint kAtPi{kPi, 0.0, -1.0};

double ipow(double base, int exponent) {
    if (exponent < 0) return 0.0;  // only reached with a zero coefficient
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

// (p+q) x^r sin^{p+1} cos^{q-1} + r x^{r-1} sin^p cos^q at one endpoint.
double boundary(const Endpoint& e, int r, int p, int q) {
    double value = (p + q) * ipow(e.x, r) * ipow(e.sin, p + 1) * ipow(e.cos, q - 1);
    if (r > 0) value += r * ipow(e.x, r - 1) * ipow(e.sin, p) * ipow(e.cos, q);
    return value;
}

// int_0^pi sin^p cos^q: zero for odd q, B((p+1)/2, (q+1)/2) otherwise.
double trig_beta(int p, int q) {
    if (q % 2 == 1) return 0.0;
    const double a = 0.5 * (p + 1);
    const double b = 0.5 * (q + 1);
    return gamma(a) * gamma(b) * reciprocal_gamma(a + b);
}

class MomentSolver {
public:
    double operator()(int r, int p, int q) {
        const auto key = std::make_tuple(r, p, q);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const double value = evaluate(r, p, q);
        memo_.emplace(key, value);
        return value;
    }

private:
    double evaluate(int r, int p, int q) {
        if (r == 0) return trig_beta(p, q);
        if (q < 2) {
            auto integrand = [r, p, q](double x) {
                return ipow(x, r) * ipow(std::sin(x), p) * ipow(std::cos(x), q);
            };
            return integrate_finite(integrand, 0.0, kPi, 1e-13).value;
        }
        const double n = static_cast<double>(p + q);
        double acc = boundary(kAtPi, r, p, q) - boundary(kAtZero, r, p, q);
        if (r >= 2) acc -= static_cast<double>(r) * (r - 1) * (*this)(r - 2, p, q);
        if (p >= 1) acc -= static_cast<double>(r) * p * (*this)(r - 1, p - 1, q - 1);
        acc += (q - 1) * n * (*this)(r, p, q - 2);
        return acc / (n * n);
    }

    std::map<std::tuple<int, int, int>, double> memo_;
};

}  // namespace

double moment_recursive(MomentIndex idx) {
    if (idx.r + idx.p + idx.q > kMaxMomentOrder) {
        throw DomainError("moment_recursive: r + p + q exceeds " + std::to_string(kMaxMomentOrder));
    }
    MomentSolver solver;
    return solver(static_cast<int>(idx.r), static_cast<int>(idx.p), static_cast<int>(idx.q));
}

double lemma1_closed_form(unsigned j, unsigned m) {
    double value = kPi;
    for (unsigned i = 1; i <= j; ++i) value *= 2.0 * i;  // 2^j j!
    for (unsigned i = 0; i <= j; ++i) value /= 2.0 * m + 2.0 * i + 1.0;
    return value;
}

double odd_power_moment_first_entry(unsigned m) {
    const double md = static_cast<double>(m);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m
    const double beta_part = std::sqrt(kPi) / (2.0 * (md + 1.0)) * gamma(0.5 * md + 1.0) *
                             reciprocal_gamma(0.5 * md + 1.5) * (1.0 - sign);
    return beta_part - kPi / (md + 1.0) * (-sign);
}

double lemma2_antiderivative(double t, unsigned m) {
    if (m % 2 != 0) throw DomainError("lemma2_antiderivative: m must be even");
    const double md = static_cast<double>(m);
    const double c = std::cos(t);
    const double hyp = gauss_2f1(0.5, 0.5 * md + 1.0, 0.5 * md + 2.0, c * c);
    return -ipow(c, static_cast<int>(m) + 1) / ((md + 1.0) * (md + 2.0)) * (c * hyp + (md + 2.0) * t);
}

double series_sum(const std::function<double(std::size_t)>& terms, double tol) {
    return sum_series(terms, tol, kDefaultSeriesBudget);
}

}  // namespace russell::oracle
