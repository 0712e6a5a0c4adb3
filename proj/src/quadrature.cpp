#include "russell/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "russell/errors.hpp"
#include "russell/specfun.hpp"

namespace russell {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUnderflow = std::numeric_limits<double>::min();

// Kronrod abscissae on [-1, 1] (positive half, descending) and weights.
// Odd indices are shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.error < rhs.error; }
};

// One 7/15 Gauss-Kronrod panel with the QUADPACK error heuristic.
Panel gauss_kronrod_15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(kronrod);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double pair = f1[j] + f2[j];
        kronrod += kWgk[j] * pair;
        abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    const double mean = 0.5 * kronrod;
    double asc = kWgk[7] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 7; ++j) {
        asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }

    const double scale = std::abs(half);
    const double result = kronrod * half;
    abs_sum *= scale;
    asc *= scale;
    double err = std::abs((kronrod - gauss) * half);
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    if (abs_sum > kUnderflow / (50.0 * kEps)) err = std::max(50.0 * kEps * abs_sum, err);
    return {a, b, result, err};
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol,
                                  std::size_t max_evaluations) {
    if (!(a < b)) throw DomainError("integrate_finite: requires a < b");
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate_finite: limits must be finite");
    if (!(tol >= kMinFiniteTolerance)) {
        throw DomainError("integrate_finite: tolerance below 1e-13 is not supported");
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    heap.push(gauss_kronrod_15(f, a, b));
    std::size_t evaluations = 15;
    double value = heap.top().value;
    double error = heap.top().error;

    auto accepted = [&] { return error <= tol * std::max(1.0, std::abs(value)); };

    while (!accepted() && evaluations + 30 <= max_evaluations) {
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        // Stop refining once the panel cannot be split in floating point.
        if (!(worst.a < mid && mid < worst.b) ||
            (worst.b - worst.a) < 4.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            break;
        }
        heap.pop();
        const Panel left = gauss_kronrod_15(f, worst.a, mid);
        const Panel right = gauss_kronrod_15(f, mid, worst.b);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-add from scratch; the running sums above accumulate rounding.
    value = 0.0;
    error = 0.0;
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
    }

    QuadratureResult out;
    out.value = value;
    out.error_estimate = error;
    out.evaluations = evaluations;
    out.converged = std::isfinite(value) && accepted();
    return out;
}

namespace {

constexpr double kHalfPi = kPi / 2;
constexpr double kMaxAbscissaT = 6.6;   // exp(pi/2 sinh 6.6) is near the overflow limit
constexpr int kMaxLevels = 9;          // smallest step 2^-8
constexpr int kQuietSamples = 4;

struct TrapezoidSum {
    double value = 0.0;
    std::size_t evaluations = 0;
    bool finite = true;
};

// h * sum_k w(kh) f(x(kh)) over one tail direction (sign = +1 or -1), k >= 1.
void accumulate_tail(const Integrand& f, double lower, double h, int sign, TrapezoidSum& acc) {
    int quiet = 0;
    for (int k = 1;; ++k) {
        const double t = sign * k * h;
        if (std::abs(t) > kMaxAbscissaT) return;
        const double u = kHalfPi * std::sinh(t);
        const double ex = std::exp(u);
        if (ex == 0.0) return;                      // abscissa collapsed onto `lower`
        const double x = lower + ex;
        if (!std::isfinite(x) || x == lower) return;  // overflow guard
        const double weight = kHalfPi * std::cosh(t) * ex;
        const double fx = f(x);
        ++acc.evaluations;
        const double term = weight * fx;
        if (!std::isfinite(term)) {
            // Deep in a tail the integrand may overflow into inf/inf; treat that
            // as the end of the support. Near the origin it is a real failure.
            if (std::abs(t) < 1.0) acc.finite = false;
            return;
        }
        acc.value += h * term;
        if (std::abs(term) * h <= kEps * std::abs(acc.value) || term == 0.0) {
            if (++quiet >= kQuietSamples) return;
        } else {
            quiet = 0;
        }
    }
}

TrapezoidSum exp_sinh_sum(const Integrand& f, double lower, double h) {
    TrapezoidSum acc;
    const double fx = f(lower + 1.0);  // t = 0: x = lower + 1, weight pi/2
    acc.evaluations = 1;
    acc.value = h * kHalfPi * fx;
    acc.finite = std::isfinite(acc.value);
    accumulate_tail(f, lower, h, +1, acc);
    accumulate_tail(f, lower, h, -1, acc);
    return acc;
}

}  // namespace

QuadratureResult integrate_semi_infinite(const Integrand& f, double tol, double lower) {
    if (!(tol >= kMinSemiInfiniteTolerance)) {
        throw DomainError("integrate_semi_infinite: tolerance below 1e-12 is not supported");
    }
    QuadratureResult out;
    double h = 1.0;
    TrapezoidSum previous = exp_sinh_sum(f, lower, h);
    out.evaluations = previous.evaluations;
    for (int level = 1; level < kMaxLevels; ++level) {
        h *= 0.5;
        const TrapezoidSum current = exp_sinh_sum(f, lower, h);
        out.evaluations += current.evaluations;
        out.value = current.value;
        out.error_estimate = std::abs(current.value - previous.value);
        if (!current.finite) {
            out.converged = false;
            return out;
        }
        if (out.error_estimate <= tol * std::max(1.0, std::abs(current.value))) {
            out.converged = true;
            return out;
        }
        previous = current;
    }
    out.converged = false;
    return out;
}

}  // namespace russell
