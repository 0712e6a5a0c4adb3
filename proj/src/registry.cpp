// The identity registry. Each entry pairs a left-hand integral with a
// right-hand closed form (or, for the hyperbolic-kernel family, a second
// integral) over a parameter domain.

#include <cmath>
#include <string>
#include <vector>

#include "russell/elliptic.hpp"
#include "russell/identities.hpp"
#include "russell/oracle.hpp"
#include "russell/specfun.hpp"

namespace russell {

namespace {

constexpr double kEulerGamma = 0.577215664901532860606512090082;
constexpr double kCatalan = 0.915965594177219015054603514932;
const double kSqrtPi = std::sqrt(kPi);
const double kSqrt2 = std::sqrt(2.0);

SideForm finite(Integrand f, double a, double b, double scale = 1.0) {
    return ScaledIntegral{std::move(f), a, b, scale};
}

SideForm semi_infinite(Integrand f, double lower = 0.0, double scale = 1.0) {
    return ScaledIntegral{std::move(f), lower, kInfinity, scale};
}

double sech(double y) { return 1.0 / std::cosh(y); }

// sinh(y)/cosh^2(y) without inf/inf in the far tail.
double sinh_over_cosh2(double y) { return std::tanh(y) * sech(y); }

double int_pow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

double double_factorial(int n) {
    double r = 1.0;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

ToleranceClass near_singular_above_09(const ParameterPoint& p) {
    return p["x"] >= 0.9 ? ToleranceClass::NearSingular : ToleranceClass::Smooth;
}

Parameter x_unit() { return Parameter::continuous("x", 0.05, 0.95); }
Parameter positive(const char* name, std::vector<double> mandatory = {}) {
    return Parameter::continuous(name, 0.25, 5.0, std::move(mandatory));
}

double lemniscatic_k() {
    static const double k = ellip_k(0.5);
    return k;
}

// (1 + x cos t)^{1/k} + (1 - x cos t)^{1/k}
double symmetric_root(double x, double k, double t) {
    const double c = x * std::cos(t);
    return std::pow(1.0 + c, 1.0 / k) + std::pow(1.0 - c, 1.0 / k);
}

void add_moment_entries(std::vector<IdentitySpec>& out) {
    out.push_back({
        .id = "L1-moment",
        .description = "odd sine power moments int_0^pi t sin^{2j+1} t cos^{2m} t dt",
        .formula = "2^j j! pi / ((2m+1)(2m+3)...(2m+2j+1))",
        .domain = {{Parameter::integers("j", 0, 4), Parameter::integers("m", 0, 6)}},
        .lhs = [](const ParameterPoint& p) {
            const int j = static_cast<int>(p["j"]);
            const int m = static_cast<int>(p["m"]);
            return finite([j, m](double t) {
                return t * int_pow(std::sin(t), 2 * j + 1) * int_pow(std::cos(t), 2 * m);
            }, 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            return oracle::lemma1_closed_form(static_cast<unsigned>(p["j"]),
                                              static_cast<unsigned>(p["m"]));
        },
    });
    out.push_back({
        .id = "L1-beta",
        .description = "int_0^pi t sin t cos^m t dt for every integer m, odd included",
        .formula = "sqrt(pi)/(2(m+1)) Gamma(m/2+1)/Gamma(m/2+3/2) [1-(-1)^m] - pi/(m+1) (-1)^{m+1}",
        .domain = {{Parameter::integers("m", 0, 10)}},
        .lhs = [](const ParameterPoint& p) {
            const int m = static_cast<int>(p["m"]);
            return finite([m](double t) { return t * std::sin(t) * int_pow(std::cos(t), m); }, 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            return oracle::odd_power_moment_first_entry(static_cast<unsigned>(p["m"]));
        },
    });
    out.push_back({
        .id = "L1-recursion",
        .description = "int_0^pi x^r sin^p x cos^q x dx against the reduction recursion in q",
        .formula = "[(p+q) x^r sin^{p+1} cos^{q-1} + r x^{r-1} sin^p cos^q]_0^pi / (p+q)^2 - ...",
        .domain = {{Parameter::integers("r", 1, 3), Parameter::integers("p", 1, 3),
                    Parameter::integers("q", 2, 5)}},
        .lhs = [](const ParameterPoint& pt) {
            const int r = static_cast<int>(pt["r"]);
            const int p = static_cast<int>(pt["p"]);
            const int q = static_cast<int>(pt["q"]);
            return finite([r, p, q](double x) {
                return int_pow(x, r) * int_pow(std::sin(x), p) * int_pow(std::cos(x), q);
            }, 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& pt) -> SideForm {
            return oracle::moment_recursive({static_cast<unsigned>(pt["r"]),
                                             static_cast<unsigned>(pt["p"]),
                                             static_cast<unsigned>(pt["q"])});
        },
    });
    out.push_back({
        .id = "L2-antiderivative",
        .description = "int_0^t s sin s cos^m s ds from the hypergeometric antiderivative F",
        .formula = "F(t) - F(0), F(t) = -cos^{m+1}t/((m+1)(m+2)) [cos t 2F1(1/2, m/2+1; m/2+2; cos^2 t) + (m+2) t]",
        .domain = {{Parameter::continuous("t", 0.05, 3.09), Parameter::set("m", {0, 2, 4, 6}, true)}},
        .lhs = [](const ParameterPoint& p) {
            const int m = static_cast<int>(p["m"]);
            return finite([m](double s) { return s * std::sin(s) * int_pow(std::cos(s), m); }, 0.0, p["t"]);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const auto m = static_cast<unsigned>(p["m"]);
            return oracle::lemma2_antiderivative(p["t"], m) - oracle::lemma2_antiderivative(0.0, m);
        },
    });
    out.push_back({
        .id = "cos-power",
        .description = "int_0^t cos^{2m} x dx from the finite cosine-harmonic expansion",
        .formula = "C(2m,m) t / 4^m + sum_{k<m} 2 C(2m,k) sin(2(m-k)t) / (4^m 2(m-k))",
        .domain = {{Parameter::continuous("t", 0.1, 3.0), Parameter::integers("m", 1, 8)}},
        .lhs = [](const ParameterPoint& p) {
            const int m = static_cast<int>(p["m"]);
            return finite([m](double x) { return int_pow(std::cos(x), 2 * m); }, 0.0, p["t"]);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            return cos_power_expansion(static_cast<unsigned>(p["m"])).integral(p["t"]);
        },
    });
}

void add_russell_entries(std::vector<IdentitySpec>& out) {
    out.push_back({
        .id = "R1",
        .description = "int_0^inf exp(-(r+1)z + x e^{-z}) dz",
        .formula = "sum_n x^n / (n! (n+r+1)) = (-x)^{-(r+1)} [Gamma(r+1) - Gamma(r+1, -x)]",
        .domain = {{Parameter::set("r", {0.0, 0.5, 1.0, 2.0, 3.5}),
                    Parameter::continuous("x", 0.1, 2.0, {})}},
        .lhs = [](const ParameterPoint& p) {
            const double r = p["r"];
            const double x = p["x"];
            return semi_infinite([r, x](double z) { return std::exp(-(r + 1.0) * z + x * std::exp(-z)); });
        },
        .rhs = [](const ParameterPoint& p) -> SideForm { return r1_series(p["r"], p["x"]); },
        .note = "right-hand side summed as the real power series",
    });
    out.push_back({
        .id = "R2",
        .description = "int_0^pi t sin t / (1 - x^2 cos^2 t) dt",
        .formula = "(pi/2x) ln((1+x)/(1-x))",
        .domain = {{x_unit()}},
        .lhs = [](const ParameterPoint& p) {
            const double x = p["x"];
            return finite([x](double t) {
                const double c = x * std::cos(t);
                return t * std::sin(t) / (1.0 - c * c);
            }, 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            return kPi / (2.0 * x) * std::log((1.0 + x) / (1.0 - x));
        },
    });
    out.push_back({
        .id = "R2-sin3",
        .description = "int_0^pi t sin^3 t / (1 - x^2 cos^2 t) dt",
        .formula = "(pi/x^2) [1 + ((x^2-1)/x) atanh x]",
        .domain = {{x_unit()}},
        .lhs = [](const ParameterPoint& p) {
            const double x = p["x"];
            return finite([x](double t) {
                const double c = x * std::cos(t);
                return t * int_pow(std::sin(t), 3) / (1.0 - c * c);
            }, 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            return kPi / (x * x) * (1.0 + (x * x - 1.0) / x * std::atanh(x));
        },
    });
    out.push_back({
        .id = "R2-sin5",
        .description = "int_0^pi t sin^5 t / (1 - x^2 cos^2 t) dt",
        .formula = "(pi/x^4) [(5/3) x^2 - 1 + ((x^2-1)^2/x) atanh x]",
        .domain = {{x_unit()}},
        .lhs = [](const ParameterPoint& p) {
            const double x = p["x"];
            return finite([x](double t) {
                const double c = x * std::cos(t);
                return t * int_pow(std::sin(t), 5) / (1.0 - c * c);
            }, 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            const double x2 = x * x;
            return kPi / (x2 * x2) * (5.0 / 3.0 * x2 - 1.0 + (x2 - 1.0) * (x2 - 1.0) / x * std::atanh(x));
        },
    });
    out.push_back({
        .id = "R3",
        .description = "int_0^pi t sin t / (1 + x^2 cos^2 t) dt",
        .formula = "(pi/x) atan x",
        .domain = {{x_unit()}},
        .lhs = [](const ParameterPoint& p) {
            const double x = p["x"];
            return finite([x](double t) {
                const double c = x * std::cos(t);
                return t * std::sin(t) / (1.0 + c * c);
            }, 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            return kPi / x * std::atan(x);
        },
    });

    auto r4_integrand = [](int j) {
        return [j](double t) {
            const double amp = int_pow(std::cos(t), j);
            return std::exp(amp * std::cos(j * t)) * std::cos(amp * std::sin(j * t));
        };
    };
    out.push_back({
        .id = "R4",
        .description = "int_0^{pi/2} exp(cos^3 t cos 3t) cos(cos^3 t sin 3t) dt",
        .formula = "(pi/2) e^{1/8}",
        .domain = {},
        .lhs = [r4_integrand](const ParameterPoint&) { return finite(r4_integrand(3), 0.0, kPi / 2); },
        .rhs = [](const ParameterPoint&) -> SideForm { return kPi / 2 * std::exp(0.125); },
    });
    out.push_back({
        .id = "R4-gen",
        .description = "int_0^{pi/2} exp(cos^j t cos jt) cos(cos^j t sin jt) dt",
        .formula = "(pi/2) e^{1/2^j}",
        .domain = {{Parameter::integers("j", 1, 8)}},
        .lhs = [r4_integrand](const ParameterPoint& p) {
            return finite(r4_integrand(static_cast<int>(p["j"])), 0.0, kPi / 2);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            return kPi / 2 * std::exp(std::ldexp(1.0, -static_cast<int>(p["j"])));
        },
    });

    auto r5_integrand = [](double x, double k) {
        return [x, k](double t) {
            const double c = x * std::cos(t);
            return t * std::sin(t) * std::pow(1.0 + c * c, 1.0 / k);
        };
    };
    out.push_back({
        .id = "R5",
        .description = "int_0^pi t sin t sqrt(1 + x^2 cos^2 t) dt",
        .formula = "(pi/2x) [x sqrt(1+x^2) + ln(x + sqrt(1+x^2))]",
        .domain = {{x_unit()}},
        .lhs = [r5_integrand](const ParameterPoint& p) { return finite(r5_integrand(p["x"], 2.0), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            const double s = std::sqrt(1.0 + x * x);
            return kPi / (2.0 * x) * (x * s + std::log(x + s));
        },
    });
    out.push_back({
        .id = "R5-gen",
        .description = "int_0^pi t sin t (1 + x^2 cos^2 t)^{1/k} dt",
        .formula = "pi 2F1(1/2, -1/k; 3/2; -x^2)",
        .domain = {{x_unit(), Parameter::integers("k", 2, 6)}},
        .lhs = [r5_integrand](const ParameterPoint& p) { return finite(r5_integrand(p["x"], p["k"]), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            return kPi * gauss_2f1(0.5, -1.0 / p["k"], 1.5, -x * x);
        },
    });
    out.push_back({
        .id = "R5-k2",
        .description = "int_0^pi t sin t (1 + x^2 cos^2 t)^{1/2} dt, asinh form",
        .formula = "(pi/2) [sqrt(1+x^2) + asinh(x)/x]",
        .domain = {{x_unit()}},
        .lhs = [r5_integrand](const ParameterPoint& p) { return finite(r5_integrand(p["x"], 2.0), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            return kPi / 2 * (std::sqrt(1.0 + x * x) + std::asinh(x) / x);
        },
    });

    auto r6_integrand = [](double x, double k, int sin_power) {
        return [x, k, sin_power](double t) {
            return t * int_pow(std::sin(t), sin_power) * symmetric_root(x, k, t);
        };
    };
    out.push_back({
        .id = "R6",
        .description = "int_0^pi t sin t [(1 + x cos t)^{1/3} + (1 - x cos t)^{1/3}] dt",
        .formula = "(3 pi / 4x) [(1+x)^{4/3} - (1-x)^{4/3}]",
        .domain = {{x_unit()}},
        .lhs = [r6_integrand](const ParameterPoint& p) { return finite(r6_integrand(p["x"], 3.0, 1), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            return 3.0 * kPi / (4.0 * x) * (std::pow(1.0 + x, 4.0 / 3.0) - std::pow(1.0 - x, 4.0 / 3.0));
        },
        .tolerance_rule = near_singular_above_09,
    });
    out.push_back({
        .id = "R6-gen",
        .description = "int_0^pi t sin t [(1 + x cos t)^{1/k} + (1 - x cos t)^{1/k}] dt",
        .formula = "(pi k / ((k+1) x)) [(1+x)^{(k+1)/k} - (1-x)^{(k+1)/k}]",
        .domain = {{x_unit(), Parameter::integers("k", 2, 6)}},
        .lhs = [r6_integrand](const ParameterPoint& p) { return finite(r6_integrand(p["x"], p["k"], 1), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            const double k = p["k"];
            const double e = (k + 1.0) / k;
            return kPi * k / ((k + 1.0) * x) * (std::pow(1.0 + x, e) - std::pow(1.0 - x, e));
        },
        .tolerance_rule = near_singular_above_09,
    });
    out.push_back({
        .id = "R6-sin3",
        .description = "int_0^pi t sin^3 t [(1 + x cos t)^{1/k} + (1 - x cos t)^{1/k}] dt",
        .formula = "(4 pi / 3) 2F1(-1/(2k), (k-1)/(2k); 5/2; x^2)",
        .domain = {{x_unit(), Parameter::integers("k", 2, 6)}},
        .lhs = [r6_integrand](const ParameterPoint& p) { return finite(r6_integrand(p["x"], p["k"], 3), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            const double k = p["k"];
            return 4.0 * kPi / 3.0 * gauss_2f1(-0.5 / k, (k - 1.0) / (2.0 * k), 2.5, x * x);
        },
        .tolerance_rule = near_singular_above_09,
        .note = "closed quintic-polynomial representation for k > 2 not encoded; hypergeometric form is the reference",
    });
    out.push_back({
        .id = "R6-sin3-k2",
        .description = "int_0^pi t sin^3 t [(1 + x cos t)^{1/2} + (1 - x cos t)^{1/2}] dt",
        .formula = "(8 pi / (105 x^3)) [sqrt(1-x)(2 + x - 8x^2 + 5x^3) + sqrt(1+x)(-2 + x + 8x^2 + 5x^3)]",
        .domain = {{x_unit()}},
        .lhs = [r6_integrand](const ParameterPoint& p) { return finite(r6_integrand(p["x"], 2.0, 3), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            const double x2 = x * x;
            const double x3 = x2 * x;
            return 8.0 * kPi / (105.0 * x3) *
                   (std::sqrt(1.0 - x) * (2.0 + x - 8.0 * x2 + 5.0 * x3) +
                    std::sqrt(1.0 + x) * (-2.0 + x + 8.0 * x2 + 5.0 * x3));
        },
        .tolerance_rule = near_singular_above_09,
    });
    out.push_back({
        .id = "R6-odd-p",
        .description = "int_0^pi t sin^p t [(1 + x cos t)^{1/k} + (1 - x cos t)^{1/k}] dt, odd p",
        .formula = "(2^{(p+1)/2} ((p-1)/2)! pi / p!!) 2F1(-1/(2k), (k-1)/(2k); (p+2)/2; x^2)",
        .domain = {{x_unit(), Parameter::set("p", {1, 3, 5, 7}, true), Parameter::integers("k", 2, 3)}},
        .lhs = [r6_integrand](const ParameterPoint& pt) {
            return finite(r6_integrand(pt["x"], pt["k"], static_cast<int>(pt["p"])), 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& pt) -> SideForm {
            const double x = pt["x"];
            const double k = pt["k"];
            const int p = static_cast<int>(pt["p"]);
            const double prefactor =
                std::ldexp(1.0, (p + 1) / 2) * factorial((p - 1) / 2) * kPi / double_factorial(p);
            return prefactor * gauss_2f1(-0.5 / k, (k - 1.0) / (2.0 * k), 0.5 * (p + 2), x * x);
        },
        .tolerance_rule = near_singular_above_09,
    });

    auto r7_integrand = [](double x, int j) {
        return [x, j](double t) { return t * std::sin(t) / (1.0 + int_pow(x * std::cos(t), j)); };
    };
    out.push_back({
        .id = "R7",
        .description = "int_0^pi t sin t / (1 + x^4 cos^4 t) dt",
        .formula = "(pi / (2^{5/2} x)) ln((1 + sqrt2 x + x^2)/(1 - sqrt2 x + x^2)) + (pi / (2^{3/2} x)) atan(sqrt2 x / (1 - x^2))",
        .domain = {{x_unit()}},
        .lhs = [r7_integrand](const ParameterPoint& p) { return finite(r7_integrand(p["x"], 4), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double x = p["x"];
            const double s = kSqrt2 * x;
            return kPi / (std::pow(2.0, 2.5) * x) * std::log((1.0 + s + x * x) / (1.0 - s + x * x)) +
                   kPi / (std::pow(2.0, 1.5) * x) * std::atan(s / (1.0 - x * x));
        },
    });
    out.push_back({
        .id = "R7-gen",
        .description = "int_0^pi t sin t / (1 + x^j cos^j t) dt, even j",
        .formula = "(pi/j) Phi(-x^j, 1, 1/j)",
        .domain = {{x_unit(), Parameter::set("j", {2, 4, 6}, true)}},
        .lhs = [r7_integrand](const ParameterPoint& p) {
            return finite(r7_integrand(p["x"], static_cast<int>(p["j"])), 0.0, kPi);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            const double j = p["j"];
            return kPi / j * lerch_phi(-std::pow(p["x"], j), 1.0, 1.0 / j);
        },
        .note = "series argument is -x^j (alternating); the unsigned +x^j reading disagrees with quadrature",
    });
    out.push_back({
        .id = "R7-2f1",
        .description = "int_0^pi t sin t / (1 + x^4 cos^4 t) dt, hypergeometric form",
        .formula = "pi 2F1(1/4, 1; 5/4; -x^4)",
        .domain = {{x_unit()}},
        .lhs = [r7_integrand](const ParameterPoint& p) { return finite(r7_integrand(p["x"], 4), 0.0, kPi); },
        .rhs = [](const ParameterPoint& p) -> SideForm {
            return kPi * gauss_2f1(0.25, 1.0, 1.25, -std::pow(p["x"], 4));
        },
        .note = "argument is -x^4; the +x^4 reading disagrees with quadrature",
    });
    out.push_back({
        .id = "R8-lncos",
        .description = "int_0^t tan s ds = -ln cos t from the Bernoulli-number power series",
        .formula = "-sum_k (-1)^k 2^{2k-1}(2^{2k}-1) B_{2k} t^{2k} / (k (2k)!)",
        .domain = {{Parameter::continuous("t", 0.05, 0.8)}},
        .lhs = [](const ParameterPoint& p) {
            return finite([](double s) { return std::tan(s); }, 0.0, p["t"]);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm { return -log_cos_bernoulli(p["t"]); },
        .note = resolve_log_cos_sign() == LogCosSign::Alternating
                    ? "coefficient sign (-1)^k selected by agreement with -1/2 sum sin^{2k}/k"
                    : "unsigned coefficients selected by agreement with -1/2 sum sin^{2k}/k",
    });
    out.push_back({
        .id = "R10",
        .description = "int_0^{pi/2} (1 + e^{a cos^2 t} cos(a sin t cos t)) / (1 + 2 e^{a cos^2 t} cos(a sin t cos t) + e^{2a cos^2 t}) dt",
        .formula = "pi / (2 (e^{a/2} + 1))",
        .domain = {{positive("a", {0.5, 1.0, 2.0, 4.0})}},
        .lhs = [](const ParameterPoint& p) {
            const double a = p["a"];
            return finite([a](double t) {
                const double c = std::cos(t);
                const double pk = std::exp(a * c * c);
                return cosine_kernel(pk, a * std::sin(t) * c);
            }, 0.0, kPi / 2);
        },
        .rhs = [](const ParameterPoint& p) -> SideForm { return kPi / (2.0 * (std::exp(p["a"] / 2) + 1.0)); },
    });
}

void add_transform_entries(std::vector<IdentitySpec>& out) {
    const double pi2 = kPi * kPi;
    out.push_back({
        .id = "A1-gen",
        .description = "int_0^inf x (g sinh gx / cosh^2 gx e^{-x^2/pi^2} + sqrt(pi) sinh x / cosh^2 x e^{-g^2 x^2}) dx",
        .formula = "int_0^inf e^{-x^2/pi^2} / cosh gx dx",
        .domain = {{positive("g", {kEulerGamma})}},
        .lhs = [pi2](const ParameterPoint& p) {
            const double g = p["g"];
            return semi_infinite([g, pi2](double x) {
                return x * (g * sinh_over_cosh2(g * x) * std::exp(-x * x / pi2) +
                            kSqrtPi * sinh_over_cosh2(x) * std::exp(-g * g * x * x));
            });
        },
        .rhs = [pi2](const ParameterPoint& p) {
            const double g = p["g"];
            return semi_infinite([g, pi2](double x) { return std::exp(-x * x / pi2) * sech(g * x); });
        },
        .tolerance_class = ToleranceClass::Transform,
    });
    out.push_back({
        .id = "A3-gen",
        .description = "int_0^inf x (e^{-x^2/pi} + r e^{-r^4 x^2/pi}) sinh rx / cosh^2 rx dx",
        .formula = "int_0^inf e^{-r^2 x^2/pi} / cosh r^2 x dx",
        .domain = {{positive("r", {2.0})}},
        .lhs = [](const ParameterPoint& p) {
            const double r = p["r"];
            const double r4 = r * r * r * r;
            return semi_infinite([r, r4](double x) {
                return x * (std::exp(-x * x / kPi) + r * std::exp(-r4 * x * x / kPi)) * sinh_over_cosh2(r * x);
            });
        },
        .rhs = [](const ParameterPoint& p) {
            const double r2 = p["r"] * p["r"];
            return semi_infinite([r2](double x) { return std::exp(-r2 * x * x / kPi) * sech(r2 * x); });
        },
        .tolerance_class = ToleranceClass::Transform,
    });
    out.push_back({
        .id = "A5-gen",
        .description = "int_0^inf x e^{-x^2/pi} sinh x / cosh^2 x dx",
        .formula = "(r/2) int_0^inf e^{-r^2 x^2/pi} / cosh rx dx",
        .domain = {{positive("r", {2.0})}},
        .lhs = [](const ParameterPoint&) {
            return semi_infinite([](double x) { return x * std::exp(-x * x / kPi) * sinh_over_cosh2(x); });
        },
        .rhs = [](const ParameterPoint& p) {
            const double r = p["r"];
            return semi_infinite([r](double x) { return std::exp(-r * r * x * x / kPi) * sech(r * x); }, 0.0,
                                 r / 2);
        },
        .tolerance_class = ToleranceClass::Transform,
    });

    auto a6_lhs = [](double x) { const double l = std::log(x); return std::exp(-l * l) / (1.0 + x * x); };
    out.push_back({
        .id = "A6-gen",
        .description = "int_0^1 x^{-ln x} / (1 + x^2) dx",
        .formula = "(r/2) int_0^inf e^{-r^2 x^2/pi} / cosh(r sqrt(pi) x) dx",
        .domain = {{positive("r", {2.0})}},
        .lhs = [a6_lhs](const ParameterPoint&) { return finite(a6_lhs, 0.0, 1.0); },
        .rhs = [](const ParameterPoint& p) {
            const double r = p["r"];
            return semi_infinite([r](double x) {
                return std::exp(-r * r * x * x / kPi) * sech(r * kSqrtPi * x);
            }, 0.0, r / 2);
        },
        .tolerance_class = ToleranceClass::Transform,
    });
    out.push_back({
        .id = "A6-sub",
        .description = "int_0^1 x^{-ln x} / (1 + x^2) dx under x -> 1/x",
        .formula = "int_1^inf x^{-ln x} / (1 + x^2) dx",
        .domain = {},
        .lhs = [a6_lhs](const ParameterPoint&) { return finite(a6_lhs, 0.0, 1.0); },
        .rhs = [a6_lhs](const ParameterPoint&) { return semi_infinite(a6_lhs, 1.0); },
        .tolerance_class = ToleranceClass::Transform,
    });
    out.push_back({
        .id = "A9-gen",
        .description = "int_0^inf (sqrt(pi) e^{-x^2/p} + p^2 sqrt(p) pi^{-2} e^{-p x^2/pi^2}) x^2 / cosh x dx",
        .formula = "(p pi sqrt(p) / 2) int_0^inf e^{-p x^2} / cosh(pi x) dx",
        .domain = {{positive("p", {3.0})}},
        .lhs = [pi2](const ParameterPoint& pt) {
            const double p = pt["p"];
            const double c = p * p * std::sqrt(p) / pi2;
            return semi_infinite([p, c, pi2](double x) {
                return (kSqrtPi * std::exp(-x * x / p) + c * std::exp(-p * x * x / pi2)) * x * x * sech(x);
            });
        },
        .rhs = [](const ParameterPoint& pt) {
            const double p = pt["p"];
            return semi_infinite([p](double x) { return std::exp(-p * x * x) * sech(kPi * x); }, 0.0,
                                 p * kPi * std::sqrt(p) / 2);
        },
        .tolerance_class = ToleranceClass::Transform,
    });
    out.push_back({
        .id = "A10-gen",
        .description = "int_0^inf (pi^5 e^{-pi^3 x^2/g} + g^{5/2} e^{-g x^2/pi}) x^2 / cosh(pi x) dx",
        .formula = "(pi g^{3/2} / 2) int_0^inf e^{-g x^2/pi} / cosh(pi x) dx",
        .domain = {{positive("g", {kCatalan})}},
        .lhs = [](const ParameterPoint& p) {
            const double g = p["g"];
            const double pi3 = kPi * kPi * kPi;
            const double pi5 = pi3 * kPi * kPi;
            const double g52 = std::pow(g, 2.5);
            return semi_infinite([g, pi3, pi5, g52](double x) {
                return (pi5 * std::exp(-pi3 * x * x / g) + g52 * std::exp(-g * x * x / kPi)) * x * x *
                       sech(kPi * x);
            });
        },
        .rhs = [](const ParameterPoint& p) {
            const double g = p["g"];
            return semi_infinite([g](double x) { return std::exp(-g * x * x / kPi) * sech(kPi * x); }, 0.0,
                                 kPi * std::pow(g, 1.5) / 2);
        },
        .tolerance_class = ToleranceClass::Transform,
    });
}

void add_elliptic_entries(std::vector<IdentitySpec>& out) {
    const double gamma_quarter = gamma(0.25);
    const double g2 = gamma_quarter * gamma_quarter;

    out.push_back({
        .id = "K-lemniscatic",
        .description = "int_0^{pi/2} dt / sqrt(1 - sin^2 t / 2)",
        .formula = "Gamma(1/4)^2 / (4 sqrt(pi))",
        .domain = {},
        .lhs = [](const ParameterPoint&) {
            return finite([](double t) { const double s = std::sin(t); return 1.0 / std::sqrt(1.0 - 0.5 * s * s); },
                          0.0, kPi / 2);
        },
        .rhs = [g2](const ParameterPoint&) -> SideForm { return g2 / (4.0 * kSqrtPi); },
        .tolerance_class = ToleranceClass::Elliptic,
    });
    out.push_back({
        .id = "G-gauss",
        .description = "(2/pi) int_0^{pi/2} dt / sqrt(1 + sin^2 t), Gauss's constant",
        .formula = "Gamma(1/4)^2 / (2 pi)^{3/2}",
        .domain = {},
        .lhs = [](const ParameterPoint&) {
            return finite([](double t) { const double s = std::sin(t); return 1.0 / std::sqrt(1.0 + s * s); },
                          0.0, kPi / 2, 2.0 / kPi);
        },
        .rhs = [](const ParameterPoint&) -> SideForm { return gauss_constant(); },
        .tolerance_class = ToleranceClass::Elliptic,
    });

    auto r5_analog = [](double z) {
        const JacobiTriple j = jacobi(z, 0.5);
        return z * j.sn * std::sqrt(1.0 + j.cn * j.cn);
    };
    out.push_back({
        .id = "E-R5a",
        .description = "int_0^{K} z sn(z) sqrt(1 + cn^2(z)) dz, m = 1/2",
        .formula = "pi/2",
        .domain = {},
        .lhs = [r5_analog](const ParameterPoint&) { return finite(r5_analog, 0.0, lemniscatic_k()); },
        .rhs = [](const ParameterPoint&) -> SideForm { return kPi / 2; },
        .tolerance_class = ToleranceClass::Elliptic,
    });
    out.push_back({
        .id = "E-R5b",
        .description = "int_0^{2K} z sn(z) sqrt(1 + cn^2(z)) dz, m = 1/2",
        .formula = "Gamma(1/4)^2 / sqrt(2 pi)",
        .domain = {},
        .lhs = [r5_analog](const ParameterPoint&) { return finite(r5_analog, 0.0, 2.0 * lemniscatic_k()); },
        .rhs = [g2](const ParameterPoint&) -> SideForm { return g2 / std::sqrt(2.0 * kPi); },
        .tolerance_class = ToleranceClass::Elliptic,
    });

    auto cn_power = [](int k) {
        return [k](double z) {
            const JacobiTriple j = jacobi(z, 0.5);
            return z * j.sn * j.dn * int_pow(j.cn, k);
        };
    };
    out.push_back({
        .id = "E-cn2",
        .description = "int_0^K z sn dn cn^2 dz, m = 1/2",
        .formula = "1 / (3 sqrt 2)",
        .domain = {},
        .lhs = [cn_power](const ParameterPoint&) { return finite(cn_power(2), 0.0, lemniscatic_k()); },
        .rhs = [](const ParameterPoint&) -> SideForm { return 1.0 / (3.0 * kSqrt2); },
        .tolerance_class = ToleranceClass::Elliptic,
    });
    out.push_back({
        .id = "E-cn4",
        .description = "int_0^K z sn dn cn^4 dz, m = 1/2",
        .formula = "pi / (20 sqrt 2)",
        .domain = {},
        .lhs = [cn_power](const ParameterPoint&) { return finite(cn_power(4), 0.0, lemniscatic_k()); },
        .rhs = [](const ParameterPoint&) -> SideForm { return kPi / (20.0 * kSqrt2); },
        .tolerance_class = ToleranceClass::Elliptic,
    });
    out.push_back({
        .id = "E-cn5",
        .description = "int_0^K z sn dn cn^5 dz, m = 1/2",
        .formula = "1 / (10 sqrt(2) G), G = Gauss's constant",
        .domain = {},
        .lhs = [cn_power](const ParameterPoint&) { return finite(cn_power(5), 0.0, lemniscatic_k()); },
        .rhs = [](const ParameterPoint&) -> SideForm { return 1.0 / (10.0 * kSqrt2 * gauss_constant()); },
        .tolerance_class = ToleranceClass::Elliptic,
    });
}

std::vector<IdentitySpec> build_registry() {
    std::vector<IdentitySpec> out;
    add_moment_entries(out);
    add_russell_entries(out);
    add_transform_entries(out);
    add_elliptic_entries(out);
    return out;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> entries = build_registry();
    return entries;
}

}  // namespace russell
