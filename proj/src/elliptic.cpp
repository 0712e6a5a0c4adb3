#include "russell/elliptic.hpp"

#include <array>
#include <cmath>
#include <string>

#include "russell/errors.hpp"
#include "russell/specfun.hpp"

namespace russell {

EllipticParameter::EllipticParameter(double value) : m(value) {
    if (!(value >= 0.0 && value < 1.0)) {
        throw DomainError("elliptic parameter m = " + std::to_string(value) +
                          " outside [0, 1)");
    }
}

double agm(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("agm: requires a, b > 0");
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        if (std::abs(an - bn) <= 2e-16 * an) return 0.5 * (an + bn);
        a = an;
        b = bn;
    }
    return 0.5 * (a + b);
}

double ellip_k(EllipticParameter m) { return kPi / (2.0 * agm(1.0, std::sqrt(1.0 - m.m))); }

JacobiTriple jacobi(double z, EllipticParameter param) {
    const double m = param.m;
    if (m == 0.0) return {std::sin(z), std::cos(z), 1.0};

    // Descending Landen / AGM scheme: build a_n, c_n until c_N vanishes, then
    // recover the amplitude phi_0 from phi_N = 2^N a_N z.
    constexpr int kMaxLevels = 16;
    std::array<double, kMaxLevels + 1> a{};
    std::array<double, kMaxLevels + 1> c{};
    a[0] = 1.0;
    double b = std::sqrt(1.0 - m);
    c[0] = std::sqrt(m);
    int n = 0;
    while (n < kMaxLevels && std::abs(c[n]) > 1e-16 * a[n]) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * z, n);
    for (int i = n; i > 0; --i) {
        phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    return {sn, cn, std::sqrt(1.0 - m * sn * sn)};
}

double gauss_constant() {
    const double g = gamma(0.25);
    return g * g / std::pow(2.0 * kPi, 1.5);
}

}  // namespace russell
