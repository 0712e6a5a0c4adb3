#pragma once

// Complete elliptic integral K and the Jacobi elliptic functions.
// The second argument is always the parameter m = k^2, 0 <= m < 1.

namespace russell {

struct EllipticParameter {
    double m;

    /// Throws DomainError unless 0 <= m < 1.
    explicit EllipticParameter(double value);
};

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

/// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b);

/// K(m) = pi / (2 agm(1, sqrt(1 - m))).
double ellip_k(EllipticParameter m);
inline double ellip_k(double m) { return ellip_k(EllipticParameter{m}); }

/// sn, cn, dn of (z | m) by descending Landen transformation.
JacobiTriple jacobi(double z, EllipticParameter m);
inline JacobiTriple jacobi(double z, double m) { return jacobi(z, EllipticParameter{m}); }

/// Gauss's constant 1/agm(1, sqrt 2) = Gamma(1/4)^2 / (2 pi)^{3/2}.
double gauss_constant();

}  // namespace russell
