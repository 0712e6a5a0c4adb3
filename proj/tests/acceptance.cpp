// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "russell/elliptic.hpp"
#include "russell/harness.hpp"
#include "russell/identities.hpp"
#include "russell/oracle.hpp"
#include "russell/quadrature.hpp"
#include "russell/specfun.hpp"

using namespace russell;

namespace {

struct Check {
    bool ok = true;
    double worst = 0.0;
    std::string first_failure;

    void rel(double actual, double expected, double tol, const std::string& what) {
        const double err = std::abs(actual - expected) / std::max(1.0, std::abs(expected));
        worst = std::max(worst, err);
        if (!(err <= tol)) fail(what + " got " + fmt(actual) + " want " + fmt(expected));
    }
    void require(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    void fail(const std::string& what) {
        if (ok) first_failure = what;
        ok = false;
    }
    static std::string fmt(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
};

const IdentitySpec& spec(const char* id) { return *find_identity(id); }

double closed(const char* id, const ParameterPoint& p) { return std::get<double>(spec(id).rhs(p)); }

void sweep_into(Check& c, const char* id, unsigned samples) {
    for (const auto& r : sweep(spec(id), samples)) {
        c.worst = std::max(c.worst, r.rel_diff);
        std::ostringstream where;
        where << id;
        for (const auto& [k, v] : r.point.values()) where << " " << k << "=" << v;
        c.require(r.pass, where.str() + " " + r.note);
    }
}

Check criterion_1() {
    Check c;
    for (unsigned j = 0; j <= 4; ++j) {
        for (unsigned m = 0; m <= 6; ++m) {
            c.rel(oracle::moment_recursive({1, 2 * j + 1, 2 * m}), oracle::lemma1_closed_form(j, m), 1e-11,
                  "j=" + std::to_string(j) + " m=" + std::to_string(m));
        }
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const unsigned j = static_cast<unsigned>(rng() % 5);
        const unsigned m = static_cast<unsigned>(rng() % 7);
        auto f = [=](double t) { return t * std::pow(std::sin(t), 2 * j + 1) * std::pow(std::cos(t), 2 * m); };
        c.rel(integrate_finite(f, 0.0, kPi, 1e-13).value, oracle::lemma1_closed_form(j, m), 1e-10, "quadrature");
    }
    return c;
}

Check criterion_2() {
    Check c;
    for (const char* id : {"R2", "R2-sin3", "R2-sin5", "R3"}) sweep_into(c, id, 5);
    return c;
}

Check criterion_3() {
    Check c;
    for (int j = 1; j <= 8; ++j) {
        const auto side = std::get<ScaledIntegral>(spec("R4-gen").lhs(make_point({{"j", double(j)}})));
        const double q = side.scale * integrate_finite(side.integrand, side.lower, side.upper, 1e-13).value;
        c.rel(q, kPi / 2 * std::exp(std::ldexp(1.0, -j)), 1e-10, "j=" + std::to_string(j));
    }
    c.rel(closed("R4", {}), kPi / 2 * std::exp(0.125), 1e-15, "R4 printed case");
    sweep_into(c, "R4", 1);
    return c;
}

Check criterion_4() {
    Check c;
    sweep_into(c, "R5-gen", 5);
    sweep_into(c, "R5", 5);
    for (double x = 0.05; x <= 0.95 + 1e-12; x += 0.05) {
        c.rel(closed("R5-k2", make_point({{"x", x}})),
              kPi * gauss_2f1(0.5, -0.5, 1.5, -x * x), 1e-10, "k=2 radical vs 2F1");
    }
    return c;
}

Check criterion_5() {
    Check c;
    for (const char* id : {"R6", "R6-gen", "R6-sin3", "R6-sin3-k2", "R6-odd-p"}) sweep_into(c, id, 5);
    return c;
}

Check criterion_6() {
    Check c;
    for (const char* id : {"R7", "R7-gen", "R7-2f1"}) sweep_into(c, id, 5);
    for (double x = 0.05; x <= 0.95 + 1e-12; x += 0.05) {
        const auto p = make_point({{"x", x}});
        const double explicit_form = closed("R7", p);
        c.rel(closed("R7-2f1", p), explicit_form, 1e-9, "2F1 vs log/atan");
        c.rel(closed("R7-gen", make_point({{"x", x}, {"j", 4}})), explicit_form, 1e-9, "Lerch vs log/atan");
    }
    return c;
}

Check criterion_7() {
    Check c;
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
        const auto rec = verify(spec("R10"), make_point({{"a", a}}));
        c.worst = std::max(c.worst, rec.rel_diff);
        c.require(rec.pass, "R10 a=" + Check::fmt(a));
        const auto side = std::get<ScaledIntegral>(spec("R10").lhs(make_point({{"a", a}})));
        const double quarter = integrate_finite(side.integrand, 0.0, kPi / 2, 1e-13).value;
        const double full = integrate_finite(side.integrand, 0.0, 2.0 * kPi, 1e-13).value;
        c.rel(quarter, 0.25 * full, 1e-9, "quarter-period a=" + Check::fmt(a));
    }
    return c;
}

Check criterion_8() {
    Check c;
    for (const char* id : {"A1-gen", "A3-gen", "A5-gen", "A6-gen", "A9-gen", "A10-gen"}) {
        const auto records = sweep(spec(id), 5);
        for (const auto& r : records) {
            c.worst = std::max(c.worst, r.rel_diff);
            c.require(r.pass && r.tol == 1e-8, std::string(id) + " " + r.note);
        }
    }
    auto has = [](const char* id, const char* name, double v) {
        const auto recs = sweep(spec(id), 5);
        return std::any_of(recs.begin(), recs.end(), [&](const VerificationRecord& r) { return r.point[name] == v; });
    };
    c.require(has("A1-gen", "g", 0.57721566490153286061), "A1 original constant");
    c.require(has("A3-gen", "r", 2.0) && has("A5-gen", "r", 2.0) && has("A6-gen", "r", 2.0), "r = 2");
    c.require(has("A9-gen", "p", 3.0), "p = 3");
    c.require(has("A10-gen", "g", 0.91596559417721901505), "A10 original constant");
    return c;
}

Check criterion_9() {
    Check c;
    const double g14 = russell::gamma(0.25);
    const double expected[] = {kPi / 2, g14 * g14 / std::sqrt(2.0 * kPi), 1.0 / (3.0 * std::sqrt(2.0)),
                               kPi / (20.0 * std::sqrt(2.0)), 1.0 / (10.0 * std::sqrt(2.0) * 0.83462684167)};
    const char* ids[] = {"E-R5a", "E-R5b", "E-cn2", "E-cn4", "E-cn5"};
    for (int i = 0; i < 5; ++i) {
        const auto rec = verify(spec(ids[i]), {});
        c.require(rec.pass, std::string(ids[i]) + " " + rec.note);
        c.rel(rec.lhs, expected[i], 1e-9, ids[i]);
    }
    c.rel(ellip_k(0.5), g14 * g14 / (4.0 * std::sqrt(kPi)), 1e-12, "K(1/2)");
    return c;
}

Check criterion_10() {
    Check c;
    for (double r : {0.0, 0.5, 1.0, 2.0, 3.5}) {
        for (double x : {0.1, 0.5, 1.0, 2.0}) {
            const auto q = integrate_semi_infinite([=](double z) { return std::exp(-(r + 1.0) * z + x * std::exp(-z)); },
                                                   1e-12);
            c.require(q.converged, "quadrature converged");
            c.rel(q.value, r1_series(r, x), 1e-10, "r=" + Check::fmt(r) + " x=" + Check::fmt(x));
        }
    }
    return c;
}

Check criterion_11() {
    Check c;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    // Gauss summation at z = 1.
    for (int i = 0; i < 200; ++i) {
        const double a = -2.0 + 5.0 * u01(rng);
        const double b = -2.0 + 5.0 * u01(rng);
        const double cc = a + b + 0.25 + 2.75 * u01(rng);
        const double expected = russell::gamma(cc) * russell::gamma(cc - a - b) * reciprocal_gamma(cc - a) * reciprocal_gamma(cc - b);
        c.rel(gauss_2f1(a, b, cc, 1.0) / expected, 1.0, 1e-10, "Gauss summation");
    }
    // Pochhammer duplication.
    for (int i = 0; i < 200; ++i) {
        const double lambda = 2.0 * u01(rng);
        const unsigned n = static_cast<unsigned>(rng() % 16);
        const double rhs = std::ldexp(1.0, 2 * static_cast<int>(n)) * pochhammer(lambda / 2, n) *
                           pochhammer((lambda + 1) / 2, n);
        c.rel(pochhammer(lambda, 2 * n) / rhs, 1.0, 1e-13, "Pochhammer duplication");
    }
    // Jacobi triple invariants.
    for (double m : {0.1, 0.3, 0.5, 0.9}) {
        const double k2 = 2.0 * ellip_k(m);
        for (int i = 0; i <= 100; ++i) {
            const auto j = jacobi(k2 * i / 100.0, m);
            c.rel(j.sn * j.sn + j.cn * j.cn, 1.0, 1e-11, "sn^2+cn^2");
            c.rel(j.dn * j.dn + m * j.sn * j.sn, 1.0, 1e-11, "dn^2+m sn^2");
        }
    }
    // Kernel series.
    for (double p = -0.9; p <= 0.9 + 1e-12; p += 0.1) {
        for (double x = 0.0; x <= 2.0 * kPi; x += 0.5) {
            c.rel(cosine_kernel_partial_sum(p, x, 400), cosine_kernel(p, x), 1e-8, "cosine kernel");
        }
    }
    for (double y = 0.5; y <= 5.0 + 1e-12; y += 0.25) {
        c.rel(csch_series(y) * std::sinh(y), 1.0, 1e-12, "csch");
        c.rel(sech_series(y) * std::cosh(y), 1.0, 1e-12, "sech");
    }
    return c;
}

Check criterion_12() {
    Check c;
    RunOptions options;
    options.selection = "*";
    options.samples = 5;
    options.include_timestamp = false;
    std::ostringstream first;
    std::ostringstream second;
    const auto a = run(options, first);
    const auto b = run(options, second);
    c.require(a.exit_status == kExitPass, "exit status " + std::to_string(a.exit_status));
    c.require(first.str() == second.str(), "reports differ");
    c.require(a.report.summary.total > 0 && a.report.summary.failed == 0, "failed records");
    for (const auto& [id, v] : a.report.summary.max_rel_diff) c.worst = std::max(c.worst, v);
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
        {"moment recursion vs closed form, 35 cases at 1e-11; quadrature at 1e-10", criterion_1},
        {"R2/R3 family sweeps at 1e-9", criterion_2},
        {"R4 generalization j = 1..8 at 1e-10", criterion_3},
        {"R5 generalization k = 2..6 at 1e-9; k = 2 forms at 1e-10", criterion_4},
        {"R6 family at 1e-9 (1e-7 for x >= 0.9)", criterion_5},
        {"R7 forms mutually agree at 1e-9", criterion_6},
        {"R10 at 1e-9 with quarter-period symmetry", criterion_7},
        {"A-identities at 1e-8 with original constants", criterion_8},
        {"elliptic closed forms at 1e-9; K(1/2) at 1e-12", criterion_9},
        {"R1 quadrature vs series at 1e-10", criterion_10},
        {"function-level property suites", criterion_11},
        {"full run exits 0 and is byte-reproducible", criterion_12},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %2zu  %s  (max rel %.2e)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.worst,
                    c.ok ? "" : "  first failure: ", c.first_failure.c_str());
        failures += c.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
