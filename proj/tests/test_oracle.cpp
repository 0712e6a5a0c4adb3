#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "russell/errors.hpp"
#include "russell/oracle.hpp"
#include "russell/quadrature.hpp"
#include "russell/specfun.hpp"

using namespace russell;
using namespace russell::oracle;

namespace {

double moment_by_quadrature(unsigned r, unsigned p, unsigned q) {
    auto f = [=](double x) { return std::pow(x, r) * std::pow(std::sin(x), p) * std::pow(std::cos(x), q); };
    return integrate_finite(f, 0.0, kPi, 1e-13).value;
}

}  // namespace

TEST(Moments, Examples) {
    EXPECT_NEAR(moment_recursive({0, 1, 0}), 2.0, 1e-14);
    EXPECT_NEAR(moment_recursive({1, 1, 0}), kPi, 1e-14);
    EXPECT_NEAR(moment_recursive({1, 1, 2}), kPi / 3, 1e-14);
    EXPECT_NEAR(lemma1_closed_form(0, 0), kPi, 1e-15);
    EXPECT_NEAR(lemma1_closed_form(1, 0), 2.0 * kPi / 3.0, 1e-15);
    EXPECT_NEAR(lemma1_closed_form(1, 1), 2.0 * kPi / 15.0, 1e-15);
}

TEST(Moments, RecursionMatchesClosedFormGrid) {
    for (unsigned j = 0; j <= 4; ++j) {
        for (unsigned m = 0; m <= 6; ++m) {
            const double closed = lemma1_closed_form(j, m);
            EXPECT_NEAR(moment_recursive({1, 2 * j + 1, 2 * m}), closed, 1e-11 * closed) << j << "," << m;
        }
    }
}

TEST(Moments, RecursionMatchesQuadratureOnRandomTriples) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        const unsigned r = 1 + static_cast<unsigned>(rng() % 3);
        const unsigned p = static_cast<unsigned>(rng() % 6);
        const unsigned q = 2 + static_cast<unsigned>(rng() % 7);
        const double expected = moment_by_quadrature(r, p, q);
        EXPECT_NEAR(moment_recursive({r, p, q}), expected, 1e-10 * std::max(1.0, std::abs(expected)))
            << r << "," << p << "," << q;
    }
}

TEST(Moments, OrderLimit) {
    EXPECT_THROW(moment_recursive({20, 21, 20}), DomainError);
    EXPECT_NO_THROW(moment_recursive({1, 29, 30}));
}

TEST(OddPowerMoment, MatchesQuadratureForAllM) {
    for (unsigned m = 0; m <= 12; ++m) {
        const double expected = moment_by_quadrature(1, 1, m);
        EXPECT_NEAR(odd_power_moment_first_entry(m), expected, 1e-12) << m;
    }
}

TEST(OddPowerMoment, EvenEntriesReduceToLemma1) {
    for (unsigned m = 0; m <= 10; ++m) {
        EXPECT_NEAR(odd_power_moment_first_entry(2 * m), lemma1_closed_form(0, m), 1e-14) << m;
    }
}

TEST(Lemma2, DerivativeIsTheIntegrand) {
    constexpr double h = 1e-5;
    for (unsigned m : {0u, 2u, 4u, 6u, 8u}) {
        for (double t = 0.1; t < 3.1; t += 0.2) {
            const double fd = (lemma2_antiderivative(t + h, m) - lemma2_antiderivative(t - h, m)) / (2.0 * h);
            const double integrand = t * std::sin(t) * std::pow(std::cos(t), m);
            EXPECT_NEAR(fd, integrand, 1e-7) << "m=" << m << " t=" << t;
        }
    }
}

TEST(Lemma2, DefiniteIntegralOverHalfPeriod) {
    for (unsigned m : {0u, 2u, 4u, 6u}) {
        const double definite = lemma2_antiderivative(kPi, m) - lemma2_antiderivative(0.0, m);
        EXPECT_NEAR(definite, lemma1_closed_form(0, m / 2), 1e-12) << m;
    }
    EXPECT_THROW(lemma2_antiderivative(0.5, 3), DomainError);
}

TEST(SeriesSum, Examples) {
    EXPECT_NEAR(series_sum([](std::size_t n) { return std::pow(0.5, static_cast<double>(n)); }), 2.0, 1e-15);
    const double basel = series_sum([](std::size_t n) { return 1.0 / ((n + 1.0) * (n + 1.0) * (n + 1.0) * (n + 1.0)); });
    EXPECT_NEAR(basel, std::pow(kPi, 4) / 90.0, 1e-12);
    EXPECT_THROW(series_sum([](std::size_t) { return 1.0; }), ConvergenceError);
}
