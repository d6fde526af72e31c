#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bloch/metrics.hpp"
#include "bloch/norms.hpp"
#include "bloch/numeric.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bloch;
using corpus::g_squared_oracle;
using corpus::parseval;

TEST(HardyMean, Examples)
{
    EXPECT_NEAR(hardy_mean(AnalyticMap::constant({0.3, 0.4}), 3.0, 0.7), 0.5, 1e-14);
    EXPECT_NEAR(hardy_mean(AnalyticMap::identity(), 2.0, 0.5), 0.5, 1e-14);
    EXPECT_NEAR(hardy_mean(AnalyticMap::polynomial({1.0, 1.0}), 2.0, 0.5), std::sqrt(1.25), 1e-14);
}

TEST(HardyMean, ParsevalOracle)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> radius(0.0, 0.999);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = corpus::random_coefficients(rng, 12);
        const double r = radius(rng);
        const double m = hardy_mean(AnalyticMap::polynomial(a), 2.0, r);
        EXPECT_LT(std::abs(m * m - parseval(a, r)), 1e-10);
    }
}

TEST(HardyMean, NondecreasingAlongTheLadder)
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = AnalyticMap::polynomial(corpus::random_coefficients(rng, 8));
        for (const double p : {0.5, 1.0, 2.0, 3.7}) {
            double prev = 0.0;
            for (int j = 0; j <= 20; ++j) {
                const double m = hardy_mean(f, p, j == 0 ? 0.0 : SamplingPlan::rung(j));
                EXPECT_GE(m, prev * (1.0 - 1e-9));
                prev = m;
            }
        }
    }
}

TEST(HardyMean, ReportsNonConvergence)
{
    SamplingPlan plan;
    plan.max_angular_nodes = 64;
    // the kernel peaks over an arc of width about 1e-3, far below 64 nodes
    const DiskFunction f = [](const DiskPoint& z) { return 1.0 / (1.0 - 0.999 * z.value()); };
    try {
        (void)hardy_mean(f, 2.0, 0.999, plan);
        FAIL();
    } catch (const HardyMeanNonConvergence& e) {
        EXPECT_TRUE(std::isfinite(e.previous()));
        EXPECT_TRUE(std::isfinite(e.last()));
    }
}

TEST(HardyNorm, Examples)
{
    const Estimate z = hardy_norm(AnalyticMap::identity(), 2.0);
    EXPECT_EQ(z.verdict, Verdict::finite);
    EXPECT_NEAR(z.value, 1.0, 1e-6);
    EXPECT_NEAR(hardy_norm(AnalyticMap::constant(-0.7), 1.5).value, 0.7, 1e-14);
    const Estimate sup = hardy_norm(AnalyticMap::polynomial({0.0, 0.5, 0.25}), INFINITY);
    EXPECT_NEAR(sup.value, 0.75, 1e-5);
}

TEST(HardyNorm, PoissonKernelOracle)
{
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> exponent(0.5, 6.0);
    for (int trial = 0; trial < 10; ++trial) {
        const DiskPoint b(corpus::area_uniform(rng, 0.95));
        const double p = exponent(rng);
        const auto f = AnalyticMap::power_kernel(b, p);
        // M_p(r)^p = (1 - |b|^2) / (1 - |b|^2 r^2)
        const double r = 0.8;
        const double oracle = std::pow((1.0 - std::norm(b.value())) /
                                           (1.0 - std::norm(b.value()) * r * r),
                                       1.0 / p);
        EXPECT_NEAR(hardy_mean(f, p, r), oracle, 1e-9);
        EXPECT_NEAR(hardy_norm(f, p).value, 1.0, 1e-6);
    }
}

TEST(HardyNorm, GrowthGivesInfiniteVerdict)
{
    const DiskFunction pole = [](const DiskPoint& z) { return 1.0 / (1.0 - z.value()); };
    const Estimate e = hardy_norm(pole, 2.0);
    EXPECT_EQ(e.verdict, Verdict::infinite);
    for (std::size_t i = 1; i < e.evidence.size(); ++i) {
        EXPECT_GE(e.evidence[i].value, e.evidence[i - 1].value);
    }
}

TEST(BlochWeight, Examples)
{
    EXPECT_DOUBLE_EQ(bloch_weight(BlochParams(3.0, -2.0), 0.0), 1.0);
    EXPECT_NEAR(bloch_weight(BlochParams(1.0, 0.0), 0.6), 0.64, 1e-15);
    EXPECT_NEAR(bloch_weight(BlochParams(1.0, 1.0), 0.6), 0.9256237456821885, 1e-14);
}

TEST(BlochFunctional, Examples)
{
    const auto classical = BlochParams::classical();
    const auto eta = HarmonicMap::analytic(AnalyticMap::quadratic_extremal());
    EXPECT_NEAR(bloch_functional(eta, classical, DiskPoint(1.0 / std::numbers::sqrt3)), 1.0, 1e-15);
    const auto id = HarmonicMap::analytic(AnalyticMap::identity());
    EXPECT_DOUBLE_EQ(bloch_functional(id, classical, DiskPoint(0.0)), 1.0);
    EXPECT_NEAR(bloch_functional(id, classical, DiskPoint(0.5)), 0.75, 1e-15);
}

TEST(BlochFunctional, MobiusInvariance)
{
    std::mt19937_64 rng(34);
    const auto classical = BlochParams::classical();
    for (int trial = 0; trial < 300; ++trial) {
        const HarmonicMap f = corpus::random_harmonic(rng, 12);
        const DiskPoint a(corpus::area_uniform(rng, 0.9));
        const DiskPoint z(corpus::area_uniform(rng, 0.95));
        const AnalyticMap phi = metrics::mobius(a);
        const Complex g0 = f.g().eval(DiskPoint(phi.eval(DiskPoint(0.0))));
        const HarmonicMap composed(AnalyticMap::composite(f.h(), phi),
                                   AnalyticMap::composite(f.g(), phi, -g0));
        const double lhs = bloch_functional(composed, classical, z);
        const double rhs = bloch_functional(f, classical, DiskPoint(phi.eval(z)));
        EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::max(1.0, rhs));
    }
}

TEST(BlochSeminorm, Examples)
{
    const auto classical = BlochParams::classical();
    const Estimate eta =
        bloch_seminorm(HarmonicMap::analytic(AnalyticMap::quadratic_extremal()), classical);
    EXPECT_EQ(eta.verdict, Verdict::finite);
    EXPECT_NEAR(eta.value, 1.0, 1e-6);
    EXPECT_NEAR(std::abs(eta.argmax), 1.0 / std::numbers::sqrt3, 1e-3);

    const Estimate id = bloch_seminorm(HarmonicMap::analytic(AnalyticMap::identity()), classical);
    EXPECT_DOUBLE_EQ(id.value, 1.0);
    EXPECT_EQ(id.argmax, Complex(0.0));

    EXPECT_DOUBLE_EQ(bloch_norm(HarmonicMap::analytic(AnalyticMap::identity()), classical).value, 1.0);
    EXPECT_DOUBLE_EQ(bloch_norm(HarmonicMap::analytic(AnalyticMap::constant(1.0)), classical).value,
                     1.0);
}

TEST(DiskSupremum, GrowthGivesInfiniteVerdict)
{
    const DiskScalar growing = [](const DiskPoint& z) { return 1.0 / z.gap(); };
    const Estimate e = disk_supremum(growing);
    EXPECT_EQ(e.verdict, Verdict::infinite);
    EXPECT_TRUE(std::isinf(e.value));
}

TEST(DiskSupremum, RefinesOffGridMaximum)
{
    // peak of (1 - |z - c|^2 / 0.01)_+ at an off-grid point c
    const Complex c = std::polar(0.37, 0.123);
    const DiskScalar bump = [&](const DiskPoint& z) {
        return std::max(0.0, 1.0 - std::norm(z.value() - c) / 0.01);
    };
    const Estimate e = disk_supremum(bump);
    EXPECT_NEAR(e.value, 1.0, 1e-6);
    EXPECT_LT(std::abs(e.argmax - c), 1e-3);
}

TEST(GFunction, Examples)
{
    for (const double angle : {0.0, 1.0, 4.0}) {
        EXPECT_NEAR(g_function(AnalyticMap::identity(), angle).value, std::sqrt(0.5), 1e-10);
        EXPECT_NEAR(g_function(AnalyticMap::monomial(2), angle).value, std::sqrt(1.0 / 3.0), 1e-10);
        EXPECT_EQ(g_function(AnalyticMap::constant(0.4), angle).value, 0.0);
    }
}

TEST(GFunction, CoefficientOracle)
{
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = corpus::random_coefficients(rng, 10);
        const double th = angle(rng);
        const double g = g_function(AnalyticMap::polynomial(a), th).value;
        EXPECT_NEAR(g * g, g_squared_oracle(a, th), 1e-8);
    }
}

TEST(GNormCheck, Examples)
{
    const GNormCheck z = g_norm_check(AnalyticMap::identity(), 2.0);
    EXPECT_NEAR(z.hardy, 1.0, 1e-6);
    EXPECT_NEAR(z.g_integral, 0.5, 1e-10);
    const GNormCheck one = g_norm_check(AnalyticMap::constant(1.0), 2.0);
    EXPECT_NEAR(one.hardy, 1.0, 1e-12);
    EXPECT_NEAR(one.g_integral, 1.0, 1e-12);
    for (const int n : {2, 3, 5}) {
        const GNormCheck c = g_norm_check(AnalyticMap::monomial(n), 2.0);
        EXPECT_NEAR(c.hardy, 1.0, 1e-5);
        EXPECT_NEAR(c.g_integral, n * n / ((2.0 * n - 1.0) * (2.0 * n)), 1e-10);
    }
    EXPECT_THROW(g_norm_check(AnalyticMap::mobius(DiskPoint(0.2)), 2.0), std::invalid_argument);
}

TEST(PowerMean, Examples)
{
    EXPECT_TRUE(power_mean_inequality_check(1.0, 1.0, 2.0));
    EXPECT_TRUE(power_mean_inequality_check(1.0, 0.0, 0.3));
    EXPECT_TRUE(power_mean_inequality_check(1.0, 0.0, 7.0));
    EXPECT_TRUE(power_mean_inequality_check(2.0, 3.0, 0.5));
    EXPECT_THROW(power_mean_inequality_check(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST(PowerMean, RandomTriples)
{
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::uniform_real_distribution<double> tau(0.01, 10.0);
    int failures = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        failures += power_mean_inequality_check(value(rng), value(rng), tau(rng)) ? 0 : 1;
    }
    EXPECT_EQ(failures, 0);
}

TEST(SamplingPlan, Validation)
{
    SamplingPlan plan;
    EXPECT_NO_THROW(plan.validate());
    plan.angular_resolution = 4;
    EXPECT_THROW(plan.validate(), std::invalid_argument);
    plan = {};
    plan.angular_resolution = 96;
    EXPECT_THROW(plan.validate(), std::invalid_argument);
    plan = {};
    plan.refinement_tolerance = 0.0;
    EXPECT_THROW(plan.validate(), std::invalid_argument);
}

TEST(Numeric, GaussLegendreIsExactForPolynomials)
{
    for (const int n : {4, 16, 32}) {
        const double v = numeric::gauss_legendre_integrate(
            [](double x) { return std::pow(x, 7) + 3 * x * x; }, 0.0, 2.0, n);
        EXPECT_NEAR(v, 256.0 / 8.0 + 8.0, 1e-12);
    }
    const auto adaptive = numeric::adaptive_integrate([](double x) { return std::exp(-x * x); }, 0.0, 3.0);
    EXPECT_NEAR(adaptive.value, 0.5 * std::sqrt(std::numbers::pi) * std::erf(3.0), 1e-12);
    EXPECT_TRUE(adaptive.converged);
    const auto root = numeric::adaptive_integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-9);
    EXPECT_NEAR(root.value, 2.0 / 3.0, 1e-9);
}

TEST(Numeric, NevilleAndSlope)
{
    const std::vector<double> x = {0.1, 0.2, 0.3, 0.4};
    std::vector<double> y;
    for (const double v : x) {
        y.push_back(2.0 - v + 3.0 * v * v);
    }
    EXPECT_NEAR(numeric::neville_extrapolate(x, y), 2.0, 1e-12);
    const std::vector<double> line = {1.0, 3.0, 5.0, 7.0};
    EXPECT_NEAR(numeric::least_squares_slope(x, line), 20.0, 1e-10);
}
