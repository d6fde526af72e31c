#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bloch/compop.hpp"
#include "bloch/metrics.hpp"
#include "corpus.hpp"

using namespace bloch;
using compop::CriterionVerdict;

namespace {

const BlochParams kClassical = BlochParams::classical();

AnalyticMap random_self_map(std::mt19937_64& rng, int degree)
{
    auto c = corpus::random_coefficients(rng, degree);
    double total = 0.0;
    for (const Complex v : c) {
        total += std::abs(v);
    }
    for (Complex& v : c) {
        v *= 0.95 / total;
    }
    return AnalyticMap::polynomial(c);
}

} // namespace

TEST(Compose, Examples)
{
    const HarmonicMap f(AnalyticMap::identity(), AnalyticMap::monomial(2));
    const auto cf = compop::compose(f, AnalyticMap::scaled_identity(0.5));
    EXPECT_NEAR(std::abs(cf.eval(DiskPoint(0.4)) - Complex(0.2 + 0.04)), 0.0, 1e-15);
    EXPECT_EQ(cf.g().eval(DiskPoint(0.0)), Complex(0.0));

    const auto shifted = compop::compose(f, AnalyticMap::mobius(DiskPoint(0.5)));
    EXPECT_LT(std::abs(shifted.g().eval(DiskPoint(0.0))), 1e-15);
    EXPECT_LT(std::abs(shifted.eval(DiskPoint(0.0)) - Complex(0.75)), 1e-15);

    EXPECT_THROW(compop::compose(f, AnalyticMap::polynomial({0.0, 1.5})), compop::InadmissibleSymbol);
}

TEST(Compose, ValuesAndChainRule)
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const HarmonicMap f = corpus::random_harmonic(rng, 6);
        const AnalyticMap phi = random_self_map(rng, 4);
        const auto cf = compop::compose(f, phi);
        const DiskPoint z(corpus::area_uniform(rng, 0.99));
        const DiskPoint w(phi.eval(z));
        EXPECT_LT(std::abs(cf.eval(z) - f.eval(w)), 1e-12);
        EXPECT_NEAR(cf.lambda(z), f.lambda(w) * std::abs(phi.deriv(z)), 1e-12);
    }
}

TEST(SchwarzPick, RatioAtMostOne)
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 500; ++trial) {
        const AnalyticMap phi = random_self_map(rng, 5);
        const DiskPoint z(corpus::area_uniform(rng, 0.999));
        EXPECT_LE(compop::schwarz_pick_ratio(phi, z), 1.0 + 1e-12);
    }
}

TEST(SchwarzPick, EqualityForAutomorphisms)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const DiskPoint a(corpus::area_uniform(rng, 0.9));
        const DiskPoint z(corpus::area_uniform(rng, 0.9));
        EXPECT_NEAR(compop::schwarz_pick_ratio(AnalyticMap::mobius(a), z), 1.0, 1e-10);
        const Complex rotation = std::polar(1.0, 6.0 * z.value().real());
        EXPECT_NEAR(compop::schwarz_pick_ratio(AnalyticMap::monomial(1, rotation), z), 1.0, 1e-12);
    }
    EXPECT_NEAR(compop::schwarz_pick_ratio(AnalyticMap::scaled_identity(0.5), DiskPoint(0.0)), 0.5,
                1e-15);
}

TEST(Criterion, HalfIdentityExample)
{
    const auto report =
        compop::bloch_to_hardy_criterion(AnalyticMap::scaled_identity(0.5), kClassical, 2.0);
    EXPECT_EQ(report.verdict, CriterionVerdict::convergent);
    ASSERT_TRUE(report.estimate.has_value());
    EXPECT_NEAR(*report.estimate, 0.13732653608351292, 1e-10);
    EXPECT_EQ(report.evidence.size(), 21u);
    EXPECT_EQ(report.diagnostics.note, "bounded (=compact)");
}

TEST(Criterion, ExponentEnters)
{
    const auto report =
        compop::bloch_to_hardy_criterion(AnalyticMap::scaled_identity(0.5), kClassical, 4.0);
    EXPECT_EQ(report.verdict, CriterionVerdict::convergent);
    EXPECT_NEAR(*report.estimate, 0.018858577512696593, 1e-11);
}

TEST(Criterion, ScaledIdentitiesConverge)
{
    const std::vector<std::pair<double, double>> cases = {
        {0.5, 0.13732653608351371}, {0.9, 0.6624987703124491}, {0.99, 1.3100929441193119}};
    for (const auto& [c, expected] : cases) {
        const auto report =
            compop::bloch_to_hardy_criterion(AnalyticMap::scaled_identity(c), kClassical, 2.0);
        EXPECT_EQ(report.verdict, CriterionVerdict::convergent) << c;
        EXPECT_NEAR(*report.estimate, expected, 1e-8 * expected) << c;
    }
}

TEST(Criterion, IdentityDiverges)
{
    const auto report = compop::bloch_to_hardy_criterion(AnalyticMap::identity(), kClassical, 2.0);
    EXPECT_EQ(report.verdict, CriterionVerdict::divergent);
    EXPECT_FALSE(report.estimate.has_value());
    EXPECT_NEAR(report.diagnostics.growth_slope, 0.25, 0.025);
    EXPECT_GT(report.diagnostics.slope_margin, 1.0);
    EXPECT_GT(report.diagnostics.stabilization_margin, 1.0);
    for (std::size_t i = 1; i < report.evidence.size(); ++i) {
        EXPECT_GT(report.evidence[i].value, report.evidence[i - 1].value);
    }
}

TEST(Criterion, AutomorphismsDiverge)
{
    for (const double a : {0.3, -0.6}) {
        const auto report =
            compop::bloch_to_hardy_criterion(AnalyticMap::mobius(DiskPoint(a, 0.1)), kClassical, 2.0);
        EXPECT_EQ(report.verdict, CriterionVerdict::divergent) << a;
    }
}

TEST(Criterion, ConstantIsZero)
{
    const auto report =
        compop::bloch_to_hardy_criterion(AnalyticMap::constant(0.3), kClassical, 2.0);
    EXPECT_EQ(report.verdict, CriterionVerdict::convergent);
    EXPECT_EQ(*report.estimate, 0.0);
}

TEST(Criterion, EvidenceIsMonotone)
{
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 5; ++trial) {
        const auto report =
            compop::bloch_to_hardy_criterion(random_self_map(rng, 3), kClassical, 2.0);
        EXPECT_EQ(report.verdict, CriterionVerdict::convergent);
        for (std::size_t i = 1; i < report.evidence.size(); ++i) {
            EXPECT_GE(report.evidence[i].value, report.evidence[i - 1].value);
            EXPECT_GT(report.evidence[i].parameter, report.evidence[i - 1].parameter);
        }
    }
}

TEST(Criterion, Rejections)
{
    EXPECT_THROW(compop::bloch_to_hardy_criterion(AnalyticMap::polynomial({0.0, 1.2}), kClassical, 2.0),
                 compop::InadmissibleSymbol);
    EXPECT_THROW(compop::bloch_to_hardy_criterion(AnalyticMap::identity(), kClassical, 0.0),
                 compop::ParameterRange);
}

TEST(HardyToBloch, QExamples)
{
    EXPECT_NEAR(compop::hardy_to_bloch_q(AnalyticMap::identity(), kClassical, 2.0, DiskPoint(0.99)),
                7.088812050083359, 1e-12);
    EXPECT_NEAR(compop::hardy_to_bloch_q(AnalyticMap::scaled_identity(0.5), kClassical, 2.0,
                                         DiskPoint(0.0)),
                0.5, 1e-15);
}

TEST(HardyToBloch, RangeChecks)
{
    EXPECT_THROW(compop::require_hardy_to_bloch_range(BlochParams(0.5, 0.0), 2.0),
                 compop::ParameterRange);
    EXPECT_THROW(compop::require_hardy_to_bloch_range(BlochParams(1.0, 1.0), 2.0),
                 compop::ParameterRange);
    EXPECT_THROW(compop::require_hardy_to_bloch_range(kClassical, 1.0), compop::ParameterRange);
    EXPECT_THROW(compop::require_hardy_to_bloch_range(
                     BlochParams(1.0, 0.0, Majorant::power(0.5)), 2.0),
                 compop::ParameterRange);
    EXPECT_NO_THROW(compop::require_hardy_to_bloch_range(BlochParams(1.0, -1.0), 2.0));
    EXPECT_NO_THROW(compop::require_hardy_to_bloch_range(BlochParams(2.0, 3.0), 1.5));
    const Majorant concave(MajorantSpec::custom({{0.0, 0.0}, {1.0, 2.0}, {10.0, 4.0}}));
    EXPECT_NO_THROW(compop::require_hardy_to_bloch_range(BlochParams(1.0, 0.0, concave), 2.0));
}

TEST(HardyToBloch, VerdictExamples)
{
    const auto id = compop::hardy_to_bloch_verdict(AnalyticMap::identity(), kClassical, 2.0);
    EXPECT_EQ(id.boundedness.verdict, CriterionVerdict::unbounded);
    EXPECT_EQ(id.compactness.verdict, CriterionVerdict::non_compact);

    const auto half =
        compop::hardy_to_bloch_verdict(AnalyticMap::scaled_identity(0.5), kClassical, 2.0);
    EXPECT_EQ(half.boundedness.verdict, CriterionVerdict::bounded);
    EXPECT_NEAR(*half.boundedness.estimate, 0.5, 1e-9);
    EXPECT_EQ(half.compactness.verdict, CriterionVerdict::vacuously_compact);
    EXPECT_NEAR(half.sup_abs_phi, 0.5, 1e-9);

    const auto c = compop::hardy_to_bloch_verdict(AnalyticMap::constant(0.2), kClassical, 2.0);
    EXPECT_EQ(c.boundedness.verdict, CriterionVerdict::bounded);
    EXPECT_EQ(c.compactness.verdict, CriterionVerdict::vacuously_compact);
}

TEST(HardyToBloch, ExponentOfTheWeightDecides)
{
    // alpha = 1 + 1/p balances the boundary blow-up exactly; larger alpha kills it
    const auto balanced =
        compop::hardy_to_bloch_verdict(AnalyticMap::identity(), BlochParams(1.5, 0.0), 2.0);
    EXPECT_EQ(balanced.boundedness.verdict, CriterionVerdict::bounded);
    EXPECT_NEAR(*balanced.boundedness.estimate, 1.0, 1e-6);
    EXPECT_EQ(balanced.compactness.verdict, CriterionVerdict::non_compact);

    const auto heavy =
        compop::hardy_to_bloch_verdict(AnalyticMap::identity(), BlochParams(2.0, 0.0), 2.0);
    EXPECT_EQ(heavy.boundedness.verdict, CriterionVerdict::bounded);
    EXPECT_EQ(heavy.compactness.verdict, CriterionVerdict::compact);
}

TEST(TestFunction, UnitHardyNorm)
{
    EXPECT_NEAR(std::abs(compop::test_function(DiskPoint(0.9), 2.0).eval(DiskPoint(0.9))),
                2.2941573387056177, 1e-12);
    for (const double p : {1.5, 2.0, 3.5}) {
        for (const Complex b : {Complex(0.0), Complex(0.6, 0.3), Complex(-0.8)}) {
            const Estimate e = hardy_norm(compop::test_function(DiskPoint(b), p), p);
            EXPECT_EQ(e.verdict, Verdict::finite);
            EXPECT_NEAR(e.value, 1.0, 1e-6) << p << " " << b;
        }
    }
}

TEST(GrowthBound, Examples)
{
    const auto id = HarmonicMap::analytic(AnalyticMap::identity());
    const auto at_half = compop::growth_bound_check(id, 2.0, DiskPoint(0.5), 1.0, 0.0);
    EXPECT_DOUBLE_EQ(at_half.lhs, 1.0);
    EXPECT_NEAR(at_half.rhs, 2.0 / std::pow(0.75, 1.5), 1e-14);
    EXPECT_TRUE(at_half.ok);
    EXPECT_THROW(compop::growth_bound_check(id, 1.0, DiskPoint(0.5), 1.0, 0.0),
                 compop::ParameterRange);

    const auto planned = compop::growth_bound_check(id, 2.0, DiskPoint(0.5));
    EXPECT_NEAR(planned.rhs, at_half.rhs, 1e-6);
}

TEST(GrowthBound, HoldsForRandomMaps)
{
    std::mt19937_64 rng(55);
    for (const double p : {1.5, 2.0, 4.0}) {
        for (int trial = 0; trial < 10; ++trial) {
            const HarmonicMap f = corpus::random_harmonic(rng, 6);
            const double nh = hardy_norm(f.h(), p).value;
            const double ng = hardy_norm(f.g(), p).value;
            for (int k = 0; k < 50; ++k) {
                const DiskPoint z(corpus::area_uniform(rng, 0.999));
                EXPECT_TRUE(compop::growth_bound_check(f, p, z, nh, ng).ok);
            }
        }
    }
}

TEST(Probe, Examples)
{
    const double r = 0.3;
    const double eps = 0.5;
    const auto id = compop::bounded_below_probe(AnalyticMap::identity(), r, eps, 200, 1);
    EXPECT_DOUBLE_EQ(id.fraction, 1.0);
    ASSERT_TRUE(id.implied_constant.has_value());
    EXPECT_NEAR(*id.implied_constant, (1.0 - 1.5 * std::numbers::sqrt3 * r) * eps, 1e-15);

    const auto mob =
        compop::bounded_below_probe(AnalyticMap::mobius(DiskPoint(0.3, -0.2)), r, eps, 200, 2);
    EXPECT_DOUBLE_EQ(mob.fraction, 1.0);
    EXPECT_GT(mob.min_best_ratio, eps);

    const auto c = compop::bounded_below_probe(AnalyticMap::constant(0.1), r, eps, 200, 3);
    EXPECT_LT(c.fraction, 1.0);
    EXPECT_FALSE(c.implied_constant.has_value());
    EXPECT_FALSE(c.note.empty());
}

TEST(Probe, SameSeedSameResult)
{
    const auto phi = AnalyticMap::polynomial({0.1, 0.6, 0.2});
    const auto a = compop::bounded_below_probe(phi, 0.2, 0.3, 300, 17);
    const auto b = compop::bounded_below_probe(phi, 0.2, 0.3, 300, 17);
    EXPECT_EQ(a.satisfied, b.satisfied);
    EXPECT_EQ(a.min_best_ratio, b.min_best_ratio);
    EXPECT_EQ(a.samples, 300u);
}

TEST(Probe, RangeChecks)
{
    const auto id = AnalyticMap::identity();
    EXPECT_THROW(compop::bounded_below_probe(id, compop::kProbeRadiusLimit, 0.5, 10, 1),
                 compop::ParameterRange);
    EXPECT_THROW(compop::bounded_below_probe(id, 0.0, 0.5, 10, 1), compop::ParameterRange);
    EXPECT_THROW(compop::bounded_below_probe(id, 0.3, 0.0, 10, 1), compop::ParameterRange);
    EXPECT_THROW(compop::bounded_below_probe(id, 0.3, 0.5, 0, 1), compop::ParameterRange);
}

TEST(Doubling, Limits)
{
    struct Case {
        BlochParams params;
        double at_zero;
        double at_one;
    };
    const std::vector<Case> cases = {
        {BlochParams(1.0, 0.0), 2.0, 1.3333333333333333},
        {BlochParams(2.0, 1.0), 4.0, 1.3806030353384058},
        {BlochParams(1.0, -1.0), 2.0, 1.7169094299357079},
        {BlochParams(1.0, 0.0, Majorant::power(0.5)), std::sqrt(2.0), 1.1547005383792515},
    };
    for (const auto& c : cases) {
        const auto limits = compop::doubling_limits(c.params);
        EXPECT_NEAR(limits.at_zero, c.at_zero, 1e-4 * c.at_zero);
        EXPECT_NEAR(limits.at_one, c.at_one, 1e-4 * c.at_one);
        EXPECT_TRUE(std::isfinite(limits.sup_ratio));
        EXPECT_GE(limits.sup_ratio, std::max(limits.at_one, 1.0) - 1e-9);
    }
}

TEST(Doubling, RatioExamples)
{
    EXPECT_NEAR(compop::doubling_ratio(kClassical, 1.0), 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(compop::doubling_ratio(kClassical, 0.5), 0.75 / (7.0 / 16.0), 1e-14);
    EXPECT_THROW(compop::doubling_ratio(kClassical, 0.0), std::invalid_argument);
    EXPECT_TRUE(std::isfinite(compop::doubling_ratio(kClassical, 1e-300)));
}
