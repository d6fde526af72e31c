#include "bloch/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bloch/metrics.hpp"
#include "bloch/parallel.hpp"

namespace bloch::extremal {

namespace {

constexpr double kRootResidual = 1e-12;
constexpr double kMaxRadius = 1.0 - 1e-15;

void require_alpha(double alpha)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be > 0");
    }
}

} // namespace

double a0(double alpha)
{
    require_alpha(alpha);
    return 1.0 / std::sqrt(1.0 + 2.0 * alpha);
}

double psi(double x, double alpha)
{
    require_alpha(alpha);
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("psi is defined on [0, 1]");
    }
    const double s = 1.0 + 2.0 * alpha;
    const double scale = std::sqrt(s) * std::pow(s / (2.0 * alpha), alpha);
    return scale * x * std::pow((1.0 - x) * (1.0 + x), alpha);
}

ExtremalSolution m_root(double r0, double alpha)
{
    require_alpha(alpha);
    if (!(r0 > 0.0 && r0 <= 1.0)) {
        throw std::invalid_argument("m_root requires r0 in (0, 1]");
    }
    ExtremalSolution out;
    out.alpha = alpha;
    out.r0 = r0;
    out.a0 = a0(alpha);
    if (r0 == 1.0) {
        out.m = out.a0;
        out.residual = std::abs(psi(out.m, alpha) - r0);
        return out;
    }

    double lo = 0.0;
    double hi = out.a0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (psi(mid, alpha) < r0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double res_lo = std::abs(psi(lo, alpha) - r0);
    const double res_hi = std::abs(psi(hi, alpha) - r0);
    out.m = res_lo <= res_hi ? lo : hi;
    out.residual = std::min(res_lo, res_hi);
    if (out.residual > kRootResidual) {
        throw std::runtime_error("bisection failed to reach the residual target");
    }
    return out;
}

std::optional<double> lower_derivative_bound(double r0, double alpha, const DiskPoint& z)
{
    const auto sol = m_root(r0, alpha);
    const double m = sol.m;
    const double radius = (sol.a0 + m) / (1.0 + sol.a0 * m);
    const double t = z.abs();
    if (t > radius) {
        return std::nullopt;
    }
    return r0 * (m - t) / (m * std::pow(1.0 - m * t, 1.0 + 2.0 * alpha));
}

std::optional<double> upper_derivative_bound(double r0, double alpha, const DiskPoint& z)
{
    const auto sol = m_root(r0, alpha);
    const double m = sol.m;
    const double radius = (sol.a0 - m) / (1.0 - sol.a0 * m);
    const double t = z.abs();
    if (t > radius) {
        return std::nullopt;
    }
    return r0 * (m + t) / (m * std::pow(1.0 + m * t, 1.0 + 2.0 * alpha));
}

Complex f_beta(double beta, const DiskPoint& z)
{
    return AnalyticMap::antiderivative_extremal(beta).eval(z);
}

double lipschitz_ratio(const HarmonicMap& f, const DiskPoint& z1, const DiskPoint& z2,
                       const BlochParams& params)
{
    const double distance = metrics::rho(z1, z2);
    if (distance < 1e-14) {
        throw DegeneratePair("pseudo-hyperbolic distance below 1e-14");
    }
    return std::abs(bloch_functional(f, params, z1) - bloch_functional(f, params, z2)) / distance;
}

LipschitzScan lipschitz_scan(const HarmonicMap& f, std::size_t pairs, std::uint64_t seed,
                             const SamplingPlan& plan)
{
    const BlochParams params = BlochParams::classical();
    const Estimate semi = bloch_seminorm(f, params, plan);
    if (semi.verdict == Verdict::infinite) {
        throw ScanError(ScanError::Reason::infinite_seminorm, "Bloch seminorm is infinite");
    }
    if (semi.verdict == Verdict::inconclusive) {
        throw ScanError(ScanError::Reason::inconclusive_seminorm, "Bloch seminorm is inconclusive");
    }
    if (!(semi.value > 1e-14)) {
        throw ScanError(ScanError::Reason::zero_seminorm, "Bloch seminorm is zero");
    }

    std::vector<std::pair<Complex, Complex>> points;
    points.reserve(pairs + 1024);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto area_uniform = [&] {
        const double r = std::min(std::sqrt(unit(rng)), kMaxRadius);
        return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
    };
    for (std::size_t i = 0; i < pairs; ++i) {
        const Complex a = area_uniform();
        const Complex b = area_uniform();
        points.emplace_back(a, b);
    }

    // radial pairs along 16 rays, including the origin
    constexpr int kRays = 16;
    for (int ray = 0; ray < kRays; ++ray) {
        const double theta = 2.0 * std::numbers::pi * ray / kRays;
        for (int j = 1; j <= plan.ladder_rungs; ++j) {
            const double r = SamplingPlan::rung(j);
            points.emplace_back(0.0, std::polar(r, theta));
            points.emplace_back(std::polar(SamplingPlan::rung(j - 1), theta),
                                std::polar(r, theta));
            // near-boundary tangential neighbour
            const double offset = std::ldexp(1.0, -j);
            points.emplace_back(std::polar(r, theta), std::polar(r, theta + offset));
        }
    }
    // pairs anchored at the located maximiser
    const Complex peak = semi.argmax;
    for (int k = 0; k < 64; ++k) {
        const double scale = std::ldexp(1.0, -(k % 16));
        const double theta = 2.0 * std::numbers::pi * k / 64.0;
        const Complex other = peak + 0.5 * scale * (1.0 - std::abs(peak)) * std::polar(1.0, theta);
        if (DiskPoint::contains(other)) {
            points.emplace_back(peak, other);
        }
    }

    std::vector<double> ratios(points.size(), -1.0);
    parallel_for(points.size(), [&](std::size_t i) {
        const DiskPoint z1(points[i].first);
        const DiskPoint z2(points[i].second);
        if (metrics::rho(z1, z2) < 1e-14) {
            return;
        }
        ratios[i] = lipschitz_ratio(f, z1, z2, params);
    });

    LipschitzScan out;
    out.seminorm = semi.value;
    out.cap = kSharpConstant * semi.value;
    std::size_t best = points.size();
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (ratios[i] < 0.0) {
            continue;
        }
        ++out.pairs_evaluated;
        if (best == points.size() || ratios[i] > ratios[best]) {
            best = i;
        }
    }
    if (best < points.size()) {
        out.max_ratio = ratios[best];
        out.argmax_z1 = points[best].first;
        out.argmax_z2 = points[best].second;
    }
    out.within_cap = out.max_ratio <= out.cap * (1.0 + kScanCapTolerance);
    return out;
}

SharpnessWitness sharpness_witness(double epsilon)
{
    if (!(epsilon > 0.0 && epsilon <= kSharpConstant)) {
        throw std::invalid_argument("epsilon must lie in (0, 3 sqrt(3) / 2]");
    }
    SharpnessWitness out;
    out.epsilon = epsilon;
    out.m_star = std::min(a0(1.0), std::sqrt(2.0 * std::numbers::sqrt3 * epsilon) / 3.0);
    // on the branch m* = a0 the product rounds below 1, and m_1 is a double root there
    out.beta = out.m_star == a0(1.0)
                   ? 1.0
                   : std::min(1.0, kSharpConstant * out.m_star * (1.0 - out.m_star * out.m_star));

    const AnalyticMap fb = AnalyticMap::antiderivative_extremal(out.beta);
    out.m_root = std::get<kind::AntiderivativeExtremal>(fb.kind()).m;
    out.z1 = out.m_root;
    out.z2 = 0.0;
    out.achieved_ratio =
        lipschitz_ratio(HarmonicMap::analytic(fb), DiskPoint(out.z1), DiskPoint(out.z2));
    out.target = kSharpConstant - epsilon;
    out.satisfied = out.achieved_ratio >= out.target - 1e-12;
    return out;
}

} // namespace bloch::extremal
