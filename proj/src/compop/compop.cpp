#include "bloch/compop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bloch/metrics.hpp"
#include "bloch/numeric.hpp"
#include "bloch/parallel.hpp"

namespace bloch::compop {

namespace {

constexpr int kFirstTruncation = 4;
constexpr int kLastTruncation = 24;
constexpr std::size_t kMaxCriterionAngles = 4096;
constexpr int kFitWindow = 11;
constexpr double kVacuousGap = 1e-6;
constexpr int kBandDepth = 40;
constexpr double kPlateauTolerance = 1e-3;
constexpr double kMaxSampleRadius = 1.0 - 1e-12;
// 1 - |phi|^2 loses digits as |phi| -> 1, so panels cannot be resolved much below 1e-9
constexpr double kPanelTolerance = 1e-9;
constexpr int kPanelDepth = 12;

void require_admissible(const AnalyticMap& phi)
{
    if (!phi.is_self_map()) {
        throw InadmissibleSymbol("symbol of kind '" + std::string(phi.kind_name()) +
                                 "' does not map the disk into itself");
    }
}

double relative_change(double now, double before)
{
    if (now == before) {
        return 0.0;
    }
    return std::abs(now - before) / std::max(std::abs(now), std::abs(before));
}

/// Largest relative change over the last three steps of the sequence.
double last_changes(const std::vector<double>& v)
{
    double worst = 0.0;
    for (std::size_t i = v.size() - 3; i < v.size(); ++i) {
        worst = std::max(worst, relative_change(v[i], v[i - 1]));
    }
    return worst;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = std::min<std::size_t>(kFitWindow, x.size());
    return numeric::least_squares_slope(std::span(x).last(n), std::span(y).last(n));
}

/// Slope and stabilization of a ladder, and the resulting margin.
struct LadderStats {
    double slope = 0.0;
    double change = 0.0;
};

LadderStats ladder_stats(const std::vector<double>& x, const std::vector<double>& y)
{
    return {fit_slope(x, y), last_changes(y)};
}

double gap_of(Complex w)
{
    const double s = std::abs(w);
    return (1.0 - s) * (1.0 + s);
}

} // namespace

HarmonicMap compose(const HarmonicMap& f, const AnalyticMap& phi)
{
    require_admissible(phi);
    const Complex g_at = f.g().eval(DiskPoint(phi.eval(DiskPoint(0.0))));
    AnalyticMap h = AnalyticMap::composite(f.h(), phi, std::conj(g_at));
    AnalyticMap g = AnalyticMap::composite(f.g(), phi, -g_at);
    return HarmonicMap(std::move(h), std::move(g));
}

double schwarz_pick_ratio(const AnalyticMap& phi, const DiskPoint& z)
{
    const Complex w = phi.eval(z);
    return z.gap() * std::abs(phi.deriv(z)) / gap_of(w);
}

std::string to_string(CriterionVerdict v)
{
    switch (v) {
    case CriterionVerdict::convergent:
        return "convergent";
    case CriterionVerdict::divergent:
        return "divergent";
    case CriterionVerdict::bounded:
        return "bounded";
    case CriterionVerdict::unbounded:
        return "unbounded";
    case CriterionVerdict::compact:
        return "compact";
    case CriterionVerdict::non_compact:
        return "non-compact";
    case CriterionVerdict::vacuously_compact:
        return "vacuously-compact";
    case CriterionVerdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

CriterionReport bloch_to_hardy_criterion(const AnalyticMap& phi, const BlochParams& params,
                                         double p, const SamplingPlan& plan)
{
    plan.validate();
    require_admissible(phi);
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw ParameterRange("p must be a finite positive number");
    }

    constexpr int kRungs = kLastTruncation - kFirstTruncation + 1;
    auto integrand = [&](double r, double theta) {
        const DiskPoint z = polar_point(r, theta);
        const double d = std::abs(phi.deriv(z));
        if (d == 0.0) {
            return 0.0;
        }
        const double w = params.weight_of_gap(gap_of(phi.eval(z)));
        return d * d * (1.0 - r) / (w * w);
    };

    // cumulative inner integrals on [0, R_k] for one angle
    std::vector<std::vector<double>> inner;
    std::vector<std::size_t> node_counts;
    auto fill_angle = [&](std::size_t slot, double theta) {
        auto g = [&](double r) { return integrand(r, theta); };
        std::vector<double> cumulative(kRungs);
        std::size_t evals = 0;
        double total = 0.0;
        double lo = 0.0;
        for (int k = kFirstTruncation; k <= kLastTruncation; ++k) {
            const double hi = SamplingPlan::rung(k);
            const auto piece =
                numeric::adaptive_integrate(g, lo, hi, kPanelTolerance, 1e-300, kPanelDepth);
            total += piece.value;
            evals += piece.evaluations;
            cumulative[k - kFirstTruncation] = total;
            lo = hi;
        }
        inner[slot] = std::move(cumulative);
        node_counts[slot] = evals;
    };

    std::size_t n = plan.angular_resolution;
    inner.assign(n, {});
    node_counts.assign(n, 0);
    parallel_for(n, [&](std::size_t i) { fill_angle(i, 2.0 * std::numbers::pi * i / n); });

    auto angular_means = [&] {
        std::vector<double> means(kRungs, 0.0);
        for (int k = 0; k < kRungs; ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < inner.size(); ++i) {
                sum += std::pow(inner[i][k], 0.5 * p);
            }
            means[k] = sum / static_cast<double>(inner.size());
        }
        return means;
    };

    std::vector<double> means = angular_means();
    CriterionReport out;
    while (n < kMaxCriterionAngles) {
        // interleave the new odd nodes so slot i keeps angle 2 pi i / (2n)
        std::vector<std::vector<double>> fresh(n);
        std::vector<std::size_t> fresh_counts(n);
        std::swap(inner, fresh);
        std::swap(node_counts, fresh_counts);
        inner.assign(2 * n, {});
        node_counts.assign(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            inner[2 * i] = std::move(fresh[i]);
            node_counts[2 * i] = fresh_counts[i];
        }
        parallel_for(n, [&](std::size_t i) {
            fill_angle(2 * i + 1, 2.0 * std::numbers::pi * (2 * i + 1) / (2 * n));
        });
        n *= 2;
        const std::vector<double> next = angular_means();
        const double change = relative_change(next.back(), means.back());
        means = next;
        if (change <= plan.refinement_tolerance) {
            break;
        }
    }
    if (n >= kMaxCriterionAngles) {
        out.diagnostics.note = "angular refinement stopped at the node cap; ";
    }

    std::vector<double> x(kRungs);
    for (int k = 0; k < kRungs; ++k) {
        const double truncation = SamplingPlan::rung(k + kFirstTruncation);
        x[k] = (k + kFirstTruncation) * std::numbers::ln2;
        out.evidence.push_back({truncation, means[k]});
    }
    for (const std::size_t c : node_counts) {
        out.diagnostics.quadrature_nodes += c;
    }
    out.diagnostics.angular_nodes = n;

    const auto stats = ladder_stats(x, means);
    out.diagnostics.growth_slope = stats.slope;
    out.diagnostics.last_relative_change = stats.change;
    out.diagnostics.slope_margin = stats.slope / kGrowthSlopeThreshold;

    const bool all_zero = std::all_of(means.begin(), means.end(), [](double v) { return v == 0.0; });
    if (all_zero || stats.change < kStabilizationTolerance) {
        out.verdict = CriterionVerdict::convergent;
        out.estimate = means.back();
        out.diagnostics.stabilization_margin =
            stats.change == 0.0 ? std::numeric_limits<double>::infinity()
                                : kStabilizationTolerance / stats.change;
        out.diagnostics.note += "bounded (=compact)";
    } else if (stats.slope > kGrowthSlopeThreshold) {
        out.verdict = CriterionVerdict::divergent;
        out.diagnostics.stabilization_margin = stats.change / kStabilizationTolerance;
        out.diagnostics.note += "unbounded (not compact)";
    } else {
        out.verdict = CriterionVerdict::inconclusive;
        out.diagnostics.note += "neither stabilized nor growing";
    }
    return out;
}

void require_hardy_to_bloch_range(const BlochParams& params, double p)
{
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw ParameterRange("p must be a finite number > 1");
    }
    const bool ok = (params.alpha() == 1.0 && params.beta() <= 0.0) || params.alpha() > 1.0;
    if (!ok) {
        throw ParameterRange("requires alpha = 1 with beta <= 0, or alpha > 1");
    }
    if (!params.omega().has_finite_slope_at_zero()) {
        throw ParameterRange("majorant must have a finite limit of omega(t)/t at 0");
    }
}

double hardy_to_bloch_q(const AnalyticMap& phi, const BlochParams& params, double p,
                        const DiskPoint& z)
{
    require_admissible(phi);
    require_hardy_to_bloch_range(params, p);
    const double d = std::abs(phi.deriv(z));
    if (d == 0.0) {
        return 0.0;
    }
    return d * params.weight_of_gap(z.gap()) / std::pow(gap_of(phi.eval(z)), 1.0 + 1.0 / p);
}

HardyToBlochReport hardy_to_bloch_verdict(const AnalyticMap& phi, const BlochParams& params,
                                          double p, const SamplingPlan& plan)
{
    plan.validate();
    require_admissible(phi);
    require_hardy_to_bloch_range(params, p);

    auto q = [&](const DiskPoint& z) {
        const double d = std::abs(phi.deriv(z));
        if (d == 0.0) {
            return 0.0;
        }
        return d * params.weight_of_gap(z.gap()) / std::pow(gap_of(phi.eval(z)), 1.0 + 1.0 / p);
    };

    HardyToBlochReport out;

    // boundedness
    const Estimate sup = disk_supremum(q, plan);
    CriterionReport& bounded = out.boundedness;
    bounded.evidence = sup.evidence;
    bounded.diagnostics.quadrature_nodes = sup.evaluations;
    bounded.diagnostics.angular_nodes = static_cast<std::size_t>(plan.sup_angles);
    {
        std::vector<double> x;
        std::vector<double> running;
        double best = 0.0;
        std::vector<double> raw;
        for (const auto& e : sup.evidence) {
            x.push_back(-std::log1p(-e.parameter));
            raw.push_back(e.value);
            best = std::max(best, e.value);
            running.push_back(best);
        }
        const double slope = fit_slope(x, raw);
        const double raw_change = last_changes(raw);
        const double run_change = last_changes(running);
        bounded.diagnostics.growth_slope = slope;
        bounded.diagnostics.slope_margin = slope / kGrowthSlopeThreshold;
        bounded.diagnostics.last_relative_change = run_change;
        if (sup.verdict == Verdict::infinite ||
            (slope > kGrowthSlopeThreshold && raw_change > kStabilizationTolerance)) {
            bounded.verdict = CriterionVerdict::unbounded;
            bounded.diagnostics.stabilization_margin = raw_change / kStabilizationTolerance;
            bounded.diagnostics.note = "Q grows along the radial ladder";
        } else if (sup.verdict == Verdict::finite && run_change < kStabilizationTolerance) {
            bounded.verdict = CriterionVerdict::bounded;
            bounded.estimate = sup.value;
            bounded.diagnostics.stabilization_margin =
                run_change == 0.0 ? std::numeric_limits<double>::infinity()
                                  : kStabilizationTolerance / run_change;
        } else {
            bounded.verdict = CriterionVerdict::inconclusive;
            bounded.diagnostics.note = "ladder maxima neither stabilized nor growing";
        }
    }

    // compactness: band maxima of Q over s = |phi(z)| > 1 - 2^-k
    const int depth = std::max(plan.ladder_rungs, kBandDepth);
    const int radii = 4 * depth;
    const int angles = plan.sup_angles;
    std::vector<double> abs_phi(static_cast<std::size_t>(radii + 1) * angles);
    std::vector<double> q_values(abs_phi.size());
    parallel_for(static_cast<std::size_t>(radii + 1), [&](std::size_t i) {
        const double r = i == 0 ? 0.0 : std::min(1.0 - std::exp2(-0.25 * i), kMaxSampleRadius);
        for (int a = 0; a < angles; ++a) {
            const DiskPoint z = polar_point(r, 2.0 * std::numbers::pi * a / angles);
            const std::size_t slot = i * angles + a;
            abs_phi[slot] = std::abs(phi.eval(z));
            q_values[slot] = q(z);
        }
    });
    double sup_phi = 0.0;
    for (const double s : abs_phi) {
        sup_phi = std::max(sup_phi, s);
    }
    out.sup_abs_phi = sup_phi;

    CriterionReport& compact = out.compactness;
    compact.diagnostics.quadrature_nodes = abs_phi.size();
    compact.diagnostics.angular_nodes = static_cast<std::size_t>(angles);
    if (sup_phi <= 1.0 - kVacuousGap) {
        compact.verdict = CriterionVerdict::vacuously_compact;
        compact.estimate = 0.0;
        compact.diagnostics.note = "sup |phi| stays below 1 - 1e-6; the boundary limit is vacuous";
        return out;
    }

    std::vector<double> bands;
    for (int k = 1; k <= depth; ++k) {
        const double threshold = 1.0 - std::exp2(-k);
        double best = -1.0;
        for (std::size_t i = 0; i < abs_phi.size(); ++i) {
            if (abs_phi[i] > threshold) {
                best = std::max(best, q_values[i]);
            }
        }
        if (best < 0.0) {
            break;
        }
        bands.push_back(best);
        compact.evidence.push_back({threshold, best});
    }

    if (bounded.verdict == CriterionVerdict::unbounded) {
        compact.verdict = CriterionVerdict::non_compact;
        compact.diagnostics.note = "unbounded operators are not compact";
        return out;
    }
    if (bands.size() < 6) {
        compact.verdict = CriterionVerdict::inconclusive;
        compact.diagnostics.note = "too few bands reach the boundary";
        return out;
    }

    const double peak = *std::max_element(bands.begin(), bands.end());
    const double last = bands.back();
    std::vector<double> tail(bands.end() - 5, bands.end());
    double tail_change = 0.0;
    bool decreasing = true;
    for (std::size_t i = 1; i < tail.size(); ++i) {
        tail_change = std::max(tail_change, relative_change(tail[i], tail[i - 1]));
        decreasing = decreasing && tail[i] < tail[i - 1];
    }
    compact.diagnostics.last_relative_change = tail_change;
    if (peak == 0.0 || (decreasing && last < 0.1 * peak)) {
        compact.verdict = CriterionVerdict::compact;
        compact.estimate = last;
        compact.diagnostics.stabilization_margin = peak == 0.0 ? 0.0 : last / peak;
        compact.diagnostics.note = "band maxima decay toward the boundary";
    } else if (tail_change < kPlateauTolerance) {
        compact.verdict = CriterionVerdict::non_compact;
        compact.estimate = last;
        compact.diagnostics.stabilization_margin = kPlateauTolerance / std::max(tail_change, 1e-300);
        compact.diagnostics.note = "band maxima plateau at a positive value";
    } else {
        compact.verdict = CriterionVerdict::inconclusive;
        compact.diagnostics.note = "band maxima neither decay nor plateau";
    }
    return out;
}

AnalyticMap test_function(const DiskPoint& b, double p) { return AnalyticMap::power_kernel(b, p); }

GrowthBound growth_bound_check(const HarmonicMap& f, double p, const DiskPoint& z, double norm_h,
                               double norm_g)
{
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw ParameterRange("growth bound requires finite p > 1");
    }
    GrowthBound out;
    out.lhs = f.lambda(z);
    out.rhs = std::pow(4.0, 1.0 / p) * (norm_h + norm_g) / std::pow(z.gap(), 1.0 + 1.0 / p);
    out.ok = out.lhs <= out.rhs;
    return out;
}

GrowthBound growth_bound_check(const HarmonicMap& f, double p, const DiskPoint& z,
                               const SamplingPlan& plan)
{
    const Estimate nh = hardy_norm(f.h(), p, plan);
    const Estimate ng = hardy_norm(f.g(), p, plan);
    if (!nh.finite() || !ng.finite()) {
        throw std::runtime_error("growth bound needs finite Hardy norms of h and g (verdicts: " +
                                 to_string(nh.verdict) + ", " + to_string(ng.verdict) + ")");
    }
    return growth_bound_check(f, p, z, nh.value, ng.value);
}

ProbeResult bounded_below_probe(const AnalyticMap& phi, double r, double epsilon,
                                std::size_t samples, std::uint64_t seed, const SamplingPlan& plan)
{
    plan.validate();
    require_admissible(phi);
    if (!(r > 0.0 && r < kProbeRadiusLimit)) {
        throw ParameterRange("r must lie in (0, 2 sqrt(3) / 9)");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ParameterRange("epsilon must be > 0");
    }
    if (samples == 0) {
        throw ParameterRange("samples must be positive");
    }

    // sup grid: images and Schwarz-Pick ratios
    const int radii = plan.sup_radii;
    const int angles = plan.sup_angles;
    const int depth = plan.ladder_rungs;
    std::vector<Complex> nodes(static_cast<std::size_t>(radii) * angles);
    std::vector<Complex> images(nodes.size());
    std::vector<double> ratios(nodes.size());
    parallel_for(static_cast<std::size_t>(radii), [&](std::size_t i) {
        const double u = static_cast<double>(i) / (radii - 1);
        const double rad = i == 0 ? 0.0 : 1.0 - std::exp2(-depth * u);
        for (int a = 0; a < angles; ++a) {
            const DiskPoint z = polar_point(rad, 2.0 * std::numbers::pi * a / angles);
            const std::size_t slot = i * angles + a;
            nodes[slot] = z.value();
            images[slot] = phi.eval(z);
            ratios[slot] = schwarz_pick_ratio(phi, z);
        }
    });

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> targets(samples);
    for (auto& w : targets) {
        const double rad = std::min(std::sqrt(unit(rng)), kMaxSampleRadius);
        w = std::polar(rad, 2.0 * std::numbers::pi * unit(rng));
    }

    std::vector<double> best_ratio(samples, 0.0);
    std::vector<char> hit(samples, 0);
    parallel_for(samples, [&](std::size_t s) {
        const DiskPoint w(targets[s]);
        double best = -1.0;
        double nearest = INFINITY;
        std::size_t nearest_slot = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double d = metrics::rho(DiskPoint(images[i]), w);
            if (d < nearest) {
                nearest = d;
                nearest_slot = i;
            }
            if (d < r) {
                best = std::max(best, ratios[i]);
            }
        }
        // Newton refinement of phi(z) = w from the closest grid image
        Complex z = nodes[nearest_slot];
        for (int iter = 0; iter < 60; ++iter) {
            const DiskPoint zp(z);
            const Complex residual = phi.eval(zp) - w.value();
            const Complex slope = phi.deriv(zp);
            if (std::abs(residual) <= 1e-15 || slope == Complex(0.0, 0.0)) {
                break;
            }
            Complex step = residual / slope;
            int halvings = 0;
            while (!DiskPoint::contains(z - step) && halvings < 60) {
                step *= 0.5;
                ++halvings;
            }
            if (!DiskPoint::contains(z - step)) {
                break;
            }
            z -= step;
        }
        const DiskPoint zp(z);
        if (metrics::rho(DiskPoint(phi.eval(zp)), w) < r) {
            best = std::max(best, schwarz_pick_ratio(phi, zp));
        }
        best_ratio[s] = best;
        hit[s] = best > epsilon ? 1 : 0;
    });

    ProbeResult out;
    out.samples = samples;
    out.min_best_ratio = INFINITY;
    for (std::size_t s = 0; s < samples; ++s) {
        if (hit[s]) {
            ++out.satisfied;
            out.min_best_ratio = std::min(out.min_best_ratio, best_ratio[s]);
        }
    }
    if (out.satisfied == 0) {
        out.min_best_ratio = 0.0;
    }
    out.fraction = static_cast<double>(out.satisfied) / static_cast<double>(samples);
    if (out.satisfied == samples) {
        out.implied_constant = (1.0 - 1.5 * std::numbers::sqrt3 * r) * epsilon;
    } else {
        out.note = "hypothesis-unsatisfied-at-resolution for " +
                   std::to_string(samples - out.satisfied) + " of " + std::to_string(samples) +
                   " targets";
    }
    return out;
}

namespace {

/// log omega(chi) at the gap x = 1 - t^2 given log x.
double log_weight(const BlochParams& params, double log_x)
{
    double log_chi = params.alpha() * log_x;
    if (params.beta() != 0.0) {
        log_chi += params.beta() * std::log1p(-log_x);
    }
    return params.omega().log_eval(log_chi);
}

/// log of the doubling ratio at s = exp(log_s).
double log_doubling(const BlochParams& params, double log_s)
{
    const double s = std::exp(log_s);
    const double log_x1 = log_s + std::log(2.0 - s);                       // gap at 1 - s
    const double log_x2 = log_s - std::numbers::ln2 + std::log(2.0 - 0.5 * s); // gap at 1 - s/2
    return log_weight(params, log_x1) - log_weight(params, log_x2);
}

} // namespace

double doubling_ratio(const BlochParams& params, double s)
{
    if (!(s > 0.0 && s <= 1.0)) {
        throw std::invalid_argument("doubling ratio is defined for s in (0, 1]");
    }
    return std::exp(log_doubling(params, std::log(s)));
}

DoublingLimits doubling_limits(const BlochParams& params)
{
    DoublingLimits out;
    out.chi_at_zero = std::exp2(params.alpha());
    out.chi_at_one = std::pow(4.0 / 3.0, params.alpha()) /
                     std::pow(1.0 + std::log(4.0 / 3.0), params.beta());

    // s -> 0: the ratio is smooth in v = 1 / (1 - log s)
    std::vector<double> v;
    std::vector<double> y;
    for (int k = 64; k <= 4096; k *= 2) {
        const double log_s = -k * std::numbers::ln2;
        v.push_back(1.0 / (1.0 - log_s));
        y.push_back(std::exp(log_doubling(params, log_s)));
    }
    out.at_zero = numeric::neville_extrapolate(v, y, 0.0);

    // s -> 1: smooth in h = 1 - s
    std::vector<double> h;
    std::vector<double> z;
    for (int k = 8; k <= 14; ++k) {
        const double gap = std::ldexp(1.0, -k);
        h.push_back(gap);
        z.push_back(doubling_ratio(params, 1.0 - gap));
    }
    out.at_one = numeric::neville_extrapolate(h, z, 0.0);

    double sup = std::max(out.at_zero, out.at_one);
    for (int i = 0; i <= 64 * 16; ++i) {
        sup = std::max(sup, std::exp(log_doubling(params, -i / 16.0 * std::numbers::ln2)));
    }
    for (const double value : y) {
        sup = std::max(sup, value);
    }
    out.sup_ratio = sup;
    return out;
}

} // namespace bloch::compop
