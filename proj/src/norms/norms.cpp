#include "bloch/norms.hpp"

#include <algorithm>
#include <numbers>

#include "bloch/numeric.hpp"
#include "bloch/parallel.hpp"

namespace bloch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGrowthRatio = 1.05;
constexpr int kGrowthSpan = 5;
constexpr std::size_t kParallelThreshold = 4096;
constexpr int kRefinedCandidates = 8;
constexpr int kRefinementRounds = 3;

double power_abs(Complex v, double p)
{
    if (p == 2.0) {
        return std::norm(v);
    }
    return std::pow(std::abs(v), p);
}

// Sum of g(k) for k in [0, n), evaluated in parallel for large n and reduced
// in index order.
double ordered_sum(std::size_t n, const std::function<double(std::size_t)>& g)
{
    if (n < kParallelThreshold) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += g(k);
        }
        return acc;
    }
    std::vector<double> values(n);
    parallel_for(n, [&](std::size_t k) { values[k] = g(k); });
    double acc = 0.0;
    for (const double v : values) {
        acc += v;
    }
    return acc;
}

bool ladder_grows(const std::vector<EvidencePoint>& ladder)
{
    if (ladder.size() <= static_cast<std::size_t>(kGrowthSpan)) {
        return false;
    }
    const double last = ladder.back().value;
    const double earlier = ladder[ladder.size() - 1 - kGrowthSpan].value;
    return earlier > 0.0 && last / earlier > kGrowthRatio;
}

} // namespace

void SamplingPlan::validate() const
{
    const bool power_of_two =
        angular_resolution >= 8 && (angular_resolution & (angular_resolution - 1)) == 0;
    if (!power_of_two) {
        throw std::invalid_argument("angular resolution must be a power of two >= 8");
    }
    if (!(refinement_tolerance > 0.0)) {
        throw std::invalid_argument("refinement tolerance must be > 0");
    }
    if (ladder_rungs < kGrowthSpan + 1 || ladder_rungs > 40) {
        throw std::invalid_argument("radial ladder must have between 6 and 40 rungs");
    }
    if (sup_radii < 3 || sup_angles < 8 || golden_iterations < 1) {
        throw std::invalid_argument("supremum grid is too coarse");
    }
    if (max_angular_nodes < angular_resolution) {
        throw std::invalid_argument("node budget below the initial angular resolution");
    }
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::finite:
        return "finite";
    case Verdict::infinite:
        return "infinite";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

double hardy_mean(const DiskFunction& f, double p, double r, const SamplingPlan& plan)
{
    plan.validate();
    if (!(p > 0.0) || std::isinf(p)) {
        throw std::invalid_argument("hardy_mean requires 0 < p < inf");
    }
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::invalid_argument("hardy_mean requires 0 <= r < 1");
    }
    if (r == 0.0) {
        return std::abs(f(DiskPoint(0.0)));
    }

    auto sample = [&](double theta) { return power_abs(f(DiskPoint(std::polar(r, theta))), p); };

    std::size_t n = plan.angular_resolution;
    double sum = ordered_sum(n, [&](std::size_t k) { return sample(kTwoPi * k / n); });
    double mean = sum / n;
    for (;;) {
        const std::size_t next = 2 * n;
        if (next > plan.max_angular_nodes) {
            throw HardyMeanNonConvergence(std::pow(sum / n, 1.0 / p), std::pow(mean, 1.0 / p));
        }
        sum += ordered_sum(n, [&](std::size_t k) { return sample(kTwoPi * (2 * k + 1) / next); });
        const double refined = sum / next;
        const double a = std::pow(mean, 1.0 / p);
        const double b = std::pow(refined, 1.0 / p);
        n = next;
        mean = refined;
        if (std::abs(b - a) <= plan.refinement_tolerance * std::abs(b)) {
            return b;
        }
    }
}

double hardy_mean(const AnalyticMap& f, double p, double r, const SamplingPlan& plan)
{
    return hardy_mean([&](const DiskPoint& z) { return f.eval(z); }, p, r, plan);
}

double hardy_mean(const HarmonicMap& f, double p, double r, const SamplingPlan& plan)
{
    return hardy_mean([&](const DiskPoint& z) { return f.eval(z); }, p, r, plan);
}

Estimate disk_supremum(const DiskScalar& f, const SamplingPlan& plan)
{
    plan.validate();
    const int rungs = plan.ladder_rungs;
    const int radii = plan.sup_radii;
    const int angles = plan.sup_angles;
    const double dtheta = kTwoPi / angles;

    // continuous radial index u in [0, radii - 1] -> r in [0, 1 - 2^-J]
    auto radius_at = [&](double u) {
        return u <= 0.0 ? 0.0 : 1.0 - std::exp2(-rungs * u / (radii - 1));
    };
    auto at = [&](double u, double theta) { return f(DiskPoint(std::polar(radius_at(u), theta))); };

    Estimate out;

    // radial ladder maxima
    std::vector<double> ladder(rungs + 1);
    parallel_for(static_cast<std::size_t>(rungs + 1), [&](std::size_t j) {
        if (j == 0) {
            ladder[0] = f(DiskPoint(0.0));
            return;
        }
        const double r = SamplingPlan::rung(static_cast<int>(j));
        double best = 0.0;
        for (int k = 0; k < angles; ++k) {
            best = std::max(best, f(DiskPoint(std::polar(r, k * dtheta))));
        }
        ladder[j] = best;
    });
    for (int j = 0; j <= rungs; ++j) {
        out.evidence.push_back({j == 0 ? 0.0 : SamplingPlan::rung(j), ladder[j]});
    }
    out.evaluations += 1 + static_cast<std::size_t>(rungs) * angles;

    if (ladder_grows(out.evidence)) {
        out.verdict = Verdict::infinite;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }

    // polar grid
    std::vector<double> grid(static_cast<std::size_t>(radii) * angles);
    parallel_for(static_cast<std::size_t>(radii), [&](std::size_t i) {
        for (int k = 0; k < angles; ++k) {
            grid[i * angles + k] = i == 0 ? ladder[0] : at(static_cast<double>(i), k * dtheta);
        }
    });
    out.evaluations += grid.size();

    auto cell = [&](int i, int k) {
        return grid[static_cast<std::size_t>(i) * angles + ((k % angles) + angles) % angles];
    };

    struct Candidate {
        double value;
        int i;
        int k;
    };
    std::vector<Candidate> candidates;
    for (int i = 0; i < radii; ++i) {
        for (int k = 0; k < (i == 0 ? 1 : angles); ++k) {
            const double v = cell(i, k);
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di) {
                const int ii = i + di;
                if (ii < 0 || ii >= radii) {
                    continue;
                }
                for (int dk = -1; dk <= 1; ++dk) {
                    if ((di != 0 || dk != 0) && cell(ii, k + dk) > v) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) {
                candidates.push_back({v, i, k});
            }
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    if (candidates.size() > static_cast<std::size_t>(kRefinedCandidates)) {
        candidates.resize(kRefinedCandidates);
    }

    double grid_best = 0.0;
    std::size_t grid_arg = 0;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        if (grid[idx] > grid_best) {
            grid_best = grid[idx];
            grid_arg = idx;
        }
    }

    struct Refined {
        double value;
        double u;
        double theta;
        std::size_t evaluations;
    };
    std::vector<Refined> refined(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t c) {
        const Candidate& cand = candidates[c];
        double u0 = cand.i;
        double theta0 = cand.k * dtheta;
        double best = cand.value;
        double half_u = 1.0;
        double half_theta = dtheta;
        std::size_t evals = 0;
        for (int round = 0; round < kRefinementRounds; ++round) {
            const double lo = std::max(0.0, u0 - half_u);
            const double hi = std::min(static_cast<double>(radii - 1), u0 + half_u);
            const double theta_fixed = theta0;
            const auto [u, vu] = numeric::golden_section_max(
                [&](double uu) { return at(uu, theta_fixed); }, lo, hi, plan.golden_iterations);
            evals += plan.golden_iterations + 2;
            if (vu > best) {
                best = vu;
                u0 = u;
            }
            const double u_fixed = u0;
            const auto [th, vth] = numeric::golden_section_max(
                [&](double t) { return at(u_fixed, t); }, theta0 - half_theta, theta0 + half_theta,
                plan.golden_iterations);
            evals += plan.golden_iterations + 2;
            if (vth > best) {
                best = vth;
                theta0 = th;
            }
            half_u *= 0.25;
            half_theta *= 0.25;
        }
        refined[c] = {best, u0, theta0, evals};
    });

    double best = grid_best;
    Complex arg = std::polar(radius_at(static_cast<double>(grid_arg / angles)),
                             static_cast<double>(grid_arg % angles) * dtheta);
    for (const auto& r : refined) {
        out.evaluations += r.evaluations;
        if (r.value > best) {
            best = r.value;
            arg = std::polar(radius_at(r.u), r.theta);
        }
    }
    for (int j = 0; j <= rungs; ++j) {
        if (ladder[j] > best) {
            best = ladder[j];
            arg = j == 0 ? Complex(0.0) : Complex(SamplingPlan::rung(j), 0.0);
        }
    }

    out.verdict = Verdict::finite;
    out.value = best;
    out.argmax = arg;
    out.resolution = best - grid_best;
    return out;
}

Estimate hardy_norm(const DiskFunction& f, double p, const SamplingPlan& plan)
{
    plan.validate();
    if (!(p > 0.0)) {
        throw std::invalid_argument("hardy_norm requires p > 0");
    }
    if (std::isinf(p)) {
        return disk_supremum([&](const DiskPoint& z) { return std::abs(f(z)); }, plan);
    }

    Estimate out;
    std::vector<double> means{std::abs(f(DiskPoint(0.0)))};
    out.evidence.push_back({0.0, means[0]});
    double running_max = means[0];
    for (int j = 1; j <= plan.ladder_rungs; ++j) {
        try {
            means.push_back(hardy_mean(f, p, SamplingPlan::rung(j), plan));
        } catch (const HardyMeanNonConvergence&) {
            // the circle can no longer be resolved; judge from the rungs already in hand
            break;
        }
        out.evidence.push_back({SamplingPlan::rung(j), means.back()});
        running_max = std::max(running_max, means.back());
    }
    const std::size_t rungs = means.size() - 1;
    if (rungs < static_cast<std::size_t>(plan.ladder_rungs)) {
        out.verdict = ladder_grows(out.evidence) ? Verdict::infinite : Verdict::inconclusive;
        out.value = out.verdict == Verdict::infinite ? std::numeric_limits<double>::infinity()
                                                     : running_max;
        return out;
    }

    const double last = means[rungs];
    const double d_last = means[rungs] - means[rungs - 1];
    const double d_prev = means[rungs - 1] - means[rungs - 2];
    const double d_prev2 = means[rungs - 2] - means[rungs - 3];
    const double q = d_prev != 0.0 ? d_last / d_prev : 0.0;
    const double q_prev = d_prev2 != 0.0 ? d_prev / d_prev2 : 0.0;
    const bool geometric = q > 0.0 && q < 0.9 && q_prev > 0.0 && q_prev < 0.9;
    const bool small_step = std::abs(d_last) <= plan.refinement_tolerance * std::abs(last);

    if (small_step || geometric) {
        double limit = last;
        if (geometric) {
            const double correction = d_last * q / (1.0 - q);
            limit += correction;
            out.resolution = std::abs(correction);
        } else {
            out.resolution = std::abs(d_last);
        }
        out.verdict = Verdict::finite;
        out.value = std::max(limit, running_max);
        return out;
    }
    if (ladder_grows(out.evidence)) {
        out.verdict = Verdict::infinite;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    out.verdict = Verdict::inconclusive;
    out.value = running_max;
    out.resolution = std::abs(d_last);
    return out;
}

Estimate hardy_norm(const AnalyticMap& f, double p, const SamplingPlan& plan)
{
    return hardy_norm([&](const DiskPoint& z) { return f.eval(z); }, p, plan);
}

Estimate hardy_norm(const HarmonicMap& f, double p, const SamplingPlan& plan)
{
    return hardy_norm([&](const DiskPoint& z) { return f.eval(z); }, p, plan);
}

double bloch_weight(const BlochParams& params, double t)
{
    if (!(t >= 0.0 && t < 1.0)) {
        throw std::invalid_argument("bloch_weight requires 0 <= t < 1");
    }
    return params.chi(t);
}

double bloch_functional(const HarmonicMap& f, const BlochParams& params, const DiskPoint& z)
{
    return f.lambda(z) * params.weight_of_gap(z.gap());
}

Estimate bloch_seminorm(const HarmonicMap& f, const BlochParams& params, const SamplingPlan& plan)
{
    return disk_supremum([&](const DiskPoint& z) { return bloch_functional(f, params, z); }, plan);
}

Estimate bloch_norm(const HarmonicMap& f, const BlochParams& params, const SamplingPlan& plan)
{
    Estimate out = bloch_seminorm(f, params, plan);
    if (out.finite()) {
        out.value += std::abs(f.eval(DiskPoint(0.0)));
    }
    return out;
}

GFunctionResult g_function(const AnalyticMap& f, double angle, const SamplingPlan& plan)
{
    plan.validate();
    constexpr int kMaxPanels = 40;
    constexpr double kRelativeChange = 1e-8;

    const Complex zeta = std::polar(1.0, angle);
    auto integrand = [&](double r) {
        return std::norm(f.deriv(DiskPoint(r * zeta))) * (1.0 - r);
    };

    GFunctionResult out;
    double total = 0.0;
    int quiet = 0;
    for (int k = 0; k < kMaxPanels; ++k) {
        const double a = k == 0 ? 0.0 : SamplingPlan::rung(k);
        const double b = SamplingPlan::rung(k + 1);
        const auto piece = numeric::adaptive_integrate(integrand, a, b, 1e-13, 1e-300, 20);
        out.evaluations += piece.evaluations;
        total += piece.value;
        out.partial.push_back({b, total});
        const bool small = piece.value <= kRelativeChange * total || total == 0.0;
        quiet = small ? quiet + 1 : 0;
        if (quiet >= 3 && k >= 3) {
            out.value = std::sqrt(total);
            return out;
        }
    }
    out.divergent = true;
    out.value = std::sqrt(total);
    return out;
}

GNormCheck g_norm_check(const AnalyticMap& f, double p, const SamplingPlan& plan)
{
    if (!std::holds_alternative<kind::Polynomial>(f.kind())) {
        throw std::invalid_argument("g_norm_check requires a polynomial map");
    }
    if (!(p > 0.0) || std::isinf(p)) {
        throw std::invalid_argument("g_norm_check requires 0 < p < inf");
    }
    plan.validate();

    GNormCheck out;
    const Estimate norm = hardy_norm(f, p, plan);
    out.hardy = std::pow(norm.value, p);

    auto sample = [&](double theta) { return std::pow(g_function(f, theta, plan).value, p); };
    std::size_t n = plan.angular_resolution;
    double sum = ordered_sum(n, [&](std::size_t k) { return sample(kTwoPi * k / n); });
    double mean = sum / n;
    for (;;) {
        const std::size_t next = 2 * n;
        if (next > plan.max_angular_nodes) {
            throw HardyMeanNonConvergence(mean, sum / n);
        }
        sum += ordered_sum(n, [&](std::size_t k) { return sample(kTwoPi * (2 * k + 1) / next); });
        const double refined = sum / next;
        n = next;
        const bool done = std::abs(refined - mean) <= plan.refinement_tolerance * std::abs(refined);
        mean = refined;
        if (done) {
            break;
        }
    }
    out.g_integral = std::pow(std::abs(f.eval(DiskPoint(0.0))), p) + mean;
    return out;
}

bool power_mean_inequality_check(double a, double b, double tau)
{
    if (!(a >= 0.0) || !(b >= 0.0) || !(tau > 0.0)) {
        throw std::invalid_argument("power mean check requires a, b >= 0 and tau > 0");
    }
    const double lhs = std::pow(a + b, tau);
    const double rhs = std::exp2(std::max(tau - 1.0, 0.0)) * (std::pow(a, tau) + std::pow(b, tau));
    return lhs <= rhs * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
}

} // namespace bloch
