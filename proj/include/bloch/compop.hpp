#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bloch/bloch_params.hpp"
#include "bloch/harmonic_map.hpp"
#include "bloch/norms.hpp"

namespace bloch::compop {

class InadmissibleSymbol : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParameterRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// C_phi f = f o phi, renormalised so that the co-analytic part vanishes at 0.
HarmonicMap compose(const HarmonicMap& f, const AnalyticMap& phi);

/// (1 - |z|^2) |phi'(z)| / (1 - |phi(z)|^2); at most 1 for self-maps.
double schwarz_pick_ratio(const AnalyticMap& phi, const DiskPoint& z);

enum class CriterionVerdict {
    convergent,
    divergent,
    bounded,
    unbounded,
    compact,
    non_compact,
    vacuously_compact,
    inconclusive,
};

std::string to_string(CriterionVerdict v);

struct CriterionDiagnostics {
    std::size_t quadrature_nodes = 0;
    std::size_t angular_nodes = 0;
    double growth_slope = 0.0;            // fit of value against -log(1 - R)
    double last_relative_change = 0.0;    // largest over the last three rungs
    double stabilization_margin = 0.0;    // distance from the opposite verdict, as a factor
    double slope_margin = 0.0;            // growth_slope / slope threshold
    std::string note;
};

struct CriterionReport {
    CriterionVerdict verdict = CriterionVerdict::inconclusive;
    std::optional<double> estimate;
    std::vector<EvidencePoint> evidence; // (truncation, partial value)
    CriterionDiagnostics diagnostics;
};

inline constexpr double kStabilizationTolerance = 1e-4;
inline constexpr double kGrowthSlopeThreshold = 0.05;

/// (1/2pi) int (int_0^1 |phi'|^2 (1 - r) / omega^2(chi(|phi|)) dr)^(p/2) dtheta on
/// truncations R_k = 1 - 2^-k, k = 4..24. Finite exactly when C_phi maps the
/// Bloch-type space boundedly (equivalently compactly) into the Hardy space.
CriterionReport bloch_to_hardy_criterion(const AnalyticMap& phi, const BlochParams& params,
                                         double p, const SamplingPlan& plan = {});

/// Q(z) = |phi'(z)| omega(chi(|z|)) / (1 - |phi(z)|^2)^(1 + 1/p).
double hardy_to_bloch_q(const AnalyticMap& phi, const BlochParams& params, double p,
                        const DiskPoint& z);

/// Throws ParameterRange unless p > 1, (alpha = 1 and beta <= 0) or alpha > 1,
/// and omega(t)/t has a finite limit at 0.
void require_hardy_to_bloch_range(const BlochParams& params, double p);

struct HardyToBlochReport {
    CriterionReport boundedness;
    CriterionReport compactness;
    double sup_abs_phi = 0.0;
};

HardyToBlochReport hardy_to_bloch_verdict(const AnalyticMap& phi, const BlochParams& params,
                                          double p, const SamplingPlan& plan = {});

/// f(z) = ((1 - |b|^2) / (1 - conj(b) z)^2)^(1/p); unit Hardy p-norm for all b.
AnalyticMap test_function(const DiskPoint& b, double p);

struct GrowthBound {
    double lhs = 0.0; // Lambda_f(z)
    double rhs = 0.0; // 4^(1/p) (||h||_p + ||g||_p) / (1 - |z|^2)^(1 + 1/p)
    bool ok = true;
};

GrowthBound growth_bound_check(const HarmonicMap& f, double p, const DiskPoint& z,
                               const SamplingPlan& plan = {});

/// Same check with precomputed Hardy norms of h and g.
GrowthBound growth_bound_check(const HarmonicMap& f, double p, const DiskPoint& z, double norm_h,
                               double norm_g);

inline constexpr double kProbeRadiusLimit = 2.0 * 1.7320508075688772 / 9.0;

struct ProbeResult {
    double fraction = 0.0;
    std::size_t satisfied = 0;
    std::size_t samples = 0;
    std::optional<double> implied_constant; // (1 - (3 sqrt 3 / 2) r) eps when fraction = 1
    double min_best_ratio = 0.0;            // weakest Schwarz-Pick ratio among satisfied samples
    std::string note;
};

/// For area-uniform w, looks for z_w with rho(phi(z_w), w) < r and Schwarz-Pick
/// ratio > eps, on the sup grid and by Newton refinement of phi(z) = w.
ProbeResult bounded_below_probe(const AnalyticMap& phi, double r, double epsilon,
                                std::size_t samples, std::uint64_t seed,
                                const SamplingPlan& plan = {});

/// phi_w(1 - s/2) / phi_w(1 - s) for the weight phi_w = 1 / omega(chi(t)).
double doubling_ratio(const BlochParams& params, double s);

struct DoublingLimits {
    double at_zero = 0.0;          // extrapolated s -> 0+
    double at_one = 0.0;           // extrapolated s -> 1-
    double chi_at_zero = 0.0;      // 2^alpha
    double chi_at_one = 0.0;       // (4/3)^alpha / (1 + log(4/3))^beta
    double sup_ratio = 0.0;        // max over a grid of s in (0, 1]
};

DoublingLimits doubling_limits(const BlochParams& params);

} // namespace bloch::compop
