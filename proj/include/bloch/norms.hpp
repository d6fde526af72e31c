#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bloch/bloch_params.hpp"
#include "bloch/harmonic_map.hpp"

namespace bloch {

/// Resolution knobs shared by every sampling-based estimator.
struct SamplingPlan {
    std::size_t angular_resolution = 64;        // initial trapezoid nodes, power of two
    int ladder_rungs = 20;                       // r_j = 1 - 2^-j, j = 1..J
    double refinement_tolerance = 1e-6;          // relative, for doubling loops
    int sup_radii = 64;
    int sup_angles = 256;
    int golden_iterations = 40;
    std::size_t max_angular_nodes = std::size_t{1} << 20;

    /// Throws std::invalid_argument on a malformed plan.
    void validate() const;

    /// r_j = 1 - 2^-j
    static double rung(int j) { return 1.0 - std::ldexp(1.0, -j); }
};

enum class Verdict { finite, infinite, inconclusive };

std::string to_string(Verdict v);

struct EvidencePoint {
    double parameter;
    double value;
};

/// Result of a norm or supremum estimate.
struct Estimate {
    Verdict verdict = Verdict::finite;
    double value = std::numeric_limits<double>::quiet_NaN();
    /// Size of the last correction applied (extrapolation step or gain of the
    /// local refinement over the raw grid); a proxy for the attained accuracy.
    double resolution = 0.0;
    Complex argmax{0.0, 0.0};
    std::vector<EvidencePoint> evidence;
    std::size_t evaluations = 0;

    bool finite() const noexcept { return verdict == Verdict::finite; }
};

class HardyMeanNonConvergence : public std::runtime_error {
public:
    HardyMeanNonConvergence(double previous, double last)
        : std::runtime_error("circle mean did not converge within the node budget"),
          previous_(previous), last_(last)
    {
    }
    double previous() const noexcept { return previous_; }
    double last() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

using DiskFunction = std::function<Complex(const DiskPoint&)>;
using DiskScalar = std::function<double(const DiskPoint&)>;

/// M_p(r, f) by the periodic trapezoid rule, doubling the node count until two
/// successive values agree to plan.refinement_tolerance (relative).
double hardy_mean(const DiskFunction& f, double p, double r, const SamplingPlan& plan = {});
double hardy_mean(const AnalyticMap& f, double p, double r, const SamplingPlan& plan = {});
double hardy_mean(const HarmonicMap& f, double p, double r, const SamplingPlan& plan = {});

/// sup_r M_p(r, f) along the radial ladder with geometric extrapolation of the
/// increments; p = +inf gives the disk supremum of |f|.
Estimate hardy_norm(const DiskFunction& f, double p, const SamplingPlan& plan = {});
Estimate hardy_norm(const AnalyticMap& f, double p, const SamplingPlan& plan = {});
Estimate hardy_norm(const HarmonicMap& f, double p, const SamplingPlan& plan = {});

/// Supremum of a non-negative function over the disk: ladder growth test,
/// polar grid, then golden-section refinement of the best local maxima.
Estimate disk_supremum(const DiskScalar& f, const SamplingPlan& plan = {});

/// chi(t) = (1 - t^2)^alpha (log e/(1 - t^2))^beta
double bloch_weight(const BlochParams& params, double t);

/// Lambda_f(z) * omega(chi(|z|)).
double bloch_functional(const HarmonicMap& f, const BlochParams& params, const DiskPoint& z);

Estimate bloch_seminorm(const HarmonicMap& f, const BlochParams& params,
                        const SamplingPlan& plan = {});

/// |f(0)| + seminorm; inherits the seminorm verdict.
Estimate bloch_norm(const HarmonicMap& f, const BlochParams& params,
                    const SamplingPlan& plan = {});

struct GFunctionResult {
    double value = 0.0;
    bool divergent = false;
    std::vector<EvidencePoint> partial; // (truncation radius, partial integral)
    std::size_t evaluations = 0;
};

/// Littlewood-Paley G(f)(zeta) = (int_0^1 |f'(r zeta)|^2 (1 - r) dr)^(1/2)
/// with zeta = e^{i angle}; dyadic Gauss-Legendre panels toward r = 1.
GFunctionResult g_function(const AnalyticMap& f, double angle, const SamplingPlan& plan = {});

struct GNormCheck {
    double hardy = 0.0;      // ||f||_p^p
    double g_integral = 0.0; // |f(0)|^p + mean of G(f)^p over the circle
};

/// Both sides of the Littlewood-Paley norm equivalence; polynomial f only.
GNormCheck g_norm_check(const AnalyticMap& f, double p, const SamplingPlan& plan = {});

/// (a + b)^tau <= 2^max(tau - 1, 0) (a^tau + b^tau), with a few ulps of slack.
bool power_mean_inequality_check(double a, double b, double tau);

} // namespace bloch
