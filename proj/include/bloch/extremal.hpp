#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "bloch/bloch_params.hpp"
#include "bloch/harmonic_map.hpp"
#include "bloch/norms.hpp"

namespace bloch::extremal {

/// 3 sqrt(3) / 2, the sharp Lipschitz constant of the classical Bloch functional.
inline constexpr double kSharpConstant = 1.5 * std::numbers::sqrt3;

/// a0(alpha) = 1 / sqrt(1 + 2 alpha), the maximiser of psi on [0, 1].
double a0(double alpha);

/// psi(x) = sqrt(1 + 2a) ((1 + 2a) / (2a))^a x (1 - x^2)^a for x in [0, 1].
double psi(double x, double alpha);

struct ExtremalSolution {
    double alpha = 1.0;
    double r0 = 1.0;
    double a0 = 0.0;
    double m = 0.0;        // root of psi(m) = r0 in [0, a0]
    double residual = 0.0; // |psi(m) - r0|
};

/// Bisection for psi(m) = r0 on [0, a0(alpha)], where psi is increasing.
ExtremalSolution m_root(double r0, double alpha);

/// Lower bound on Re f'(z) for normalised f with f'(0) = r0; empty outside
/// |z| <= (a0 + m) / (1 + a0 m).
std::optional<double> lower_derivative_bound(double r0, double alpha, const DiskPoint& z);

/// Upper bound on |f'(z)|; empty outside |z| <= (a0 - m) / (1 - a0 m).
std::optional<double> upper_derivative_bound(double r0, double alpha, const DiskPoint& z);

/// Closed-form value of the extremal antiderivative f_beta at z.
Complex f_beta(double beta, const DiskPoint& z);

class DegeneratePair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// |B(z1) - B(z2)| / rho(z1, z2); throws DegeneratePair when rho < 1e-14.
double lipschitz_ratio(const HarmonicMap& f, const DiskPoint& z1, const DiskPoint& z2,
                       const BlochParams& params = BlochParams::classical());

class ScanError : public std::runtime_error {
public:
    enum class Reason { zero_seminorm, infinite_seminorm, inconclusive_seminorm };
    ScanError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

struct LipschitzScan {
    double max_ratio = 0.0;
    Complex argmax_z1{0.0, 0.0};
    Complex argmax_z2{0.0, 0.0};
    double seminorm = 0.0;
    double cap = 0.0;             // (3 sqrt 3 / 2) * seminorm
    std::size_t pairs_evaluated = 0;
    bool within_cap = true;       // max_ratio <= cap * (1 + cap_tolerance)
};

inline constexpr double kScanCapTolerance = 1e-4;

/// Random area-uniform pairs plus radial and near-boundary structured pairs.
LipschitzScan lipschitz_scan(const HarmonicMap& f, std::size_t pairs, std::uint64_t seed,
                             const SamplingPlan& plan = {});

struct SharpnessWitness {
    double epsilon = 0.0;
    double m_star = 0.0;
    double beta = 0.0;
    double m_root = 0.0;  // m_1(beta) recomputed by bisection
    Complex z1{0.0, 0.0};
    Complex z2{0.0, 0.0};
    double achieved_ratio = 0.0;
    double target = 0.0;  // 3 sqrt 3 / 2 - epsilon
    bool satisfied = false;
};

/// Builds the extremal f_beta for epsilon in (0, 3 sqrt 3 / 2] and evaluates
/// its ratio at z1 = m_1(beta), z2 = 0.
SharpnessWitness sharpness_witness(double epsilon);

} // namespace bloch::extremal
