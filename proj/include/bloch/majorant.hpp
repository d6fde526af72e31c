#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bloch {

/// Descriptor of a candidate majorant before validation.
struct MajorantSpec {
    enum class Kind { identity, power, custom };

    Kind kind = Kind::identity;
    double exponent = 1.0;                           // power: omega(t) = t^s
    std::vector<std::pair<double, double>> table;    // custom: (t, omega(t)), t ascending

    static MajorantSpec identity() { return {}; }
    static MajorantSpec power(double s) { return {Kind::power, s, {}}; }
    static MajorantSpec custom(std::vector<std::pair<double, double>> table)
    {
        return {Kind::custom, 1.0, std::move(table)};
    }
};

class MajorantRejected : public std::invalid_argument {
public:
    enum class Reason { nonzero_at_origin, not_increasing, ratio_increasing, malformed };

    MajorantRejected(Reason reason, double t, const std::string& what)
        : std::invalid_argument(what), reason_(reason), t_(t)
    {
    }

    Reason reason() const noexcept { return reason_; }
    /// Grid point witnessing the violation.
    double witness() const noexcept { return t_; }

private:
    Reason reason_;
    double t_;
};

std::string to_string(MajorantRejected::Reason reason);

/// A validated weight omega: omega(0) = 0, increasing, omega(t)/t
/// non-increasing. All three properties are checked on a logarithmic grid
/// of (0, 4] at construction.
class Majorant {
public:
    static constexpr int kGridPoints = 64;
    static constexpr double kGridMax = 4.0;

    Majorant() : Majorant(MajorantSpec::identity()) {}

    /// Throws MajorantRejected.
    explicit Majorant(MajorantSpec spec);

    static Majorant identity() { return Majorant(); }
    static Majorant power(double s) { return Majorant(MajorantSpec::power(s)); }

    double operator()(double t) const;

    /// log omega(exp(log_t)), usable where exp(log_t) underflows; a table is
    /// continued linearly below its first positive abscissa.
    double log_eval(double log_t) const;

    const MajorantSpec& spec() const noexcept { return spec_; }
    bool is_identity() const noexcept { return spec_.kind == MajorantSpec::Kind::identity; }

    /// "id", "pow:S" or "custom".
    std::string descriptor() const;

    /// Checks lim_{t->0+} omega(t)/t < inf on t = 2^-j, j = 10..40: the
    /// sequence must be finite and Cauchy-stabilizing.
    bool has_finite_slope_at_zero() const;

    /// The validation grid (shared with tests).
    static std::vector<double> validation_grid();

private:
    MajorantSpec spec_;
};

Majorant validate_majorant(const MajorantSpec& candidate);

/// Parses "id" or "pow:S".
Majorant parse_majorant(const std::string& text);

} // namespace bloch
