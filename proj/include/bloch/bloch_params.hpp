#pragma once

#include <cmath>
#include <stdexcept>

#include "bloch/majorant.hpp"

namespace bloch {

/// (alpha, beta, omega): the weight chi(t) = (1 - t^2)^alpha (log e/(1 - t^2))^beta
/// composed with the majorant omega.
class BlochParams {
public:
    BlochParams() = default;

    BlochParams(double alpha, double beta, Majorant omega = Majorant::identity())
        : alpha_(alpha), beta_(beta), omega_(std::move(omega))
    {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw std::invalid_argument("alpha must be > 0");
        }
        if (!std::isfinite(beta)) {
            throw std::invalid_argument("beta must be finite");
        }
    }

    /// omega = id, alpha = 1, beta = 0.
    static BlochParams classical() { return {}; }

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    const Majorant& omega() const noexcept { return omega_; }

    bool is_classical() const noexcept
    {
        return alpha_ == 1.0 && beta_ == 0.0 && omega_.is_identity();
    }

    /// chi as a function of the gap x = 1 - t^2 in (0, 1].
    double chi_of_gap(double x) const
    {
        const double base = std::pow(x, alpha_);
        if (beta_ == 0.0) {
            return base;
        }
        return base * std::pow(1.0 - std::log(x), beta_);
    }

    double chi(double t) const { return chi_of_gap((1.0 - t) * (1.0 + t)); }

    /// omega(chi(t)) from the gap x = 1 - t^2.
    double weight_of_gap(double x) const { return omega_(chi_of_gap(x)); }

private:
    double alpha_ = 1.0;
    double beta_ = 0.0;
    Majorant omega_{};
};

} // namespace bloch
