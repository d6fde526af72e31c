#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace bloch::numeric {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int n);

/// Fixed rule on [a, b].
double gauss_legendre_integrate(const std::function<double(double)>& f, double a, double b,
                                int n = 16);

struct QuadratureResult {
    double value = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

/// Adaptive bisection driven by 16-point Gauss-Legendre: an interval is
/// accepted when its two halves agree with the whole to
/// max(abs_tol, rel_tol * |value|).
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = 1e-12, double abs_tol = 1e-300,
                                    int max_depth = 30);

/// Golden-section search for a maximum of a unimodal f on [lo, hi].
/// Returns (argmax, max).
std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, int iterations);

/// Polynomial (Neville) extrapolation of samples (x_i, y_i) to x = target.
double neville_extrapolate(std::span<const double> x, std::span<const double> y,
                           double target = 0.0);

/// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

} // namespace bloch::numeric
