#include "bloch/numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bloch::numeric {

namespace {

GaussLegendreRule build_rule(int n)
{
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n)
{
    if (n < 1) {
        throw std::invalid_argument("Gauss-Legendre order must be positive");
    }
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_rule(n)).first;
    }
    return it->second;
}

double gauss_legendre_integrate(const std::function<double(double)>& f, double a, double b, int n)
{
    const auto& rule = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return acc * half;
}

namespace {

double adaptive_step(const std::function<double(double)>& f, double a, double b, double whole,
                     double rel_tol, double abs_tol, int depth, QuadratureResult& out)
{
    const double mid = 0.5 * (a + b);
    const double left = gauss_legendre_integrate(f, a, mid);
    const double right = gauss_legendre_integrate(f, mid, b);
    out.evaluations += 32;
    const double both = left + right;
    if (std::abs(both - whole) <= std::max(abs_tol, rel_tol * std::abs(both))) {
        return both;
    }
    if (depth <= 0) {
        out.converged = false;
        return both;
    }
    return adaptive_step(f, a, mid, left, rel_tol, 0.5 * abs_tol, depth - 1, out) +
           adaptive_step(f, mid, b, right, rel_tol, 0.5 * abs_tol, depth - 1, out);
}

} // namespace

QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, int max_depth)
{
    QuadratureResult out;
    if (a == b) {
        return out;
    }
    const double whole = gauss_legendre_integrate(f, a, b);
    out.evaluations = 16;
    out.value = adaptive_step(f, a, b, whole, rel_tol, abs_tol, max_depth, out);
    return out;
}

std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, int iterations)
{
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

double neville_extrapolate(std::span<const double> x, std::span<const double> y, double target)
{
    if (x.size() != y.size() || x.empty()) {
        throw std::invalid_argument("extrapolation needs matching non-empty samples");
    }
    std::vector<double> p(y.begin(), y.end());
    const std::size_t n = p.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double xi = x[i];
            const double xj = x[i + level];
            p[i] = ((target - xj) * p[i] - (target - xi) * p[i + 1]) / (xi - xj);
        }
    }
    return p[0];
}

double least_squares_slope(std::span<const double> x, std::span<const double> y)
{
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) {
        throw std::invalid_argument("slope fit needs at least two matching samples");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace bloch::numeric
