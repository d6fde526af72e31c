#include "bloch/analytic_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bloch/extremal.hpp"

namespace bloch {

namespace {

constexpr double kEtaScale = 3.0 * std::numbers::sqrt3 / 4.0;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

Complex horner(const std::vector<Complex>& a, Complex z)
{
    Complex acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Complex horner_deriv(const std::vector<Complex>& a, Complex z)
{
    Complex acc = 0.0;
    for (std::size_t n = a.size(); n-- > 1;) {
        acc = acc * z + static_cast<double>(n) * a[n];
    }
    return acc;
}

// log of the kernel base (1 - |b|^2) / (1 - conj(b) z)^2 on the principal
// branch; Re(1 - conj(b) z) > 0 keeps the argument inside (-pi, pi).
Complex kernel_log(const kind::PowerKernel& k, Complex z)
{
    const double nb = std::abs(k.b);
    const double gap = (1.0 - nb) * (1.0 + nb);
    return std::log(gap) - 2.0 * std::log(1.0 - std::conj(k.b) * z);
}

// Maximum of |f| over a dense sample of the unit circle; used for kinds that
// extend analytically past the closed disk.
double boundary_max(const AnalyticMap& f)
{
    constexpr int kSamples = 4096;
    constexpr double kRadius = 1.0 - 1e-12;
    double best = 0.0;
    for (int k = 0; k < kSamples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / kSamples;
        best = std::max(best, std::abs(f.eval(DiskPoint(std::polar(kRadius, theta)))));
    }
    return best;
}

} // namespace

AnalyticMap AnalyticMap::polynomial(std::vector<Complex> coefficients)
{
    if (coefficients.empty()) {
        coefficients.push_back(0.0);
    }
    for (const auto& c : coefficients) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("polynomial coefficient is not finite");
        }
    }
    return AnalyticMap(kind::Polynomial{std::move(coefficients)});
}

AnalyticMap AnalyticMap::monomial(int n, Complex scale)
{
    if (n < 0) {
        throw std::invalid_argument("monomial degree must be non-negative");
    }
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1, 0.0);
    a.back() = scale;
    return polynomial(std::move(a));
}

AnalyticMap AnalyticMap::mobius(const DiskPoint& a)
{
    return AnalyticMap(kind::Mobius{a.value()});
}

AnalyticMap AnalyticMap::blaschke(std::vector<DiskPoint> factors, Complex rotation)
{
    if (std::abs(std::abs(rotation) - 1.0) > 1e-12) {
        throw std::invalid_argument("Blaschke rotation must be unimodular");
    }
    kind::Blaschke b;
    b.rotation = rotation;
    b.factors.reserve(factors.size());
    for (const auto& f : factors) {
        b.factors.push_back(f.value());
    }
    return AnalyticMap(std::move(b));
}

AnalyticMap AnalyticMap::scaled_identity(Complex c)
{
    if (std::abs(c) > 1.0) {
        throw std::invalid_argument("scaled-identity requires |c| <= 1");
    }
    return AnalyticMap(kind::ScaledIdentity{c});
}

AnalyticMap AnalyticMap::power_kernel(const DiskPoint& b, double p)
{
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("power-kernel requires p > 0");
    }
    return AnalyticMap(kind::PowerKernel{b.value(), p});
}

AnalyticMap AnalyticMap::antiderivative_extremal(double beta)
{
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("antiderivative-extremal requires beta in (0, 1]");
    }
    return AnalyticMap(kind::AntiderivativeExtremal{beta, extremal::m_root(beta, 1.0).m});
}

AnalyticMap AnalyticMap::quadratic_extremal()
{
    return AnalyticMap(kind::QuadraticExtremal{});
}

AnalyticMap AnalyticMap::composite(AnalyticMap outer, AnalyticMap inner, Complex offset)
{
    if (!inner.is_self_map()) {
        throw std::invalid_argument("inner map of a composite must be a self-map of the disk");
    }
    return AnalyticMap(kind::Composite{std::make_shared<const AnalyticMap>(std::move(outer)),
                                       std::make_shared<const AnalyticMap>(std::move(inner)),
                                       offset});
}

Complex AnalyticMap::eval(const DiskPoint& point) const
{
    const Complex z = point.value();
    return std::visit(
        overloaded{
            [&](const kind::Polynomial& k) { return horner(k.coefficients, z); },
            [&](const kind::Mobius& k) { return (k.a - z) / (1.0 - std::conj(k.a) * z); },
            [&](const kind::Blaschke& k) {
                Complex acc = k.rotation;
                for (const auto& a : k.factors) {
                    acc *= (z - a) / (1.0 - std::conj(a) * z);
                }
                return acc;
            },
            [&](const kind::ScaledIdentity& k) { return k.c * z; },
            [&](const kind::PowerKernel& k) { return std::exp(kernel_log(k, z) / k.p); },
            [&](const kind::AntiderivativeExtremal& k) {
                // closed form: beta z (2m - (1 + m^2) z) / (2m (1 - m z)^2)
                const double m = k.m;
                const Complex u = 1.0 - m * z;
                return k.beta * z * (2.0 * m - (1.0 + m * m) * z) / (2.0 * m * u * u);
            },
            [&](const kind::QuadraticExtremal&) { return -kEtaScale * z * z; },
            [&](const kind::Composite& k) {
                return k.outer->eval(DiskPoint(k.inner->eval(point))) + k.offset;
            },
        },
        kind_);
}

Complex AnalyticMap::deriv(const DiskPoint& point) const
{
    const Complex z = point.value();
    return std::visit(
        overloaded{
            [&](const kind::Polynomial& k) { return horner_deriv(k.coefficients, z); },
            [&](const kind::Mobius& k) {
                const Complex d = 1.0 - std::conj(k.a) * z;
                return -(1.0 - std::norm(k.a)) / (d * d);
            },
            [&](const kind::Blaschke& k) {
                // product rule with prefix/suffix products, no division by a
                // vanishing factor
                const std::size_t n = k.factors.size();
                if (n == 0) {
                    return Complex(0.0);
                }
                std::vector<Complex> value(n), slope(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex a = k.factors[i];
                    const Complex d = 1.0 - std::conj(a) * z;
                    value[i] = (z - a) / d;
                    slope[i] = (1.0 - std::norm(a)) / (d * d);
                }
                std::vector<Complex> prefix(n + 1, 1.0), suffix(n + 1, 1.0);
                for (std::size_t i = 0; i < n; ++i) {
                    prefix[i + 1] = prefix[i] * value[i];
                    suffix[n - i - 1] = suffix[n - i] * value[n - i - 1];
                }
                Complex acc = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    acc += prefix[i] * slope[i] * suffix[i + 1];
                }
                return k.rotation * acc;
            },
            [&](const kind::ScaledIdentity& k) { return k.c; },
            [&](const kind::PowerKernel& k) {
                const Complex f = std::exp(kernel_log(k, z) / k.p);
                return f * (2.0 / k.p) * std::conj(k.b) / (1.0 - std::conj(k.b) * z);
            },
            [&](const kind::AntiderivativeExtremal& k) {
                const double m = k.m;
                const Complex u = 1.0 - m * z;
                return k.beta * (m - z) / (m * u * u * u);
            },
            [&](const kind::QuadraticExtremal&) { return -2.0 * kEtaScale * z; },
            [&](const kind::Composite& k) {
                const Complex w = k.inner->eval(point);
                return k.outer->deriv(DiskPoint(w)) * k.inner->deriv(point);
            },
        },
        kind_);
}

std::string_view AnalyticMap::kind_name() const noexcept
{
    return std::visit(overloaded{
                          [](const kind::Polynomial&) { return std::string_view("polynomial"); },
                          [](const kind::Mobius&) { return std::string_view("mobius"); },
                          [](const kind::Blaschke&) { return std::string_view("blaschke"); },
                          [](const kind::ScaledIdentity&) {
                              return std::string_view("scaled-identity");
                          },
                          [](const kind::PowerKernel&) { return std::string_view("power-kernel"); },
                          [](const kind::AntiderivativeExtremal&) {
                              return std::string_view("antiderivative-extremal");
                          },
                          [](const kind::QuadraticExtremal&) {
                              return std::string_view("quadratic-extremal");
                          },
                          [](const kind::Composite&) { return std::string_view("composite"); },
                      },
                      kind_);
}

bool AnalyticMap::is_self_map() const
{
    return std::visit(
        overloaded{
            [&](const kind::Polynomial& k) {
                // sum |a_n| <= 1 is sufficient for a non-constant polynomial;
                // otherwise fall back to the boundary maximum
                double total = 0.0;
                for (const auto& c : k.coefficients) {
                    total += std::abs(c);
                }
                const bool non_constant = std::any_of(
                    k.coefficients.begin() + 1, k.coefficients.end(),
                    [](const Complex& c) { return c != Complex(0.0); });
                if (!non_constant) {
                    return std::abs(k.coefficients.front()) < 1.0;
                }
                if (total <= 1.0 + 1e-15) {
                    return true;
                }
                return boundary_max(*this) <= 1.0 - 1e-9;
            },
            [](const kind::Mobius&) { return true; },
            [](const kind::Blaschke&) { return true; },
            [](const kind::ScaledIdentity& k) { return std::abs(k.c) <= 1.0; },
            [&](const kind::PowerKernel&) { return boundary_max(*this) <= 1.0 - 1e-9; },
            [&](const kind::AntiderivativeExtremal&) {
                return boundary_max(*this) <= 1.0 - 1e-9;
            },
            [](const kind::QuadraticExtremal&) { return false; },
            [](const kind::Composite& k) {
                // the inner map is a self-map by construction
                return k.offset == Complex(0.0) && k.outer->is_self_map();
            },
        },
        kind_);
}

AnalyticMap AnalyticMap::scaled(double c) const
{
    const auto* poly = std::get_if<kind::Polynomial>(&kind_);
    if (poly == nullptr) {
        throw std::invalid_argument("scaling is defined for polynomial maps only");
    }
    auto coefficients = poly->coefficients;
    for (auto& a : coefficients) {
        a *= c;
    }
    return polynomial(std::move(coefficients));
}

} // namespace bloch
