#pragma once

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "bloch/disk_point.hpp"

namespace bloch {

class AnalyticMap;

namespace kind {

struct Polynomial {
    std::vector<Complex> coefficients; // a_0, a_1, ...
};

/// phi_a(z) = (a - z) / (1 - conj(a) z)
struct Mobius {
    Complex a;
};

/// rotation * prod_k (z - a_k) / (1 - conj(a_k) z)
struct Blaschke {
    std::vector<Complex> factors;
    Complex rotation{1.0, 0.0};
};

struct ScaledIdentity {
    Complex c;
};

/// ((1 - |b|^2) / (1 - conj(b) z)^2)^(1/p), principal branch.
struct PowerKernel {
    Complex b;
    double p;
};

/// Antiderivative of beta (m - xi) / (m (1 - m xi)^3) with m the root of
/// (3 sqrt 3 / 2) m (1 - m^2) = beta on [0, 1/sqrt 3].
struct AntiderivativeExtremal {
    double beta;
    double m; // cached root
};

/// eta(z) = -(3 sqrt 3 / 4) z^2
struct QuadraticExtremal {};

/// outer(inner(z)) + offset
struct Composite {
    std::shared_ptr<const AnalyticMap> outer;
    std::shared_ptr<const AnalyticMap> inner;
    Complex offset{0.0, 0.0};
};

} // namespace kind

/// Analytic function on the unit disk drawn from a closed set of kinds, with
/// exact values and first derivatives.
class AnalyticMap {
public:
    using Kind = std::variant<kind::Polynomial, kind::Mobius, kind::Blaschke, kind::ScaledIdentity,
                              kind::PowerKernel, kind::AntiderivativeExtremal,
                              kind::QuadraticExtremal, kind::Composite>;

    static AnalyticMap polynomial(std::vector<Complex> coefficients);
    static AnalyticMap constant(Complex c) { return polynomial({c}); }
    static AnalyticMap identity() { return polynomial({0.0, 1.0}); }
    static AnalyticMap monomial(int n, Complex scale = 1.0);
    static AnalyticMap mobius(const DiskPoint& a);
    static AnalyticMap blaschke(std::vector<DiskPoint> factors, Complex rotation = 1.0);
    static AnalyticMap scaled_identity(Complex c);
    static AnalyticMap power_kernel(const DiskPoint& b, double p);
    static AnalyticMap antiderivative_extremal(double beta);
    static AnalyticMap quadratic_extremal();
    static AnalyticMap composite(AnalyticMap outer, AnalyticMap inner, Complex offset = 0.0);

    Complex eval(const DiskPoint& z) const;
    Complex deriv(const DiskPoint& z) const;

    const Kind& kind() const noexcept { return kind_; }
    std::string_view kind_name() const noexcept;

    /// True when the map is known to send the disk into itself.
    bool is_self_map() const;

    /// c * f; defined for the polynomial kind only.
    AnalyticMap scaled(double c) const;

private:
    explicit AnalyticMap(Kind k) : kind_(std::move(k)) {}

    Kind kind_;
};

} // namespace bloch
