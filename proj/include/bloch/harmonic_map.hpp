#pragma once

#include "bloch/analytic_map.hpp"

namespace bloch {

/// f = h + conj(g) with g(0) = 0.
class HarmonicMap {
public:
    /// Throws std::invalid_argument when |g(0)| exceeds 1e-12.
    HarmonicMap(AnalyticMap h, AnalyticMap g);

    static HarmonicMap analytic(AnalyticMap h);

    const AnalyticMap& h() const noexcept { return h_; }
    const AnalyticMap& g() const noexcept { return g_; }

    Complex eval(const DiskPoint& z) const { return h_.eval(z) + std::conj(g_.eval(z)); }
    Complex f_z(const DiskPoint& z) const { return h_.deriv(z); }
    Complex f_zbar(const DiskPoint& z) const { return std::conj(g_.deriv(z)); }

    /// Lambda_f(z) = |h'(z)| + |g'(z)|, the largest directional derivative.
    double lambda(const DiskPoint& z) const
    {
        return std::abs(h_.deriv(z)) + std::abs(g_.deriv(z));
    }

    /// Scales both parts; polynomial parts only.
    HarmonicMap scaled(double c) const { return HarmonicMap(h_.scaled(c), g_.scaled(c)); }

private:
    AnalyticMap h_;
    AnalyticMap g_;
};

inline double lambda(const HarmonicMap& f, const DiskPoint& z) { return f.lambda(z); }

} // namespace bloch
