#include "bloch/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace bloch::metrics {

double rho(const DiskPoint& z, const DiskPoint& w)
{
    if (z.value() == w.value()) {
        return 0.0;
    }
    const Complex a = z.value();
    const Complex b = w.value();
    const double value = std::abs(a - b) / std::abs(1.0 - std::conj(b) * a);
    // rounding may push the quotient to 1 for points hugging the boundary
    return std::min(value, std::nextafter(1.0, 0.0));
}

double sigma(const DiskPoint& z, const DiskPoint& w)
{
    const double r = rho(z, w);
    return 0.5 * std::log1p(2.0 * r / (1.0 - r));
}

AnalyticMap mobius(const DiskPoint& a) { return AnalyticMap::mobius(a); }

} // namespace bloch::metrics
