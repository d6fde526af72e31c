#include "bloch/harmonic_map.hpp"

#include <stdexcept>

namespace bloch {

HarmonicMap::HarmonicMap(AnalyticMap h, AnalyticMap g) : h_(std::move(h)), g_(std::move(g))
{
    if (std::abs(g_.eval(DiskPoint(0.0))) > 1e-12) {
        throw std::invalid_argument("co-analytic part must satisfy g(0) = 0");
    }
}

HarmonicMap HarmonicMap::analytic(AnalyticMap h)
{
    return HarmonicMap(std::move(h), AnalyticMap::constant(0.0));
}

} // namespace bloch
