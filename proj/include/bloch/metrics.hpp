#pragma once

#include "bloch/analytic_map.hpp"

namespace bloch::metrics {

/// Pseudo-hyperbolic distance |(z - w) / (1 - conj(w) z)|; exactly 0 when
/// z and w are bitwise equal.
double rho(const DiskPoint& z, const DiskPoint& w);

/// Hyperbolic distance arctanh(rho), evaluated as log1p(2 rho / (1 - rho)) / 2.
double sigma(const DiskPoint& z, const DiskPoint& w);

/// The involutive automorphism phi_a(z) = (a - z) / (1 - conj(a) z).
AnalyticMap mobius(const DiskPoint& a);

} // namespace bloch::metrics
