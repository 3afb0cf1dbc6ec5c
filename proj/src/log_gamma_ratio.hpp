#pragma once

#include <cmath>

namespace twotype::detail {

// Stirling-series tail S(z) with lnGamma(z) = (z-1/2)ln z - z + ln(2pi)/2 + S(z).
// Accurate to ~1e-21 for z >= 1024.
inline double stirling_tail(double z) {
    const double z2 = z * z;
    return 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2);
}

// ln(Gamma(k) / Gamma(k + a)) for large k (>= 1024) and moderate a > 0,
// arranged so no large intermediate mag; naive lgamma differences lose
// ~1e-12 relative accuracy from cancellation of two O(k ln k) values.
inline double log_gamma_ratio_large_k(double k, double a) {
    const double w = k + a;
    return -(k - 0.5) * std::log1p(a / k) - a * std::log(w) + a + stirling_tail(k) - stirling_tail(w);
}

} // namespace twotype::detail
