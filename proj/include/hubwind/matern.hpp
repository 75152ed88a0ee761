#pragma once

#include <cmath>

namespace hubwind {

/// Modified Bessel function of the second kind, order 1.
inline double bessel_k1(double x) { return std::cyl_bessel_k(1.0, x); }

/// Matern covariance with smoothness fixed at nu = 1:
///   sigma_f^2 * (kappa d) K_1(kappa d),   d > 0
///   sigma_f^2,                            d = 0   (limit of x K_1(x))
/// kappa has units 1/km; smaller kappa means longer spatial correlation.
inline double matern_nu1(double d, double kappa, double sigma_f) {
    const double s2 = sigma_f * sigma_f;
    if (d <= 0.0) return s2;
    const double x = kappa * d;
    if (x > 700.0) return 0.0;  // K_1 underflows; covariance is numerically zero
    return s2 * x * bessel_k1(x);
}

}  // namespace hubwind
