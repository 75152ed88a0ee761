#pragma once

#include <cmath>
#include <stdexcept>

#include "hubwind/gamma.hpp"

namespace hubwind {

/// Two-parameter Weibull climatology (the wind-atlas summary of a site).
struct WeibullParams {
    double shape;   ///< k > 0, dimensionless
    double scale;   ///< lambda > 0, m/s

    WeibullParams(double k, double lambda) : shape(k), scale(lambda) {
        if (!(k > 0) || !(lambda > 0) || !std::isfinite(k) || !std::isfinite(lambda))
            throw std::invalid_argument("Weibull parameters must be finite and positive");
    }
};

/// F(x; k, lambda) = 1 - exp(-(x/lambda)^k)
inline double weibull_cdf(double x, const WeibullParams& p) {
    if (!(x >= 0)) throw std::domain_error("weibull_cdf requires x >= 0");
    return -std::expm1(-std::pow(x / p.scale, p.shape));
}

/// Inverse CDF: lambda * (-ln(1-p))^{1/k}, valid for p in [0, 1).
inline double weibull_quantile(double p, const WeibullParams& params) {
    if (!(p >= 0.0 && p < 1.0))
        throw std::domain_error("weibull_quantile requires p in [0, 1)");
    return params.scale * std::pow(-std::log1p(-p), 1.0 / params.shape);
}

inline double weibull_mean(const WeibullParams& p) {
    return p.scale * gamma_positive(1.0 + 1.0 / p.shape);
}

inline double weibull_variance(const WeibullParams& p) {
    const double g1 = gamma_positive(1.0 + 1.0 / p.shape);
    const double g2 = gamma_positive(1.0 + 2.0 / p.shape);
    return p.scale * p.scale * (g2 - g1 * g1);
}

/// E[sqrt(W)] for W ~ Weibull(k, lambda): sqrt(lambda) * Gamma(1 + 1/(2k)).
/// This is the sqrt-scale climatological mean used as the spatial covariate.
inline double mean_sqrt_wind(const WeibullParams& p) {
    return std::sqrt(p.scale) * gamma_positive(1.0 + 1.0 / (2.0 * p.shape));
}

}  // namespace hubwind
