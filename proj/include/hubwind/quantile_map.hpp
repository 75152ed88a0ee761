#pragma once

#include <span>
#include <vector>

#include "hubwind/empirical_cdf.hpp"
#include "hubwind/weibull.hpp"

namespace hubwind {

/// Quantile-quantile downscaling: each value is replaced by the target
/// Weibull quantile at its empirical plotting-position probability. Imparts
/// the target marginal while preserving rank order exactly.
inline std::vector<double> quantile_map(std::span<const double> series,
                                        const WeibullParams& target) {
    const EmpiricalCdf cdf(series);
    std::vector<double> out;
    out.reserve(series.size());
    for (double v : series) out.push_back(weibull_quantile(cdf.prob(v), target));
    return out;
}

}  // namespace hubwind
