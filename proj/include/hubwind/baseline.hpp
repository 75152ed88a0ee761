#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace hubwind {

/// Linear interpolation of an hourly series (NaN = missing) onto the
/// 10-minute grid. Only consecutive present hours (one step apart) are
/// interpolated; wider gaps stay missing, and there is no extrapolation
/// past the endpoints. Output slot k corresponds to 10k minutes after the
/// first hourly slot; length is 6*(n-1)+1.
std::vector<double> hourly_to_ten_minute(std::span<const double> hourly);

/// Shear exponent of a site-specific 10 m / 100 m pair:
/// ln(w100/w10)/ln(10). NaN when either speed is non-positive (that time
/// point yields no baseline value).
inline double site_alpha(double w10, double w100) {
    if (!(w10 > 0) || !(w100 > 0)) return std::nan("");
    return std::log(w100 / w10) / std::log(10.0);
}

/// The reanalysis-style benchmark series: per time point, the implied
/// exponent extrapolates the 100 m speed to the hub height,
/// w100 * (h/100)^alpha. Inputs are aligned 10-minute series.
std::vector<double> power_law_series(std::span<const double> w10, std::span<const double> w100,
                                     double hub_height);

}  // namespace hubwind
