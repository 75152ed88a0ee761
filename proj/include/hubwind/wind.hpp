#pragma once

#include <cmath>
#include <stdexcept>

namespace hubwind {

/// East-west / north-south components of the unit flow vector.
struct DirectionComponents {
    double u;  ///< positive = flow toward east
    double v;  ///< positive = flow toward north
};

/// Direction uses the meteorological FROM convention: 0 = northerly wind
/// (air moving south), 270 = westerly (air moving east). The flow vector is
/// therefore (-sin, -cos) of the direction angle.
inline DirectionComponents direction_components(double direction_deg) {
    const double rad = direction_deg * M_PI / 180.0;
    return {-std::sin(rad), -std::cos(rad)};
}

inline double normalize_direction(double direction_deg) {
    double d = std::fmod(direction_deg, 360.0);
    if (d < 0) d += 360.0;
    return d;
}

/// 10-minute mean wind observation.
struct WindSample {
    double speed_ms;        ///< >= 0
    double direction_deg;   ///< [0, 360), FROM convention

    WindSample(double speed, double direction)
        : speed_ms(speed), direction_deg(normalize_direction(direction)) {
        if (!(speed >= 0) || !std::isfinite(speed))
            throw std::domain_error("wind speed must be finite and non-negative");
    }
};

/// Height above ground, metres. Hub and profile heights live in [10, 100].
struct HeightLevel {
    double meters;

    explicit HeightLevel(double h) : meters(h) {
        if (!(h >= 10.0 && h <= 100.0))
            throw std::domain_error("height must lie in [10, 100] m");
    }
};

inline double sqrt_transform(double speed_ms) {
    if (!(speed_ms >= 0))
        throw std::domain_error("cannot sqrt-transform a negative speed");
    return std::sqrt(speed_ms);
}

/// Inverse of sqrt_transform. Negative inputs (tiny Gaussian excursions)
/// clamp to zero.
inline double square_back(double x) {
    const double c = x > 0 ? x : 0.0;
    return c * c;
}

}  // namespace hubwind
