#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace hubwind {

/// Reanalysis wind speeds at the three profile heights 50/75/100 m.
struct VerticalProfile {
    static constexpr std::array<double, 3> kHeights = {50.0, 75.0, 100.0};
    std::array<double, 3> speeds;  ///< m/s at 50, 75, 100 m

    explicit VerticalProfile(std::array<double, 3> s) : speeds(s) {
        for (double v : s)
            if (!std::isfinite(v) || v < 0)
                throw std::invalid_argument("profile speeds must be finite and >= 0");
    }
};

struct ProfileSample {
    double height_m;
    double speed_ms;
};

/// Quadratic through the three profile knots, sampled every 5 m over
/// [50, 100]: 11 pseudo-observations per time step. Values that dip below
/// zero are clamped (the quadratic is unconstrained, speeds are not).
inline std::array<ProfileSample, 11> densify_profile(const VerticalProfile& p) {
    // Lagrange form on knots (50, 75, 100); denominators are fixed.
    const double y50 = p.speeds[0], y75 = p.speeds[1], y100 = p.speeds[2];
    std::array<ProfileSample, 11> out;
    for (int i = 0; i < 11; ++i) {
        const double h = 50.0 + 5.0 * i;
        const double l50 = (h - 75.0) * (h - 100.0) / ((50.0 - 75.0) * (50.0 - 100.0));
        const double l75 = (h - 50.0) * (h - 100.0) / ((75.0 - 50.0) * (75.0 - 100.0));
        const double l100 = (h - 50.0) * (h - 75.0) / ((100.0 - 50.0) * (100.0 - 75.0));
        const double v = y50 * l50 + y75 * l75 + y100 * l100;
        out[i] = {h, v > 0 ? v : 0.0};
    }
    return out;
}

/// Power-law interpolation of a climatological mean between the 50 m and
/// 100 m atlas levels: alpha = ln(mean100/mean50)/ln 2, value at h follows
/// mean100 * (h/100)^alpha.
inline double gwa_mean_at_height(double mean50, double mean100, double h) {
    if (!(mean50 > 0) || !(mean100 > 0))
        throw std::domain_error("atlas means must be positive");
    if (!(h >= 50.0 && h <= 100.0))
        throw std::domain_error("atlas interpolation height must lie in [50, 100]");
    const double alpha = std::log(mean100 / mean50) / std::log(2.0);
    return mean100 * std::pow(h / 100.0, alpha);
}

}  // namespace hubwind
