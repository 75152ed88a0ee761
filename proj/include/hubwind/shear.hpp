#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hubwind {

/// One height-extrapolation training row: a (time, pseudo-height) pair from
/// the densified reanalysis profile. Rows are treated as independent.
struct ShearRow {
    double sqrt_w10;   ///< sqrt of 10 m wind, m/s^0.5
    double height_m;   ///< pseudo-observation height in [50, 100]
    double hour;       ///< hour of day in [0, 24)
    double u;          ///< east-west unit flow component
    double v;          ///< north-south unit flow component
    double sqrt_wh;    ///< response: sqrt of wind at height_m
};

using ShearTrainingSet = std::vector<ShearRow>;

/// W_h = W_10 * (h/10)^alpha
inline double power_law_extrapolate(double w10, double h, double alpha) {
    if (!(w10 >= 0) || !(h > 0))
        throw std::domain_error("power_law_extrapolate requires w10 >= 0 and h > 0");
    return w10 * std::pow(h / 10.0, alpha);
}

/// Shear exponent implied by a (10 m, h) speed pair. Undefined for
/// non-positive speeds; such rows are excluded from harmonic fitting.
inline std::optional<double> implied_alpha(double w10, double wh, double h) {
    if (!(w10 > 0) || !(wh > 0) || h == 10.0) return std::nullopt;
    return std::log(wh / w10) / std::log(h / 10.0);
}

/// Fixed-exponent power law. The 1/7 default is the textbook neutral value.
struct ConstantAlphaModel {
    double alpha = 1.0 / 7.0;

    double predict_speed(double w10, double h) const {
        return power_law_extrapolate(w10, h, alpha);
    }
};

/// alpha(t) = alpha0 + sum_i beta_sin[i] sin(2 pi t i / 24)
///                   + beta_cos[i] cos(2 pi t i / 24)
struct HarmonicAlphaModel {
    double alpha0 = 0.0;
    std::vector<double> beta_sin;  ///< one per harmonic
    std::vector<double> beta_cos;

    std::size_t harmonics() const { return beta_sin.size(); }

    double alpha_at(double hour) const {
        double a = alpha0;
        for (std::size_t i = 0; i < beta_sin.size(); ++i) {
            const double w = 2.0 * M_PI * hour * static_cast<double>(i + 1) / 24.0;
            a += beta_sin[i] * std::sin(w) + beta_cos[i] * std::cos(w);
        }
        return a;
    }

    double predict_speed(double w10, double h, double hour) const {
        return power_law_extrapolate(w10, h, alpha_at(hour));
    }
};

/// Ordinary least squares of implied alpha on an intercept plus P diurnal
/// harmonics. Rows with non-positive speeds are dropped. Throws if fewer
/// than 2P+1 usable rows remain or the design is rank deficient.
HarmonicAlphaModel fit_harmonic_alpha(const ShearTrainingSet& train, int harmonics);

}  // namespace hubwind
