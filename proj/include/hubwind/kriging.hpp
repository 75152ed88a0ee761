#pragma once

#include <map>
#include <mutex>

#include "hubwind/spatial_fit.hpp"

namespace hubwind {

/// Posterior at one target for one time row, on both scales.
struct PredictionResult {
    double sqrt_mean = 0.0;
    double sqrt_var = 0.0;
    double speed_mean = 0.0;  ///< E[W] = m^2 + v, exact for a Gaussian sqrt posterior
    double lo = 0.0;          ///< squared lower sqrt endpoint, floored at 0
    double hi = 0.0;          ///< squared upper sqrt endpoint
};

struct KrigingTarget {
    std::string id;
    GeoLocation loc;
    double gwa_mean_sqrt = 0.0;
};

/// Exact GP conditioning from a fitted monthly model to a set of targets.
/// Kriging weights are computed once per missing-station pattern and cached,
/// so a month of rows costs one solve per distinct outage pattern.
///
/// Targets carry the nugget but not any station's GAM variance: sigma_s is
/// a property of the extrapolation at stations, not of an unmonitored site.
class KrigingPredictor {
public:
    KrigingPredictor(const FittedSpatialModel& model, std::vector<KrigingTarget> targets,
                     double interval_level = 0.95);

    /// One time row of sqrt-scale station values; NaN marks a missing
    /// station. Rows with no stations present fall back to the prior.
    std::vector<PredictionResult> predict_row(const Eigen::VectorXd& y) const;

    /// Batched rows (n_t x n_s). Row k of the result equals
    /// predict_row(rows.row(k)).
    std::vector<std::vector<PredictionResult>> predict_series(const Eigen::MatrixXd& rows) const;

    const std::vector<KrigingTarget>& targets() const { return targets_; }
    double interval_level() const { return level_; }

private:
    struct Pattern {
        std::vector<int> present;
        Eigen::MatrixXd weights;   ///< n_targets x n_present
        Eigen::VectorXd mu_p;      ///< station mean restricted to the pattern
        Eigen::VectorXd post_var;  ///< per-target posterior variance
    };

    const Pattern& pattern_for(const std::vector<char>& mask) const;

    const FittedSpatialModel& model_;
    std::vector<KrigingTarget> targets_;
    double level_;
    double z_;
    Eigen::VectorXd mu_targets_;
    Eigen::MatrixXd cross_;  ///< n_targets x n_stations Matern cross-covariance

    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<char>, Pattern> pattern_cache_;
};

}  // namespace hubwind
