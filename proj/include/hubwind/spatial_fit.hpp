#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "hubwind/spatial_model.hpp"

namespace hubwind {

/// A fitted monthly spatial model: hyperparameters, the station Cholesky
/// factor, and everything kriging needs. Immutable once constructed.
struct FittedSpatialModel {
    SpatialHyperparams theta{0.01, 1.0, 0.0, 0.0, 0.0};
    std::vector<GeoLocation> stations;
    std::vector<std::string> station_ids;   ///< optional labels, may be empty
    Eigen::VectorXd gam_variances;
    Eigen::VectorXd gwa_mean_sqrt;
    Eigen::VectorXd mu;                     ///< mean at the stations
    Eigen::MatrixXd covariance;             ///< C over the stations
    Eigen::LLT<Eigen::MatrixXd> chol;       ///< factor of covariance
    std::string month;
    double target_height = 100.0;
    double log_lik = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string status;

    /// Persisted form (no factor; rebuilt on load). Format-tagged.
    nlohmann::json to_json() const;
    static FittedSpatialModel from_json(const nlohmann::json& j);
};

/// Data-driven starting point: practical-range heuristic for kappa, the SD
/// of station means for sigma_f, a tenth of that for the nugget, and OLS of
/// station means on the atlas covariate for the fixed effects.
SpatialHyperparams initial_hyperparams(const MonthlyDataset& data);

struct SpatialFitOptions {
    int max_iterations = 500;
    double gradient_tol = 1e-6;
    double relative_ll_tol = 1e-8;
    double fd_step = 1e-5;
};

/// Maximum-likelihood fit of {kappa, sigma_f, sigma_eps, beta0, beta1} by
/// BFGS ascent; the positive parameters are optimized in log space. Returns
/// the model at the best point visited. A fit that hits the iteration cap
/// is returned with converged = false (status "max_iterations").
FittedSpatialModel fit_hyperparams(const MonthlyDataset& data,
                                   std::optional<SpatialHyperparams> init = std::nullopt,
                                   const SpatialFitOptions& opts = {});

/// Builds the derived quantities (mean, covariance, factor) for a known
/// theta; used when loading persisted models or in tests with fixed truth.
FittedSpatialModel assemble_model(const MonthlyDataset& data, const SpatialHyperparams& theta);

}  // namespace hubwind
