#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "hubwind/geo.hpp"

namespace hubwind {

/// Hyperparameters of the monthly spatial model on the sqrt scale.
struct SpatialHyperparams {
    double kappa;      ///< Matern scale, 1/km, > 0
    double sigma_f;    ///< latent field SD, > 0
    double sigma_eps;  ///< micro-scale nugget SD, >= 0
    double beta0;      ///< mean intercept
    double beta1;      ///< coefficient on the atlas sqrt-mean covariate

    void validate() const {
        if (!(kappa > 0) || !(sigma_f > 0) || !(sigma_eps >= 0))
            throw std::invalid_argument("spatial hyperparameters out of range");
    }
};

/// One month of sqrt-scale hub-height estimates at the stations, treated as
/// independent temporal replicates of the spatial field. Rows containing a
/// missing station have already been dropped (and counted) — the likelihood
/// needs one shared covariance across replicates.
struct MonthlyDataset {
    std::vector<GeoLocation> stations;
    Eigen::MatrixXd sqrt_speeds;     ///< n_t x n_s, no missing entries
    Eigen::VectorXd gam_variances;   ///< per-station sigma_s^2 (Sigma_GAM diagonal)
    Eigen::VectorXd gwa_mean_sqrt;   ///< per-station atlas sqrt-mean covariate
    double target_height = 100.0;
    std::string month;               ///< "YYYY-MM"
    std::size_t dropped_rows = 0;

    int n_stations() const { return static_cast<int>(stations.size()); }
    int n_replicates() const { return static_cast<int>(sqrt_speeds.rows()); }

    void validate() const;
};

/// Mean vector mu_i = beta0 + beta1 * gwa_mean_sqrt_i.
Eigen::VectorXd mean_vector(const MonthlyDataset& data, const SpatialHyperparams& theta);

/// Station covariance C = Sigma_f + Sigma_GAM + sigma_eps^2 I.
Eigen::MatrixXd build_covariance(const std::vector<GeoLocation>& stations,
                                 const SpatialHyperparams& theta,
                                 const Eigen::VectorXd& gam_variances);

/// Cholesky with the jitter-retry policy: on failure add 1e-8 * mean(diag)
/// to the diagonal, escalating 10x, at most 3 retries.
Eigen::LLT<Eigen::MatrixXd> cholesky_with_jitter(Eigen::MatrixXd c);

/// Replicated Gaussian log-likelihood (without the 2 pi constant):
///   -1/2 sum_t [ (y_t - mu)' C^-1 (y_t - mu) + log det C ]
/// One Cholesky of C is shared across all replicates. Returns -infinity if
/// C cannot be factorized even with jitter.
double log_likelihood(const MonthlyDataset& data, const SpatialHyperparams& theta);

}  // namespace hubwind
