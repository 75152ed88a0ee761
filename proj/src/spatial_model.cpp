#include "hubwind/spatial_model.hpp"

#include <cmath>
#include <limits>

#include "hubwind/matern.hpp"

namespace hubwind {

void MonthlyDataset::validate() const {
    const int ns = n_stations();
    if (ns < 3) throw std::invalid_argument("spatial model needs at least 3 stations");
    if (sqrt_speeds.cols() != ns || gam_variances.size() != ns || gwa_mean_sqrt.size() != ns)
        throw std::invalid_argument("monthly dataset dimensions disagree");
    if (sqrt_speeds.rows() < 1) throw std::invalid_argument("monthly dataset has no replicates");
    if (!sqrt_speeds.allFinite() || !gam_variances.allFinite() || !gwa_mean_sqrt.allFinite())
        throw std::invalid_argument("monthly dataset contains non-finite values");
    if ((gam_variances.array() < 0).any())
        throw std::invalid_argument("GAM variances must be non-negative");
}

Eigen::VectorXd mean_vector(const MonthlyDataset& data, const SpatialHyperparams& theta) {
    return (theta.beta0 + theta.beta1 * data.gwa_mean_sqrt.array()).matrix();
}

Eigen::MatrixXd build_covariance(const std::vector<GeoLocation>& stations,
                                 const SpatialHyperparams& theta,
                                 const Eigen::VectorXd& gam_variances) {
    theta.validate();
    const int n = static_cast<int>(stations.size());
    if (gam_variances.size() != n)
        throw std::invalid_argument("gam_variances size does not match station count");
    Eigen::MatrixXd c(n, n);
    for (int i = 0; i < n; ++i) {
        c(i, i) = theta.sigma_f * theta.sigma_f + gam_variances(i) +
                  theta.sigma_eps * theta.sigma_eps;
        for (int j = i + 1; j < n; ++j) {
            const double v = matern_nu1(euclidean_distance(stations[static_cast<std::size_t>(i)],
                                                           stations[static_cast<std::size_t>(j)]),
                                        theta.kappa, theta.sigma_f);
            c(i, j) = v;
            c(j, i) = v;
        }
    }
    return c;
}

Eigen::LLT<Eigen::MatrixXd> cholesky_with_jitter(Eigen::MatrixXd c) {
    Eigen::LLT<Eigen::MatrixXd> llt(c);
    double jitter = 1e-8 * c.diagonal().mean();
    for (int attempt = 0; llt.info() != Eigen::Success && attempt < 3; ++attempt) {
        c.diagonal().array() += jitter;
        jitter *= 10.0;
        llt.compute(c);
    }
    return llt;
}

double log_likelihood(const MonthlyDataset& data, const SpatialHyperparams& theta) {
    data.validate();
    const Eigen::MatrixXd c = build_covariance(data.stations, theta, data.gam_variances);
    const Eigen::LLT<Eigen::MatrixXd> llt = cholesky_with_jitter(c);
    if (llt.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();

    double log_det = 0.0;
    for (int i = 0; i < c.rows(); ++i) log_det += std::log(llt.matrixL()(i, i));
    log_det *= 2.0;

    // Residual matrix (n_s x n_t); whitening it gives all quadratic forms.
    const Eigen::VectorXd mu = mean_vector(data, theta);
    Eigen::MatrixXd resid = data.sqrt_speeds.transpose();
    resid.colwise() -= mu;
    const Eigen::MatrixXd white = llt.matrixL().solve(resid);
    const double quad = white.squaredNorm();

    const double n_t = static_cast<double>(data.n_replicates());
    return -0.5 * (quad + n_t * log_det);
}

}  // namespace hubwind
