#include "hubwind/spatial_fit.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "hubwind/bfgs.hpp"

namespace hubwind {

namespace {

Eigen::VectorXd pack(const SpatialHyperparams& t) {
    Eigen::VectorXd u(5);
    u << std::log(t.kappa), std::log(t.sigma_f), std::log(std::max(t.sigma_eps, 1e-8)), t.beta0,
        t.beta1;
    return u;
}

SpatialHyperparams unpack(const Eigen::VectorXd& u) {
    return SpatialHyperparams{std::exp(u(0)), std::exp(u(1)), std::exp(u(2)), u(3), u(4)};
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
        const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
        m = 0.5 * (m + lo);
    }
    return m;
}

}  // namespace

SpatialHyperparams initial_hyperparams(const MonthlyDataset& data) {
    data.validate();
    const int n = data.n_stations();

    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dists.push_back(euclidean_distance(data.stations[static_cast<std::size_t>(i)],
                                               data.stations[static_cast<std::size_t>(j)]));
    const double med = median_of(std::move(dists));
    const double kappa0 = med > 0 ? 3.0 / med : 0.1;

    const Eigen::VectorXd station_means = data.sqrt_speeds.colwise().mean();
    const double sd = std::sqrt(
        (station_means.array() - station_means.mean()).square().sum() / std::max(1, n - 1));
    const double sigma_f0 = std::max(sd, 1e-3);

    // OLS of station means on the atlas covariate.
    const double cx = data.gwa_mean_sqrt.mean();
    const double cy = station_means.mean();
    const double sxx = (data.gwa_mean_sqrt.array() - cx).square().sum();
    double beta1 = 0.0;
    if (sxx > 1e-12)
        beta1 = ((data.gwa_mean_sqrt.array() - cx) * (station_means.array() - cy)).sum() / sxx;
    const double beta0 = cy - beta1 * cx;

    return SpatialHyperparams{kappa0, sigma_f0, 0.1 * sigma_f0, beta0, beta1};
}

FittedSpatialModel assemble_model(const MonthlyDataset& data, const SpatialHyperparams& theta) {
    FittedSpatialModel m;
    m.theta = theta;
    m.stations = data.stations;
    m.gam_variances = data.gam_variances;
    m.gwa_mean_sqrt = data.gwa_mean_sqrt;
    m.mu = mean_vector(data, theta);
    m.covariance = build_covariance(data.stations, theta, data.gam_variances);
    m.chol = cholesky_with_jitter(m.covariance);
    if (m.chol.info() != Eigen::Success)
        throw std::runtime_error("station covariance is not positive definite");
    m.month = data.month;
    m.target_height = data.target_height;
    return m;
}

FittedSpatialModel fit_hyperparams(const MonthlyDataset& data,
                                   std::optional<SpatialHyperparams> init,
                                   const SpatialFitOptions& opts) {
    data.validate();
    const SpatialHyperparams start = init ? *init : initial_hyperparams(data);

    const auto objective = [&data](const Eigen::VectorXd& u) {
        return -log_likelihood(data, unpack(u));
    };

    BfgsOptions bopts;
    bopts.max_iterations = opts.max_iterations;
    bopts.gradient_tol = opts.gradient_tol;
    bopts.relative_f_tol = opts.relative_ll_tol;
    bopts.fd_step = opts.fd_step;
    const BfgsResult r = bfgs_minimize(objective, pack(start), bopts);

    FittedSpatialModel m = assemble_model(data, unpack(r.x));
    m.log_lik = -r.f;
    m.iterations = r.iterations;
    m.converged = r.converged;
    m.status = r.status;
    return m;
}

nlohmann::json FittedSpatialModel::to_json() const {
    nlohmann::json j;
    j["format"] = "hubwind.spatial.v1";
    j["month"] = month;
    j["target_height"] = target_height;
    j["theta"] = {{"kappa", theta.kappa},
                  {"sigma_f", theta.sigma_f},
                  {"sigma_eps", theta.sigma_eps},
                  {"beta0", theta.beta0},
                  {"beta1", theta.beta1}};
    nlohmann::json st = nlohmann::json::array();
    for (std::size_t i = 0; i < stations.size(); ++i) {
        nlohmann::json s;
        s["id"] = i < station_ids.size() ? station_ids[i] : "";
        s["x_km"] = stations[i].x_km;
        s["y_km"] = stations[i].y_km;
        s["gam_variance"] = gam_variances(static_cast<long>(i));
        s["gwa_mean_sqrt"] = gwa_mean_sqrt(static_cast<long>(i));
        s["mu"] = mu(static_cast<long>(i));
        st.push_back(std::move(s));
    }
    j["stations"] = std::move(st);
    j["log_lik"] = log_lik;
    j["iterations"] = iterations;
    j["converged"] = converged;
    j["status"] = status;
    return j;
}

FittedSpatialModel FittedSpatialModel::from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "hubwind.spatial.v1")
        throw std::runtime_error("unsupported spatial model format tag");
    const auto& t = j.at("theta");
    const SpatialHyperparams theta{t.at("kappa").get<double>(), t.at("sigma_f").get<double>(),
                                   t.at("sigma_eps").get<double>(), t.at("beta0").get<double>(),
                                   t.at("beta1").get<double>()};
    theta.validate();

    const auto& st = j.at("stations");
    const long n = static_cast<long>(st.size());
    MonthlyDataset data;
    data.sqrt_speeds = Eigen::MatrixXd::Zero(1, n);  // placeholder; not persisted
    data.gam_variances = Eigen::VectorXd(n);
    data.gwa_mean_sqrt = Eigen::VectorXd(n);
    data.month = j.at("month").get<std::string>();
    data.target_height = j.at("target_height").get<double>();
    std::vector<std::string> ids;
    for (long i = 0; i < n; ++i) {
        const auto& s = st[static_cast<std::size_t>(i)];
        data.stations.push_back(GeoLocation{s.at("x_km").get<double>(), s.at("y_km").get<double>()});
        data.gam_variances(i) = s.at("gam_variance").get<double>();
        data.gwa_mean_sqrt(i) = s.at("gwa_mean_sqrt").get<double>();
        ids.push_back(s.value("id", ""));
    }

    FittedSpatialModel m = assemble_model(data, theta);
    m.station_ids = std::move(ids);
    m.log_lik = j.value("log_lik", 0.0);
    m.iterations = j.value("iterations", 0);
    m.converged = j.value("converged", false);
    m.status = j.value("status", "");
    return m;
}

}  // namespace hubwind
