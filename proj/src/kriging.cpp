#include "hubwind/kriging.hpp"

#include <cmath>

#include "hubwind/matern.hpp"
#include "hubwind/normal.hpp"
#include "hubwind/wind.hpp"

namespace hubwind {

KrigingPredictor::KrigingPredictor(const FittedSpatialModel& model,
                                   std::vector<KrigingTarget> targets, double interval_level)
    : model_(model), targets_(std::move(targets)), level_(interval_level) {
    if (!(level_ > 0.0 && level_ < 1.0))
        throw std::domain_error("interval level must lie in (0, 1)");
    z_ = normal_quantile(0.5 + level_ / 2.0);

    const long nt = static_cast<long>(targets_.size());
    const long ns = static_cast<long>(model_.stations.size());
    mu_targets_.resize(nt);
    cross_.resize(nt, ns);
    for (long t = 0; t < nt; ++t) {
        const KrigingTarget& tgt = targets_[static_cast<std::size_t>(t)];
        mu_targets_(t) = model_.theta.beta0 + model_.theta.beta1 * tgt.gwa_mean_sqrt;
        for (long s = 0; s < ns; ++s)
            cross_(t, s) =
                matern_nu1(euclidean_distance(tgt.loc, model_.stations[static_cast<std::size_t>(s)]),
                           model_.theta.kappa, model_.theta.sigma_f);
    }
}

const KrigingPredictor::Pattern& KrigingPredictor::pattern_for(
    const std::vector<char>& mask) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = pattern_cache_.find(mask);
    if (it != pattern_cache_.end()) return it->second;

    Pattern pat;
    for (int s = 0; s < static_cast<int>(mask.size()); ++s)
        if (mask[static_cast<std::size_t>(s)]) pat.present.push_back(s);

    const long np = static_cast<long>(pat.present.size());
    const long nt = static_cast<long>(targets_.size());
    const double prior =
        model_.theta.sigma_f * model_.theta.sigma_f + model_.theta.sigma_eps * model_.theta.sigma_eps;

    if (np == 0) {
        pat.weights.resize(nt, 0);
        pat.mu_p.resize(0);
        pat.post_var = Eigen::VectorXd::Constant(nt, prior);
    } else {
        Eigen::MatrixXd c_pp(np, np);
        Eigen::MatrixXd c_tp(nt, np);
        pat.mu_p.resize(np);
        for (long a = 0; a < np; ++a) {
            const int sa = pat.present[static_cast<std::size_t>(a)];
            pat.mu_p(a) = model_.mu(sa);
            c_tp.col(a) = cross_.col(sa);
            for (long b = 0; b < np; ++b)
                c_pp(a, b) = model_.covariance(sa, pat.present[static_cast<std::size_t>(b)]);
        }
        const Eigen::LLT<Eigen::MatrixXd> llt = cholesky_with_jitter(c_pp);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("kriging sub-covariance is not positive definite");
        pat.weights = llt.solve(c_tp.transpose()).transpose();
        pat.post_var.resize(nt);
        for (long t = 0; t < nt; ++t) {
            const double reduction = pat.weights.row(t).dot(c_tp.row(t));
            pat.post_var(t) = std::max(0.0, prior - reduction);
        }
    }
    return pattern_cache_.emplace(mask, std::move(pat)).first->second;
}

std::vector<PredictionResult> KrigingPredictor::predict_row(const Eigen::VectorXd& y) const {
    const long ns = static_cast<long>(model_.stations.size());
    if (y.size() != ns) throw std::invalid_argument("observation vector has wrong length");

    std::vector<char> mask(static_cast<std::size_t>(ns));
    for (long s = 0; s < ns; ++s) mask[static_cast<std::size_t>(s)] = std::isfinite(y(s)) ? 1 : 0;
    const Pattern& pat = pattern_for(mask);

    const long np = static_cast<long>(pat.present.size());
    Eigen::VectorXd resid(np);
    for (long a = 0; a < np; ++a)
        resid(a) = y(pat.present[static_cast<std::size_t>(a)]) - pat.mu_p(a);

    const long nt = static_cast<long>(targets_.size());
    std::vector<PredictionResult> out(static_cast<std::size_t>(nt));
    for (long t = 0; t < nt; ++t) {
        PredictionResult& r = out[static_cast<std::size_t>(t)];
        r.sqrt_mean = mu_targets_(t) + (np > 0 ? pat.weights.row(t).dot(resid) : 0.0);
        r.sqrt_var = pat.post_var(t);
        const double sd = std::sqrt(r.sqrt_var);
        r.speed_mean = r.sqrt_mean * r.sqrt_mean + r.sqrt_var;
        r.lo = square_back(r.sqrt_mean - z_ * sd);
        const double hi_sqrt = r.sqrt_mean + z_ * sd;
        r.hi = hi_sqrt * hi_sqrt;
    }
    return out;
}

std::vector<std::vector<PredictionResult>> KrigingPredictor::predict_series(
    const Eigen::MatrixXd& rows) const {
    std::vector<std::vector<PredictionResult>> out;
    out.reserve(static_cast<std::size_t>(rows.rows()));
    for (long k = 0; k < rows.rows(); ++k) out.push_back(predict_row(rows.row(k).transpose()));
    return out;
}

}  // namespace hubwind
