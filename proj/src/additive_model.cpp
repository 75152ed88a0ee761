#include "hubwind/additive_model.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "hubwind/wind.hpp"

namespace hubwind {

namespace {

struct BlockLayout {
    int p;          // total columns
    int s1_off, s1_dim;
    int s2_off, s2_dim;
    int s3_off, s3_dim;  // s3_dim per margin; block is s3_dim^2 wide
    int lin_off;         // sin, cos, u, v
};

BlockLayout layout_for(const AdditiveModelConfig& cfg) {
    BlockLayout l;
    l.s1_off = 1;
    l.s1_dim = cfg.s1_dim;
    l.s2_off = l.s1_off + l.s1_dim;
    l.s2_dim = cfg.s2_dim;
    l.s3_off = l.s2_off + l.s2_dim;
    l.s3_dim = cfg.s3_dim;
    l.lin_off = l.s3_off + l.s3_dim * l.s3_dim;
    l.p = l.lin_off + 4;
    return l;
}

// Range of the smooth (centered) columns: everything between the intercept
// and the trailing linear block.
std::pair<int, int> smooth_cols(const BlockLayout& l) { return {1, l.lin_off}; }

void fill_row(Eigen::RowVectorXd& row, const BlockLayout& l, const BSplineBasis& b1,
              const BSplineBasis& b2, const BSplineBasis& b3h, const BSplineBasis& b3w,
              double sqrt_w10, double w10, double h, double hour, double u, double v) {
    row.setZero();
    row(0) = 1.0;
    row.segment(l.s1_off, l.s1_dim) = b1.evaluate(sqrt_w10);
    row.segment(l.s2_off, l.s2_dim) = b2.evaluate(h);
    const Eigen::RowVectorXd bh = b3h.evaluate(h);
    const Eigen::RowVectorXd bw = b3w.evaluate(w10);
    for (int i = 0; i < l.s3_dim; ++i)
        row.segment(l.s3_off + i * l.s3_dim, l.s3_dim) = bh(i) * bw;
    const double w = 2.0 * M_PI * hour / 24.0;
    row(l.lin_off + 0) = std::sin(w);
    row(l.lin_off + 1) = std::cos(w);
    row(l.lin_off + 2) = u;
    row(l.lin_off + 3) = v;
}

// Penalty matrix for a given lambda vector (plus the ridge floor).
Eigen::MatrixXd penalty_matrix(const BlockLayout& l, const Eigen::MatrixXd& s1,
                               const Eigen::MatrixXd& s2, const Eigen::MatrixXd& s3m,
                               const std::array<double, 4>& lam, double ridge) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(l.p, l.p) * ridge;
    s.block(l.s1_off, l.s1_off, l.s1_dim, l.s1_dim) += lam[0] * s1;
    s.block(l.s2_off, l.s2_off, l.s2_dim, l.s2_dim) += lam[1] * s2;
    // Tensor block in height-major order: S_h (x) I penalizes the height
    // margin, I (x) S_w the wind margin.
    const int m = l.s3_dim;
    for (int i = 0; i < m; ++i) {
        s.block(l.s3_off + i * m, l.s3_off + i * m, m, m) += lam[3] * s3m;
        for (int j = 0; j < m; ++j) {
            if (s3m(i, j) == 0.0) continue;
            for (int k = 0; k < m; ++k)
                s(l.s3_off + i * m + k, l.s3_off + j * m + k) += lam[2] * s3m(i, j);
        }
    }
    return s;
}

struct GcvResult {
    double gcv;
    double sse;
    double edf;
    Eigen::VectorXd beta;
};

GcvResult evaluate_lambdas(const BlockLayout& l, const Eigen::MatrixXd& gram,
                           const Eigen::VectorXd& xty, double yty, double n,
                           const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2,
                           const Eigen::MatrixXd& s3m, const std::array<double, 4>& lam,
                           double ridge) {
    const Eigen::MatrixXd a = gram + penalty_matrix(l, s1, s2, s3m, lam, ridge);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("additive model normal equations are singular");
    GcvResult r;
    r.beta = ldlt.solve(xty);
    r.edf = ldlt.solve(gram).trace();
    r.sse = std::max(0.0, yty - 2.0 * r.beta.dot(xty) + r.beta.dot(gram * r.beta));
    const double denom = std::max(1.0, n - r.edf);
    r.gcv = n * r.sse / (denom * denom);
    return r;
}

}  // namespace

AdditiveShearModel AdditiveShearModel::fit(const ShearTrainingSet& train,
                                           const AdditiveModelConfig& cfg) {
    const BlockLayout l = layout_for(cfg);
    const int n = static_cast<int>(train.size());
    if (n < l.p)
        throw std::runtime_error("additive model needs at least " + std::to_string(l.p) +
                                 " rows, got " + std::to_string(n));

    AdditiveShearModel m;
    m.cfg_ = cfg;

    // Training ranges; widened slightly when a covariate is degenerate.
    auto range_of = [&](auto&& get) {
        double lo = get(train.front()), hi = lo;
        for (const ShearRow& r : train) {
            lo = std::min(lo, get(r));
            hi = std::max(hi, get(r));
        }
        if (hi - lo < 1e-9) {
            lo -= 0.5;
            hi += 0.5;
        }
        return std::pair{lo, hi};
    };
    std::tie(m.sqrt_w10_lo_, m.sqrt_w10_hi_) = range_of([](const ShearRow& r) { return r.sqrt_w10; });
    std::tie(m.h_lo_, m.h_hi_) = range_of([](const ShearRow& r) { return r.height_m; });
    m.w10_lo_ = m.sqrt_w10_lo_ * m.sqrt_w10_lo_;
    m.w10_hi_ = m.sqrt_w10_hi_ * m.sqrt_w10_hi_;

    m.basis_s1_ = BSplineBasis(m.sqrt_w10_lo_, m.sqrt_w10_hi_, cfg.s1_dim);
    m.basis_s2_ = BSplineBasis(m.h_lo_, m.h_hi_, cfg.s2_dim);
    m.basis_s3h_ = BSplineBasis(m.h_lo_, m.h_hi_, cfg.s3_dim);
    m.basis_s3w_ = BSplineBasis(m.w10_lo_, m.w10_hi_, cfg.s3_dim);

    Eigen::MatrixXd x(n, l.p);
    Eigen::VectorXd y(n);
    Eigen::RowVectorXd row(l.p);
    for (int i = 0; i < n; ++i) {
        const ShearRow& r = train[static_cast<std::size_t>(i)];
        fill_row(row, l, m.basis_s1_, m.basis_s2_, m.basis_s3h_, m.basis_s3w_, r.sqrt_w10,
                 r.sqrt_w10 * r.sqrt_w10, r.height_m, r.hour, r.u, r.v);
        x.row(i) = row;
        y(i) = r.sqrt_wh;
    }

    const auto [c0, c1] = smooth_cols(l);
    m.col_means_ = x.middleCols(c0, c1 - c0).colwise().mean().transpose();
    x.middleCols(c0, c1 - c0).rowwise() -= m.col_means_.transpose();

    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(l.p, l.p);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(x.transpose());
    gram = gram.selfadjointView<Eigen::Lower>();
    const Eigen::VectorXd xty = x.transpose() * y;
    const double yty = y.squaredNorm();

    const Eigen::MatrixXd s1 = second_difference_penalty(cfg.s1_dim);
    const Eigen::MatrixXd s2 = second_difference_penalty(cfg.s2_dim);
    const Eigen::MatrixXd s3m = second_difference_penalty(cfg.s3_dim);

    std::vector<double> grid(static_cast<std::size_t>(cfg.lambda_grid_points));
    for (int i = 0; i < cfg.lambda_grid_points; ++i) {
        const double t = cfg.lambda_grid_points == 1
                             ? 0.5
                             : static_cast<double>(i) / (cfg.lambda_grid_points - 1);
        grid[static_cast<std::size_t>(i)] =
            std::pow(10.0, cfg.lambda_log10_min + t * (cfg.lambda_log10_max - cfg.lambda_log10_min));
    }

    std::array<double, 4> lam{1.0, 1.0, 1.0, 1.0};
    GcvResult best = evaluate_lambdas(l, gram, xty, yty, n, s1, s2, s3m, lam, cfg.ridge);
    for (int sweep = 0; sweep < cfg.gcv_sweeps; ++sweep) {
        for (int k = 0; k < 4; ++k) {
            double best_lam = lam[static_cast<std::size_t>(k)];
            for (double cand : grid) {
                std::array<double, 4> trial = lam;
                trial[static_cast<std::size_t>(k)] = cand;
                const GcvResult r =
                    evaluate_lambdas(l, gram, xty, yty, n, s1, s2, s3m, trial, cfg.ridge);
                if (r.gcv < best.gcv) {
                    best = r;
                    best_lam = cand;
                }
            }
            lam[static_cast<std::size_t>(k)] = best_lam;
        }
    }

    m.lambdas_ = lam;
    m.coef_ = best.beta;
    m.edf_ = best.edf;
    const double sigma2 = best.sse / std::max(1.0, static_cast<double>(n) - best.edf);
    m.sigma_ = std::max(std::sqrt(sigma2), 1e-6);
    return m;
}

Eigen::RowVectorXd AdditiveShearModel::design_row(double sqrt_w10, double h, double hour,
                                                  double u, double v) const {
    const BlockLayout l = layout_for(cfg_);
    const double sw = std::clamp(sqrt_w10, sqrt_w10_lo_, sqrt_w10_hi_);
    const double w10 = std::clamp(sw * sw, w10_lo_, w10_hi_);
    Eigen::RowVectorXd row(l.p);
    fill_row(row, l, basis_s1_, basis_s2_, basis_s3h_, basis_s3w_, sw, w10, h, hour, u, v);
    const auto [c0, c1] = smooth_cols(l);
    row.segment(c0, c1 - c0) -= col_means_.transpose();
    return row;
}

double AdditiveShearModel::predict_sqrt(double w10, double h, double hour,
                                        double direction_deg) const {
    if (!(h >= 50.0 && h <= 100.0))
        throw std::domain_error("prediction height must lie in [50, 100] m");
    const auto [u, v] = direction_components(direction_deg);
    return design_row(sqrt_transform(w10), h, hour, u, v).dot(coef_);
}

nlohmann::json AdditiveShearModel::to_json() const {
    nlohmann::json j;
    j["format"] = "hubwind.shear.v1";
    j["dims"] = {cfg_.s1_dim, cfg_.s2_dim, cfg_.s3_dim};
    j["knots_s1"] = basis_s1_.knots();
    j["knots_s2"] = basis_s2_.knots();
    j["knots_s3h"] = basis_s3h_.knots();
    j["knots_s3w"] = basis_s3w_.knots();
    j["col_means"] = std::vector<double>(col_means_.begin(), col_means_.end());
    j["coef"] = std::vector<double>(coef_.begin(), coef_.end());
    j["lambdas"] = lambdas_;
    j["sigma"] = sigma_;
    j["edf"] = edf_;
    j["sqrt_w10_range"] = {sqrt_w10_lo_, sqrt_w10_hi_};
    j["w10_range"] = {w10_lo_, w10_hi_};
    j["h_range"] = {h_lo_, h_hi_};
    return j;
}

AdditiveShearModel AdditiveShearModel::from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "hubwind.shear.v1")
        throw std::runtime_error("unsupported shear model format tag");
    AdditiveShearModel m;
    m.cfg_.s1_dim = j.at("dims").at(0).get<int>();
    m.cfg_.s2_dim = j.at("dims").at(1).get<int>();
    m.cfg_.s3_dim = j.at("dims").at(2).get<int>();
    m.basis_s1_ = BSplineBasis::from_knots(j.at("knots_s1").get<std::vector<double>>());
    m.basis_s2_ = BSplineBasis::from_knots(j.at("knots_s2").get<std::vector<double>>());
    m.basis_s3h_ = BSplineBasis::from_knots(j.at("knots_s3h").get<std::vector<double>>());
    m.basis_s3w_ = BSplineBasis::from_knots(j.at("knots_s3w").get<std::vector<double>>());
    const auto means = j.at("col_means").get<std::vector<double>>();
    m.col_means_ = Eigen::Map<const Eigen::VectorXd>(means.data(), static_cast<long>(means.size()));
    const auto coef = j.at("coef").get<std::vector<double>>();
    m.coef_ = Eigen::Map<const Eigen::VectorXd>(coef.data(), static_cast<long>(coef.size()));
    m.lambdas_ = j.at("lambdas").get<std::array<double, 4>>();
    m.sigma_ = j.at("sigma").get<double>();
    m.edf_ = j.value("edf", 0.0);
    m.sqrt_w10_lo_ = j.at("sqrt_w10_range").at(0).get<double>();
    m.sqrt_w10_hi_ = j.at("sqrt_w10_range").at(1).get<double>();
    m.w10_lo_ = j.at("w10_range").at(0).get<double>();
    m.w10_hi_ = j.at("w10_range").at(1).get<double>();
    m.h_lo_ = j.at("h_range").at(0).get<double>();
    m.h_hi_ = j.at("h_range").at(1).get<double>();

    const BlockLayout l = layout_for(m.cfg_);
    if (m.coef_.size() != l.p || m.col_means_.size() != l.lin_off - 1)
        throw std::runtime_error("shear model file is inconsistent with its dimensions");
    return m;
}

}  // namespace hubwind
