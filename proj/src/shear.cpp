#include "hubwind/shear.hpp"

#include <Eigen/Dense>

#include "hubwind/wind.hpp"

namespace hubwind {

HarmonicAlphaModel fit_harmonic_alpha(const ShearTrainingSet& train, int harmonics) {
    if (harmonics < 0) throw std::invalid_argument("harmonic count must be >= 0");
    const int p = 2 * harmonics + 1;

    std::vector<double> alphas;
    std::vector<double> hours;
    alphas.reserve(train.size());
    hours.reserve(train.size());
    for (const ShearRow& r : train) {
        const double w10 = square_back(r.sqrt_w10);
        const double wh = square_back(r.sqrt_wh);
        if (auto a = implied_alpha(w10, wh, r.height_m)) {
            alphas.push_back(*a);
            hours.push_back(r.hour);
        }
    }
    const int n = static_cast<int>(alphas.size());
    if (n < p)
        throw std::runtime_error("harmonic alpha fit needs at least " + std::to_string(p) +
                                 " usable rows, got " + std::to_string(n));

    Eigen::MatrixXd X(n, p);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        X(i, 0) = 1.0;
        for (int k = 1; k <= harmonics; ++k) {
            const double w = 2.0 * M_PI * hours[i] * k / 24.0;
            X(i, 2 * k - 1) = std::sin(w);
            X(i, 2 * k) = std::cos(w);
        }
        y(i) = alphas[i];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < p)
        throw std::runtime_error("harmonic alpha design is rank deficient");
    const Eigen::VectorXd beta = qr.solve(y);

    HarmonicAlphaModel model;
    model.alpha0 = beta(0);
    model.beta_sin.resize(harmonics);
    model.beta_cos.resize(harmonics);
    for (int k = 1; k <= harmonics; ++k) {
        model.beta_sin[k - 1] = beta(2 * k - 1);
        model.beta_cos[k - 1] = beta(2 * k);
    }
    return model;
}

}  // namespace hubwind
