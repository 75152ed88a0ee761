#include "hubwind/bfgs.hpp"

#include <cmath>
#include <limits>

namespace hubwind {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BfgsResult bfgs_minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                         Eigen::VectorXd x0, const BfgsOptions& opts) {
    const int n = static_cast<int>(x0.size());
    BfgsResult result;
    result.x = x0;
    result.f = kInf;

    int evaluations = 0;
    auto eval = [&](const Eigen::VectorXd& x) {
        ++evaluations;
        const double f = objective(x);
        if (std::isfinite(f) && f < result.f) {
            result.f = f;
            result.x = x;
        }
        return f;
    };

    auto gradient = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd g(n);
        Eigen::VectorXd xp = x;
        for (int i = 0; i < n; ++i) {
            const double h = opts.fd_step;
            xp(i) = x(i) + h;
            const double fp = eval(xp);
            xp(i) = x(i) - h;
            const double fm = eval(xp);
            xp(i) = x(i);
            g(i) = (std::isfinite(fp) && std::isfinite(fm)) ? (fp - fm) / (2.0 * h) : 0.0;
        }
        return g;
    };

    Eigen::VectorXd x = std::move(x0);
    double f = eval(x);
    if (!std::isfinite(f)) {
        result.status = "infeasible start";
        result.evaluations = evaluations;
        return result;
    }
    Eigen::VectorXd g = gradient(x);
    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        result.iterations = iter + 1;
        if (g.norm() < opts.gradient_tol) {
            result.converged = true;
            result.status = "gradient";
            break;
        }

        Eigen::VectorXd direction = -(h_inv * g);
        double slope = g.dot(direction);
        if (!(slope < 0)) {  // not a descent direction; reset to steepest descent
            h_inv.setIdentity();
            direction = -g;
            slope = g.dot(direction);
        }

        // Armijo backtracking.
        constexpr double c1 = 1e-4;
        double step = 1.0;
        double f_new = kInf;
        Eigen::VectorXd x_new;
        bool accepted = false;
        for (int ls = 0; ls < 50; ++ls) {
            x_new = x + step * direction;
            f_new = eval(x_new);
            if (std::isfinite(f_new) && f_new <= f + c1 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            result.status = "stalled";
            break;
        }

        const Eigen::VectorXd g_new = gradient(x_new);
        const Eigen::VectorXd s = x_new - x;
        const Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            if (iter == 0) h_inv *= sy / y.squaredNorm();  // initial scaling
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
            const Eigen::MatrixXd v = identity - rho * s * y.transpose();
            h_inv = v * h_inv * v.transpose() + rho * s * s.transpose();
        }

        const double f_change = std::abs(f - f_new) / std::max(1.0, std::abs(f));
        x = x_new;
        f = f_new;
        g = g_new;
        if (f_change < opts.relative_f_tol) {
            result.converged = true;
            result.status = "f_change";
            break;
        }
    }

    if (result.status.empty()) result.status = "max_iterations";
    result.evaluations = evaluations;
    return result;
}

}  // namespace hubwind
