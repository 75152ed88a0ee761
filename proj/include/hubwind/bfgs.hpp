#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

namespace hubwind {

struct BfgsOptions {
    int max_iterations = 500;
    double gradient_tol = 1e-6;     ///< stop when ||g||_2 falls below this
    double relative_f_tol = 1e-8;   ///< stop on relative objective change
    double fd_step = 1e-5;          ///< central-difference step per coordinate
};

struct BfgsResult {
    Eigen::VectorXd x;      ///< best point visited (by objective value)
    double f = 0.0;         ///< objective at x
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
    std::string status;     ///< "gradient", "f_change", "max_iterations", "stalled"
};

/// Quasi-Newton (BFGS) minimization with central finite-difference gradients
/// and an Armijo backtracking line search. The objective may return +inf to
/// signal an infeasible point; the search backtracks away from it. The best
/// point ever evaluated is returned, independent of where the iteration ends.
BfgsResult bfgs_minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                         Eigen::VectorXd x0, const BfgsOptions& opts = {});

}  // namespace hubwind
