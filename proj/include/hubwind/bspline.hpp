#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hubwind {

/// Cubic B-spline basis on [a, b] with equally spaced interior knots and an
/// open (clamped) knot vector. Evaluation clamps x into [a, b]: outside the
/// training range the fitted smooth extends flat rather than following the
/// boundary polynomial.
class BSplineBasis {
public:
    /// dim >= 4 basis functions; dim - 4 interior knots.
    BSplineBasis(double a, double b, int dim);

    int dim() const { return dim_; }
    double lower() const { return a_; }
    double upper() const { return b_; }
    const std::vector<double>& knots() const { return knots_; }

    /// Dense row of all basis values at x (at most 4 are non-zero).
    Eigen::RowVectorXd evaluate(double x) const;

    /// Rebuild from a persisted knot vector.
    static BSplineBasis from_knots(std::vector<double> knots);

private:
    BSplineBasis() = default;
    double a_ = 0.0, b_ = 1.0;
    int dim_ = 0;
    std::vector<double> knots_;  ///< full clamped vector, size dim + 4
};

/// Second-order difference penalty D2' D2 for a dim-coefficient P-spline,
/// scaled so trace(S) == dim (keeps the smoothing grid scale-free).
Eigen::MatrixXd second_difference_penalty(int dim);

}  // namespace hubwind
