#include "hubwind/bspline.hpp"

#include <algorithm>
#include <stdexcept>

namespace hubwind {

BSplineBasis::BSplineBasis(double a, double b, int dim) : a_(a), b_(b), dim_(dim) {
    if (!(b > a)) throw std::invalid_argument("B-spline domain must have b > a");
    if (dim < 4) throw std::invalid_argument("cubic B-spline basis needs dim >= 4");
    const int interior = dim - 4;
    const double step = (b - a) / (interior + 1);
    knots_.assign(4, a);
    for (int i = 1; i <= interior; ++i) knots_.push_back(a + i * step);
    knots_.insert(knots_.end(), 4, b);
}

BSplineBasis BSplineBasis::from_knots(std::vector<double> knots) {
    if (knots.size() < 8) throw std::invalid_argument("knot vector too short");
    BSplineBasis basis;
    basis.knots_ = std::move(knots);
    basis.dim_ = static_cast<int>(basis.knots_.size()) - 4;
    basis.a_ = basis.knots_.front();
    basis.b_ = basis.knots_.back();
    return basis;
}

Eigen::RowVectorXd BSplineBasis::evaluate(double x) const {
    x = std::clamp(x, a_, b_);

    // Find the knot span [t_k, t_{k+1}) containing x; the last span is closed.
    int k = 3;
    const int last = dim_ - 1;  // index of the last span start
    while (k < last && x >= knots_[k + 1]) ++k;

    // Cox-de Boor on the four functions supported on this span.
    double vals[4] = {1.0, 0.0, 0.0, 0.0};
    for (int deg = 1; deg <= 3; ++deg) {
        double saved = 0.0;
        for (int j = 0; j < deg; ++j) {
            const int i = k - deg + 1 + j;
            const double denom = knots_[i + deg] - knots_[i];
            const double alpha = denom > 0 ? (x - knots_[i]) / denom : 0.0;
            const double tmp = vals[j];
            vals[j] = saved + (1.0 - alpha) * tmp;
            saved = alpha * tmp;
        }
        vals[deg] = saved;
    }

    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(dim_);
    for (int j = 0; j < 4; ++j) {
        const int idx = k - 3 + j;
        if (idx >= 0 && idx < dim_) row(idx) = vals[j];
    }
    return row;
}

Eigen::MatrixXd second_difference_penalty(int dim) {
    if (dim < 3) throw std::invalid_argument("difference penalty needs dim >= 3");
    Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(dim - 2, dim);
    for (int i = 0; i < dim - 2; ++i) {
        d2(i, i) = 1.0;
        d2(i, i + 1) = -2.0;
        d2(i, i + 2) = 1.0;
    }
    Eigen::MatrixXd s = d2.transpose() * d2;
    s *= static_cast<double>(dim) / s.trace();
    return s;
}

}  // namespace hubwind
