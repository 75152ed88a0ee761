#pragma once

#include <array>
#include <nlohmann/json_fwd.hpp>

#include "hubwind/bspline.hpp"
#include "hubwind/shear.hpp"

namespace hubwind {

/// Basis dimensions and smoothing search for the additive shear model.
struct AdditiveModelConfig {
    int s1_dim = 20;                ///< spline basis for s1(sqrt W10)
    int s2_dim = 8;                 ///< spline basis for s2(h); only 11 distinct heights exist
    int s3_dim = 6;                 ///< per-margin size of the s3(h, W10) tensor product
    double lambda_log10_min = -6.0;
    double lambda_log10_max = 4.0;
    int lambda_grid_points = 7;     ///< log-spaced GCV grid per smoothing parameter
    int gcv_sweeps = 2;             ///< coordinate-descent sweeps over the four lambdas
    double ridge = 1e-8;            ///< floor added to every coefficient's penalty
};

/// Penalized additive regression of sqrt hub-height wind on the 10 m wind,
/// height, diurnal harmonics and direction components:
///
///   sqrt(W_h) = b0 + s1(sqrt W10) + s2(h) + s3(h, W10)
///             + b1 sin(2 pi t/24) + b2 cos(2 pi t/24) + b3 U + b4 V
///
/// Smooths are cubic P-splines (second-order difference penalties) with
/// smoothing parameters chosen by GCV. Smooth columns are mean-centered so
/// the intercept is identifiable; predictions clamp covariates to the
/// training range (flat extension) rather than trusting spline tails.
class AdditiveShearModel {
public:
    static AdditiveShearModel fit(const ShearTrainingSet& train, const AdditiveModelConfig& cfg);

    /// Sqrt-scale prediction from real-time station inputs. Heights outside
    /// [50, 100] are rejected; other covariates clamp to the training range.
    double predict_sqrt(double w10, double h, double hour, double direction_deg) const;

    /// Residual SD on the sqrt scale (constant-variance Gaussian errors).
    double sigma() const { return sigma_; }
    double edf() const { return edf_; }

    /// Smoothing parameters in the order s1, s2, s3 height margin, s3 wind margin.
    const std::array<double, 4>& lambdas() const { return lambdas_; }

    nlohmann::json to_json() const;
    static AdditiveShearModel from_json(const nlohmann::json& j);

private:
    AdditiveShearModel() = default;

    Eigen::RowVectorXd design_row(double sqrt_w10, double h, double hour, double u,
                                  double v) const;

    AdditiveModelConfig cfg_;
    BSplineBasis basis_s1_{0.0, 1.0, 4};
    BSplineBasis basis_s2_{0.0, 1.0, 4};
    BSplineBasis basis_s3h_{0.0, 1.0, 4};
    BSplineBasis basis_s3w_{0.0, 1.0, 4};
    Eigen::VectorXd col_means_;   ///< training means of the smooth columns
    Eigen::VectorXd coef_;
    std::array<double, 4> lambdas_{1.0, 1.0, 1.0, 1.0};
    double sigma_ = 0.0;
    double edf_ = 0.0;
    double sqrt_w10_lo_ = 0.0, sqrt_w10_hi_ = 1.0;
    double w10_lo_ = 0.0, w10_hi_ = 1.0;
    double h_lo_ = 50.0, h_hi_ = 100.0;
};

}  // namespace hubwind
