#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace hubwind {

/// Paired accuracy summary. Bias is signed predicted - observed, so a
/// positive value means over-prediction.
struct MetricReport {
    double rmse = 0.0;
    double mean_bias = 0.0;
    double pearson = 0.0;
    std::size_t n = 0;
};

/// RMSE, mean bias and Pearson correlation over aligned series. Pairs where
/// either side is NaN are dropped; fewer than 2 surviving pairs is an error.
MetricReport compute_metrics(std::span<const double> pred, std::span<const double> obs);

/// Multiplies predictions by (1 - loss_fraction); loss_fraction in [0, 1).
std::vector<double> wake_adjust(std::span<const double> pred, double loss_fraction);

struct CoverageReport {
    double level = 0.0;
    double coverage = 0.0;
    std::size_t n = 0;
};

/// Fraction of observations with lo <= obs <= hi. NaN observations are
/// dropped; zero surviving pairs is an error.
CoverageReport empirical_coverage(std::span<const double> lo, std::span<const double> hi,
                                  std::span<const double> obs, double level);

}  // namespace hubwind
