#pragma once

#include <span>
#include <vector>

namespace hubwind {

/// Empirical distribution of a wind-speed record. Probabilities use the
/// rank/(n+1) plotting position so the sample maximum never maps to 1
/// (which an inverse Weibull CDF would send to infinity). Tied values get
/// the average rank of their tie group.
class EmpiricalCdf {
public:
    /// Requires at least two finite, non-negative values.
    explicit EmpiricalCdf(std::span<const double> series);

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted_values() const { return sorted_; }

    /// Plotting-position probability of x. For sample members this is the
    /// tie-averaged rank over (n+1); otherwise #(w_i <= x)/(n+1).
    double prob(double x) const;

    /// Probabilities for every element of `series`, in input order.
    /// `series` need not be the construction sample, but usually is.
    std::vector<double> probs(std::span<const double> series) const;

private:
    std::vector<double> sorted_;
};

}  // namespace hubwind
