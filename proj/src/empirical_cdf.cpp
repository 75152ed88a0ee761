#include "hubwind/empirical_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hubwind {

EmpiricalCdf::EmpiricalCdf(std::span<const double> series) {
    sorted_.reserve(series.size());
    for (double v : series) {
        if (!std::isfinite(v) || v < 0)
            throw std::invalid_argument("empirical CDF values must be finite and >= 0");
        sorted_.push_back(v);
    }
    if (sorted_.size() < 2)
        throw std::invalid_argument("empirical CDF needs at least 2 values");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::prob(double x) const {
    const double n1 = static_cast<double>(sorted_.size()) + 1.0;
    const auto lo = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    const auto hi = std::upper_bound(lo, sorted_.end(), x);
    if (lo == hi) {
        // Not a sample member: count of values <= x.
        return static_cast<double>(lo - sorted_.begin()) / n1;
    }
    // Average rank of the tie group (1-based ranks lo+1 .. hi).
    const double first = static_cast<double>(lo - sorted_.begin()) + 1.0;
    const double last = static_cast<double>(hi - sorted_.begin());
    return 0.5 * (first + last) / n1;
}

std::vector<double> EmpiricalCdf::probs(std::span<const double> series) const {
    std::vector<double> out;
    out.reserve(series.size());
    for (double v : series) out.push_back(prob(v));
    return out;
}

}  // namespace hubwind
