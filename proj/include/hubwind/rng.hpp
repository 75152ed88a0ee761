#pragma once

#include <cstdint>
#include <string>

namespace hubwind {

/// Deterministic random source. Draw algorithms are implemented here (not
/// delegated to std distributions) so that a seed pins the generated data
/// byte-for-byte; child streams give stations/months independent,
/// order-free streams under one master seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream derived from this stream's seed and a tag.
    Rng child(std::uint64_t tag) const;
    Rng child(const std::string& tag) const;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);

    /// Standard normal (Box-Muller; one spare cached).
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Weibull(k, lambda) via inverse-CDF sampling.
    double weibull(double shape, double scale);

    std::uint64_t next_u64();

private:
    std::uint64_t state_[4];
    std::uint64_t seed_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hubwind
