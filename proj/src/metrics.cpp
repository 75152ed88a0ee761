#include "hubwind/metrics.hpp"

#include <cmath>

namespace hubwind {

MetricReport compute_metrics(std::span<const double> pred, std::span<const double> obs) {
    if (pred.size() != obs.size())
        throw std::invalid_argument("metric series must be aligned (equal length)");

    double se = 0.0, bias = 0.0, sp = 0.0, so = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (std::isnan(pred[i]) || std::isnan(obs[i])) continue;
        const double d = pred[i] - obs[i];
        se += d * d;
        bias += d;
        sp += pred[i];
        so += obs[i];
        ++n;
    }
    if (n < 2) throw std::runtime_error("metrics need at least 2 valid pairs");

    const double mp = sp / static_cast<double>(n);
    const double mo = so / static_cast<double>(n);
    double cov = 0.0, vp = 0.0, vo = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (std::isnan(pred[i]) || std::isnan(obs[i])) continue;
        cov += (pred[i] - mp) * (obs[i] - mo);
        vp += (pred[i] - mp) * (pred[i] - mp);
        vo += (obs[i] - mo) * (obs[i] - mo);
    }

    MetricReport r;
    r.n = n;
    r.rmse = std::sqrt(se / static_cast<double>(n));
    r.mean_bias = bias / static_cast<double>(n);
    r.pearson = (vp > 0 && vo > 0) ? cov / std::sqrt(vp * vo) : 0.0;
    return r;
}

std::vector<double> wake_adjust(std::span<const double> pred, double loss_fraction) {
    if (!(loss_fraction >= 0.0 && loss_fraction < 1.0))
        throw std::domain_error("wake loss fraction must lie in [0, 1)");
    std::vector<double> out(pred.begin(), pred.end());
    for (double& v : out) v *= 1.0 - loss_fraction;
    return out;
}

CoverageReport empirical_coverage(std::span<const double> lo, std::span<const double> hi,
                                  std::span<const double> obs, double level) {
    if (lo.size() != obs.size() || hi.size() != obs.size())
        throw std::invalid_argument("coverage series must be aligned");
    std::size_t n = 0, inside = 0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (std::isnan(obs[i]) || std::isnan(lo[i]) || std::isnan(hi[i])) continue;
        ++n;
        if (lo[i] <= obs[i] && obs[i] <= hi[i]) ++inside;
    }
    if (n == 0) throw std::runtime_error("coverage needs at least 1 valid pair");
    return CoverageReport{level, static_cast<double>(inside) / static_cast<double>(n), n};
}

}  // namespace hubwind
