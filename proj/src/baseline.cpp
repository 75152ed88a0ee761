#include "hubwind/baseline.hpp"

#include <stdexcept>

namespace hubwind {

std::vector<double> hourly_to_ten_minute(std::span<const double> hourly) {
    if (hourly.empty()) return {};
    const std::size_t n_out = 6 * (hourly.size() - 1) + 1;
    std::vector<double> out(n_out, std::nan(""));
    for (std::size_t i = 0; i < hourly.size(); ++i)
        if (!std::isnan(hourly[i])) out[6 * i] = hourly[i];
    for (std::size_t i = 0; i + 1 < hourly.size(); ++i) {
        if (std::isnan(hourly[i]) || std::isnan(hourly[i + 1])) continue;
        for (std::size_t k = 1; k < 6; ++k)
            out[6 * i + k] = hourly[i] + (hourly[i + 1] - hourly[i]) * static_cast<double>(k) / 6.0;
    }
    return out;
}

std::vector<double> power_law_series(std::span<const double> w10, std::span<const double> w100,
                                     double hub_height) {
    if (w10.size() != w100.size())
        throw std::invalid_argument("baseline series must be aligned");
    if (!(hub_height > 0)) throw std::domain_error("hub height must be positive");
    std::vector<double> out(w10.size(), std::nan(""));
    for (std::size_t i = 0; i < w10.size(); ++i) {
        if (std::isnan(w10[i]) || std::isnan(w100[i])) continue;
        const double alpha = site_alpha(w10[i], w100[i]);
        if (std::isnan(alpha)) continue;
        out[i] = w100[i] * std::pow(hub_height / 100.0, alpha);
    }
    return out;
}

}  // namespace hubwind
