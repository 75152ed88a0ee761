#pragma once

#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hubwind/additive_model.hpp"
#include "hubwind/spatial_fit.hpp"

namespace hubwind {

/// Truth parameters for the synthetic world: spatial field, the vertical
/// shear relation, and per-station scatter of that relation.
struct SyntheticConfig {
    int n_stations = 12;
    int n_targets = 8;
    double domain_km = 350.0;
    double hub_height = 75.0;
    SpatialHyperparams theta{0.03, 0.55, 0.10, 0.4, 0.9};
    // alpha(w10, t, dir) = a0 + a1 exp(-w10/w10_scale)
    //                    + a_sin sin(2 pi t/24) + a_cos cos(2 pi t/24)
    //                    + a_u U + a_v V
    double a0 = 0.10;
    double a1 = 0.22;
    double w10_scale = 5.0;
    double a_sin = 0.02;
    double a_cos = 0.015;
    double a_u = 0.03;
    double a_v = 0.02;
    double tau_min = 0.05;   ///< per-station shear-scatter SD bounds (sqrt scale)
    double tau_max = 0.14;
    double era5_offset_km = 12.0;  ///< benchmark "grid point" displacement
    double gwa_grid_spacing_km = 25.0;
};

struct PipelineConfig {
    std::filesystem::path output_dir = "out";

    // Input files; default to the synthetic generator's outputs.
    std::filesystem::path stations_csv;
    std::filesystem::path targets_csv;
    std::filesystem::path winds_csv;
    std::filesystem::path reanalysis_csv;
    std::filesystem::path farm_truth_csv;   ///< optional, evaluation only
    std::filesystem::path era5_csv;         ///< optional, benchmark only
    std::filesystem::path gwa_grid_csv;     ///< optional, grid export only

    double projection_ref_lon = -8.0;
    double projection_ref_lat = 53.3;

    std::vector<std::string> months{"2023-01"};
    std::uint64_t seed = 20230101;
    int threads = 1;
    bool deterministic = true;

    AdditiveModelConfig shear;
    int harmonics = 2;              ///< harmonic-alpha baseline order
    SpatialFitOptions spatial;
    double interval_level = 0.95;
    std::vector<double> wake_losses{0.10, 0.15, 0.20};
    std::vector<double> coverage_levels{0.80, 0.95};

    SyntheticConfig synthetic;

    /// Fills unset paths from output_dir and checks ranges.
    void finalize();

    static PipelineConfig from_json(const nlohmann::json& j);
    static PipelineConfig from_file(const std::filesystem::path& path);
    nlohmann::json to_json() const;
};

}  // namespace hubwind
