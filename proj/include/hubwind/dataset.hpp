#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "hubwind/geo.hpp"
#include "hubwind/time_grid.hpp"
#include "hubwind/weibull.hpp"

namespace hubwind {

/// Station metadata row: location, per-height atlas Weibull climatology and
/// the 50/100 m atlas mean speeds used for the spatial covariate.
struct StationRecord {
    std::string id;
    GeoLocation loc;
    WeibullParams weibull50;
    WeibullParams weibull75;
    WeibullParams weibull100;
    double mean50;
    double mean100;

    const WeibullParams& weibull_at(double height) const;
};

/// Target (wind farm) metadata row. No Weibull columns: only the atlas
/// means are assumed known at prospective sites.
struct TargetRecord {
    std::string id;
    GeoLocation loc;
    double hub_height;
    double mean50;
    double mean100;
};

/// Aligned 10-minute series for a set of stations; NaN marks missing slots.
struct StationWinds {
    TimeGrid grid;
    std::vector<std::string> ids;
    std::vector<std::vector<double>> speed;      ///< per station, grid-length
    std::vector<std::vector<double>> direction;  ///< degrees FROM, NaN if missing

    std::optional<std::size_t> station_index(const std::string& id) const;
};

/// Multi-height reanalysis series per station on the 10-minute grid.
struct ReanalysisSeries {
    TimeGrid grid;
    std::vector<double> w10, w50, w75, w100;
};

/// Raw ISO-8601 UTC parse to epoch minutes, without the 10-minute grid
/// check (ingestion sees 1-minute station data).
std::int64_t parse_iso_to_minutes(const std::string& text);

std::vector<StationRecord> read_stations(const std::filesystem::path& path,
                                         std::optional<EquirectangularProjection> proj = {});
std::vector<TargetRecord> read_targets(const std::filesystem::path& path,
                                       std::optional<EquirectangularProjection> proj = {});

/// Ingests winds_10m.csv (station_id, timestamp, speed_ms, direction_deg).
/// Per station: timestamps must be strictly increasing; sub-10-minute data
/// are averaged per grid bucket (directions vector-averaged); stations
/// reporting hourly are linearly interpolated across single-hour gaps.
StationWinds ingest_station_csv(const std::filesystem::path& path);

/// Reads reanalysis.csv (station_id, timestamp, w10, w50, w75, w100) with
/// grid-aligned timestamps.
std::map<std::string, ReanalysisSeries> read_reanalysis(const std::filesystem::path& path);

/// Long-format (id, timestamp, value) reader onto a common grid; used for
/// farm truth and similar single-value series.
struct SpeedSeriesTable {
    TimeGrid grid;
    std::vector<std::string> ids;
    std::vector<std::vector<double>> value;

    std::optional<std::size_t> series_index(const std::string& id) const;
};
SpeedSeriesTable read_speed_series(const std::filesystem::path& path, const std::string& id_col,
                                   const std::string& value_col);

}  // namespace hubwind
