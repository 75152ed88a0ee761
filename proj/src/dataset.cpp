#include "hubwind/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hubwind/csv.hpp"
#include "hubwind/wind.hpp"

namespace hubwind {

namespace {

GeoLocation location_from_row(const csv::Table& t, std::size_t row,
                              const std::optional<EquirectangularProjection>& proj) {
    if (t.has_column("x_km") && t.has_column("y_km"))
        return GeoLocation{t.number(row, "x_km"), t.number(row, "y_km")};
    if (t.has_column("lon") && t.has_column("lat")) {
        if (!proj)
            throw std::runtime_error(t.path().string() +
                                     ": lon/lat coordinates need a configured projection");
        return proj->to_plane(t.number(row, "lon"), t.number(row, "lat"));
    }
    throw std::runtime_error(t.path().string() + ": need x_km/y_km or lon/lat columns");
}

struct RawRow {
    std::int64_t minutes;
    double speed;
    double direction;
};

// Common grid spanning all per-station raw extents, bucket-aligned.
TimeGrid common_grid(std::int64_t min_minutes, std::int64_t max_minutes) {
    const std::int64_t step = TimeStamp::kStepMinutes;
    const std::int64_t lo = (min_minutes / step) * step - (min_minutes < 0 && min_minutes % step ? step : 0);
    const std::int64_t hi = (max_minutes / step) * step - (max_minutes < 0 && max_minutes % step ? step : 0);
    return TimeGrid{TimeStamp(lo), static_cast<std::size_t>((hi - lo) / step) + 1};
}

}  // namespace

const WeibullParams& StationRecord::weibull_at(double height) const {
    if (height == 50.0) return weibull50;
    if (height == 75.0) return weibull75;
    if (height == 100.0) return weibull100;
    throw std::invalid_argument("no Weibull climatology at height " + std::to_string(height));
}

std::optional<std::size_t> StationWinds::station_index(const std::string& id) const {
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
}

std::optional<std::size_t> SpeedSeriesTable::series_index(const std::string& id) const {
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
}

std::int64_t parse_iso_to_minutes(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char z = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d%c", &y, &mo, &d, &h, &mi, &s, &z) != 7 ||
        z != 'Z' || s != 0)
        throw std::runtime_error("bad ISO-8601 UTC timestamp: " + text);
    return civil_to_epoch_minutes(y, mo, d, h, mi);
}

std::vector<StationRecord> read_stations(const std::filesystem::path& path,
                                         std::optional<EquirectangularProjection> proj) {
    const csv::Table t = csv::Table::read_file(path);
    std::vector<StationRecord> out;
    out.reserve(t.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) {
        out.push_back(StationRecord{
            t.text(r, "station_id"),
            location_from_row(t, r, proj),
            WeibullParams(t.number(r, "k_50"), t.number(r, "lambda_50")),
            WeibullParams(t.number(r, "k_75"), t.number(r, "lambda_75")),
            WeibullParams(t.number(r, "k_100"), t.number(r, "lambda_100")),
            t.number(r, "mean50"),
            t.number(r, "mean100"),
        });
    }
    return out;
}

std::vector<TargetRecord> read_targets(const std::filesystem::path& path,
                                       std::optional<EquirectangularProjection> proj) {
    const csv::Table t = csv::Table::read_file(path);
    std::vector<TargetRecord> out;
    out.reserve(t.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const double hub = t.number(r, "hub_height_m");
        if (!(hub >= 50.0 && hub <= 100.0))
            throw std::runtime_error(path.string() + ": row " + std::to_string(r + 2) +
                                     ": hub_height_m must lie in [50, 100]");
        out.push_back(TargetRecord{t.text(r, "site_id"), location_from_row(t, r, proj), hub,
                                   t.number(r, "mean50"), t.number(r, "mean100")});
    }
    return out;
}

StationWinds ingest_station_csv(const std::filesystem::path& path) {
    const csv::Table t = csv::Table::read_file(path);
    std::map<std::string, std::vector<RawRow>> raw;
    std::int64_t min_min = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_min = std::numeric_limits<std::int64_t>::min();

    for (std::size_t r = 0; r < t.rows(); ++r) {
        const std::string& id = t.text(r, "station_id");
        std::int64_t minutes;
        try {
            minutes = parse_iso_to_minutes(t.text(r, "timestamp"));
        } catch (const std::exception& e) {
            throw std::runtime_error(path.string() + ": row " + std::to_string(r + 2) +
                                     ", column 'timestamp': " + e.what());
        }
        const double speed = t.number(r, "speed_ms");
        const double dir = t.number(r, "direction_deg");
        if (!std::isnan(speed) && speed < 0)
            throw std::runtime_error(path.string() + ": row " + std::to_string(r + 2) +
                                     ", column 'speed_ms': negative speed");
        auto& rows = raw[id];
        if (!rows.empty() && minutes <= rows.back().minutes)
            throw std::runtime_error(path.string() + ": row " + std::to_string(r + 2) +
                                     ": non-monotone timestamp for station " + id);
        rows.push_back(RawRow{minutes, speed, dir});
        min_min = std::min(min_min, minutes);
        max_min = std::max(max_min, minutes);
    }
    if (raw.empty()) throw std::runtime_error(path.string() + ": no data rows");

    StationWinds out;
    out.grid = common_grid(min_min, max_min);
    const std::size_t n = out.grid.count;

    for (auto& [id, rows] : raw) {
        std::vector<double> speed(n, std::nan(""));
        std::vector<double> dir(n, std::nan(""));

        // Bucket means: arithmetic for speed, vector mean for direction.
        std::vector<double> sum(n, 0.0), usum(n, 0.0), vsum(n, 0.0);
        std::vector<int> cnt(n, 0);
        for (const RawRow& row : rows) {
            if (std::isnan(row.speed) || std::isnan(row.direction)) continue;
            const std::int64_t idx64 =
                (row.minutes - out.grid.start.epoch_minutes()) / TimeStamp::kStepMinutes;
            const auto idx = static_cast<std::size_t>(idx64);
            const auto [u, v] = direction_components(normalize_direction(row.direction));
            sum[idx] += row.speed;
            usum[idx] += u;
            vsum[idx] += v;
            ++cnt[idx];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (cnt[i] == 0) continue;
            speed[i] = sum[i] / cnt[i];
            // Direction of the mean flow vector, back in FROM convention.
            dir[i] = normalize_direction(std::atan2(-usum[i], -vsum[i]) * 180.0 / M_PI);
        }

        // Hourly stations: fill the five slots inside each single-hour gap.
        std::int64_t min_gap = std::numeric_limits<std::int64_t>::max();
        for (std::size_t r = 1; r < rows.size(); ++r)
            min_gap = std::min(min_gap, rows[r].minutes - rows[r - 1].minutes);
        if (rows.size() >= 2 && min_gap >= 60) {
            for (std::size_t i = 0; i + 6 < n + 1; ++i) {
                if (std::isnan(speed[i]) || std::isnan(speed[i + 6])) continue;
                bool gap_clear = true;
                for (std::size_t k = 1; k < 6; ++k)
                    if (!std::isnan(speed[i + k])) gap_clear = false;
                if (!gap_clear) continue;
                const auto [u0, v0] = direction_components(dir[i]);
                const auto [u1, v1] = direction_components(dir[i + 6]);
                for (std::size_t k = 1; k < 6; ++k) {
                    const double w = static_cast<double>(k) / 6.0;
                    speed[i + k] = (1.0 - w) * speed[i] + w * speed[i + 6];
                    const double u = (1.0 - w) * u0 + w * u1;
                    const double v = (1.0 - w) * v0 + w * v1;
                    dir[i + k] = normalize_direction(std::atan2(-u, -v) * 180.0 / M_PI);
                }
            }
        }

        out.ids.push_back(id);
        out.speed.push_back(std::move(speed));
        out.direction.push_back(std::move(dir));
    }
    return out;
}

std::map<std::string, ReanalysisSeries> read_reanalysis(const std::filesystem::path& path) {
    const csv::Table t = csv::Table::read_file(path);
    std::int64_t min_min = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_min = std::numeric_limits<std::int64_t>::min();
    struct Row {
        std::int64_t minutes;
        double w10, w50, w75, w100;
    };
    std::map<std::string, std::vector<Row>> raw;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const std::int64_t minutes = parse_iso_to_minutes(t.text(r, "timestamp"));
        if (minutes % TimeStamp::kStepMinutes != 0)
            throw std::runtime_error(path.string() + ": row " + std::to_string(r + 2) +
                                     ": reanalysis timestamp off the 10-minute grid");
        auto& rows = raw[t.text(r, "station_id")];
        if (!rows.empty() && minutes <= rows.back().minutes)
            throw std::runtime_error(path.string() + ": row " + std::to_string(r + 2) +
                                     ": non-monotone timestamp");
        rows.push_back(Row{minutes, t.number(r, "w10"), t.number(r, "w50"), t.number(r, "w75"),
                           t.number(r, "w100")});
        min_min = std::min(min_min, minutes);
        max_min = std::max(max_min, minutes);
    }
    if (raw.empty()) throw std::runtime_error(path.string() + ": no data rows");

    const TimeGrid grid = common_grid(min_min, max_min);
    std::map<std::string, ReanalysisSeries> out;
    for (auto& [id, rows] : raw) {
        ReanalysisSeries s;
        s.grid = grid;
        s.w10.assign(grid.count, std::nan(""));
        s.w50.assign(grid.count, std::nan(""));
        s.w75.assign(grid.count, std::nan(""));
        s.w100.assign(grid.count, std::nan(""));
        for (const Row& row : rows) {
            const auto idx = static_cast<std::size_t>(
                (row.minutes - grid.start.epoch_minutes()) / TimeStamp::kStepMinutes);
            s.w10[idx] = row.w10;
            s.w50[idx] = row.w50;
            s.w75[idx] = row.w75;
            s.w100[idx] = row.w100;
        }
        out.emplace(id, std::move(s));
    }
    return out;
}

SpeedSeriesTable read_speed_series(const std::filesystem::path& path, const std::string& id_col,
                                   const std::string& value_col) {
    const csv::Table t = csv::Table::read_file(path);
    struct Row {
        std::int64_t minutes;
        double value;
    };
    std::map<std::string, std::vector<Row>> raw;
    std::int64_t min_min = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_min = std::numeric_limits<std::int64_t>::min();
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const std::int64_t minutes = parse_iso_to_minutes(t.text(r, "timestamp"));
        raw[t.text(r, id_col)].push_back(Row{minutes, t.number(r, value_col)});
        min_min = std::min(min_min, minutes);
        max_min = std::max(max_min, minutes);
    }
    if (raw.empty()) throw std::runtime_error(path.string() + ": no data rows");

    SpeedSeriesTable out;
    out.grid = common_grid(min_min, max_min);
    for (auto& [id, rows] : raw) {
        std::vector<double> v(out.grid.count, std::nan(""));
        for (const Row& row : rows) {
            const std::int64_t idx =
                (row.minutes - out.grid.start.epoch_minutes()) / TimeStamp::kStepMinutes;
            if (row.minutes % TimeStamp::kStepMinutes == 0)
                v[static_cast<std::size_t>(idx)] = row.value;
        }
        out.ids.push_back(id);
        out.value.push_back(std::move(v));
    }
    return out;
}

}  // namespace hubwind
