#pragma once

#include <cstdint>
#include <string>

namespace hubwind {

/// A point on the 10-minute observation grid, stored as minutes since the
/// Unix epoch (UTC, no DST handling). Construction rejects off-grid times.
class TimeStamp {
public:
    static constexpr std::int64_t kStepMinutes = 10;

    TimeStamp() = default;
    explicit TimeStamp(std::int64_t epoch_minutes);

    /// Parses "YYYY-MM-DDTHH:MM:SSZ" (seconds must be 00, minutes on the grid).
    static TimeStamp parse_iso(const std::string& text);

    std::int64_t epoch_minutes() const { return epoch_min_; }

    /// Hour of day in [0, 24), fractional (e.g. 13.5 for 13:30).
    double hour_of_day() const;

    /// Calendar month key "YYYY-MM" (UTC).
    std::string month_key() const;

    std::string to_iso() const;

    TimeStamp next() const { return TimeStamp(epoch_min_ + kStepMinutes); }

    friend bool operator==(const TimeStamp&, const TimeStamp&) = default;
    friend auto operator<=>(const TimeStamp&, const TimeStamp&) = default;

private:
    std::int64_t epoch_min_ = 0;
};

/// Minutes since epoch for an arbitrary civil UTC instant (not grid-checked).
std::int64_t civil_to_epoch_minutes(int year, int month, int day, int hour, int minute);

/// First grid point of the calendar month "YYYY-MM".
TimeStamp month_start(const std::string& month_key);

/// One-past-the-end grid point of the calendar month "YYYY-MM".
TimeStamp month_end(const std::string& month_key);

/// Contiguous 10-minute grid [start, start + count steps).
struct TimeGrid {
    TimeStamp start;
    std::size_t count = 0;

    TimeStamp at(std::size_t i) const {
        return TimeStamp(start.epoch_minutes() +
                         static_cast<std::int64_t>(i) * TimeStamp::kStepMinutes);
    }

    /// Grid index of t, or -1 if t falls outside the grid.
    std::int64_t index_of(const TimeStamp& t) const {
        const std::int64_t d = t.epoch_minutes() - start.epoch_minutes();
        if (d < 0) return -1;
        const std::int64_t i = d / TimeStamp::kStepMinutes;
        return i < static_cast<std::int64_t>(count) ? i : -1;
    }
};

/// Grid covering the calendar month "YYYY-MM".
TimeGrid month_grid(const std::string& month_key);

}  // namespace hubwind
