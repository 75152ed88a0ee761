#include "hubwind/time_grid.hpp"

#include <cstdio>
#include <stdexcept>

namespace hubwind {

namespace {

// Howard Hinnant's civil-date algorithms, days relative to 1970-01-01.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr + (m <= 2));
}

}  // namespace

TimeStamp::TimeStamp(std::int64_t epoch_minutes) : epoch_min_(epoch_minutes) {
    if (epoch_min_ % kStepMinutes != 0)
        throw std::invalid_argument("timestamp not on the 10-minute grid: " +
                                    std::to_string(epoch_minutes) + " min");
}

TimeStamp TimeStamp::parse_iso(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char z = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d%c", &y, &mo, &d, &h, &mi, &s, &z) != 7 ||
        z != 'Z')
        throw std::invalid_argument("bad ISO-8601 UTC timestamp: " + text);
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 || s != 0)
        throw std::invalid_argument("bad timestamp fields: " + text);
    return TimeStamp(civil_to_epoch_minutes(y, mo, d, h, mi));
}

double TimeStamp::hour_of_day() const {
    std::int64_t mod = epoch_min_ % 1440;
    if (mod < 0) mod += 1440;
    return static_cast<double>(mod) / 60.0;
}

std::string TimeStamp::month_key() const {
    std::int64_t days = epoch_min_ / 1440;
    if (epoch_min_ % 1440 < 0) --days;
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u", y, m);
    return buf;
}

std::string TimeStamp::to_iso() const {
    std::int64_t days = epoch_min_ / 1440;
    std::int64_t rem = epoch_min_ % 1440;
    if (rem < 0) {
        rem += 1440;
        --days;
    }
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:00Z", y, m, d,
                  static_cast<int>(rem / 60), static_cast<int>(rem % 60));
    return buf;
}

std::int64_t civil_to_epoch_minutes(int year, int month, int day, int hour, int minute) {
    return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 1440 +
           hour * 60 + minute;
}

namespace {

void parse_month_key(const std::string& key, int& y, int& m) {
    if (std::sscanf(key.c_str(), "%d-%d", &y, &m) != 2 || m < 1 || m > 12)
        throw std::invalid_argument("bad month key (want YYYY-MM): " + key);
}

}  // namespace

TimeStamp month_start(const std::string& month_key) {
    int y, m;
    parse_month_key(month_key, y, m);
    return TimeStamp(civil_to_epoch_minutes(y, m, 1, 0, 0));
}

TimeStamp month_end(const std::string& month_key) {
    int y, m;
    parse_month_key(month_key, y, m);
    if (++m > 12) {
        m = 1;
        ++y;
    }
    return TimeStamp(civil_to_epoch_minutes(y, m, 1, 0, 0));
}

TimeGrid month_grid(const std::string& month_key) {
    const TimeStamp a = month_start(month_key);
    const TimeStamp b = month_end(month_key);
    return TimeGrid{a, static_cast<std::size_t>((b.epoch_minutes() - a.epoch_minutes()) /
                                                TimeStamp::kStepMinutes)};
}

}  // namespace hubwind
