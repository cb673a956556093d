#include "loadcast/timeutil.hpp"

#include <cstdio>
#include <stdexcept>

namespace loadcast {

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    // Howard Hinnant's algorithm, exact over the proleptic Gregorian calendar.
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = doy - (153 * mp + 2) / 5 + 1;
    month = mp + (mp < 10 ? 3 : -9);
    year = static_cast<int>(y + (month <= 2));
}

Timestamp parse_timestamp(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char sep = 0;
    int n = std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d:%d", &y, &mo, &d, &sep,
                        &h, &mi, &s);
    if (n < 6 || (sep != 'T' && sep != ' ')) {
        throw std::invalid_argument("bad timestamp: '" + text + "'");
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23) {
        throw std::invalid_argument("timestamp out of range: '" + text + "'");
    }
    if (mi != 0 || s != 0) {
        throw std::invalid_argument("timestamp not on the hour: '" + text + "'");
    }
    return days_from_civil(y, static_cast<unsigned>(mo),
                           static_cast<unsigned>(d)) * 24 + h;
}

std::string format_timestamp(Timestamp ts) {
    std::int64_t days = ts / 24;
    int hour = static_cast<int>(ts % 24);
    if (hour < 0) {
        hour += 24;
        --days;
    }
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:00:00", y, m, d, hour);
    return buf;
}

int hour_of_day(Timestamp ts) {
    int h = static_cast<int>(ts % 24);
    return h < 0 ? h + 24 : h;
}

unsigned month_of(Timestamp ts) {
    std::int64_t days = ts / 24;
    if (ts % 24 < 0) --days;
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    return m;
}

Season season_of(Timestamp ts) {
    switch (month_of(ts)) {
        case 3: case 4: case 5: return Season::spring;
        case 6: case 7: case 8: return Season::summer;
        case 9: case 10: case 11: return Season::fall;
        default: return Season::winter;
    }
}

std::string season_name(Season s) {
    switch (s) {
        case Season::spring: return "spring";
        case Season::summer: return "summer";
        case Season::fall: return "fall";
        default: return "winter";
    }
}

Season season_from_name(const std::string& name) {
    if (name == "spring") return Season::spring;
    if (name == "summer") return Season::summer;
    if (name == "fall" || name == "autumn") return Season::fall;
    if (name == "winter") return Season::winter;
    throw std::invalid_argument("unknown season: '" + name + "'");
}

std::string horizon_name(Horizon h) {
    return h == Horizon::day_ahead ? "day_ahead" : "week_ahead";
}

Horizon horizon_from_name(const std::string& name) {
    if (name == "day_ahead" || name == "day-ahead") return Horizon::day_ahead;
    if (name == "week_ahead" || name == "week-ahead") return Horizon::week_ahead;
    throw std::invalid_argument("unknown horizon: '" + name + "'");
}

} // namespace loadcast
