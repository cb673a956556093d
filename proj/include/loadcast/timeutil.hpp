#pragma once

#include <cstdint>
#include <string>

namespace loadcast {

// Hours since 1970-01-01T00:00:00, civil time, no zone. Hourly grid data is
// conventionally exchanged in local-naive timestamps.
using Timestamp = std::int64_t;

enum class Season { spring, summer, fall, winter };
enum class Horizon { day_ahead, week_ahead };

// Days since epoch for a civil date (proleptic Gregorian).
std::int64_t days_from_civil(int year, unsigned month, unsigned day);
void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

// Accepts "YYYY-MM-DDTHH:MM:SS" or "YYYY-MM-DD HH:MM[:SS]"; minutes and
// seconds must be zero (hour resolution). Throws std::invalid_argument.
Timestamp parse_timestamp(const std::string& text);
std::string format_timestamp(Timestamp ts_hours);

int hour_of_day(Timestamp ts_hours);
unsigned month_of(Timestamp ts_hours);

// Meteorological quarters: Mar-May spring, Jun-Aug summer, Sep-Nov fall,
// Dec-Feb winter.
Season season_of(Timestamp ts_hours);

std::string season_name(Season s);
Season season_from_name(const std::string& name);
std::string horizon_name(Horizon h);
Horizon horizon_from_name(const std::string& name);

} // namespace loadcast
