#include "newsbias/util/time.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstring>

namespace newsbias {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil), valid far beyond the range we need.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = yr + (m <= 2);
}

bool valid_date(int year, int month, int day, int hour, int minute, int second) {
    if (month < 1 || month > 12 || day < 1 || day > 31) return false;
    if (hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 || second > 60) return false;
    if (year < 1 || year > 9999) return false;
    return true;
}

int month_from_abbrev(const char* s) {
    static constexpr std::array<const char*, 12> names = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    for (int i = 0; i < 12; ++i) {
        if (std::strncmp(s, names[static_cast<std::size_t>(i)], 3) == 0) return i + 1;
    }
    return 0;
}

std::optional<UtcSeconds> parse_twitter(const std::string& s) {
    // "Thu Nov 12 18:52:30 +0000 2015"
    char dow[4] = {0}, mon[4] = {0}, sign = 0;
    int day = 0, hh = 0, mm = 0, ss = 0, offh = 0, offm = 0, year = 0;
    const int n = std::sscanf(s.c_str(), "%3s %3s %d %d:%d:%d %c%2d%2d %d", dow, mon, &day, &hh,
                              &mm, &ss, &sign, &offh, &offm, &year);
    if (n != 10 || (sign != '+' && sign != '-')) return std::nullopt;
    const int month = month_from_abbrev(mon);
    if (month == 0 || !valid_date(year, month, day, hh, mm, ss)) return std::nullopt;
    std::int64_t t = days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 86400 +
                     hh * 3600 + mm * 60 + ss;
    const std::int64_t off = (offh * 3600 + offm * 60) * (sign == '-' ? -1 : 1);
    return t - off;
}

std::optional<UtcSeconds> parse_iso8601(const std::string& s) {
    // "2015-11-12T18:52:30Z" | "2015-11-12 18:52:30" | "...+01:00" | "...-0500" | ".123Z"
    int year = 0, month = 0, day = 0, hh = 0, mm = 0, ss = 0;
    int pos = 0;
    if (std::sscanf(s.c_str(), "%4d-%2d-%2d%n", &year, &month, &day, &pos) != 3 || pos != 10) {
        return std::nullopt;
    }
    std::size_t i = 10;
    if (i < s.size() && (s[i] == 'T' || s[i] == 't' || s[i] == ' ')) {
        int tp = 0;
        if (std::sscanf(s.c_str() + i + 1, "%2d:%2d:%2d%n", &hh, &mm, &ss, &tp) != 3 || tp != 8) {
            return std::nullopt;
        }
        i += 1 + static_cast<std::size_t>(tp);
        if (i < s.size() && s[i] == '.') {  // truncate fractional seconds
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
    }
    std::int64_t offset = 0;
    if (i < s.size()) {
        if (s[i] == 'Z' || s[i] == 'z') {
            ++i;
        } else if (s[i] == '+' || s[i] == '-') {
            const int sign = s[i] == '-' ? -1 : 1;
            int oh = 0, om = 0, op = 0;
            if (std::sscanf(s.c_str() + i + 1, "%2d:%2d%n", &oh, &om, &op) == 2 && op == 5) {
                i += 6;
            } else if (std::sscanf(s.c_str() + i + 1, "%2d%2d%n", &oh, &om, &op) == 2 && op == 4) {
                i += 5;
            } else if (std::sscanf(s.c_str() + i + 1, "%2d%n", &oh, &op) == 1 && op == 2) {
                i += 3;
            } else {
                return std::nullopt;
            }
            offset = sign * (oh * 3600 + om * 60);
        } else {
            return std::nullopt;
        }
    }
    if (i != s.size() || !valid_date(year, month, day, hh, mm, ss)) return std::nullopt;
    return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 86400 +
           hh * 3600 + mm * 60 + ss - offset;
}

}  // namespace

std::optional<UtcSeconds> parse_timestamp(std::string_view text) {
    // Trim ASCII whitespace.
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string s{text.substr(b, e - b)};
    if (s.empty()) return std::nullopt;
    if (std::isdigit(static_cast<unsigned char>(s[0]))) return parse_iso8601(s);
    return parse_twitter(s);
}

std::string format_timestamp(UtcSeconds t) {
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    std::int64_t y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), m, d, static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem / 60) % 60), static_cast<long long>(rem % 60));
    return buf;
}

}  // namespace newsbias
