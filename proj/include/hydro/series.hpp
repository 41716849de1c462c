#pragma once

#include <charconv>
#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hydro/common.hpp"

namespace hydro {

using Date = std::chrono::sys_days;

inline Date make_date(int year, unsigned month, unsigned day) {
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) {
        throw DataError("invalid calendar date " + std::to_string(year) + "-" +
                        std::to_string(month) + "-" + std::to_string(day));
    }
    return Date{ymd};
}

/// Parses strict ISO `YYYY-MM-DD`.
inline Date parse_date(std::string_view text) {
    int y = 0;
    unsigned m = 0, d = 0;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        std::sscanf(std::string(text).c_str(), "%d-%u-%u", &y, &m, &d) != 3) {
        throw DataError("malformed date '" + std::string(text) + "'");
    }
    return make_date(y, m, d);
}

inline std::string format_date(Date date) {
    const std::chrono::year_month_day ymd{date};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

/// `date + n` calendar years; Feb 29 clamps to Feb 28 in non-leap years.
inline Date add_years(Date date, int n) {
    std::chrono::year_month_day ymd{date};
    ymd += std::chrono::years{n};
    if (!ymd.ok()) ymd = ymd.year() / ymd.month() / std::chrono::day{28};
    return Date{ymd};
}

/**
 * Date-indexed daily inflow record, the universal carrier of raw flows.
 *
 * Invariants, enforced at construction: values sit in strict one-day
 * calendar succession from start_date, every value is finite and >= 0,
 * and the series is non-empty. Immutable after construction and safe to
 * share across threads.
 */
struct DailySeries {
    Date start_date;
    std::vector<double> values;  // cusecs

    static DailySeries make(Date start, std::vector<double> values) {
        if (values.empty()) throw DataError("empty series");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!std::isfinite(values[i])) {
                throw DataError("non-finite inflow at " +
                                format_date(start + std::chrono::days(long(i))));
            }
            if (values[i] < 0.0) {
                throw DataError("negative inflow at " +
                                format_date(start + std::chrono::days(long(i))));
            }
        }
        return DailySeries{start, std::move(values)};
    }

    std::size_t size() const { return values.size(); }
    Date date_at(std::size_t i) const { return start_date + std::chrono::days(long(i)); }
    Date end_date_exclusive() const { return date_at(values.size()); }
};

/**
 * Loads a daily series from CSV with header exactly `date,inflow`.
 * ISO dates, decimal inflow, UTF-8, LF or CRLF line endings. Leading
 * lines starting with '#' are treated as comments and skipped.
 */
inline DailySeries load_daily_series(std::istream& in) {
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        if (line != "date,inflow") {
            throw DataError("expected header 'date,inflow', got '" + line + "'");
        }
        have_header = true;
        break;
    }
    if (!have_header) throw DataError("empty file");

    Date start{};
    Date expected{};
    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DataError("malformed row " + std::to_string(row) + ": '" + line + "'");
        }
        Date date{};
        try {
            date = parse_date(std::string_view(line).substr(0, comma));
        } catch (const DataError& e) {
            throw DataError("malformed row " + std::to_string(row) + ": " + e.what());
        }

        const char* first = line.data() + comma + 1;
        const char* last = line.data() + line.size();
        double inflow = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, inflow);
        if (ec != std::errc{} || ptr != last) {
            throw DataError("malformed row " + std::to_string(row) +
                            ": bad inflow value '" + std::string(first, last) + "'");
        }
        if (!std::isfinite(inflow)) {
            throw DataError("non-finite inflow at " + format_date(date));
        }
        if (inflow < 0.0) {
            throw DataError("negative inflow at " + format_date(date));
        }

        if (values.empty()) {
            start = date;
        } else if (date == expected - std::chrono::days(1)) {
            throw DataError("duplicate date " + format_date(date));
        } else if (date != expected) {
            if (date < expected) {
                throw DataError("out-of-order date " + format_date(date));
            }
            throw DataError("gap at " + format_date(expected));
        }
        expected = date + std::chrono::days(1);
        values.push_back(inflow);
    }
    if (values.empty()) throw DataError("empty file");
    return DailySeries{start, std::move(values)};
}

/// Writes the standard `date,inflow` CSV; `comment` lines are emitted with a '#' prefix.
inline void save_daily_series(std::ostream& out, const DailySeries& series,
                              const std::vector<std::string>& comments = {}) {
    for (const auto& comment : comments) out << "# " << comment << "\n";
    out << "date,inflow\n";
    char buf[64];
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto [ptr, ec] =
            std::to_chars(buf, buf + sizeof(buf), series.values[i]);
        out << format_date(series.date_at(i)) << ','
            << std::string_view(buf, std::size_t(ptr - buf)) << '\n';
    }
}

}  // namespace hydro
