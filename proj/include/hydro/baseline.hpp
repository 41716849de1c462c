#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "hydro/common.hpp"
#include "hydro/series.hpp"

namespace hydro {

/// Calendar 10-day bin: each month splits into days 1-10, 11-20 and 21-end.
inline std::size_t ten_day_bin(Date date) {
    const std::chrono::year_month_day ymd{date};
    const unsigned month = unsigned(ymd.month());
    const unsigned day = unsigned(ymd.day());
    return std::size_t((month - 1) * 3 + std::min((day - 1) / 10, 2u));
}

/**
 * Historical-average baseline: the mean discharge of each calendar 10-day
 * bin over the training years, used as-is as the forecast for any future
 * date falling in that bin.
 */
class TenDailyBaseline {
public:
    static TenDailyBaseline fit(const DailySeries& series, IndexRange range) {
        if (range.empty() || range.end > series.size()) {
            throw std::invalid_argument("TenDailyBaseline: empty or out-of-bounds range");
        }
        std::array<double, 36> sums{};
        std::array<long, 36> counts{};
        for (std::size_t i = range.begin; i < range.end; ++i) {
            const std::size_t bin = ten_day_bin(series.date_at(i));
            sums[bin] += series.values[i];
            counts[bin] += 1;
        }
        TenDailyBaseline baseline;
        for (std::size_t b = 0; b < 36; ++b) {
            if (counts[b] == 0) {
                throw DataError("TenDailyBaseline: fitting range does not cover bin " +
                                std::to_string(b));
            }
            baseline.bin_means_[b] = sums[b] / double(counts[b]);
        }
        return baseline;
    }

    double forecast(Date date) const { return bin_means_[ten_day_bin(date)]; }

    std::vector<double> forecast_range(Date first, std::size_t days) const {
        std::vector<double> out;
        out.reserve(days);
        for (std::size_t i = 0; i < days; ++i) {
            out.push_back(forecast(first + std::chrono::days(long(i))));
        }
        return out;
    }

private:
    std::array<double, 36> bin_means_{};
};

}  // namespace hydro
