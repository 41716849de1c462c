#pragma once

#include <algorithm>
#include <vector>

#include "hydro/common.hpp"
#include "hydro/series.hpp"

namespace hydro {

/**
 * Min-max pair for mapping raw flows onto [0, 1]:
 *
 *   v = (x - min) / (max - min)
 *
 * The fitting range's minimum maps to exactly 0 and its maximum to
 * exactly 1; values outside the fitting range pass through unclamped.
 */
struct ScalerParams {
    double min_value = 0.0;  // cusecs
    double max_value = 1.0;  // cusecs

    double range() const { return max_value - min_value; }

    double to_unit(double x) const { return (x - min_value) / range(); }
    double from_unit(double v) const { return min_value + v * range(); }
};

/// Dimensionless series plus the scaler that produced it.
struct NormalizedSeries {
    std::vector<double> values;
    ScalerParams scaler;
};

/// Min/max over `range` of the series only (typically the training portion).
inline ScalerParams fit_scaler(const DailySeries& series, IndexRange range) {
    if (range.empty() || range.end > series.size()) {
        throw std::invalid_argument("fit_scaler: empty or out-of-bounds range");
    }
    const auto first = series.values.begin() + long(range.begin);
    const auto last = series.values.begin() + long(range.end);
    const auto [lo, hi] = std::minmax_element(first, last);
    if (*lo == *hi) {
        throw DataError("degenerate scaler: constant values in fitting range");
    }
    return ScalerParams{*lo, *hi};
}

inline NormalizedSeries normalize(const DailySeries& series, const ScalerParams& scaler) {
    if (!(scaler.max_value > scaler.min_value)) {
        throw DataError("degenerate scaler: max must exceed min");
    }
    NormalizedSeries out;
    out.scaler = scaler;
    out.values.reserve(series.size());
    for (double x : series.values) out.values.push_back(scaler.to_unit(x));
    return out;
}

/// Exact algebraic inverse of normalize, value by value.
inline std::vector<double> denormalize(const std::vector<double>& values,
                                       const ScalerParams& scaler) {
    if (!(scaler.max_value > scaler.min_value)) {
        throw DataError("degenerate scaler: max must exceed min");
    }
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(scaler.from_unit(v));
    return out;
}

}  // namespace hydro
