#pragma once

#include "hydro/common.hpp"
#include "hydro/series.hpp"

namespace hydro {

/**
 * Contiguous, disjoint train/validation/test partition of a series,
 * ordered train < validation < test and jointly covering every index.
 */
struct SplitSpec {
    IndexRange train;
    IndexRange validation;
    IndexRange test;
};

/**
 * Year-based partition: first 12 years train, the 13th year validation,
 * everything after that test. Years are anniversary years measured from
 * the series start date, so day counts respect leap years.
 */
inline SplitSpec split_series(const DailySeries& series) {
    const Date train_end = add_years(series.start_date, 12);
    const Date val_end = add_years(series.start_date, 13);
    const Date min_end = add_years(series.start_date, 14);
    if (series.end_date_exclusive() < min_end) {
        throw DataError("series spans fewer than 14 full years");
    }
    const auto idx = [&](Date d) {
        return std::size_t((d - series.start_date).count());
    };
    SplitSpec spec;
    spec.train = IndexRange{0, idx(train_end)};
    spec.validation = IndexRange{idx(train_end), idx(val_end)};
    spec.test = IndexRange{idx(val_end), series.size()};
    return spec;
}

}  // namespace hydro
