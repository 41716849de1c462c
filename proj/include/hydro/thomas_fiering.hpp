#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hydro/common.hpp"
#include "hydro/rng.hpp"
#include "hydro/series.hpp"

#include <json.hpp>

namespace hydro {

/**
 * Per-period parameters of the lag-one Markov streamflow generator:
 * period means and standard deviations of the raw flows plus the lag-one
 * serial correlation beta_j between period j and period j-1 (period 0
 * pairs with the final period of the previous year). period_count is 12
 * for the monthly model and 366 for the day-of-year variant.
 */
struct PeriodParams {
    std::size_t period_count = 12;
    std::vector<double> means;     // cusecs
    std::vector<double> std_devs;  // cusecs
    std::vector<double> betas;     // dimensionless, clamped to [-1, 1]

    void validate() const {
        if (period_count == 0 || means.size() != period_count ||
            std_devs.size() != period_count || betas.size() != period_count) {
            throw std::invalid_argument("PeriodParams: inconsistent array lengths");
        }
        for (std::size_t j = 0; j < period_count; ++j) {
            if (!(std_devs[j] > 0.0)) {
                throw std::invalid_argument("PeriodParams: std_dev must be > 0");
            }
            if (std::abs(betas[j]) > 1.0) {
                throw std::invalid_argument("PeriodParams: |beta| must be <= 1");
            }
        }
    }
};

/// Standardized and destandardized generated flows, years x periods.
struct SyntheticSeries {
    std::vector<std::vector<double>> standardized;
    std::vector<std::vector<double>> flows;  // flows[i][j] = mean[j] + std[j] * y[i][j]
};

namespace detail {

struct PairStats {
    double beta = 0.0;
    std::size_t pairs = 0;
};

// Pearson correlation of (current, previous) pairs; the deviations are
// taken from the means of the paired samples, which keeps |beta| <= 1.
inline PairStats lag_one_correlation(const std::vector<std::vector<double>>& flows,
                                     std::size_t period) {
    const std::size_t years = flows.size();
    const std::size_t periods = flows.front().size();
    std::vector<double> cur, prev;
    for (std::size_t i = 0; i < years; ++i) {
        if (period == 0) {
            if (i == 0) continue;
            cur.push_back(flows[i][0]);
            prev.push_back(flows[i - 1][periods - 1]);
        } else {
            cur.push_back(flows[i][period]);
            prev.push_back(flows[i][period - 1]);
        }
    }
    PairStats out;
    out.pairs = cur.size();
    if (cur.size() < 2) return out;  // beta undefined from a single pair; report 0

    double mean_cur = 0.0, mean_prev = 0.0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
        mean_cur += cur[i];
        mean_prev += prev[i];
    }
    mean_cur /= double(cur.size());
    mean_prev /= double(prev.size());

    double num = 0.0, den_cur = 0.0, den_prev = 0.0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
        const double dx = cur[i] - mean_cur;
        const double dy = prev[i] - mean_prev;
        num += dx * dy;
        den_cur += dx * dx;
        den_prev += dy * dy;
    }
    if (den_cur == 0.0 || den_prev == 0.0) {
        throw DataError("lag-one correlation: zero-variance period pairing");
    }
    out.beta = num / std::sqrt(den_cur * den_prev);
    // guard floating-point overshoot so sqrt(1 - beta^2) stays real
    out.beta = std::clamp(out.beta, -1.0, 1.0);
    return out;
}

}  // namespace detail

/**
 * Fits period means, standard deviations (sample estimates, n-1) and
 * lag-one correlations from a complete years x periods flow matrix.
 */
inline PeriodParams fit_period_params(const std::vector<std::vector<double>>& flows) {
    if (flows.size() < 2) throw DataError("fit_period_params: need at least 2 years");
    const std::size_t periods = flows.front().size();
    if (periods == 0) throw std::invalid_argument("fit_period_params: empty periods");
    for (const auto& year : flows) {
        if (year.size() != periods) {
            throw std::invalid_argument("fit_period_params: ragged flow matrix");
        }
    }

    PeriodParams params;
    params.period_count = periods;
    params.means.resize(periods);
    params.std_devs.resize(periods);
    params.betas.resize(periods);

    const double n = double(flows.size());
    for (std::size_t j = 0; j < periods; ++j) {
        double sum = 0.0;
        for (const auto& year : flows) sum += year[j];
        params.means[j] = sum / n;

        double ss = 0.0;
        for (const auto& year : flows) {
            const double d = year[j] - params.means[j];
            ss += d * d;
        }
        params.std_devs[j] = std::sqrt(ss / (n - 1.0));
        if (!(params.std_devs[j] > 0.0)) {
            throw DataError("fit_period_params: zero-variance period " + std::to_string(j));
        }
    }
    for (std::size_t j = 0; j < periods; ++j) {
        params.betas[j] = detail::lag_one_correlation(flows, j).beta;
    }
    return params;
}

/**
 * Generates the standardized lag-one process
 *
 *   y_t = beta_j * y_{t-1} + sqrt(1 - beta_j^2) * Z_t
 *
 * period by period across years, starting from y0 (the long-run mean 0 by
 * default). Z is standard normal from `rng`; `noise_override` substitutes a
 * deterministic Z stream for testing.
 */
inline std::vector<std::vector<double>> generate_standardized(
    const PeriodParams& params, std::size_t n_years, Rng& rng,
    const std::vector<double>* noise_override = nullptr, double y0 = 0.0) {
    params.validate();
    if (noise_override && noise_override->size() < n_years * params.period_count) {
        throw std::invalid_argument("generate_standardized: noise override too short");
    }
    std::vector<std::vector<double>> y(n_years,
                                       std::vector<double>(params.period_count, 0.0));
    double prev = y0;
    std::size_t t = 0;
    for (std::size_t i = 0; i < n_years; ++i) {
        for (std::size_t j = 0; j < params.period_count; ++j, ++t) {
            const double z = noise_override ? (*noise_override)[t] : rng.gaussian();
            const double beta = params.betas[j];
            y[i][j] = beta * prev + std::sqrt(1.0 - beta * beta) * z;
            prev = y[i][j];
        }
    }
    return y;
}

/// x_{i,j} = mean_j + std_j * y_{i,j}, the inverse of standardization.
inline std::vector<std::vector<double>> destandardize(
    const std::vector<std::vector<double>>& y, const PeriodParams& params) {
    params.validate();
    std::vector<std::vector<double>> flows(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i].size() != params.period_count) {
            throw std::invalid_argument("destandardize: shape mismatch");
        }
        flows[i].resize(params.period_count);
        for (std::size_t j = 0; j < params.period_count; ++j) {
            flows[i][j] = params.means[j] + params.std_devs[j] * y[i][j];
        }
    }
    return flows;
}

/// (x - mean_j) / std_j per cell; exact inverse of destandardize.
inline std::vector<std::vector<double>> standardize(
    const std::vector<std::vector<double>>& flows, const PeriodParams& params) {
    params.validate();
    std::vector<std::vector<double>> y(flows.size());
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (flows[i].size() != params.period_count) {
            throw std::invalid_argument("standardize: shape mismatch");
        }
        y[i].resize(params.period_count);
        for (std::size_t j = 0; j < params.period_count; ++j) {
            y[i][j] = (flows[i][j] - params.means[j]) / params.std_devs[j];
        }
    }
    return y;
}

inline SyntheticSeries generate_monthly(const PeriodParams& params, std::size_t n_years,
                                        std::uint64_t seed = Rng::kDefaultSeed) {
    if (params.period_count != 12) {
        throw std::invalid_argument("generate_monthly: params must have 12 periods");
    }
    Rng rng(seed);
    SyntheticSeries out;
    out.standardized = generate_standardized(params, n_years, rng);
    out.flows = destandardize(out.standardized, params);
    return out;
}

/// Day-of-year variant: the identical recursion at daily step with 366 parameter sets.
inline SyntheticSeries generate_daily(const PeriodParams& params, std::size_t n_years,
                                      std::uint64_t seed = Rng::kDefaultSeed) {
    if (params.period_count != 366) {
        throw std::invalid_argument("generate_daily: params must have 366 periods");
    }
    Rng rng(seed);
    SyntheticSeries out;
    out.standardized = generate_standardized(params, n_years, rng);
    out.flows = destandardize(out.standardized, params);
    return out;
}

// ---------------------------------------------------------------------------
// Calendar bridges between DailySeries and the years x periods matrices
// ---------------------------------------------------------------------------

inline bool is_leap_year(int year) {
    return std::chrono::year{year}.is_leap();
}

/// Day-of-year slot in the canonical leap calendar (Jan 1 = 0, Feb 29 = 59, Dec 31 = 365).
inline std::size_t day_of_year_slot(Date date) {
    static constexpr int kCumulative[12] = {0,   31,  60,  91,  121, 152,
                                            182, 213, 244, 274, 305, 335};
    const std::chrono::year_month_day ymd{date};
    return std::size_t(kCumulative[unsigned(ymd.month()) - 1] + unsigned(ymd.day()) - 1);
}

/**
 * Monthly-mean matrix over the complete calendar years inside `range`.
 * Each row is one January-to-December year of monthly mean flows.
 */
inline std::vector<std::vector<double>> monthly_matrix(const DailySeries& series,
                                                       IndexRange range) {
    if (range.end > series.size()) throw std::invalid_argument("monthly_matrix: bad range");
    const Date first = series.date_at(range.begin);
    const Date last_excl = series.date_at(range.end - 1) + std::chrono::days(1);

    std::chrono::year_month_day first_ymd{first};
    int year = int(first_ymd.year());
    if (first != make_date(year, 1, 1)) ++year;  // first complete year

    std::vector<std::vector<double>> rows;
    while (true) {
        const Date year_begin = make_date(year, 1, 1);
        const Date year_end = make_date(year + 1, 1, 1);
        if (year_end > last_excl) break;
        std::vector<double> sums(12, 0.0);
        std::vector<int> counts(12, 0);
        for (Date d = year_begin; d < year_end; d += std::chrono::days(1)) {
            const std::size_t idx = std::size_t((d - series.start_date).count());
            const unsigned month = unsigned(std::chrono::year_month_day{d}.month());
            sums[month - 1] += series.values[idx];
            counts[month - 1] += 1;
        }
        std::vector<double> row(12);
        for (std::size_t m = 0; m < 12; ++m) row[m] = sums[m] / double(counts[m]);
        rows.push_back(std::move(row));
        ++year;
    }
    if (rows.empty()) throw DataError("monthly_matrix: no complete calendar year in range");
    return rows;
}

/**
 * Day-of-year matrix (366 columns) over the complete calendar years inside
 * `range`. In non-leap years the Feb-29 slot carries the Feb-28 value so the
 * matrix stays rectangular.
 */
inline std::vector<std::vector<double>> daily_matrix(const DailySeries& series,
                                                     IndexRange range) {
    if (range.end > series.size()) throw std::invalid_argument("daily_matrix: bad range");
    const Date first = series.date_at(range.begin);
    const Date last_excl = series.date_at(range.end - 1) + std::chrono::days(1);

    std::chrono::year_month_day first_ymd{first};
    int year = int(first_ymd.year());
    if (first != make_date(year, 1, 1)) ++year;

    std::vector<std::vector<double>> rows;
    while (true) {
        const Date year_begin = make_date(year, 1, 1);
        const Date year_end = make_date(year + 1, 1, 1);
        if (year_end > last_excl) break;
        std::vector<double> row(366, 0.0);
        for (Date d = year_begin; d < year_end; d += std::chrono::days(1)) {
            const std::size_t idx = std::size_t((d - series.start_date).count());
            row[day_of_year_slot(d)] = series.values[idx];
        }
        if (!is_leap_year(year)) row[59] = row[58];
        rows.push_back(std::move(row));
        ++year;
    }
    if (rows.empty()) throw DataError("daily_matrix: no complete calendar year in range");
    return rows;
}

/// Daily params from a series; the Feb-29 slot shares Feb-28's fitted parameters.
inline PeriodParams fit_daily_params(const DailySeries& series, IndexRange range) {
    PeriodParams params = fit_period_params(daily_matrix(series, range));
    params.means[59] = params.means[58];
    params.std_devs[59] = params.std_devs[58];
    params.betas[59] = params.betas[58];
    return params;
}

/**
 * Expands a generated monthly flow matrix to the daily CSV schema: every
 * day carries its month's flow value. Rows map to calendar years starting
 * at `start_year`. Negative generated flows clamp to 0 so the output obeys
 * the schema.
 */
inline DailySeries monthly_flows_to_daily(const std::vector<std::vector<double>>& flows,
                                          int start_year) {
    if (flows.empty()) throw DataError("monthly_flows_to_daily: no generated years");
    std::vector<double> values;
    for (std::size_t i = 0; i < flows.size(); ++i) {
        const int year = start_year + int(i);
        for (Date d = make_date(year, 1, 1); d < make_date(year + 1, 1, 1);
             d += std::chrono::days(1)) {
            const unsigned month = unsigned(std::chrono::year_month_day{d}.month());
            values.push_back(std::max(0.0, flows[i][month - 1]));
        }
    }
    return DailySeries{make_date(start_year, 1, 1), std::move(values)};
}

/// Maps a generated 366-slot matrix onto real calendar days (non-leap years skip Feb 29).
inline DailySeries daily_flows_to_daily(const std::vector<std::vector<double>>& flows,
                                        int start_year) {
    if (flows.empty()) throw DataError("daily_flows_to_daily: no generated years");
    std::vector<double> values;
    for (std::size_t i = 0; i < flows.size(); ++i) {
        const int year = start_year + int(i);
        for (Date d = make_date(year, 1, 1); d < make_date(year + 1, 1, 1);
             d += std::chrono::days(1)) {
            values.push_back(std::max(0.0, flows[i][day_of_year_slot(d)]));
        }
    }
    return DailySeries{make_date(start_year, 1, 1), std::move(values)};
}

inline void to_json(nlohmann::json& j, const PeriodParams& p) {
    j = nlohmann::json{{"period_count", p.period_count},
                       {"means", p.means},
                       {"std_devs", p.std_devs},
                       {"betas", p.betas}};
}

inline void from_json(const nlohmann::json& j, PeriodParams& p) {
    j.at("period_count").get_to(p.period_count);
    j.at("means").get_to(p.means);
    j.at("std_devs").get_to(p.std_devs);
    j.at("betas").get_to(p.betas);
    p.validate();
}

}  // namespace hydro
