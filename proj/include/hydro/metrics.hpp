#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "hydro/common.hpp"

#include <json.hpp>

namespace hydro {

/// Root mean square error: sqrt(mean((p - o)^2)). Symmetric in its arguments.
inline double rmse(const std::vector<double>& predicted,
                   const std::vector<double>& observed) {
    if (predicted.empty()) throw std::invalid_argument("rmse: empty input");
    if (predicted.size() != observed.size()) {
        throw std::invalid_argument("rmse: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const double diff = predicted[i] - observed[i];
        sum += diff * diff;
    }
    return std::sqrt(sum / double(predicted.size()));
}

/**
 * Coefficient of determination:
 *
 *   R^2 = 1 - SS_res / SS_tot
 *
 * Not the squared Pearson correlation; a biased forecast can drive this
 * negative even when correlated with the observations.
 */
inline double r_squared(const std::vector<double>& predicted,
                        const std::vector<double>& observed) {
    if (predicted.size() != observed.size()) {
        throw std::invalid_argument("r_squared: length mismatch");
    }
    if (observed.size() < 2) throw std::invalid_argument("r_squared: need >= 2 samples");
    double mean = 0.0;
    for (double o : observed) mean += o;
    mean /= double(observed.size());

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double res = observed[i] - predicted[i];
        const double dev = observed[i] - mean;
        ss_res += res * res;
        ss_tot += dev * dev;
    }
    if (ss_tot == 0.0) throw DataError("r_squared: constant observed series");
    return 1.0 - ss_res / ss_tot;
}

/**
 * Lag-k autocorrelation with the full-series mean in both factors:
 *
 *   r_k = sum_{t}(x_t - xbar)(x_{t+k} - xbar) / sum_t (x_t - xbar)^2
 *
 * Satisfies |r_k| <= 1 and r_0 = 1.
 */
inline double autocorrelation(const std::vector<double>& series, std::size_t lag) {
    if (lag >= series.size()) {
        throw std::invalid_argument("autocorrelation: lag must be < series length");
    }
    double mean = 0.0;
    for (double x : series) mean += x;
    mean /= double(series.size());

    double denom = 0.0;
    for (double x : series) denom += (x - mean) * (x - mean);
    if (denom == 0.0) throw DataError("autocorrelation: constant series");

    double num = 0.0;
    for (std::size_t t = 0; t + lag < series.size(); ++t) {
        num += (series[t] - mean) * (series[t + lag] - mean);
    }
    return num / denom;
}

/**
 * Descriptive statistics of an inflow series. Moment estimators are the
 * population (biased) forms; kurtosis is excess kurtosis. Autocorrelations
 * r1..r3 are NaN whenever the series is shorter than the lag requires.
 */
struct SeriesStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double std_dev = 0.0;
    double kurtosis = 0.0;  // excess
    double skewness = 0.0;
    double r1 = std::numeric_limits<double>::quiet_NaN();
    double r2 = std::numeric_limits<double>::quiet_NaN();
    double r3 = std::numeric_limits<double>::quiet_NaN();
};

inline SeriesStats descriptive_stats(const std::vector<double>& values) {
    if (values.size() < 2) throw std::invalid_argument("descriptive_stats: need >= 2 values");
    SeriesStats s;
    s.min = values[0];
    s.max = values[0];
    double sum = 0.0;
    for (double x : values) {
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
        sum += x;
    }
    const double n = double(values.size());
    s.mean = sum / n;
    if (s.min == s.max) throw DataError("descriptive_stats: constant series");

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : values) {
        const double d = x - s.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    s.std_dev = std::sqrt(m2);
    s.skewness = m3 / (s.std_dev * s.std_dev * s.std_dev);
    s.kurtosis = m4 / (m2 * m2) - 3.0;

    if (values.size() > 1) s.r1 = autocorrelation(values, 1);
    if (values.size() > 2) s.r2 = autocorrelation(values, 2);
    if (values.size() > 3) s.r3 = autocorrelation(values, 3);
    return s;
}

/// Forecast-quality summary; rmse is computed on normalized values.
struct EvalReport {
    double rmse = 0.0;
    double r_squared = 0.0;
    std::size_t n = 0;
};

inline EvalReport evaluate_forecast(const std::vector<double>& predicted,
                                    const std::vector<double>& observed) {
    EvalReport report;
    report.rmse = rmse(predicted, observed);
    report.r_squared = r_squared(predicted, observed);
    report.n = observed.size();
    return report;
}

inline void to_json(nlohmann::json& j, const EvalReport& r) {
    j = nlohmann::json{{"rmse", r.rmse}, {"r2", r.r_squared}, {"n", r.n}};
}

inline void from_json(const nlohmann::json& j, EvalReport& r) {
    j.at("rmse").get_to(r.rmse);
    j.at("r2").get_to(r.r_squared);
    j.at("n").get_to(r.n);
}

inline void to_json(nlohmann::json& j, const SeriesStats& s) {
    j = nlohmann::json{{"min", s.min},           {"max", s.max},
                       {"mean", s.mean},         {"std_dev", s.std_dev},
                       {"kurtosis", s.kurtosis}, {"skewness", s.skewness}};
    j["r1"] = std::isnan(s.r1) ? nlohmann::json(nullptr) : nlohmann::json(s.r1);
    j["r2"] = std::isnan(s.r2) ? nlohmann::json(nullptr) : nlohmann::json(s.r2);
    j["r3"] = std::isnan(s.r3) ? nlohmann::json(nullptr) : nlohmann::json(s.r3);
}

}  // namespace hydro
