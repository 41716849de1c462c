#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hydro/common.hpp"
#include "hydro/lstm.hpp"
#include "hydro/metrics.hpp"
#include "hydro/scaler.hpp"
#include "hydro/series.hpp"
#include "hydro/window.hpp"

#include <json.hpp>

namespace hydro {

struct AnomalyConfig {
    std::size_t k = 7;         // days under test
    std::size_t lookback = 3;  // must match the network's lookback
    double rho = 2.0;          // tolerance multiplier, > 1
    double tau = 0.03;         // empirical one-step RMSE

    void validate() const {
        if (k < 1) throw std::invalid_argument("AnomalyConfig: k must be >= 1");
        if (!(rho > 1.0)) throw std::invalid_argument("AnomalyConfig: rho must be > 1");
        if (!(tau > 0.0)) throw std::invalid_argument("AnomalyConfig: tau must be > 0");
    }
};

enum class AnomalyKind { none, flood, drought };

inline std::string to_string(AnomalyKind kind) {
    switch (kind) {
        case AnomalyKind::flood: return "flood";
        case AnomalyKind::drought: return "drought";
        default: return "none";
    }
}

/// Outcome of the detector; sums and RMSE are in normalized space.
struct AnomalyVerdict {
    AnomalyKind kind = AnomalyKind::none;
    double observed_rmse = 0.0;
    double predicted_sum = 0.0;
    double observed_sum = 0.0;
};

/**
 * Flood/drought detector: normalizes the ground truth with the scaler the
 * model was trained with (never refit on the window under test, or spikes
 * would self-normalize away), takes the lookback window immediately
 * preceding the last k days, rolls the network out k steps recursively and
 * compares against the k observations.
 *
 * RMSE <= tau * rho (boundary inclusive) is normal. Beyond that it is a
 * flood when the ground truth out-ran the forecast (predicted_sum <
 * observed_sum) and a drought otherwise; equal sums land on drought via
 * the else-branch.
 */
inline AnomalyVerdict detect(const LstmNetwork& net, const DailySeries& ground_truth,
                             const AnomalyConfig& cfg, const ScalerParams& scaler) {
    cfg.validate();
    net.config.validate();
    if (cfg.lookback != net.config.lookback) {
        throw std::invalid_argument("detect: config lookback differs from the network's");
    }
    if (ground_truth.size() < cfg.k + cfg.lookback) {
        throw DataError("detect: series shorter than k + lookback days");
    }

    const NormalizedSeries normalized = normalize(ground_truth, scaler);
    const std::size_t n = normalized.values.size();
    const std::vector<double> observations(normalized.values.end() - long(cfg.k),
                                           normalized.values.end());
    const std::vector<double> window(
        normalized.values.begin() + long(n - cfg.k - cfg.lookback),
        normalized.values.begin() + long(n - cfg.k));

    const std::vector<double> predictions = rollout(net, window, cfg.k);

    AnomalyVerdict verdict;
    verdict.observed_rmse = rmse(predictions, observations);
    for (double p : predictions) verdict.predicted_sum += p;
    for (double o : observations) verdict.observed_sum += o;

    if (verdict.observed_rmse > cfg.tau * cfg.rho) {
        verdict.kind = verdict.predicted_sum < verdict.observed_sum ? AnomalyKind::flood
                                                                    : AnomalyKind::drought;
    }
    return verdict;
}

/// Empirical tau: one-step RMSE of the network on held-out validation windows.
inline double calibrate_tau(const LstmNetwork& net, const WindowSet& validation) {
    if (validation.size() == 0) throw std::invalid_argument("calibrate_tau: empty set");
    const auto predictions = network_forward(net, validation.inputs);
    return rmse(predictions, validation.targets);
}

inline nlohmann::json verdict_json(const AnomalyVerdict& verdict, const AnomalyConfig& cfg) {
    return nlohmann::json{{"kind", to_string(verdict.kind)},
                          {"observed_rmse", verdict.observed_rmse},
                          {"predicted_sum", verdict.predicted_sum},
                          {"observed_sum", verdict.observed_sum},
                          {"k", cfg.k},
                          {"rho", cfg.rho},
                          {"tau", cfg.tau}};
}

}  // namespace hydro
