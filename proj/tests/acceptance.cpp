// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Criteria that need the real Bhakra CSV are
// skipped unless HYDRO_REAL_CSV points at the file.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hydro/anomaly.hpp"
#include "hydro/checkpoint.hpp"
#include "hydro/lstm.hpp"
#include "hydro/metrics.hpp"
#include "hydro/reservoir.hpp"
#include "hydro/rng.hpp"
#include "hydro/scaler.hpp"
#include "hydro/series.hpp"
#include "hydro/split.hpp"
#include "hydro/svg.hpp"
#include "hydro/thomas_fiering.hpp"
#include "hydro/training.hpp"
#include "hydro/window.hpp"

using namespace hydro;

namespace {

struct Harness {
    int failures = 0;
    int skips = 0;

    void report(int criterion, const std::string& name, bool pass,
                const std::string& detail = "") {
        std::printf("%s  criterion %2d  %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
                    name.c_str(), detail.empty() ? "" : ": ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }

    void skip(int criterion, const std::string& name, const std::string& why) {
        std::printf("SKIP  criterion %2d  %s: %s\n", criterion, name.c_str(), why.c_str());
        std::fflush(stdout);
        ++skips;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// --------------------------------------------------------------------------
// 1. topology fidelity
// --------------------------------------------------------------------------

void criterion_topology(Harness& h) {
    const NetworkConfig config;  // lookback 3, hidden {4, 4}, dense 1
    const std::size_t total = param_count(config);

    NetworkConfig first_only;
    first_only.hidden_sizes = {4};
    const std::size_t first = param_count(first_only) - (4 + 1);  // strip dense head
    const std::size_t second = total - first - (4 + 1);

    const bool pass = total == 245 && first == 96 && second == 144;
    h.report(1, "topology 96/144/5 = 245", pass,
             "layers " + std::to_string(first) + "/" + std::to_string(second) +
                 "/5, total " + std::to_string(total));
}

// --------------------------------------------------------------------------
// 2. gradient correctness on >= 50 random networks
// --------------------------------------------------------------------------

double batch_mse(const LstmNetwork& net, const std::vector<std::vector<double>>& inputs,
                 const std::vector<double>& targets) {
    return mse_loss(network_forward(net, inputs), targets);
}

void criterion_gradients(Harness& h) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(31415);
    double worst = 0.0;
    int instances = 0;
    for (std::size_t hsize : {2, 3, 4}) {
        for (std::size_t lookback : {1, 2, 3, 4}) {
            for (int variant = 0; variant < 5; ++variant) {
                NetworkConfig config;
                config.lookback = lookback;
                config.hidden_sizes = (variant % 2 == 0)
                                          ? std::vector<std::size_t>{hsize}
                                          : std::vector<std::size_t>{hsize, hsize};
                config.sigmoid_candidate = (variant == 4);
                LstmNetwork net = init_params(config, 1000 + std::uint64_t(instances));

                const std::size_t batch = 1 + std::size_t(variant % 3);
                std::vector<std::vector<double>> inputs(batch,
                                                        std::vector<double>(lookback));
                std::vector<double> targets(batch);
                for (auto& w : inputs) {
                    for (double& v : w) v = rng.uniform();
                }
                for (double& t : targets) t = rng.uniform();

                const NetworkGrads grads = bptt_gradients(net, inputs, targets);
                std::vector<double> analytic;
                for (const double* g : gradient_ptrs(grads)) analytic.push_back(*g);

                const auto params = parameter_ptrs(net);
                const double step = 1e-5;
                for (std::size_t i = 0; i < params.size(); ++i) {
                    const double saved = *params[i];
                    *params[i] = saved + step;
                    const double plus = batch_mse(net, inputs, targets);
                    *params[i] = saved - step;
                    const double minus = batch_mse(net, inputs, targets);
                    *params[i] = saved;
                    const double numeric = (plus - minus) / (2.0 * step);
                    const double denom =
                        std::max({std::abs(analytic[i]), std::abs(numeric), 1e-4});
                    worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
                }
                ++instances;
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = instances >= 50 && worst < 1e-5 && seconds < 10.0;
    h.report(2, "BPTT matches central finite differences", pass,
             std::to_string(instances) + " networks, max rel err " + fmt(worst) + ", " +
                 fmt(seconds) + " s");
}

// --------------------------------------------------------------------------
// 3. normalization exactness
// --------------------------------------------------------------------------

void criterion_normalization(Harness& h) {
    Rng rng(777);
    bool pass = true;
    for (int trial = 0; trial < 1000 && pass; ++trial) {
        std::vector<double> values(25);
        const double offset = 20000.0 * rng.uniform();
        const double scale = 1.0 + 140000.0 * rng.uniform();
        for (double& v : values) v = offset + scale * rng.uniform();
        values[3] = offset;  // pin the extremes
        values[7] = offset + scale;
        const DailySeries series = DailySeries::make(make_date(2000, 1, 1), values);
        const ScalerParams scaler = fit_scaler(series, {0, values.size()});
        const NormalizedSeries normalized = normalize(series, scaler);

        if (normalized.values[3] != 0.0 || normalized.values[7] != 1.0) pass = false;
        const auto back = denormalize(normalized.values, scaler);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (std::abs(back[i] - values[i]) > 1e-12 * std::max(1.0, std::abs(values[i]))) {
                pass = false;
            }
        }
    }
    h.report(3, "min->0, max->1, round-trip within 1e-12 on 1000 series", pass);
}

// --------------------------------------------------------------------------
// 4. lag-one generator preserves fitted statistics
// --------------------------------------------------------------------------

void criterion_thomas_fiering(Harness& h) {
    const auto start = std::chrono::steady_clock::now();

    // 30-year synthetic monthly matrix to fit on
    PeriodParams base;
    base.period_count = 12;
    base.means.resize(12);
    base.std_devs.resize(12);
    base.betas.resize(12);
    for (std::size_t j = 0; j < 12; ++j) {
        const double phase = 2.0 * std::numbers::pi * double(j) / 12.0;
        base.means[j] = 18000.0 + 9000.0 * std::sin(phase);
        base.std_devs[j] = 3000.0 + 800.0 * std::cos(phase);
        base.betas[j] = 0.55 + 0.25 * std::sin(phase * 1.5);
    }
    const SyntheticSeries seed_data = generate_monthly(base, 30, 1234);
    const PeriodParams fitted = fit_period_params(seed_data.flows);

    const SyntheticSeries generated = generate_monthly(fitted, 2000, 9001);

    double worst_mean = 0.0, worst_std = 0.0, worst_beta = 0.0;
    for (std::size_t j = 0; j < 12; ++j) {
        double mean = 0.0;
        for (const auto& year : generated.flows) mean += year[j];
        mean /= double(generated.flows.size());
        worst_mean =
            std::max(worst_mean, std::abs(mean - fitted.means[j]) / fitted.means[j]);

        double ss = 0.0;
        for (const auto& year : generated.flows) ss += (year[j] - mean) * (year[j] - mean);
        const double sd = std::sqrt(ss / double(generated.flows.size() - 1));
        worst_std =
            std::max(worst_std, std::abs(sd - fitted.std_devs[j]) / fitted.std_devs[j]);

        // adjacent-period lag-one correlation of the standardized output
        std::vector<double> cur, prev;
        for (std::size_t i = 0; i < generated.standardized.size(); ++i) {
            if (j == 0) {
                if (i == 0) continue;
                cur.push_back(generated.standardized[i][0]);
                prev.push_back(generated.standardized[i - 1][11]);
            } else {
                cur.push_back(generated.standardized[i][j]);
                prev.push_back(generated.standardized[i][j - 1]);
            }
        }
        double mc = 0.0, mp = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            mc += cur[i];
            mp += prev[i];
        }
        mc /= double(cur.size());
        mp /= double(prev.size());
        double num = 0.0, dc = 0.0, dp = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            num += (cur[i] - mc) * (prev[i] - mp);
            dc += (cur[i] - mc) * (cur[i] - mc);
            dp += (prev[i] - mp) * (prev[i] - mp);
        }
        const double corr = num / std::sqrt(dc * dp);
        worst_beta = std::max(worst_beta, std::abs(corr - fitted.betas[j]));
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass =
        worst_mean < 0.02 && worst_std < 0.05 && worst_beta < 0.05 && seconds < 5.0;
    h.report(4, "2000-year generation preserves fitted statistics", pass,
             "mean err " + fmt(worst_mean) + ", std err " + fmt(worst_std) +
                 ", beta err " + fmt(worst_beta) + ", " + fmt(seconds) + " s");
}

// --------------------------------------------------------------------------
// 5. determinism across identical runs
// --------------------------------------------------------------------------

struct PipelineArtifacts {
    std::vector<std::vector<double>> synthetic;
    LstmNetwork initial;
    std::string checkpoint;
    std::string svg;
};

PipelineArtifacts run_pipeline() {
    PeriodParams params;
    params.period_count = 12;
    params.means.assign(12, 10000.0);
    params.std_devs.assign(12, 2000.0);
    params.betas.assign(12, 0.5);
    PipelineArtifacts artifacts;
    artifacts.synthetic = generate_monthly(params, 20, 9001).flows;

    // small training run on a deterministic synthetic series
    std::vector<double> values(3 * 365);
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = 0.5 + 0.4 * std::sin(2.0 * std::numbers::pi * double(i) / 365.0);
    }
    const WindowSet windows = make_windows(values, 3);

    artifacts.initial = init_params(NetworkConfig{}, 42);
    LstmNetwork net = artifacts.initial;
    TrainConfig cfg;
    cfg.epochs = 10;
    fit(net, windows, windows, cfg);
    artifacts.checkpoint = save_checkpoint(net, ScalerParams{0.0, 1.0});

    const std::vector<double> first_year(values.begin(), values.begin() + 365);
    artifacts.svg = render_plot_svg({first_year}, {"synthetic"});
    return artifacts;
}

void criterion_determinism(Harness& h) {
    const PipelineArtifacts a = run_pipeline();
    const PipelineArtifacts b = run_pipeline();
    const bool synthetic_same = a.synthetic == b.synthetic;
    const bool weights_same =
        a.initial.dense_weights == b.initial.dense_weights &&
        a.initial.layers[0].w_forget == b.initial.layers[0].w_forget &&
        a.initial.layers[1].w_candidate == b.initial.layers[1].w_candidate;
    const bool checkpoint_same = a.checkpoint == b.checkpoint;
    const bool svg_same = a.svg == b.svg;
    h.report(5, "bit-identical reruns under fixed seeds",
             synthetic_same && weights_same && checkpoint_same && svg_same,
             std::string("synthetic ") + (synthetic_same ? "ok" : "DIFFERS") +
                 ", init weights " + (weights_same ? "ok" : "DIFFERS") + ", checkpoint " +
                 (checkpoint_same ? "ok" : "DIFFERS") + ", svg " +
                 (svg_same ? "ok" : "DIFFERS"));
}

// --------------------------------------------------------------------------
// 6. learnability at desk scale
// --------------------------------------------------------------------------

void criterion_learnability(Harness& h) {
    const auto start = std::chrono::steady_clock::now();

    // noiseless 10-year daily sinusoid already in [0, 1]
    std::vector<double> values(10 * 365);
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = 0.5 + 0.5 * std::sin(2.0 * std::numbers::pi * double(i) / 365.0);
    }
    const std::size_t lookback = 3;
    const std::size_t train_end = 8 * 365;
    const std::size_t val_end = 9 * 365;

    const auto window_range = [&](std::size_t begin, std::size_t end) {
        return make_windows(
            std::vector<double>(values.begin() + long(begin), values.begin() + long(end)),
            lookback);
    };
    const WindowSet train = window_range(0, train_end);
    const WindowSet validation = window_range(train_end, val_end);
    const WindowSet test = window_range(val_end, values.size());

    LstmNetwork net = init_params(NetworkConfig{}, 42);
    TrainConfig cfg;  // 100 epochs, Adam, lr 1e-3
    const TrainReport report = fit(net, train, validation, cfg, &test);

    const double final_rmse = report.test.back().metrics.rmse;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = final_rmse < 0.05 && seconds < 120.0;
    h.report(6, "245-parameter network learns a daily sinusoid", pass,
             "final test RMSE " + fmt(final_rmse) + " (< 0.05), " + fmt(seconds) + " s");
}

// Second half of criterion 6: the published-figure regime needs the real
// observed record, so it only runs when HYDRO_REAL_CSV is set.
void criterion_learnability_real(Harness& h) {
    const char* path = std::getenv("HYDRO_REAL_CSV");
    if (!path || !*path) {
        h.skip(6, "real-record training (RMSE <= 0.05, R2 >= 0.90)",
               "set HYDRO_REAL_CSV to the observed daily CSV");
        return;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        h.report(6, "real-record training", false, std::string("cannot open ") + path);
        return;
    }
    const DailySeries series = load_daily_series(in);
    const SplitSpec split = split_series(series);
    const ScalerParams scaler = fit_scaler(series, split.train);
    const NormalizedSeries normalized = normalize(series, scaler);

    const auto window_range = [&](IndexRange r) {
        return make_windows(std::vector<double>(normalized.values.begin() + long(r.begin),
                                                normalized.values.begin() + long(r.end)),
                            3);
    };
    const WindowSet train = window_range(split.train);
    const WindowSet validation = window_range(split.validation);
    const WindowSet test = window_range(split.test);

    LstmNetwork net = init_params(NetworkConfig{}, 42);
    TrainConfig cfg;  // 100 epochs, Adam, lr 1e-3
    const TrainReport report = fit(net, train, validation, cfg, &test);
    const EvalReport final_test = report.test.back().metrics;

    const bool pass = final_test.rmse <= 0.05 && final_test.r_squared >= 0.90;
    h.report(6, "real-record training", pass,
             "test RMSE " + fmt(final_test.rmse) + " (<= 0.05), R2 " +
                 fmt(final_test.r_squared) + " (>= 0.90)");
}

// --------------------------------------------------------------------------
// 7. anomaly detection on a trained model
// --------------------------------------------------------------------------

void criterion_anomaly(Harness& h) {
    const auto start = std::chrono::steady_clock::now();

    // synthetic cusec-scale series: seasonal sinusoid plus observation noise.
    // The noise floor dominates tau, so the 7-step rollout drift stays well
    // inside the tau*rho tolerance on the unperturbed tail.
    Rng noise(2025);
    const std::size_t days = 6 * 365;
    std::vector<double> values(days);
    for (std::size_t i = 0; i < days; ++i) {
        values[i] = 12000.0 +
                    8000.0 * std::sin(2.0 * std::numbers::pi * double(i) / 365.0) +
                    1200.0 * noise.gaussian();
    }
    const DailySeries series = DailySeries::make(make_date(2000, 1, 1), values);

    const std::size_t lookback = 3;
    const IndexRange train_range{0, 4 * 365};
    const IndexRange val_range{4 * 365, 5 * 365};
    const ScalerParams scaler = fit_scaler(series, train_range);
    const NormalizedSeries normalized = normalize(series, scaler);

    const auto window_range = [&](IndexRange r) {
        return make_windows(std::vector<double>(normalized.values.begin() + long(r.begin),
                                                normalized.values.begin() + long(r.end)),
                            lookback);
    };
    const WindowSet train = window_range(train_range);
    const WindowSet validation = window_range(val_range);

    LstmNetwork net = init_params(NetworkConfig{}, 42);
    TrainConfig cfg;
    cfg.epochs = 40;
    fit(net, train, validation, cfg);

    AnomalyConfig detector;
    detector.k = 7;
    detector.lookback = lookback;
    detector.rho = 2.0;
    detector.tau = calibrate_tau(net, validation);

    const AnomalyVerdict calm = detect(net, series, detector, scaler);

    std::vector<double> flood_values = values;
    for (std::size_t i = days - 7; i < days; ++i) flood_values[i] *= 5.0;
    const AnomalyVerdict flood =
        detect(net, DailySeries::make(series.start_date, flood_values), detector, scaler);

    std::vector<double> drought_values = values;
    for (std::size_t i = days - 7; i < days; ++i) drought_values[i] *= 0.1;
    const AnomalyVerdict drought = detect(
        net, DailySeries::make(series.start_date, drought_values), detector, scaler);

    // exact boundary: constant network, constant observations, rmse == tau*rho
    NetworkConfig const_config;
    const_config.hidden_sizes = {2};
    LstmNetwork const_net = init_params(const_config, 1);
    for (auto& layer : const_net.layers) {
        for (auto* v : {&layer.w_forget, &layer.w_input, &layer.w_candidate,
                        &layer.w_output, &layer.b_forget, &layer.b_input,
                        &layer.b_candidate, &layer.b_output}) {
            std::fill(v->begin(), v->end(), 0.0);
        }
    }
    std::fill(const_net.dense_weights.begin(), const_net.dense_weights.end(), 0.0);
    const_net.dense_bias = 0.0;
    std::vector<double> boundary_values(20, 10.0);
    for (std::size_t i = 13; i < 20; ++i) boundary_values[i] = 25.0;  // normalized 0.25
    AnomalyConfig boundary_cfg;
    boundary_cfg.k = 7;
    boundary_cfg.tau = 0.125;
    boundary_cfg.rho = 2.0;  // tolerance exactly 0.25
    const AnomalyVerdict boundary =
        detect(const_net, DailySeries::make(make_date(2010, 1, 1), boundary_values),
               boundary_cfg, ScalerParams{0.0, 100.0});

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = calm.kind == AnomalyKind::none && flood.kind == AnomalyKind::flood &&
                      drought.kind == AnomalyKind::drought &&
                      boundary.observed_rmse == boundary_cfg.tau * boundary_cfg.rho &&
                      boundary.kind == AnomalyKind::none && seconds < 10.0;
    h.report(7, "flood/drought detection with calibrated tau", pass,
             "tau " + fmt(detector.tau) + "; calm " + to_string(calm.kind) + " (rmse " +
                 fmt(calm.observed_rmse) + "), x5 " + to_string(flood.kind) + ", x0.1 " +
                 to_string(drought.kind) + ", boundary " + to_string(boundary.kind) + ", " +
                 fmt(seconds) + " s");
}

// --------------------------------------------------------------------------
// 8. metric oracles
// --------------------------------------------------------------------------

void criterion_metric_oracles(Harness& h) {
    Rng rng(4242);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 50 + std::size_t(rng.uniform() * 150);
        std::vector<double> p(n), o(n);
        for (double& v : p) v = 10.0 * (rng.uniform() - 0.4);
        for (double& v : o) v = 10.0 * (rng.uniform() - 0.4);

        {  // rmse
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += (p[i] - o[i]) * (p[i] - o[i]);
            worst = std::max(worst, std::abs(rmse(p, o) - std::sqrt(s / double(n))));
        }
        {  // r_squared
            double m = 0.0;
            for (double v : o) m += v;
            m /= double(n);
            double ss_res = 0.0, ss_tot = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                ss_res += (o[i] - p[i]) * (o[i] - p[i]);
                ss_tot += (o[i] - m) * (o[i] - m);
            }
            worst = std::max(worst, std::abs(r_squared(p, o) - (1.0 - ss_res / ss_tot)));
        }
        {  // autocorrelation, lag 2
            double m = 0.0;
            for (double v : o) m += v;
            m /= double(n);
            double num = 0.0, den = 0.0;
            for (std::size_t t = 0; t + 2 < n; ++t) num += (o[t] - m) * (o[t + 2] - m);
            for (double v : o) den += (v - m) * (v - m);
            worst = std::max(worst, std::abs(autocorrelation(o, 2) - num / den));
        }
        {  // descriptive stats
            const SeriesStats s = descriptive_stats(o);
            double m = 0.0;
            for (double v : o) m += v;
            m /= double(n);
            double m2 = 0.0, m3 = 0.0, m4 = 0.0;
            for (double v : o) {
                const double d = v - m;
                m2 += d * d;
                m3 += d * d * d;
                m4 += d * d * d * d;
            }
            m2 /= double(n);
            m3 /= double(n);
            m4 /= double(n);
            worst = std::max(worst, std::abs(s.mean - m));
            worst = std::max(worst, std::abs(s.std_dev - std::sqrt(m2)));
            worst = std::max(worst, std::abs(s.skewness - m3 / std::pow(std::sqrt(m2), 3)));
            worst = std::max(worst, std::abs(s.kurtosis - (m4 / (m2 * m2) - 3.0)));
        }
    }
    h.report(8, "metrics agree with brute-force references", worst < 1e-10,
             "max abs deviation " + fmt(worst));
}

// --------------------------------------------------------------------------
// 9. reservoir formulas
// --------------------------------------------------------------------------

void criterion_reservoir(Harness& h) {
    bool pass = true;

    const auto unity = reservoir_factor({100.0, 100.0, 200.0});
    const auto surplus = reservoir_factor({300.0, 100.0, 200.0});
    if (!(unity.factor == 1.0 && unity.effective)) pass = false;
    if (!(surplus.factor == 2.0 && !surplus.effective)) pass = false;

    if (total_daily_release(3.0, 5.0) != 8.0) pass = false;
    if (total_daily_release(0.0, 7.5) != 7.5) pass = false;
    if (total_daily_release(7.5, 0.0) != 7.5) pass = false;

    const RuleCurve curve = RuleCurve::defaults();
    const auto ok = check_rule_curve(make_date(2020, 7, 31), 1649.0, curve);
    const auto july = check_rule_curve(make_date(2020, 7, 20), 1655.0, curve);
    const auto august = check_rule_curve(make_date(2020, 8, 25), 1680.0, curve);
    if (!ok.empty()) pass = false;
    if (!(july.size() == 1 && july[0].elevation_ft == 1650.0)) pass = false;
    if (!(august.size() == 1 && august[0].relation == RuleRelation::not_reach_before)) {
        pass = false;
    }
    h.report(9, "factor, additive release and rule-curve verdicts", pass);
}

// --------------------------------------------------------------------------
// 10. real-data spot checks (optional input)
// --------------------------------------------------------------------------

void criterion_real_data(Harness& h) {
    const char* path = std::getenv("HYDRO_REAL_CSV");
    if (!path || !*path) {
        h.skip(10, "real-data spot checks", "set HYDRO_REAL_CSV to the observed daily CSV");
        return;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        h.report(10, "real-data spot checks", false, std::string("cannot open ") + path);
        return;
    }
    const DailySeries series = load_daily_series(in);
    const SplitSpec split = split_series(series);
    const std::vector<double> train(series.values.begin() + long(split.train.begin),
                                    series.values.begin() + long(split.train.end));
    const SeriesStats stats = descriptive_stats(train);

    const bool min_ok = stats.min == 3101.0;
    const bool max_ok = stats.max == 149075.0;
    const bool mean_ok = std::abs(stats.mean - 19226.518) <= 0.001;
    const bool r1_ok = std::abs(stats.r1 - 0.974) <= 0.001;
    const bool skew_ok = std::abs(stats.skewness - 1.486) <= 0.1 * 1.486;
    const bool kurt_ok = std::abs(stats.kurtosis - 2.314) <= 0.1 * 2.314;
    const bool pass = min_ok && max_ok && mean_ok && r1_ok && skew_ok && kurt_ok;
    h.report(10, "training-split statistics of the observed record", pass,
             "min " + fmt(stats.min) + ", max " + fmt(stats.max) + ", mean " +
                 fmt(stats.mean) + ", r1 " + fmt(stats.r1) + ", skew " +
                 fmt(stats.skewness) + ", kurt " + fmt(stats.kurtosis));
}

}  // namespace

int main() {
    Harness h;
    criterion_topology(h);
    criterion_gradients(h);
    criterion_normalization(h);
    criterion_thomas_fiering(h);
    criterion_determinism(h);
    criterion_learnability(h);
    criterion_learnability_real(h);
    criterion_anomaly(h);
    criterion_metric_oracles(h);
    criterion_reservoir(h);
    criterion_real_data(h);

    if (h.failures == 0) {
        std::printf("acceptance: all criteria passed (%d skipped)\n", h.skips);
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED (%d skipped)\n", h.failures, h.skips);
    return 1;
}
