// hydro: batch toolkit for daily-inflow forecasting and reservoir operations.
//
// Subcommands: stats, train, evaluate, forecast, generate, anomaly,
// reservoir, plot. All reports are UTF-8 JSON; plots are SVG 1.1.
// Exit codes: 0 success / no anomaly, 1 usage error, 2 data error,
// 10 flood, 11 drought.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hydro/anomaly.hpp"
#include "hydro/baseline.hpp"
#include "hydro/checkpoint.hpp"
#include "hydro/lstm.hpp"
#include "hydro/metrics.hpp"
#include "hydro/reservoir.hpp"
#include "hydro/scaler.hpp"
#include "hydro/series.hpp"
#include "hydro/split.hpp"
#include "hydro/svg.hpp"
#include "hydro/thomas_fiering.hpp"
#include "hydro/training.hpp"
#include "hydro/window.hpp"

namespace {

using namespace hydro;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitFlood = 10;
constexpr int kExitDrought = 11;

DailySeries read_series(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    return load_daily_series(in);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << text;
}

/// Writes to the path when given, otherwise to standard output.
void emit_json(const json& j, const std::string& output_path) {
    const std::string text = j.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        write_text(output_path, text);
    }
}

std::vector<double> slice(const std::vector<double>& values, IndexRange range) {
    return {values.begin() + long(range.begin), values.begin() + long(range.end)};
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

struct StatsOptions {
    std::string input;
    std::string output;
};

json stats_block(const std::vector<double>& values) {
    json j = descriptive_stats(values);
    j["n"] = values.size();
    return j;
}

int cmd_stats(const StatsOptions& opt) {
    const DailySeries series = read_series(opt.input);
    const SplitSpec split = split_series(series);

    json report;
    report["train"] = stats_block(slice(series.values, split.train));
    report["validation"] = stats_block(slice(series.values, split.validation));
    report["test"] = stats_block(slice(series.values, split.test));

    static const char* kRows[] = {"min",      "max",      "mean", "std_dev",
                                  "kurtosis", "skewness", "r1",   "r2",
                                  "r3",       "n"};
    std::printf("%-10s %16s %16s %16s\n", "parameter", "train", "validation", "test");
    for (const char* row : kRows) {
        std::printf("%-10s %16.3f %16.3f %16.3f\n", row,
                    report["train"][row].get<double>(),
                    report["validation"][row].get<double>(),
                    report["test"][row].get<double>());
    }
    if (!opt.output.empty()) emit_json(report, opt.output);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

struct TrainOptions {
    std::string input;
    std::string output = "checkpoint.json";
    std::string report;
    std::size_t lookback = 3;
    std::size_t batch = 15;
    std::size_t epochs = 100;
    std::uint64_t seed = 42;
    double learning_rate = 1e-3;
    std::string optimizer = "adam";
    std::vector<std::size_t> hidden = {4, 4};
    std::string scaler_fit = "train";  // "train" avoids leakage; "full" mirrors Eq-12-over-everything
};

struct PreparedData {
    SplitSpec split;
    ScalerParams scaler;
    NormalizedSeries normalized;
    WindowSet train, validation, test;
};

PreparedData prepare(const DailySeries& series, std::size_t lookback,
                     const std::string& scaler_fit) {
    PreparedData data;
    data.split = split_series(series);
    data.scaler = fit_scaler(series, scaler_fit == "full"
                                         ? IndexRange{0, series.size()}
                                         : data.split.train);
    data.normalized = normalize(series, data.scaler);
    data.train = make_windows(slice(data.normalized.values, data.split.train), lookback);
    data.validation =
        make_windows(slice(data.normalized.values, data.split.validation), lookback);
    data.test = make_windows(slice(data.normalized.values, data.split.test), lookback);
    return data;
}

int cmd_train(const TrainOptions& opt) {
    const DailySeries series = read_series(opt.input);
    const PreparedData data = prepare(series, opt.lookback, opt.scaler_fit);

    NetworkConfig config;
    config.lookback = opt.lookback;
    config.hidden_sizes = opt.hidden;
    config.batch_size = opt.batch;
    LstmNetwork net = init_params(config, opt.seed);

    TrainConfig cfg;
    cfg.epochs = opt.epochs;
    cfg.learning_rate = opt.learning_rate;
    cfg.optimizer = optimizer_from_string(opt.optimizer);
    cfg.seed = opt.seed;
    const TrainReport report = fit(net, data.train, data.validation, cfg, &data.test);

    write_text(opt.output, save_checkpoint(net, data.scaler));
    if (!opt.report.empty()) {
        json j = report;
        j["epochs"] = opt.epochs;
        j["param_count"] = param_count(config);
        emit_json(j, opt.report);
    }
    std::printf("trained %zu epochs on %zu windows; final loss %.6f; checkpoint %s\n",
                opt.epochs, data.train.size(), report.train_loss.back(),
                opt.output.c_str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateOptions {
    std::string checkpoint;
    std::string input;
    std::string output;
    std::string eval_start;  // ISO date; default = start of the test range
    std::uint64_t seed = Rng::kDefaultSeed;
};

int cmd_evaluate(const EvaluateOptions& opt) {
    const auto [net, scaler] = load_checkpoint(read_text(opt.checkpoint));
    const DailySeries series = read_series(opt.input);
    const SplitSpec split = split_series(series);
    const std::size_t lookback = net.config.lookback;

    const Date eval_start =
        opt.eval_start.empty() ? series.date_at(split.test.begin) : parse_date(opt.eval_start);
    const Date eval_end = add_years(eval_start, 1);
    if (eval_start < series.date_at(lookback) || eval_end > series.end_date_exclusive()) {
        throw DataError("evaluation year must lie inside the series (after the first lookback days)");
    }
    const std::size_t begin = std::size_t((eval_start - series.start_date).count());
    const std::size_t days = std::size_t((eval_end - eval_start).count());

    const NormalizedSeries normalized = normalize(series, scaler);
    json report;
    report["eval_start"] = format_date(eval_start);
    report["eval_days"] = days;

    // one-step-ahead network predictions over the evaluation year
    {
        std::vector<double> predicted, observed;
        predicted.reserve(days);
        for (std::size_t i = begin; i < begin + days; ++i) {
            const std::vector<double> window(normalized.values.begin() + long(i - lookback),
                                             normalized.values.begin() + long(i));
            predicted.push_back(network_forward(net, window));
            observed.push_back(normalized.values[i]);
        }
        report["lstm_daily"] = evaluate_forecast(predicted, observed);
    }

    // lag-one generator, monthly resolution: generated months vs observed monthly means
    {
        const PeriodParams params = fit_period_params(monthly_matrix(series, split.train));
        const int first_year = int(std::chrono::year_month_day{eval_start}.year());
        const SyntheticSeries generated = generate_monthly(params, 2, opt.seed);
        std::vector<double> predicted, observed;
        double month_sum = 0.0;
        std::size_t month_days = 0;
        for (std::size_t i = 0; i < days; ++i) {
            const Date d = eval_start + std::chrono::days(long(i));
            const std::chrono::year_month_day ymd{d};
            month_sum += normalized.values[begin + i];
            month_days += 1;
            const std::chrono::year_month_day next{d + std::chrono::days(1)};
            if (next.month() != ymd.month()) {
                // only fully covered months are compared
                if (month_days == unsigned(std::chrono::year_month_day_last{
                                               ymd.year(), ymd.month() / std::chrono::last}
                                               .day())) {
                    const std::size_t rel_year = std::size_t(int(ymd.year()) - first_year);
                    predicted.push_back(
                        scaler.to_unit(generated.flows[rel_year][unsigned(ymd.month()) - 1]));
                    observed.push_back(month_sum / double(month_days));
                }
                month_sum = 0.0;
                month_days = 0;
            }
        }
        report["tf_monthly"] = evaluate_forecast(predicted, observed);
    }

    // lag-one generator, day-of-year resolution
    {
        const PeriodParams params = fit_daily_params(series, split.train);
        const int first_year = int(std::chrono::year_month_day{eval_start}.year());
        SyntheticSeries generated = generate_daily(params, 2, opt.seed);
        std::vector<double> predicted, observed;
        predicted.reserve(days);
        for (std::size_t i = 0; i < days; ++i) {
            const Date d = eval_start + std::chrono::days(long(i));
            const std::size_t rel_year =
                std::size_t(int(std::chrono::year_month_day{d}.year()) - first_year);
            predicted.push_back(
                scaler.to_unit(generated.flows[rel_year][day_of_year_slot(d)]));
            observed.push_back(normalized.values[begin + i]);
        }
        report["tf_daily"] = evaluate_forecast(predicted, observed);
    }

    // historical 10-day-bin average
    {
        const TenDailyBaseline baseline = TenDailyBaseline::fit(series, split.train);
        std::vector<double> predicted, observed;
        predicted.reserve(days);
        for (std::size_t i = 0; i < days; ++i) {
            const Date d = eval_start + std::chrono::days(long(i));
            predicted.push_back(scaler.to_unit(baseline.forecast(d)));
            observed.push_back(normalized.values[begin + i]);
        }
        report["ten_daily"] = evaluate_forecast(predicted, observed);
    }

    emit_json(report, opt.output);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// forecast
// ---------------------------------------------------------------------------

struct ForecastOptions {
    std::string checkpoint;
    std::string input;
    std::string output;
    std::size_t k = 7;
};

int cmd_forecast(const ForecastOptions& opt) {
    const auto [net, scaler] = load_checkpoint(read_text(opt.checkpoint));
    const DailySeries series = read_series(opt.input);
    if (series.size() < net.config.lookback) {
        throw DataError("series shorter than the network lookback");
    }
    const NormalizedSeries normalized = normalize(series, scaler);
    const std::vector<double> window(normalized.values.end() - long(net.config.lookback),
                                     normalized.values.end());
    const std::vector<double> predictions = rollout(net, window, opt.k);

    std::vector<double> flows = denormalize(predictions, scaler);
    for (double& f : flows) f = std::max(0.0, f);  // schema forbids negative inflow
    const DailySeries forecast{series.end_date_exclusive(), std::move(flows)};

    std::ostringstream out;
    save_daily_series(out, forecast,
                      {"recursive " + std::to_string(opt.k) + "-day forecast"});
    if (opt.output.empty()) {
        std::cout << out.str();
    } else {
        write_text(opt.output, out.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateOptions {
    std::string fit_csv;
    std::string params_json;
    std::string params_out;
    std::string output;
    std::string mode = "monthly";
    std::size_t years = 20;
    int start_year = 2000;
    std::uint64_t seed = Rng::kDefaultSeed;
};

int cmd_generate(const GenerateOptions& opt) {
    if (opt.fit_csv.empty() == opt.params_json.empty()) {
        throw CLI::ValidationError("generate", "provide exactly one of --fit or --params");
    }
    const bool daily = opt.mode == "daily";

    PeriodParams params;
    if (!opt.params_json.empty()) {
        params = json::parse(read_text(opt.params_json)).get<PeriodParams>();
        if (params.period_count != (daily ? 366u : 12u)) {
            throw DataError("params period_count does not match --mode");
        }
    } else {
        const DailySeries series = read_series(opt.fit_csv);
        const IndexRange all{0, series.size()};
        params = daily ? fit_daily_params(series, all)
                       : fit_period_params(monthly_matrix(series, all));
    }
    if (!opt.params_out.empty()) emit_json(json(params), opt.params_out);

    const std::vector<std::string> comments{
        "synthetic " + opt.mode + " flows, seed " + std::to_string(opt.seed)};
    std::ostringstream out;
    if (opt.years == 0) {
        for (const auto& c : comments) out << "# " << c << "\n";
        out << "date,inflow\n";
    } else {
        const SyntheticSeries generated = daily
                                              ? generate_daily(params, opt.years, opt.seed)
                                              : generate_monthly(params, opt.years, opt.seed);
        const DailySeries series =
            daily ? daily_flows_to_daily(generated.flows, opt.start_year)
                  : monthly_flows_to_daily(generated.flows, opt.start_year);
        save_daily_series(out, series, comments);
    }
    if (opt.output.empty()) {
        std::cout << out.str();
    } else {
        write_text(opt.output, out.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// anomaly
// ---------------------------------------------------------------------------

struct AnomalyOptions {
    std::string checkpoint;
    std::string input;
    std::string output;
    std::size_t k = 7;
    double rho = 2.0;
    double tau = 0.03;
};

int cmd_anomaly(const AnomalyOptions& opt) {
    const auto [net, scaler] = load_checkpoint(read_text(opt.checkpoint));
    const DailySeries series = read_series(opt.input);

    AnomalyConfig cfg;
    cfg.k = opt.k;
    cfg.lookback = net.config.lookback;
    cfg.rho = opt.rho;
    cfg.tau = opt.tau;
    const AnomalyVerdict verdict = detect(net, series, cfg, scaler);

    emit_json(verdict_json(verdict, cfg), opt.output);
    switch (verdict.kind) {
        case AnomalyKind::flood: return kExitFlood;
        case AnomalyKind::drought: return kExitDrought;
        default: return kExitOk;
    }
}

// ---------------------------------------------------------------------------
// reservoir
// ---------------------------------------------------------------------------

struct ReservoirOptions {
    double storage = -1.0;
    double inflow_remaining = -1.0;
    double indent_remaining = -1.0;
    double predicted_inflow = -1.0;
    double remaining_days = -1.0;
    double elevation = std::numeric_limits<double>::quiet_NaN();
    std::string date;
    std::string curve_json;
    std::string output;
};

int cmd_reservoir(const ReservoirOptions& opt) {
    json report;

    if (opt.storage >= 0.0 && opt.inflow_remaining >= 0.0 && opt.indent_remaining >= 0.0) {
        const ReservoirAccount account{opt.storage, opt.inflow_remaining,
                                       opt.indent_remaining};
        const ReservoirFactor factor = reservoir_factor(account);
        report["factor"] = factor.factor;
        report["effective"] = factor.effective;
    }
    if (opt.storage >= 0.0 && opt.indent_remaining >= 0.0) {
        const double release = daily_release_from_storage(opt.storage, opt.indent_remaining);
        report["release_from_storage"] = release;
        if (opt.remaining_days > 0.0) {
            report["release_per_day"] =
                storage_release_per_day(opt.storage, opt.remaining_days);
        }
        if (opt.predicted_inflow >= 0.0) {
            report["total_daily_release"] =
                total_daily_release(release, opt.predicted_inflow);
        }
    }
    if (!std::isnan(opt.elevation)) {
        const RuleCurve curve = opt.curve_json.empty()
                                    ? RuleCurve::defaults()
                                    : json::parse(read_text(opt.curve_json)).get<RuleCurve>();
        curve.validate();
        const Date date = opt.date.empty() ? make_date(2000, 8, 1) : parse_date(opt.date);
        const auto violations = check_rule_curve(date, opt.elevation, curve);
        report["violations"] = json::array();
        for (const auto& v : violations) {
            json entry = v;
            entry["description"] = v.describe();
            report["violations"].push_back(entry);
        }
    }
    if (report.empty()) {
        throw CLI::ValidationError("reservoir",
                                   "nothing to compute; pass account flags or --elevation");
    }
    emit_json(report, opt.output);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// plot
// ---------------------------------------------------------------------------

struct PlotOptions {
    std::vector<std::string> inputs;
    std::vector<std::string> labels;
    std::string output = "plot.svg";
};

int cmd_plot(const PlotOptions& opt) {
    std::vector<std::vector<double>> series;
    std::vector<std::string> labels = opt.labels;
    for (std::size_t i = 0; i < opt.inputs.size(); ++i) {
        series.push_back(read_series(opt.inputs[i]).values);
        if (labels.size() < series.size()) labels.push_back(opt.inputs[i]);
    }
    emit_plot(series, labels, opt.output);
    std::printf("wrote %s\n", opt.output.c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"daily inflow forecasting and reservoir operations toolkit"};
    app.require_subcommand(1);

    StatsOptions stats_opt;
    auto* stats = app.add_subcommand("stats", "descriptive statistics per split");
    stats->add_option("--input", stats_opt.input, "daily inflow CSV")->required();
    stats->add_option("--output", stats_opt.output, "stats JSON path");

    TrainOptions train_opt;
    auto* train = app.add_subcommand("train", "train the stacked forecaster");
    train->add_option("--input", train_opt.input, "daily inflow CSV")->required();
    train->add_option("--output", train_opt.output, "checkpoint JSON path");
    train->add_option("--report", train_opt.report, "training report JSON path");
    train->add_option("--lookback", train_opt.lookback, "past days per prediction");
    train->add_option("--batch", train_opt.batch, "batch size");
    train->add_option("--epochs", train_opt.epochs, "training epochs");
    train->add_option("--seed", train_opt.seed, "initialization seed");
    train->add_option("--lr", train_opt.learning_rate, "learning rate");
    train->add_option("--optimizer", train_opt.optimizer, "adam or sgd");
    train->add_option("--hidden", train_opt.hidden, "hidden sizes per layer");
    train->add_option("--scaler-fit", train_opt.scaler_fit, "train or full")
        ->check(CLI::IsMember({"train", "full"}));

    EvaluateOptions eval_opt;
    auto* evaluate = app.add_subcommand("evaluate", "compare forecasters over one year");
    evaluate->add_option("--checkpoint", eval_opt.checkpoint, "trained checkpoint")->required();
    evaluate->add_option("--input", eval_opt.input, "daily inflow CSV")->required();
    evaluate->add_option("--output", eval_opt.output, "comparison JSON path");
    evaluate->add_option("--eval-start", eval_opt.eval_start,
                         "evaluation year start (default: test range start)");
    evaluate->add_option("--seed", eval_opt.seed, "generator seed");

    ForecastOptions forecast_opt;
    auto* forecast = app.add_subcommand("forecast", "recursive k-day forecast");
    forecast->add_option("--checkpoint", forecast_opt.checkpoint, "trained checkpoint")
        ->required();
    forecast->add_option("--input", forecast_opt.input, "daily inflow CSV")->required();
    forecast->add_option("--output", forecast_opt.output, "forecast CSV path");
    forecast->add_option("--k", forecast_opt.k, "days to forecast");

    GenerateOptions gen_opt;
    auto* generate = app.add_subcommand("generate", "synthesize flows with the lag-one model");
    generate->add_option("--fit", gen_opt.fit_csv, "fit parameters from this CSV");
    generate->add_option("--params", gen_opt.params_json, "use fitted parameters JSON");
    generate->add_option("--params-out", gen_opt.params_out, "write fitted parameters JSON");
    generate->add_option("--output", gen_opt.output, "synthetic CSV path");
    generate->add_option("--mode", gen_opt.mode, "monthly or daily")
        ->check(CLI::IsMember({"monthly", "daily"}));
    generate->add_option("--years", gen_opt.years, "years to generate");
    generate->add_option("--start-year", gen_opt.start_year, "first calendar year");
    generate->add_option("--seed", gen_opt.seed, "generator seed");

    AnomalyOptions anomaly_opt;
    auto* anomaly = app.add_subcommand("anomaly", "flood/drought detection on the series tail");
    anomaly->add_option("--checkpoint", anomaly_opt.checkpoint, "trained checkpoint")
        ->required();
    anomaly->add_option("--input", anomaly_opt.input, "daily inflow CSV")->required();
    anomaly->add_option("--output", anomaly_opt.output, "verdict JSON path");
    anomaly->add_option("--k", anomaly_opt.k, "days under test");
    anomaly->add_option("--rho", anomaly_opt.rho, "tolerance multiplier");
    anomaly->add_option("--tau", anomaly_opt.tau, "empirical one-step RMSE");

    ReservoirOptions res_opt;
    auto* reservoir = app.add_subcommand("reservoir", "factor, releases and rule curve");
    reservoir->add_option("--storage", res_opt.storage, "available storage");
    reservoir->add_option("--inflow-remaining", res_opt.inflow_remaining,
                          "total inflow during the remaining year");
    reservoir->add_option("--indent-remaining", res_opt.indent_remaining,
                          "total water indent during the remaining year");
    reservoir->add_option("--predicted-inflow", res_opt.predicted_inflow,
                          "forecast daily inflow");
    reservoir->add_option("--remaining-days", res_opt.remaining_days,
                          "days left in the depletion period");
    reservoir->add_option("--elevation", res_opt.elevation, "reservoir level, ft");
    reservoir->add_option("--date", res_opt.date, "date for the rule-curve check");
    reservoir->add_option("--curve", res_opt.curve_json, "rule curve JSON");
    reservoir->add_option("--output", res_opt.output, "report JSON path");

    PlotOptions plot_opt;
    auto* plot = app.add_subcommand("plot", "render series to a static SVG");
    plot->add_option("--input", plot_opt.inputs, "daily inflow CSV (repeatable)")
        ->required();
    plot->add_option("--labels", plot_opt.labels, "legend labels");
    plot->add_option("--output", plot_opt.output, "SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*stats) return cmd_stats(stats_opt);
        if (*train) return cmd_train(train_opt);
        if (*evaluate) return cmd_evaluate(eval_opt);
        if (*forecast) return cmd_forecast(forecast_opt);
        if (*generate) return cmd_generate(gen_opt);
        if (*anomaly) return cmd_anomaly(anomaly_opt);
        if (*reservoir) return cmd_reservoir(res_opt);
        if (*plot) return cmd_plot(plot_opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
