#pragma once

#include <string>
#include <utility>

#include "hydro/common.hpp"
#include "hydro/lstm.hpp"
#include "hydro/scaler.hpp"

#include <json.hpp>

namespace hydro {

inline constexpr int kCheckpointVersion = 1;

/**
 * Serializes a trained network plus its scaler as a single JSON document.
 * Gate order within each layer is [forget, input, candidate, output];
 * weight matrices are row-major. The document round-trips losslessly, so
 * save -> load -> save reproduces identical bytes.
 */
inline std::string save_checkpoint(const LstmNetwork& net, const ScalerParams& scaler) {
    nlohmann::json j;
    j["format_version"] = kCheckpointVersion;
    j["config"] = {{"lookback", net.config.lookback},
                   {"hidden_sizes", net.config.hidden_sizes},
                   {"batch_size", net.config.batch_size},
                   {"candidate_activation",
                    net.config.sigmoid_candidate ? "sigmoid" : "tanh"}};
    j["scaler"] = {{"min", scaler.min_value}, {"max", scaler.max_value}};
    j["layers"] = nlohmann::json::array();
    for (const auto& layer : net.layers) {
        j["layers"].push_back({{"hidden_size", layer.hidden_size},
                               {"input_size", layer.input_size},
                               {"weights",
                                {{"f", layer.w_forget},
                                 {"i", layer.w_input},
                                 {"c", layer.w_candidate},
                                 {"o", layer.w_output}}},
                               {"biases",
                                {{"f", layer.b_forget},
                                 {"i", layer.b_input},
                                 {"c", layer.b_candidate},
                                 {"o", layer.b_output}}}});
    }
    j["dense"] = {{"weights", net.dense_weights}, {"bias", net.dense_bias}};
    return j.dump();
}

inline std::pair<LstmNetwork, ScalerParams> load_checkpoint(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("corrupt checkpoint: ") + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != kCheckpointVersion) {
            throw DataError("checkpoint format_version mismatch");
        }
        LstmNetwork net;
        const auto& cfg = j.at("config");
        net.config.lookback = cfg.at("lookback").get<std::size_t>();
        net.config.hidden_sizes = cfg.at("hidden_sizes").get<std::vector<std::size_t>>();
        net.config.batch_size = cfg.at("batch_size").get<std::size_t>();
        net.config.sigmoid_candidate =
            cfg.at("candidate_activation").get<std::string>() == "sigmoid";
        net.config.validate();

        for (const auto& jl : j.at("layers")) {
            LstmLayerParams layer;
            layer.hidden_size = jl.at("hidden_size").get<std::size_t>();
            layer.input_size = jl.at("input_size").get<std::size_t>();
            const auto& w = jl.at("weights");
            const auto& b = jl.at("biases");
            layer.w_forget = w.at("f").get<std::vector<double>>();
            layer.w_input = w.at("i").get<std::vector<double>>();
            layer.w_candidate = w.at("c").get<std::vector<double>>();
            layer.w_output = w.at("o").get<std::vector<double>>();
            layer.b_forget = b.at("f").get<std::vector<double>>();
            layer.b_input = b.at("i").get<std::vector<double>>();
            layer.b_candidate = b.at("c").get<std::vector<double>>();
            layer.b_output = b.at("o").get<std::vector<double>>();
            const std::size_t n = layer.hidden_size * layer.concat_size();
            if (layer.w_forget.size() != n || layer.w_input.size() != n ||
                layer.w_candidate.size() != n || layer.w_output.size() != n ||
                layer.b_forget.size() != layer.hidden_size ||
                layer.b_input.size() != layer.hidden_size ||
                layer.b_candidate.size() != layer.hidden_size ||
                layer.b_output.size() != layer.hidden_size) {
                throw DataError("checkpoint layer shape mismatch");
            }
            net.layers.push_back(std::move(layer));
        }
        if (net.layers.size() != net.config.hidden_sizes.size()) {
            throw DataError("checkpoint layer count mismatch");
        }

        net.dense_weights = j.at("dense").at("weights").get<std::vector<double>>();
        net.dense_bias = j.at("dense").at("bias").get<double>();
        if (net.dense_weights.size() != net.config.hidden_sizes.back()) {
            throw DataError("checkpoint dense shape mismatch");
        }

        ScalerParams scaler{j.at("scaler").at("min").get<double>(),
                            j.at("scaler").at("max").get<double>()};
        if (!(scaler.max_value > scaler.min_value)) {
            throw DataError("checkpoint scaler is degenerate");
        }
        return {std::move(net), scaler};
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("corrupt checkpoint: ") + e.what());
    }
}

}  // namespace hydro
