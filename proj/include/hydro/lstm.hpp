#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hydro/common.hpp"
#include "hydro/rng.hpp"

namespace hydro {

struct NetworkConfig {
    std::size_t lookback = 3;                    // past days per prediction
    std::vector<std::size_t> hidden_sizes = {4, 4};
    std::size_t batch_size = 15;
    // Candidate activation is tanh; true selects the sigmoid variant, which
    // cannot produce negative cell updates and exists for fidelity experiments.
    bool sigmoid_candidate = false;

    void validate() const {
        if (lookback < 1) throw std::invalid_argument("NetworkConfig: lookback must be >= 1");
        if (hidden_sizes.empty()) {
            throw std::invalid_argument("NetworkConfig: need at least one layer");
        }
        for (std::size_t h : hidden_sizes) {
            if (h < 1) throw std::invalid_argument("NetworkConfig: hidden sizes must be >= 1");
        }
        if (batch_size < 1) throw std::invalid_argument("NetworkConfig: batch size must be >= 1");
    }
};

/**
 * One LSTM layer: per-gate weight matrices of shape h x (h + d), acting on
 * the concatenation [h_{t-1}, x_t], plus per-gate bias vectors of length h.
 * Row-major storage; gate order throughout is [forget, input, candidate,
 * output].
 */
struct LstmLayerParams {
    std::size_t hidden_size = 0;  // h
    std::size_t input_size = 0;   // d
    std::vector<double> w_forget, w_input, w_candidate, w_output;
    std::vector<double> b_forget, b_input, b_candidate, b_output;

    std::size_t concat_size() const { return hidden_size + input_size; }
};

/// Hidden and cell vectors carried between timesteps.
struct CellState {
    std::vector<double> h;
    std::vector<double> c;

    static CellState zeros(std::size_t hidden_size) {
        return CellState{std::vector<double>(hidden_size, 0.0),
                         std::vector<double>(hidden_size, 0.0)};
    }
};

/// Everything one backward step needs from the matching forward step.
struct GateCache {
    std::vector<double> x;       // layer input at t
    std::vector<double> h_prev;
    std::vector<double> c_prev;
    std::vector<double> f, i, candidate, o;
    std::vector<double> c, tanh_c;
};

/// Stacked LSTM regressor: LSTM layers feeding a scalar dense head.
struct LstmNetwork {
    NetworkConfig config;
    std::vector<LstmLayerParams> layers;
    std::vector<double> dense_weights;  // length = top hidden size
    double dense_bias = 0.0;
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/**
 * Trainable parameter count: 4 * (h * (h + d) + h) per LSTM layer plus
 * h_last + 1 for the dense head.
 */
inline std::size_t param_count(const NetworkConfig& config) {
    config.validate();
    std::size_t total = 0;
    std::size_t input_size = 1;
    for (std::size_t h : config.hidden_sizes) {
        total += 4 * (h * (h + input_size) + h);
        input_size = h;
    }
    total += config.hidden_sizes.back() + 1;
    return total;
}

/**
 * Glorot-uniform weights drawn from the toolkit PRNG; biases zero except
 * forget-gate biases, which start at 1. Draw order is fixed (layers in
 * order, gates [f, i, candidate, o], rows major, then the dense head), so a
 * seed pins the parameters bit-exactly.
 */
inline LstmNetwork init_params(const NetworkConfig& config, std::uint64_t seed) {
    config.validate();
    Rng rng(seed);
    LstmNetwork net;
    net.config = config;

    std::size_t input_size = 1;
    for (std::size_t h : config.hidden_sizes) {
        LstmLayerParams layer;
        layer.hidden_size = h;
        layer.input_size = input_size;
        const std::size_t n = h * layer.concat_size();
        const double limit = std::sqrt(6.0 / double(layer.concat_size() + h));
        for (auto* w : {&layer.w_forget, &layer.w_input, &layer.w_candidate, &layer.w_output}) {
            w->resize(n);
            for (double& v : *w) v = rng.uniform_symmetric(limit);
        }
        layer.b_forget.assign(h, 1.0);
        layer.b_input.assign(h, 0.0);
        layer.b_candidate.assign(h, 0.0);
        layer.b_output.assign(h, 0.0);
        net.layers.push_back(std::move(layer));
        input_size = h;
    }

    const std::size_t h_last = config.hidden_sizes.back();
    const double dense_limit = std::sqrt(6.0 / double(h_last + 1));
    net.dense_weights.resize(h_last);
    for (double& v : net.dense_weights) v = rng.uniform_symmetric(dense_limit);
    net.dense_bias = 0.0;
    return net;
}

/**
 * Single cell step:
 *
 *   f = sigma(W_f [h, x] + b_f)      i = sigma(W_i [h, x] + b_i)
 *   chat = tanh(W_c [h, x] + b_c)    o = sigma(W_o [h, x] + b_o)
 *   c_t = f . c_{t-1} + i . chat     h_t = o . tanh(c_t)
 *
 * Returns the new state; `cache`, when non-null, receives every gate value
 * needed by backpropagation through time.
 */
inline CellState lstm_cell_forward(const LstmLayerParams& params,
                                   const std::vector<double>& x, const CellState& state,
                                   bool sigmoid_candidate = false,
                                   GateCache* cache = nullptr) {
    const std::size_t h = params.hidden_size;
    const std::size_t d = params.input_size;
    if (x.size() != d || state.h.size() != h || state.c.size() != h) {
        throw std::invalid_argument("lstm_cell_forward: dimension mismatch");
    }
    if (!all_finite(x)) throw std::invalid_argument("lstm_cell_forward: non-finite input");

    CellState next = CellState::zeros(h);
    std::vector<double> f(h), i_gate(h), candidate(h), o(h), tanh_c(h);

    for (std::size_t row = 0; row < h; ++row) {
        // z_g = W_g . [h_{t-1}, x_t] + b_g for each gate
        double zf = params.b_forget[row];
        double zi = params.b_input[row];
        double zc = params.b_candidate[row];
        double zo = params.b_output[row];
        const std::size_t base = row * params.concat_size();
        for (std::size_t k = 0; k < h; ++k) {
            const double v = state.h[k];
            zf += params.w_forget[base + k] * v;
            zi += params.w_input[base + k] * v;
            zc += params.w_candidate[base + k] * v;
            zo += params.w_output[base + k] * v;
        }
        for (std::size_t k = 0; k < d; ++k) {
            const double v = x[k];
            zf += params.w_forget[base + h + k] * v;
            zi += params.w_input[base + h + k] * v;
            zc += params.w_candidate[base + h + k] * v;
            zo += params.w_output[base + h + k] * v;
        }
        f[row] = sigmoid(zf);
        i_gate[row] = sigmoid(zi);
        candidate[row] = sigmoid_candidate ? sigmoid(zc) : std::tanh(zc);
        o[row] = sigmoid(zo);
        next.c[row] = f[row] * state.c[row] + i_gate[row] * candidate[row];
        tanh_c[row] = std::tanh(next.c[row]);
        next.h[row] = o[row] * tanh_c[row];
    }

    if (cache) {
        cache->x = x;
        cache->h_prev = state.h;
        cache->c_prev = state.c;
        cache->f = std::move(f);
        cache->i = std::move(i_gate);
        cache->candidate = std::move(candidate);
        cache->o = std::move(o);
        cache->c = next.c;
        cache->tanh_c = std::move(tanh_c);
    }
    return next;
}

/// Per-sample forward trace: caches[layer][t] across the unrolled window.
struct ForwardTrace {
    std::vector<std::vector<GateCache>> caches;
    std::vector<double> top_hidden;  // h of the top layer at the final step
    double prediction = 0.0;
};

/**
 * Runs every layer over the lookback window from zero initial states and
 * applies the dense head to the top layer's final hidden vector.
 */
inline ForwardTrace network_forward_traced(const LstmNetwork& net,
                                           const std::vector<double>& window,
                                           bool want_cache = true) {
    net.config.validate();
    if (window.size() != net.config.lookback) {
        throw std::invalid_argument("network_forward: window length must equal lookback");
    }
    const std::size_t steps = window.size();
    const std::size_t n_layers = net.layers.size();

    ForwardTrace trace;
    if (want_cache) {
        trace.caches.resize(n_layers);
        for (std::size_t l = 0; l < n_layers; ++l) trace.caches[l].resize(steps);
    }

    std::vector<CellState> states;
    states.reserve(n_layers);
    for (const auto& layer : net.layers) states.push_back(CellState::zeros(layer.hidden_size));

    for (std::size_t t = 0; t < steps; ++t) {
        std::vector<double> input{window[t]};
        for (std::size_t l = 0; l < n_layers; ++l) {
            GateCache* cache = want_cache ? &trace.caches[l][t] : nullptr;
            states[l] = lstm_cell_forward(net.layers[l], input, states[l],
                                          net.config.sigmoid_candidate, cache);
            input = states[l].h;
        }
    }

    trace.top_hidden = states.back().h;
    double y = net.dense_bias;
    for (std::size_t k = 0; k < net.dense_weights.size(); ++k) {
        y += net.dense_weights[k] * trace.top_hidden[k];
    }
    trace.prediction = y;
    return trace;
}

inline double network_forward(const LstmNetwork& net, const std::vector<double>& window) {
    return network_forward_traced(net, window, /*want_cache=*/false).prediction;
}

/// Batch forward; identical to looping the samples one by one.
inline std::vector<double> network_forward(const LstmNetwork& net,
                                           const std::vector<std::vector<double>>& windows) {
    std::vector<double> out;
    out.reserve(windows.size());
    for (const auto& w : windows) out.push_back(network_forward(net, w));
    return out;
}

inline std::vector<double> predict(const LstmNetwork& net,
                                   const std::vector<std::vector<double>>& windows) {
    return network_forward(net, windows);
}

/**
 * k-step recursive forecast: each prediction is appended as the newest
 * window entry while the oldest is dropped.
 */
inline std::vector<double> rollout(const LstmNetwork& net, std::vector<double> window,
                                   std::size_t k) {
    if (window.size() != net.config.lookback) {
        throw std::invalid_argument("rollout: seed window length must equal lookback");
    }
    std::vector<double> predictions;
    predictions.reserve(k);
    for (std::size_t step = 0; step < k; ++step) {
        const double p = network_forward(net, window);
        window.erase(window.begin());
        window.push_back(p);
        predictions.push_back(p);
    }
    return predictions;
}

}  // namespace hydro
