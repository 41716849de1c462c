#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hydro/lstm.hpp"
#include "hydro/metrics.hpp"
#include "hydro/window.hpp"

namespace hydro {

/// Mean squared error over a batch of scalar predictions.
inline double mse_loss(const std::vector<double>& predicted,
                       const std::vector<double>& target) {
    if (predicted.empty()) throw std::invalid_argument("mse_loss: empty batch");
    if (predicted.size() != target.size()) {
        throw std::invalid_argument("mse_loss: shape mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const double d = predicted[i] - target[i];
        sum += d * d;
    }
    return sum / double(predicted.size());
}

/// Gradient accumulator congruent to LstmNetwork's parameters.
struct NetworkGrads {
    struct LayerGrads {
        std::vector<double> w_forget, w_input, w_candidate, w_output;
        std::vector<double> b_forget, b_input, b_candidate, b_output;
    };
    std::vector<LayerGrads> layers;
    std::vector<double> dense_weights;
    double dense_bias = 0.0;

    static NetworkGrads zeros_like(const LstmNetwork& net) {
        NetworkGrads g;
        g.layers.resize(net.layers.size());
        for (std::size_t l = 0; l < net.layers.size(); ++l) {
            const std::size_t n = net.layers[l].hidden_size * net.layers[l].concat_size();
            const std::size_t h = net.layers[l].hidden_size;
            g.layers[l].w_forget.assign(n, 0.0);
            g.layers[l].w_input.assign(n, 0.0);
            g.layers[l].w_candidate.assign(n, 0.0);
            g.layers[l].w_output.assign(n, 0.0);
            g.layers[l].b_forget.assign(h, 0.0);
            g.layers[l].b_input.assign(h, 0.0);
            g.layers[l].b_candidate.assign(h, 0.0);
            g.layers[l].b_output.assign(h, 0.0);
        }
        g.dense_weights.assign(net.dense_weights.size(), 0.0);
        g.dense_bias = 0.0;
        return g;
    }
};

/**
 * Flat views of the trainable parameters and their gradients, in one fixed
 * order (layers bottom-up; within a layer weights [f, i, candidate, o] then
 * biases in the same order; dense weights; dense bias). Every consumer of
 * a flattened parameter vector uses these, so orderings can never diverge.
 */
inline std::vector<double*> parameter_ptrs(LstmNetwork& net) {
    std::vector<double*> ptrs;
    for (auto& layer : net.layers) {
        for (auto* w : {&layer.w_forget, &layer.w_input, &layer.w_candidate, &layer.w_output}) {
            for (double& v : *w) ptrs.push_back(&v);
        }
        for (auto* b : {&layer.b_forget, &layer.b_input, &layer.b_candidate, &layer.b_output}) {
            for (double& v : *b) ptrs.push_back(&v);
        }
    }
    for (double& v : net.dense_weights) ptrs.push_back(&v);
    ptrs.push_back(&net.dense_bias);
    return ptrs;
}

inline std::vector<const double*> gradient_ptrs(const NetworkGrads& grads) {
    std::vector<const double*> ptrs;
    for (const auto& layer : grads.layers) {
        for (const auto* w :
             {&layer.w_forget, &layer.w_input, &layer.w_candidate, &layer.w_output}) {
            for (const double& v : *w) ptrs.push_back(&v);
        }
        for (const auto* b :
             {&layer.b_forget, &layer.b_input, &layer.b_candidate, &layer.b_output}) {
            for (const double& v : *b) ptrs.push_back(&v);
        }
    }
    for (const double& v : grads.dense_weights) ptrs.push_back(&v);
    ptrs.push_back(&grads.dense_bias);
    return ptrs;
}

inline std::vector<double*> gradient_ptrs(NetworkGrads& grads) {
    std::vector<double*> ptrs;
    for (auto& layer : grads.layers) {
        for (auto* w : {&layer.w_forget, &layer.w_input, &layer.w_candidate, &layer.w_output}) {
            for (double& v : *w) ptrs.push_back(&v);
        }
        for (auto* b : {&layer.b_forget, &layer.b_input, &layer.b_candidate, &layer.b_output}) {
            for (double& v : *b) ptrs.push_back(&v);
        }
    }
    for (double& v : grads.dense_weights) ptrs.push_back(&v);
    ptrs.push_back(&grads.dense_bias);
    return ptrs;
}

namespace detail {

// Backward pass over one layer's unrolled steps. dh_ext[t] is the gradient
// arriving at h_t from outside the layer (dense head or the layer above);
// returns the per-step gradients w.r.t. the layer inputs x_t.
inline std::vector<std::vector<double>> lstm_layer_backward(
    const LstmLayerParams& params, const std::vector<GateCache>& steps,
    const std::vector<std::vector<double>>& dh_ext, bool sigmoid_candidate,
    NetworkGrads::LayerGrads& grads) {
    const std::size_t h = params.hidden_size;
    const std::size_t d = params.input_size;
    const std::size_t T = steps.size();

    std::vector<std::vector<double>> dx(T, std::vector<double>(d, 0.0));
    std::vector<double> dh_next(h, 0.0);  // from timestep t+1
    std::vector<double> dc_next(h, 0.0);

    for (std::size_t t = T; t-- > 0;) {
        const GateCache& s = steps[t];
        std::vector<double> dh(h), dc(h);
        std::vector<double> dzf(h), dzi(h), dzc(h), dzo(h);
        for (std::size_t r = 0; r < h; ++r) {
            dh[r] = dh_next[r] + dh_ext[t][r];
            // h = o . tanh(c):  dc += dh . o . (1 - tanh(c)^2),  do = dh . tanh(c)
            dc[r] = dc_next[r] + dh[r] * s.o[r] * (1.0 - s.tanh_c[r] * s.tanh_c[r]);
            const double d_o = dh[r] * s.tanh_c[r];
            dzo[r] = d_o * s.o[r] * (1.0 - s.o[r]);
            // c = f . c_prev + i . candidate
            const double d_f = dc[r] * s.c_prev[r];
            dzf[r] = d_f * s.f[r] * (1.0 - s.f[r]);
            const double d_i = dc[r] * s.candidate[r];
            dzi[r] = d_i * s.i[r] * (1.0 - s.i[r]);
            const double d_cand = dc[r] * s.i[r];
            dzc[r] = sigmoid_candidate
                         ? d_cand * s.candidate[r] * (1.0 - s.candidate[r])
                         : d_cand * (1.0 - s.candidate[r] * s.candidate[r]);
            dc_next[r] = dc[r] * s.f[r];
        }

        std::fill(dh_next.begin(), dh_next.end(), 0.0);
        for (std::size_t r = 0; r < h; ++r) {
            const std::size_t base = r * params.concat_size();
            grads.b_forget[r] += dzf[r];
            grads.b_input[r] += dzi[r];
            grads.b_candidate[r] += dzc[r];
            grads.b_output[r] += dzo[r];
            for (std::size_t k = 0; k < h; ++k) {
                const double v = s.h_prev[k];
                grads.w_forget[base + k] += dzf[r] * v;
                grads.w_input[base + k] += dzi[r] * v;
                grads.w_candidate[base + k] += dzc[r] * v;
                grads.w_output[base + k] += dzo[r] * v;
                dh_next[k] += params.w_forget[base + k] * dzf[r] +
                              params.w_input[base + k] * dzi[r] +
                              params.w_candidate[base + k] * dzc[r] +
                              params.w_output[base + k] * dzo[r];
            }
            for (std::size_t k = 0; k < d; ++k) {
                const double v = s.x[k];
                grads.w_forget[base + h + k] += dzf[r] * v;
                grads.w_input[base + h + k] += dzi[r] * v;
                grads.w_candidate[base + h + k] += dzc[r] * v;
                grads.w_output[base + h + k] += dzo[r] * v;
                dx[t][k] += params.w_forget[base + h + k] * dzf[r] +
                            params.w_input[base + h + k] * dzi[r] +
                            params.w_candidate[base + h + k] * dzc[r] +
                            params.w_output[base + h + k] * dzo[r];
            }
        }
    }
    return dx;
}

}  // namespace detail

/**
 * Exact gradient of mse_loss w.r.t. every weight and bias, unrolled over
 * the lookback steps, summed across layers and the dense head and averaged
 * over the batch. Samples are accumulated sequentially in batch order, so
 * the result is bit-reproducible.
 */
inline NetworkGrads bptt_gradients(const LstmNetwork& net,
                                   const std::vector<std::vector<double>>& inputs,
                                   const std::vector<double>& targets,
                                   double* loss_out = nullptr) {
    if (inputs.empty()) throw std::invalid_argument("bptt_gradients: empty batch");
    if (inputs.size() != targets.size()) {
        throw std::invalid_argument("bptt_gradients: batch shape mismatch");
    }
    const std::size_t batch = inputs.size();
    const std::size_t n_layers = net.layers.size();
    const std::size_t T = net.config.lookback;

    NetworkGrads grads = NetworkGrads::zeros_like(net);
    double loss = 0.0;

    for (std::size_t b = 0; b < batch; ++b) {
        const ForwardTrace trace = network_forward_traced(net, inputs[b]);
        if (!std::isfinite(trace.prediction)) {
            throw DataError("bptt_gradients: non-finite forward prediction");
        }
        const double err = trace.prediction - targets[b];
        loss += err * err;
        const double dpred = 2.0 * err / double(batch);

        grads.dense_bias += dpred;
        const std::size_t h_top = net.layers.back().hidden_size;
        // dh injected into the top layer's final step by the dense head
        std::vector<std::vector<double>> dh_ext(T, std::vector<double>(h_top, 0.0));
        for (std::size_t k = 0; k < h_top; ++k) {
            grads.dense_weights[k] += dpred * trace.top_hidden[k];
            dh_ext[T - 1][k] = dpred * net.dense_weights[k];
        }

        for (std::size_t l = n_layers; l-- > 0;) {
            auto dx = detail::lstm_layer_backward(net.layers[l], trace.caches[l], dh_ext,
                                                  net.config.sigmoid_candidate,
                                                  grads.layers[l]);
            if (l > 0) dh_ext = std::move(dx);  // x of layer l is h of layer l-1
        }
    }

    if (loss_out) *loss_out = loss / double(batch);
    for (const double* g : gradient_ptrs(grads)) {
        if (!std::isfinite(*g)) throw DataError("bptt_gradients: non-finite gradient");
    }
    return grads;
}

enum class OptimizerKind { adam, sgd };

inline OptimizerKind optimizer_from_string(const std::string& name) {
    if (name == "adam") return OptimizerKind::adam;
    if (name == "sgd") return OptimizerKind::sgd;
    throw std::invalid_argument("unknown optimizer '" + name + "'");
}

/// Adam first/second moment buffers plus the bias-correction step counter.
struct OptimizerState {
    OptimizerKind kind = OptimizerKind::adam;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    long step = 0;
    std::vector<double> m;
    std::vector<double> v;
};

/**
 * In-place parameter update. Adam with bias correction by default; plain
 * SGD when the state selects it.
 */
inline void optimizer_step(LstmNetwork& net, const NetworkGrads& grads,
                           OptimizerState& state, double learning_rate) {
    const auto params = parameter_ptrs(net);
    const auto grad_ptrs = gradient_ptrs(grads);
    if (params.size() != grad_ptrs.size()) {
        throw std::invalid_argument("optimizer_step: parameter/gradient shape mismatch");
    }
    for (const double* g : grad_ptrs) {
        if (!std::isfinite(*g)) throw DataError("optimizer_step: non-finite gradient");
    }

    if (state.kind == OptimizerKind::sgd) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            *params[i] -= learning_rate * *grad_ptrs[i];
        }
        return;
    }

    if (state.m.empty()) {
        state.m.assign(params.size(), 0.0);
        state.v.assign(params.size(), 0.0);
    }
    if (state.m.size() != params.size()) {
        throw std::invalid_argument("optimizer_step: state sized for a different network");
    }
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, double(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, double(state.step));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = *grad_ptrs[i];
        state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * g;
        state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * g * g;
        const double m_hat = state.m[i] / bc1;
        const double v_hat = state.v[i] / bc2;
        *params[i] -= learning_rate * m_hat / (std::sqrt(v_hat) + state.epsilon);
    }
}

struct TrainConfig {
    std::size_t epochs = 100;
    double learning_rate = 1e-3;
    OptimizerKind optimizer = OptimizerKind::adam;
    std::size_t validation_cadence = 5;   // epochs between validation evals
    std::size_t test_cadence = 10;        // epochs between test evals
    std::uint64_t seed = 42;

    void validate() const {
        if (epochs < 1) throw std::invalid_argument("TrainConfig: epochs must be >= 1");
        if (!(learning_rate > 0.0)) {
            throw std::invalid_argument("TrainConfig: learning rate must be > 0");
        }
        if (validation_cadence < 1 || test_cadence < 1) {
            throw std::invalid_argument("TrainConfig: cadences must be >= 1");
        }
    }
};

struct TrainReport {
    struct ValidationPoint {
        std::size_t epoch = 0;
        double loss = 0.0;
    };
    struct TestPoint {
        std::size_t epoch = 0;
        EvalReport metrics;
    };
    std::vector<double> train_loss;  // one entry per epoch
    std::vector<ValidationPoint> validation;
    std::vector<TestPoint> test;
};

/**
 * Full training loop: `epochs` passes over the training windows in fixed
 * order, batched at the network's batch size with the final short batch
 * processed as-is. Validation loss is recorded every validation_cadence
 * epochs and test metrics every test_cadence epochs; neither set ever
 * contributes an update. Deterministic for a fixed starting network.
 */
inline TrainReport fit(LstmNetwork& net, const WindowSet& train, const WindowSet& validation,
                       const TrainConfig& cfg, const WindowSet* test = nullptr) {
    cfg.validate();
    net.config.validate();
    if (train.size() == 0) throw std::invalid_argument("fit: empty training set");

    OptimizerState opt;
    opt.kind = cfg.optimizer;

    TrainReport report;
    const std::size_t batch_size = net.config.batch_size;

    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        double epoch_sq_sum = 0.0;
        for (std::size_t begin = 0; begin < train.size(); begin += batch_size) {
            const std::size_t end = std::min(begin + batch_size, train.size());
            const std::vector<std::vector<double>> inputs(train.inputs.begin() + long(begin),
                                                          train.inputs.begin() + long(end));
            const std::vector<double> targets(train.targets.begin() + long(begin),
                                              train.targets.begin() + long(end));
            double batch_loss = 0.0;
            const NetworkGrads grads = bptt_gradients(net, inputs, targets, &batch_loss);
            optimizer_step(net, grads, opt, cfg.learning_rate);
            epoch_sq_sum += batch_loss * double(end - begin);
        }
        report.train_loss.push_back(epoch_sq_sum / double(train.size()));

        if (epoch % cfg.validation_cadence == 0 && validation.size() > 0) {
            const auto preds = network_forward(net, validation.inputs);
            report.validation.push_back({epoch, mse_loss(preds, validation.targets)});
        }
        if (test && epoch % cfg.test_cadence == 0 && test->size() > 0) {
            const auto preds = network_forward(net, test->inputs);
            report.test.push_back({epoch, evaluate_forecast(preds, test->targets)});
        }
    }
    return report;
}

inline void to_json(nlohmann::json& j, const TrainReport& r) {
    j = nlohmann::json::object();
    j["train_loss"] = r.train_loss;
    j["validation"] = nlohmann::json::array();
    for (const auto& p : r.validation) {
        j["validation"].push_back({{"epoch", p.epoch}, {"loss", p.loss}});
    }
    j["test"] = nlohmann::json::array();
    for (const auto& p : r.test) {
        j["test"].push_back({{"epoch", p.epoch},
                             {"rmse", p.metrics.rmse},
                             {"r2", p.metrics.r_squared},
                             {"n", p.metrics.n}});
    }
}

}  // namespace hydro
