#pragma once

#include <cstddef>
#include <vector>

#include "hydro/common.hpp"

namespace hydro {

/**
 * Supervised sliding windows over a (normalized) value sequence: each
 * input holds the `lookback` values immediately preceding its target,
 * giving exactly `length - lookback` windows.
 */
struct WindowSet {
    std::size_t lookback = 0;
    std::vector<std::vector<double>> inputs;
    std::vector<double> targets;

    std::size_t size() const { return targets.size(); }
};

inline WindowSet make_windows(const std::vector<double>& values, std::size_t lookback) {
    if (lookback < 1) throw std::invalid_argument("make_windows: lookback must be >= 1");
    if (values.size() <= lookback) {
        throw std::invalid_argument("make_windows: series length must exceed lookback");
    }
    WindowSet ws;
    ws.lookback = lookback;
    const std::size_t count = values.size() - lookback;
    ws.inputs.reserve(count);
    ws.targets.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ws.inputs.emplace_back(values.begin() + long(i), values.begin() + long(i + lookback));
        ws.targets.push_back(values[i + lookback]);
    }
    return ws;
}

}  // namespace hydro
