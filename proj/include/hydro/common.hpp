#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydro {

/**
 * Raised for malformed or inconsistent input data (bad CSV rows, series
 * violating calendar invariants, degenerate scalers, corrupt checkpoints).
 * Contract violations on in-memory arguments throw std::invalid_argument
 * instead.
 */
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

inline bool all_finite(const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

/// Half-open index range [begin, end) into a series.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool empty() const { return end <= begin; }
};

}  // namespace hydro
