#pragma once

#include <cstddef>
#include <vector>

namespace tsfine::detail {

// One step of the AR innovation recursion:
//   a_t = (z_t - mean) - sum_{i=1..p} phi_i (z_{t-1-i+1} - mean)
// Lag terms accumulate in ascending order, then the prediction is subtracted
// from the centered observation. simulate_arima's aligned-noise recovery and
// residuals() both run through this exact code path; the bit-for-bit
// innovation identity depends on them never diverging.
inline double ar_innovation(const std::vector<double>& z, std::size_t t,
                            const std::vector<double>& phi, double mean) {
    double acc = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        acc += phi[i] * (z[t - 1 - i] - mean);
    }
    return (z[t] - mean) - acc;
}

}  // namespace tsfine::detail
