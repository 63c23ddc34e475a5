#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ast {

// Log density of a scalar normal distribution, in nats.
inline double gaussian_log_pdf(double x, double mean, double stddev) {
    if (!(stddev > 0.0)) throw std::invalid_argument("gaussian_log_pdf: stddev must be positive");
    const double z = (x - mean) / stddev;
    return -0.5 * std::log(2.0 * std::numbers::pi) - std::log(stddev) - 0.5 * z * z;
}

} // namespace ast
