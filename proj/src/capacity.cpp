#include "walks/capacity.hpp"

#include <cmath>
#include <stdexcept>

namespace walks {

namespace {
double log2_precise(double x) { return std::log2(x); }
}

Capacity::Capacity(uint32_t t_in, double epsilon_in) : t(t_in), epsilon(epsilon_in) {
    if (t == 0) throw std::invalid_argument("capacity: t must be >= 1");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("capacity: epsilon must be in (0, 1]");

    delta = epsilon / (2.0 * t);
    const double sqrt_t = std::sqrt((double)t);
    q = 2.0 + log2_precise(1.0 / delta) / sqrt_t;
    const double c_real = 4.0 * sqrt_t * q / log2_precise(q);
    value = (uint32_t)std::ceil(c_real);
    if (value == 0) value = 1;

    if (!failure_bound_holds(t, value, delta))
        throw std::logic_error("capacity: (e*t/C^2)^C < delta check failed");
}

bool Capacity::failure_bound_holds(uint32_t t, uint32_t C, double delta) {
    // C * (1 + ln t - 2 ln C) < ln delta
    const double lhs = (double)C * (1.0 + std::log((double)t) - 2.0 * std::log((double)C));
    return lhs < std::log(delta);
}

}  // namespace walks
