#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace wsbound {

/// Composite Simpson rule on a uniform grid with an even number of
/// intervals (odd point count >= 3).
inline double simpson(std::span<const double> y, double h)
{
    if (y.size() < 3 || y.size() % 2 == 0) {
        throw std::invalid_argument("simpson: need an odd number of points >= 3");
    }
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i + 1 < y.size(); i += 2) {
        odd += y[i];
    }
    for (std::size_t i = 2; i + 1 < y.size(); i += 2) {
        even += y[i];
    }
    return h / 3.0 * (y.front() + y.back() + 4.0 * odd + 2.0 * even);
}

} // namespace wsbound
