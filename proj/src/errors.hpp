#pragma once

#include <stdexcept>
#include <string>

namespace wsbound {

/// Node counts stopped behaving monotonically in energy; the integration
/// grid cannot resolve neighboring levels. Retry with a smaller step.
class grid_too_coarse_error : public std::runtime_error {
  public:
    explicit grid_too_coarse_error(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// The wavefunction underflowed everywhere on the requested grid, so no
/// normalization constant can be formed.
class degenerate_wavefunction_error : public std::runtime_error {
  public:
    explicit degenerate_wavefunction_error(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

} // namespace wsbound
