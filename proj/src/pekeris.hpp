#pragma once

#include <span>
#include <vector>

#include "potential.hpp"

namespace wsbound {

/// Coefficients of the three-term Fermi-profile replacement of the
/// centrifugal barrier, fixed by Taylor matching at r = r0 through
/// second order in x = (r - r0)/r0.
struct PekerisCoefficients {
    double c0, c1, c2;
    double alpha;  ///< the r0/a the coefficients were derived from
};

/// Closed forms: c0 = 1 - 4/alpha + 12/alpha^2, c1 = 8/alpha - 48/alpha^2,
/// c2 = 48/alpha^2. Throws std::invalid_argument for alpha <= 0.
PekerisCoefficients pekeris_coefficients(double alpha);

/// Partial sum of the exact centrifugal expansion about r = r0:
/// delta_tilde * sum_{k=0..order} (k+1) (-x)^k, the Taylor series of
/// delta_tilde/(1+x)^2. Throws std::domain_error for |x| >= 1.
double centrifugal_series(double delta_tilde, double x, int order);

/// Partial sum of the replacement potential's Taylor expansion about
/// r = r0. Terms are tabulated through x^4 only (order <= 4); the x^3 and
/// x^4 terms exist to exhibit where the replacement departs from the
/// exact series, they never enter the solver.
double pekeris_series(const PekerisCoefficients& coeffs, double delta_tilde, double x,
                      int order);

/// Effective potential with the centrifugal barrier replaced by the
/// three-term Fermi profile. With t = 1/(1+exp((r-r0)/a)):
///   delta*c0 - (v0 - delta*c1)*t + delta*c2*t^2.
/// Tends to delta*c0 as r -> infinity.
double effective_potential_pekeris(const PotentialSpec& spec, double l_tilde, double r);

struct PekerisErrorRow {
    double r;
    double exact;     ///< centrifugal term, hbar^2 l~(l~+1)/(2 mu r^2)
    double approx;    ///< its Fermi-profile replacement
    double abs_diff;
    double rel_diff;  ///< denominator max(|exact|, delta_tilde * 1e-12)
};

/// Pointwise comparison of the exact centrifugal term against its
/// replacement. Grid points must be > 0.
std::vector<PekerisErrorRow> pekeris_error_profile(const PotentialSpec& spec,
                                                   double l_tilde,
                                                   std::span<const double> grid);

} // namespace wsbound
