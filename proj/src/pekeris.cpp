#include "pekeris.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsbound {

PekerisCoefficients pekeris_coefficients(double alpha)
{
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("pekeris_coefficients: alpha must be > 0");
    }
    PekerisCoefficients c;
    c.alpha = alpha;
    c.c0 = 1.0 - 4.0 / alpha + 12.0 / (alpha * alpha);
    c.c1 = 8.0 / alpha - 48.0 / (alpha * alpha);
    c.c2 = 48.0 / (alpha * alpha);
    return c;
}

double centrifugal_series(double delta_tilde, double x, int order)
{
    if (order < 0) {
        throw std::invalid_argument("centrifugal_series: order must be >= 0");
    }
    if (std::abs(x) >= 1.0) {
        throw std::domain_error("centrifugal_series: diverges for |x| >= 1");
    }
    double sum = 0.0;
    double pw = 1.0;
    for (int k = 0; k <= order; k++) {
        sum += (k + 1) * pw;
        pw *= -x;
    }
    return delta_tilde * sum;
}

double pekeris_series(const PekerisCoefficients& coeffs, double delta_tilde, double x,
                      int order)
{
    if (order < 0 || order > 4) {
        throw std::invalid_argument("pekeris_series: tabulated terms cover order 0..4");
    }
    double al = coeffs.alpha;
    double term[5];
    term[0] = coeffs.c0 + coeffs.c1 / 2.0 + coeffs.c2 / 4.0;
    term[1] = -(al / 4.0) * (coeffs.c1 + coeffs.c2);
    term[2] = (al * al / 16.0) * coeffs.c2;
    term[3] = (al * al * al / 48.0) * (coeffs.c1 + coeffs.c2);
    term[4] = -(al * al * al * al / 96.0) * coeffs.c2;
    double sum = 0.0;
    double pw = 1.0;
    for (int k = 0; k <= order; k++) {
        sum += term[k] * pw;
        pw *= x;
    }
    return delta_tilde * sum;
}

double effective_potential_pekeris(const PotentialSpec& spec, double l_tilde, double r)
{
    if (r < 0.0) {
        throw std::invalid_argument("effective_potential_pekeris: r must be >= 0");
    }
    DimensionlessSet d = dimensionless(spec, l_tilde);
    double t = fermi((r - spec.r0) / spec.a);
    return d.delta_tilde * d.c0 - (spec.v0 - d.delta_tilde * d.c1) * t +
           d.delta_tilde * d.c2 * t * t;
}

std::vector<PekerisErrorRow> pekeris_error_profile(const PotentialSpec& spec,
                                                   double l_tilde,
                                                   std::span<const double> grid)
{
    DimensionlessSet d = dimensionless(spec, l_tilde);
    double cl = l_tilde * (l_tilde + 1.0);
    std::vector<PekerisErrorRow> rows;
    rows.reserve(grid.size());
    for (double r : grid) {
        if (!(r > 0.0)) {
            throw std::invalid_argument("pekeris_error_profile: grid points must be > 0");
        }
        PekerisErrorRow row;
        row.r = r;
        row.exact = spec.hbar2_over_2mu * cl / (r * r);
        double t = fermi((r - spec.r0) / spec.a);
        row.approx = d.delta_tilde * (d.c0 + d.c1 * t + d.c2 * t * t);
        row.abs_diff = std::abs(row.exact - row.approx);
        double denom = std::max(std::abs(row.exact), d.delta_tilde * 1e-12);
        row.rel_diff = denom > 0.0 ? row.abs_diff / denom : 0.0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace wsbound
