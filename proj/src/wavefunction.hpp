#pragma once

#include <vector>

#include "potential.hpp"
#include "spectrum.hpp"

namespace wsbound {

/// Sampled radial eigenfunction on a uniform grid starting at r = 0.
/// u is the reduced wavefunction (unit L2 norm on [0, r_max] by
/// construction); radial is R = r^{-(dim-1)/2} u, with R(0) filled by
/// quadratic extrapolation from the three innermost interior points
/// (flagged in r0_extrapolated).
///
/// The analytic solution decays to zero only as r -> -infinity, so u(0)
/// is small but not exactly zero; u0_ratio = |u(0)|/max|u| quantifies
/// how well the half-line boundary condition is met (it collapses
/// exponentially for thin surfaces and well-bound levels).
struct RadialTable {
    std::vector<double> r;
    std::vector<double> u;
    std::vector<double> radial;
    double norm_constant;  ///< multiplier applied to the raw profile
    int nodes;             ///< strict sign changes of u on (0, r_max)
    double r_max;
    double u0_ratio;
    bool r0_extrapolated;
};

/// Grid request for normalize(). Non-positive fields select defaults:
/// step = a/400 and r_max = r0 + 40 a, extended automatically until the
/// tail satisfies |u(r_max)|/max|u| < 1e-12.
struct RadialGridSpec {
    double r_max = 0.0;
    double step = 0.0;
};

/// Fermi variable z = 1/(1 + exp((r - r0)/a)); strictly decreasing in r,
/// equal to 1/2 at r = r0.
double z_of_r(const PotentialSpec& spec, double r);

/// Raw (unnormalized) radial profile z^eps (1-z)^s P_n^{(2 eps, 2 s)}(1-2z)
/// evaluated at radius r. Requires a valid quantization.
double u_unnormalized(const PotentialSpec& spec, const QuantizationResult& q, int n,
                      double r);

/// Tabulates and L2-normalizes the radial eigenfunction by composite
/// Simpson quadrature on [0, r_max]. Throws degenerate_wavefunction_error
/// when the profile underflows everywhere on the grid, and
/// std::invalid_argument for an explicit r_max below r0 + 40 a.
RadialTable normalize(const PotentialSpec& spec, const QuantizationResult& q, int n,
                      const RadialGridSpec& grid = {});

} // namespace wsbound
