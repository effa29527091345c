#pragma once

#include <cmath>

namespace wsbound {

/// Physical parameters of a spherical finite-depth well with a smooth
/// (Fermi-profile) surface, posed in D spatial dimensions.
///
/// hbar2_over_2mu fixes the unit system: energies come out in the unit of
/// v0 and lengths in the unit of r0 and a. No unit conversions happen
/// internally; quantization works in dimensionless variables throughout.
struct PotentialSpec {
    double v0;              ///< well depth, > 0
    double r0;              ///< well radius, > 0
    double a;               ///< surface diffuseness, > 0
    double hbar2_over_2mu;  ///< hbar^2/(2*mu), energy * length^2, > 0
    int dim;                ///< spatial dimension, >= 2

    /// The model is derived for a thin surface layer (a < r0). A thick
    /// surface is permitted but flagged so callers can warn.
    bool thin_surface() const { return a < r0; }

    /// Throws std::invalid_argument if any parameter is out of range.
    void validate() const;
};

/// Quantum numbers of one radial channel together with the effective
/// angular momentum that makes the D-dimensional centrifugal term look
/// three-dimensional.
struct Channel {
    int n;           ///< radial quantum number, >= 0
    int l;           ///< orbital quantum number, >= 0
    double l_tilde;  ///< l + (dim - 3)/2
};

/// Dimensionless parameter set controlling the quantization. beta_sq is
/// stored signed: it goes negative for wells shallower than the
/// centrifugal pull, and the bound-state checks consume the sign.
struct DimensionlessSet {
    double l_tilde;
    double alpha;        ///< r0 / a
    double delta_tilde;  ///< centrifugal strength at r = r0 (energy units)
    double c0, c1, c2;   ///< surface-profile replacement coefficients
    double beta_sq;
    double gamma_sq;
};

/// Overflow-safe Fermi function 1/(1 + e^x).
inline double fermi(double x)
{
    if (x > 700.0) {
        return std::exp(-x); // analytic tail; underflows gracefully to +0
    }
    if (x < -700.0) {
        return 1.0;
    }
    return 1.0 / (1.0 + std::exp(x));
}

/// l + (dim - 3)/2. Throws std::invalid_argument for l < 0 or dim < 2.
double effective_l(int l, int dim);

Channel make_channel(int n, int l, int dim);

/// -v0 / (1 + exp((r - r0)/a)). Strictly increasing in r, range (-v0, 0).
double woods_saxon(const PotentialSpec& spec, double r);

/// Centrifugal term plus the raw well. r = 0 is a pole whenever
/// l_tilde*(l_tilde+1) != 0 and raises std::domain_error.
double effective_potential_exact(const PotentialSpec& spec, double l_tilde, double r);

/// Assembles the dimensionless set for one channel.
DimensionlessSet dimensionless(const PotentialSpec& spec, double l_tilde);

} // namespace wsbound
