#pragma once

#include <vector>

#include "potential.hpp"

namespace wsbound {

enum class FailureReason {
    None = 0,
    NPrimeNonpositive,  ///< n' <= 0: the channel holds no further states
    WellTooShallow,     ///< beta^2 - gamma^2 <= 0: depth below threshold
    WindowViolated,     ///< beta^2 - gamma^2 >= n'^2: no decaying inner tail
};

const char* failure_name(FailureReason reason);

/// Outcome of the quantization conditions for one (channel, n) cell.
/// Invalidity is data, not an exception: parameter scans need the reason
/// each cell fails. epsilon and s are NaN when valid is false.
struct QuantizationResult {
    double n_prime;  ///< -n + (sqrt(1+4 gamma^2) - 1)/2
    double epsilon;  ///< outer decay exponent, epsilon + s = n'
    double s;        ///< inner decay exponent, epsilon - s = (beta^2-gamma^2)/n'
    bool valid;
    FailureReason failure;
};

enum class SolveMethod {
    Analytic,
    NumerovPekeris,
    NumerovExact,
};

struct EnergyLevel {
    int n, l, dim;
    double energy;  ///< NaN if quantization.valid is false
    QuantizationResult quantization;
    SolveMethod method;
};

/// The three algebraically equivalent closed forms of a level energy:
/// via epsilon, via the factored quotient, and the fully expanded
/// expression in the raw well parameters. The epsilon form is the
/// production path (it has the fewest cancellations near the window
/// edge); the others exist for cross-validation.
struct EnergyForms {
    double eps_form;
    double factored_form;
    double expanded_form;
};

/// Minimum depth for the channel to bind at all (necessary, not
/// sufficient). Channels with l~(l~+1) <= 0 never bind in this model
/// regardless of depth.
struct DepthThreshold {
    double v0_min;
    bool never_binds;
};

/// -n + (sqrt(1 + 4 gamma_sq) - 1)/2.
/// Throws std::invalid_argument for n < 0 or gamma_sq < 0.
double n_prime(int n, double gamma_sq);

/// Applies the bound-state conditions in order: n' > 0, then
/// 0 < beta^2 - gamma^2 < n'^2. gamma_sq < 0 (reachable only at
/// dim = 2, l = 0, where the centrifugal pull is attractive) is treated
/// as n' nonpositive: no bound states.
QuantizationResult quantize(const DimensionlessSet& d, int n);

/// |LHS - RHS| of the defining quantization identity,
///   beta^2 - 2 eps^2 - 2 eps s - eps - s  =  2 (eps + s) n + n (n+1).
/// Below 1e-9 for every valid quantization. Requires q.valid.
double quantization_residual(const DimensionlessSet& d, const QuantizationResult& q, int n);

/// Closed-form level energy for quantum numbers (n, l). The returned
/// level carries the quantization diagnostics; energy is NaN when the
/// cell is invalid.
EnergyLevel energy(const PotentialSpec& spec, int n, int l);

/// All three energy forms for a valid (n, l). Throws std::domain_error
/// when the cell is invalid.
EnergyForms energy_forms(const PotentialSpec& spec, int n, int l);

/// Three-dimensional specialization, evaluated through the expanded
/// closed form with l in place of l~. Agrees with energy() to rounding.
/// Throws std::invalid_argument unless spec.dim == 3.
EnergyLevel energy_d3(const PotentialSpec& spec, int n, int l);

/// All valid levels for l = 0..l_max, sorted by (l, n). The n loop is
/// bounded by n' > 0, so the list is finite for every spec. With
/// include_invalid, failed cells encountered on the way (including the
/// first n with n' <= 0 per channel) are reported as well.
std::vector<EnergyLevel> enumerate_levels(const PotentialSpec& spec, int l_max,
                                          bool include_invalid = false);

/// Depth above which beta^2 - gamma^2 > 0 for the channel:
/// v0 > delta_tilde (c1 + c2) = 8 (hbar^2/2mu) l~(l~+1) a / r0^3.
DepthThreshold depth_threshold(const PotentialSpec& spec, double l_tilde);

} // namespace wsbound
