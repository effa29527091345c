#include "spectrum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wsbound {

namespace {
constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

QuantizationResult invalid_result(double np, FailureReason why)
{
    return QuantizationResult{np, nan_v, nan_v, false, why};
}
} // namespace

const char* failure_name(FailureReason reason)
{
    switch (reason) {
        case FailureReason::None: return "ok";
        case FailureReason::NPrimeNonpositive: return "n_prime_nonpositive";
        case FailureReason::WellTooShallow: return "well_too_shallow";
        case FailureReason::WindowViolated: return "window_violated";
    }
    return "unknown";
}

double n_prime(int n, double gamma_sq)
{
    if (n < 0) {
        throw std::invalid_argument("n_prime: n must be >= 0");
    }
    if (gamma_sq < 0.0) {
        throw std::invalid_argument("n_prime: gamma_sq must be >= 0");
    }
    return -n + 0.5 * (std::sqrt(1.0 + 4.0 * gamma_sq) - 1.0);
}

QuantizationResult quantize(const DimensionlessSet& d, int n)
{
    if (n < 0) {
        throw std::invalid_argument("quantize: n must be >= 0");
    }
    if (d.gamma_sq < 0.0) {
        // attractive centrifugal pull (dim = 2, l = 0): the radical is
        // below 1 or complex, so n' <= 0 for every n
        return invalid_result(-std::numeric_limits<double>::infinity(),
                              FailureReason::NPrimeNonpositive);
    }
    double np = n_prime(n, d.gamma_sq);
    if (np <= 0.0) {
        return invalid_result(np, FailureReason::NPrimeNonpositive);
    }
    double q = d.beta_sq - d.gamma_sq;
    if (q <= 0.0) {
        return invalid_result(np, FailureReason::WellTooShallow);
    }
    if (q >= np * np) {
        return invalid_result(np, FailureReason::WindowViolated);
    }
    QuantizationResult res;
    res.n_prime = np;
    res.epsilon = 0.5 * (np + q / np);
    res.s = 0.5 * (np - q / np);
    res.valid = true;
    res.failure = FailureReason::None;
    return res;
}

double quantization_residual(const DimensionlessSet& d, const QuantizationResult& q, int n)
{
    if (!q.valid) {
        throw std::domain_error("quantization_residual: requires a valid quantization");
    }
    double lhs = d.beta_sq - 2.0 * q.epsilon * q.epsilon - 2.0 * q.epsilon * q.s -
                 q.epsilon - q.s;
    double rhs = 2.0 * (q.epsilon + q.s) * n + static_cast<double>(n) * (n + 1);
    return std::abs(lhs - rhs);
}

EnergyLevel energy(const PotentialSpec& spec, int n, int l)
{
    Channel ch = make_channel(n, l, spec.dim);
    DimensionlessSet d = dimensionless(spec, ch.l_tilde);
    QuantizationResult q = quantize(d, n);
    EnergyLevel level;
    level.n = n;
    level.l = l;
    level.dim = spec.dim;
    level.quantization = q;
    level.method = SolveMethod::Analytic;
    level.energy = nan_v;
    if (q.valid) {
        double k = spec.hbar2_over_2mu;
        level.energy = d.delta_tilde * d.c0 - k * q.epsilon * q.epsilon / (spec.a * spec.a);
    }
    return level;
}

EnergyForms energy_forms(const PotentialSpec& spec, int n, int l)
{
    Channel ch = make_channel(n, l, spec.dim);
    DimensionlessSet d = dimensionless(spec, ch.l_tilde);
    QuantizationResult q = quantize(d, n);
    if (!q.valid) {
        throw std::domain_error("energy_forms: no bound state for these quantum numbers");
    }
    double k = spec.hbar2_over_2mu;
    double a = spec.a;
    double r0 = spec.r0;
    double lt = ch.l_tilde;
    double cl = lt * (lt + 1.0);

    EnergyForms f;
    f.eps_form = d.delta_tilde * d.c0 - k * q.epsilon * q.epsilon / (a * a);

    double qd = d.beta_sq - d.gamma_sq;
    double beta = std::sqrt(d.beta_sq);
    double quot = (q.n_prime * q.n_prime + qd) / (2.0 * beta * q.n_prime);
    f.factored_form = d.delta_tilde * d.c0 - (spec.v0 - d.delta_tilde * d.c1) * quot * quot;

    double rad = std::sqrt(1.0 + 192.0 * cl * std::pow(a / r0, 4));
    double br = rad - 2.0 * n - 1.0;
    double mu_v0 = a * a * spec.v0 / (2.0 * k); // mu a^2 v0 / hbar^2
    double inner = mu_v0 - 4.0 * cl * a * a * a / (r0 * r0 * r0);
    f.expanded_form = (k * cl / (r0 * r0)) * (1.0 + 12.0 * a * a / (r0 * r0)) -
                      (k / (a * a)) *
                          (br * br / 16.0 + 4.0 * inner * inner / (br * br) + mu_v0);
    return f;
}

EnergyLevel energy_d3(const PotentialSpec& spec, int n, int l)
{
    if (spec.dim != 3) {
        throw std::invalid_argument("energy_d3: spec.dim must be 3");
    }
    EnergyLevel level = energy(spec, n, l);
    if (!level.quantization.valid) {
        return level;
    }
    // evaluate through the expanded closed form with the integer l; at
    // dim = 3 the effective and orbital momenta coincide
    double k = spec.hbar2_over_2mu;
    double a = spec.a;
    double r0 = spec.r0;
    double cl = static_cast<double>(l) * (l + 1);
    double rad = std::sqrt(1.0 + 192.0 * cl * std::pow(a / r0, 4));
    double br = rad - 2.0 * n - 1.0;
    double mu_v0 = a * a * spec.v0 / (2.0 * k);
    double inner = mu_v0 - 4.0 * cl * a * a * a / (r0 * r0 * r0);
    level.energy = (k * cl / (r0 * r0)) * (1.0 + 12.0 * a * a / (r0 * r0)) -
                   (k / (a * a)) * (br * br / 16.0 + 4.0 * inner * inner / (br * br) + mu_v0);
    return level;
}

std::vector<EnergyLevel> enumerate_levels(const PotentialSpec& spec, int l_max,
                                          bool include_invalid)
{
    if (l_max < 0) {
        throw std::invalid_argument("enumerate_levels: l_max must be >= 0");
    }
    spec.validate();
    std::vector<EnergyLevel> out;
    for (int l = 0; l <= l_max; l++) {
        for (int n = 0;; n++) {
            EnergyLevel level = energy(spec, n, l);
            const QuantizationResult& q = level.quantization;
            if (q.valid || include_invalid) {
                out.push_back(level);
            }
            if (q.failure == FailureReason::NPrimeNonpositive) {
                break; // n' only decreases with n; channel exhausted
            }
        }
    }
    return out;
}

DepthThreshold depth_threshold(const PotentialSpec& spec, double l_tilde)
{
    spec.validate();
    double cl = l_tilde * (l_tilde + 1.0);
    if (cl <= 0.0) {
        return DepthThreshold{0.0, true};
    }
    double v0_min = 8.0 * spec.hbar2_over_2mu * cl * spec.a / std::pow(spec.r0, 3);
    return DepthThreshold{v0_min, false};
}

} // namespace wsbound
