#include "potential.hpp"

#include <stdexcept>
#include <string>

#include "pekeris.hpp"

namespace wsbound {

void PotentialSpec::validate() const
{
    if (!(v0 > 0.0)) {
        throw std::invalid_argument("PotentialSpec: v0 must be > 0");
    }
    if (!(r0 > 0.0)) {
        throw std::invalid_argument("PotentialSpec: r0 must be > 0");
    }
    if (!(a > 0.0)) {
        throw std::invalid_argument("PotentialSpec: a must be > 0");
    }
    if (!(hbar2_over_2mu > 0.0)) {
        throw std::invalid_argument("PotentialSpec: hbar2_over_2mu must be > 0");
    }
    if (dim < 2) {
        throw std::invalid_argument("PotentialSpec: dim must be >= 2");
    }
}

double effective_l(int l, int dim)
{
    if (l < 0) {
        throw std::invalid_argument("effective_l: l must be >= 0");
    }
    if (dim < 2) {
        throw std::invalid_argument("effective_l: dim must be >= 2");
    }
    return l + 0.5 * (dim - 3);
}

Channel make_channel(int n, int l, int dim)
{
    if (n < 0) {
        throw std::invalid_argument("make_channel: n must be >= 0");
    }
    return Channel{n, l, effective_l(l, dim)};
}

double woods_saxon(const PotentialSpec& spec, double r)
{
    if (r < 0.0) {
        throw std::invalid_argument("woods_saxon: r must be >= 0");
    }
    return -spec.v0 * fermi((r - spec.r0) / spec.a);
}

double effective_potential_exact(const PotentialSpec& spec, double l_tilde, double r)
{
    double cl = l_tilde * (l_tilde + 1.0);
    if (r < 0.0) {
        throw std::invalid_argument("effective_potential_exact: r must be >= 0");
    }
    if (r == 0.0) {
        if (cl != 0.0) {
            throw std::domain_error("effective_potential_exact: centrifugal pole at r = 0");
        }
        return woods_saxon(spec, 0.0);
    }
    return spec.hbar2_over_2mu * cl / (r * r) + woods_saxon(spec, r);
}

DimensionlessSet dimensionless(const PotentialSpec& spec, double l_tilde)
{
    spec.validate();
    double alpha = spec.r0 / spec.a;
    double delta = spec.hbar2_over_2mu * l_tilde * (l_tilde + 1.0) / (spec.r0 * spec.r0);
    PekerisCoefficients c = pekeris_coefficients(alpha);
    double a2_over_k = spec.a * spec.a / spec.hbar2_over_2mu;
    DimensionlessSet d;
    d.l_tilde = l_tilde;
    d.alpha = alpha;
    d.delta_tilde = delta;
    d.c0 = c.c0;
    d.c1 = c.c1;
    d.c2 = c.c2;
    d.beta_sq = a2_over_k * (spec.v0 - delta * c.c1);
    d.gamma_sq = a2_over_k * delta * c.c2;
    return d;
}

} // namespace wsbound
