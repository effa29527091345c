#include "wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "jacobi.hpp"
#include "quadrature.hpp"

namespace wsbound {

double z_of_r(const PotentialSpec& spec, double r)
{
    if (r < 0.0) {
        throw std::invalid_argument("z_of_r: r must be >= 0");
    }
    return fermi((r - spec.r0) / spec.a);
}

double u_unnormalized(const PotentialSpec& spec, const QuantizationResult& q, int n,
                      double r)
{
    if (!q.valid) {
        throw std::domain_error("u_unnormalized: requires a valid quantization");
    }
    double z = z_of_r(spec, r);
    double envelope = std::pow(z, q.epsilon) * std::pow(1.0 - z, q.s);
    return envelope * jacobi(n, 2.0 * q.epsilon, 2.0 * q.s, 1.0 - 2.0 * z);
}

namespace {

int count_interior_sign_changes(const std::vector<double>& u)
{
    int nodes = 0;
    int prev = 0;
    for (std::size_t i = 1; i + 1 < u.size(); i++) {
        int sg = u[i] > 0.0 ? 1 : (u[i] < 0.0 ? -1 : 0);
        if (sg == 0) {
            continue;
        }
        if (prev != 0 && sg != prev) {
            nodes++;
        }
        prev = sg;
    }
    return nodes;
}

double coarse_peak(const PotentialSpec& spec, const QuantizationResult& q, int n,
                   double r_max)
{
    double peak = 0.0;
    const int probes = 512;
    for (int i = 0; i <= probes; i++) {
        double r = r_max * i / probes;
        peak = std::max(peak, std::abs(u_unnormalized(spec, q, n, r)));
    }
    return peak;
}

} // namespace

RadialTable normalize(const PotentialSpec& spec, const QuantizationResult& q, int n,
                      const RadialGridSpec& grid)
{
    spec.validate();
    if (!q.valid) {
        throw std::domain_error("normalize: requires a valid quantization");
    }

    double r_max = grid.r_max;
    double floor_r_max = spec.r0 + 40.0 * spec.a;
    if (r_max <= 0.0) {
        r_max = floor_r_max;
        // extend until the outer tail is numerically negligible
        double peak = coarse_peak(spec, q, n, r_max);
        for (int tries = 0; tries < 200 && peak > 0.0; tries++) {
            double tail = std::abs(u_unnormalized(spec, q, n, r_max));
            if (tail < 1e-12 * peak) {
                break;
            }
            r_max += 10.0 * spec.a;
        }
    } else if (r_max < floor_r_max) {
        throw std::invalid_argument("normalize: r_max must cover r0 + 40 a");
    }

    double step = grid.step > 0.0 ? grid.step : spec.a / 400.0;
    auto intervals = static_cast<std::size_t>(std::ceil(r_max / step));
    intervals = std::max<std::size_t>(intervals, 8);
    if (intervals % 2 == 1) {
        intervals++; // Simpson needs an even interval count
    }
    double h = r_max / static_cast<double>(intervals);

    RadialTable table;
    table.r.resize(intervals + 1);
    table.u.resize(intervals + 1);
    for (std::size_t i = 0; i <= intervals; i++) {
        table.r[i] = h * static_cast<double>(i);
        table.u[i] = u_unnormalized(spec, q, n, table.r[i]);
    }

    std::vector<double> u_sq(table.u.size());
    for (std::size_t i = 0; i < table.u.size(); i++) {
        u_sq[i] = table.u[i] * table.u[i];
    }
    double norm_sq = simpson(u_sq, h);
    if (!(norm_sq > 1e-300)) {
        throw degenerate_wavefunction_error(
            "normalize: wavefunction underflows on the whole grid");
    }
    table.norm_constant = 1.0 / std::sqrt(norm_sq);
    double peak = 0.0;
    for (double& v : table.u) {
        v *= table.norm_constant;
        peak = std::max(peak, std::abs(v));
    }

    table.radial.resize(table.u.size());
    double half_power = 0.5 * (spec.dim - 1);
    for (std::size_t i = 1; i < table.u.size(); i++) {
        table.radial[i] = table.u[i] * std::pow(table.r[i], -half_power);
    }
    // r^{-(dim-1)/2} is singular at the origin; fit a parabola through the
    // three innermost interior samples instead
    table.radial[0] = 3.0 * table.radial[1] - 3.0 * table.radial[2] + table.radial[3];
    table.r0_extrapolated = true;

    table.nodes = count_interior_sign_changes(table.u);
    table.r_max = r_max;
    table.u0_ratio = peak > 0.0 ? std::abs(table.u[0]) / peak : 0.0;
    return table;
}

} // namespace wsbound
