#include "numerov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace wsbound {

void ShootingConfig::validate() const
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("ShootingConfig: h must be > 0");
    }
    if (!(r_min < r_max)) {
        throw std::invalid_argument("ShootingConfig: requires r_min < r_max");
    }
    if (!(e_lo < e_hi)) {
        throw std::invalid_argument("ShootingConfig: requires e_lo < e_hi");
    }
    if (!(tol_e > 0.0)) {
        throw std::invalid_argument("ShootingConfig: tol_e must be > 0");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("ShootingConfig: max_iter must be >= 1");
    }
}

Trajectory numerov_integrate(const std::function<double(double)>& potential,
                             double hbar2_over_2mu, double energy,
                             const ShootingConfig& cfg, double seed_power)
{
    cfg.validate();
    if (!(hbar2_over_2mu > 0.0)) {
        throw std::invalid_argument("numerov_integrate: hbar2_over_2mu must be > 0");
    }
    auto steps = static_cast<std::size_t>(std::llround((cfg.r_max - cfg.r_min) / cfg.h));
    if (steps < 8) {
        throw std::invalid_argument("numerov_integrate: domain shorter than 8 steps");
    }

    Trajectory traj;
    traj.u.resize(steps + 1);
    traj.rescales = 0;

    double h = cfg.h;
    double k = hbar2_over_2mu;
    if (seed_power == 1.0) {
        traj.u[0] = 0.0;
        traj.u[1] = h;
    } else {
        if (!(cfg.r_min > 0.0)) {
            throw std::invalid_argument(
                "numerov_integrate: power-law seed needs r_min > 0");
        }
        traj.u[0] = std::pow(cfg.r_min, seed_power);
        traj.u[1] = std::pow(cfg.r_min + h, seed_power);
    }

    double fm = (potential(cfg.r_min) - energy) / k;
    double fc = (potential(cfg.r_min + h) - energy) / k;
    double h2 = h * h;
    for (std::size_t i = 2; i <= steps; i++) {
        double r = cfg.r_min + h * static_cast<double>(i);
        double fp = (potential(r) - energy) / k;
        double next = ((2.0 + 5.0 * h2 * fc / 6.0) * traj.u[i - 1] -
                       (1.0 - h2 * fm / 12.0) * traj.u[i - 2]) /
                      (1.0 - h2 * fp / 12.0);
        traj.u[i] = next;
        if (std::abs(next) > 1e250) {
            for (std::size_t j = 0; j <= i; j++) {
                traj.u[j] /= 1e250;
            }
            traj.rescales++;
        }
        fm = fc;
        fc = fp;
    }

    int nodes = 0;
    int prev = 0;
    for (double v : traj.u) {
        int sg = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sg == 0) {
            continue;
        }
        if (prev != 0 && sg != prev) {
            nodes++;
        }
        prev = sg;
    }
    traj.nodes = nodes;
    traj.terminal = traj.u.back();
    return traj;
}

std::optional<OracleLevel> numerov_find_level(
    const std::function<double(double)>& potential, double hbar2_over_2mu,
    int target_nodes, const ShootingConfig& cfg, double seed_power,
    Trajectory* eigenfunction)
{
    cfg.validate();
    if (target_nodes < 0) {
        throw std::invalid_argument("numerov_find_level: target_nodes must be >= 0");
    }

    int iterations = 0;
    auto shoot = [&](double e) {
        iterations++;
        return numerov_integrate(potential, hbar2_over_2mu, e, cfg, seed_power);
    };

    double e_lo = cfg.e_lo;
    double e_hi = cfg.e_hi;
    Trajectory lo = shoot(e_lo);
    Trajectory hi = shoot(e_hi);
    if (lo.nodes > target_nodes || hi.nodes <= target_nodes) {
        return std::nullopt; // empty bracket: no such level here
    }

    auto width_converged = [&](double e) {
        return (e_hi - e_lo) < cfg.tol_e * std::max(std::abs(e), 1.0);
    };

    // phase 1: shrink to a bracket whose edges hold n and n+1 nodes
    while (!(lo.nodes == target_nodes && hi.nodes == target_nodes + 1)) {
        if (iterations >= cfg.max_iter || width_converged(0.5 * (e_lo + e_hi))) {
            break;
        }
        double e_mid = 0.5 * (e_lo + e_hi);
        Trajectory mid = shoot(e_mid);
        if (mid.nodes < lo.nodes || mid.nodes > hi.nodes) {
            throw grid_too_coarse_error(
                "node count not monotone in energy; decrease the grid step h");
        }
        if (mid.nodes <= target_nodes) {
            e_lo = e_mid;
            lo = std::move(mid);
        } else {
            e_hi = e_mid;
            hi = std::move(mid);
        }
    }

    // phase 2: bisect on the sign of the terminal value
    if ((lo.terminal > 0.0) != (hi.terminal > 0.0)) {
        while (!width_converged(e_lo) && iterations < cfg.max_iter) {
            double e_mid = 0.5 * (e_lo + e_hi);
            Trajectory mid = shoot(e_mid);
            if ((mid.terminal > 0.0) == (lo.terminal > 0.0)) {
                e_lo = e_mid;
                lo = std::move(mid);
            } else {
                e_hi = e_mid;
                hi = std::move(mid);
            }
        }
    }

    OracleLevel level;
    level.nodes = target_nodes;
    level.energy = 0.5 * (e_lo + e_hi);
    level.converged = width_converged(level.energy);
    level.iterations = iterations;
    level.kind = PotentialKind::Pekeris; // caller overwrites
    if (eigenfunction != nullptr) {
        *eigenfunction = std::move(lo);
    }
    return level;
}

namespace {

struct PekerisShape {
    double v_left;   // plateau as r -> -infinity
    double v_right;  // plateau as r -> +infinity
    double v_min;
};

PekerisShape pekeris_shape(const PotentialSpec& spec, const DimensionlessSet& d)
{
    PekerisShape s;
    s.v_right = d.delta_tilde * d.c0;
    s.v_left = d.delta_tilde * (d.c0 + d.c1 + d.c2) - spec.v0;
    s.v_min = std::min(s.v_left, s.v_right);
    double slope = spec.v0 - d.delta_tilde * d.c1;
    double curve = d.delta_tilde * d.c2;
    if (curve > 0.0) {
        double t_star = slope / (2.0 * curve);
        if (t_star > 0.0 && t_star < 1.0) {
            s.v_min = std::min(s.v_min, s.v_right - slope * slope / (4.0 * curve));
        }
    }
    return s;
}

// domain extension needed for a tail to decay by e^-30, capped so that
// near-degenerate thresholds cannot blow the grid up
double tail_extent(double depth, double k, double a)
{
    double floor_extent = 40.0 * a;
    if (!(depth > 0.0)) {
        return floor_extent;
    }
    double kappa = std::sqrt(0.005 * depth / k);
    return std::max(floor_extent, std::min(30.0 / kappa, 4000.0 * a));
}

} // namespace

ShootingConfig default_shooting_config(const PotentialSpec& spec, PotentialKind kind,
                                       double l_tilde)
{
    spec.validate();
    double k = spec.hbar2_over_2mu;
    double cl = l_tilde * (l_tilde + 1.0);
    ShootingConfig cfg;
    cfg.h = spec.a / 200.0;
    cfg.tol_e = 1e-10;
    cfg.max_iter = 400;

    if (kind == PotentialKind::Pekeris) {
        DimensionlessSet d = dimensionless(spec, l_tilde);
        PekerisShape shape = pekeris_shape(spec, d);
        double scale = std::max({1.0, std::abs(shape.v_left), std::abs(shape.v_right)});
        double depth_left = shape.v_left - shape.v_min;
        double depth_right = shape.v_right - shape.v_min;
        cfg.r_min = spec.r0 - tail_extent(depth_left, k, spec.a);
        cfg.r_max = spec.r0 + tail_extent(depth_right, k, spec.a);
        cfg.e_lo = std::min(-spec.v0, shape.v_min) - 1e-9 * scale;
        cfg.e_hi = shape.v_left - std::max(0.005 * depth_left, 1e-9 * scale);
    } else {
        if (cl < 0.0) {
            throw std::invalid_argument(
                "default_shooting_config: attractive centrifugal pull (dim = 2, l = 0) "
                "needs an explicit config");
        }
        cfg.r_min = cl != 0.0 ? cfg.h : 0.0;
        cfg.r_max = spec.r0 + tail_extent(spec.v0, k, spec.a);
        cfg.e_lo = -spec.v0 * (1.0 + 1e-9);
        cfg.e_hi = -0.005 * spec.v0;
    }
    return cfg;
}

std::vector<OracleLevel> solve_levels(PotentialKind kind, const PotentialSpec& spec,
                                      int l, int n_max, const ShootingConfig* cfg)
{
    spec.validate();
    if (n_max < 0) {
        throw std::invalid_argument("solve_levels: n_max must be >= 0");
    }
    double lt = effective_l(l, spec.dim);
    double cl = lt * (lt + 1.0);
    double k = spec.hbar2_over_2mu;

    ShootingConfig local = cfg != nullptr ? *cfg : default_shooting_config(spec, kind, lt);
    local.validate();

    std::function<double(double)> potential;
    double seed_power = 1.0;
    if (kind == PotentialKind::Pekeris) {
        DimensionlessSet d = dimensionless(spec, lt);
        double plateau = d.delta_tilde * d.c0;
        double slope = spec.v0 - d.delta_tilde * d.c1;
        double curve = d.delta_tilde * d.c2;
        double r0 = spec.r0, a = spec.a;
        potential = [plateau, slope, curve, r0, a](double r) {
            double t = fermi((r - r0) / a);
            return plateau - slope * t + curve * t * t;
        };
    } else {
        if (local.r_min < 0.0) {
            throw std::invalid_argument(
                "solve_levels: the exact effective potential lives on r >= 0");
        }
        if (cl != 0.0 && !(local.r_min > 0.0)) {
            throw std::invalid_argument(
                "solve_levels: r_min must be > 0 to step over the centrifugal pole");
        }
        double v0 = spec.v0, r0 = spec.r0, a = spec.a;
        potential = [cl, k, v0, r0, a](double r) {
            double ws = -v0 * fermi((r - r0) / a);
            return r > 0.0 ? k * cl / (r * r) + ws : ws;
        };
        seed_power = lt + 1.0;
    }

    std::vector<OracleLevel> out;
    for (int n = 0; n <= n_max; n++) {
        auto level = numerov_find_level(potential, k, n, local, seed_power);
        if (level.has_value()) {
            level->kind = kind;
            out.push_back(*level);
        }
    }
    return out;
}

ComparisonReport compare_levels(std::span<const EnergyLevel> analytic,
                                std::span<const OracleLevel> oracle)
{
    ComparisonReport report;
    report.max_rel_err = 0.0;
    for (const EnergyLevel& lvl : analytic) {
        if (!lvl.quantization.valid) {
            continue;
        }
        const OracleLevel* match = nullptr;
        for (const OracleLevel& o : oracle) {
            if (o.nodes == lvl.n) {
                match = &o;
                break;
            }
        }
        if (match == nullptr) {
            report.analytic_only.push_back(lvl.n);
            continue;
        }
        LevelPair pair;
        pair.n = lvl.n;
        pair.e_analytic = lvl.energy;
        pair.e_oracle = match->energy;
        pair.delta = match->energy - lvl.energy;
        pair.rel_err = std::abs(pair.delta) / std::max(std::abs(lvl.energy), 1.0);
        report.pairs.push_back(pair);
        report.max_rel_err = std::max(report.max_rel_err, pair.rel_err);
    }
    for (const OracleLevel& o : oracle) {
        bool matched = false;
        for (const EnergyLevel& lvl : analytic) {
            if (lvl.quantization.valid && lvl.n == o.nodes) {
                matched = true;
                break;
            }
        }
        if (!matched) {
            report.oracle_only.push_back(o.nodes);
        }
    }
    std::sort(report.pairs.begin(), report.pairs.end(),
              [](const LevelPair& x, const LevelPair& y) { return x.n < y.n; });
    std::sort(report.analytic_only.begin(), report.analytic_only.end());
    std::sort(report.oracle_only.begin(), report.oracle_only.end());
    return report;
}

} // namespace wsbound
