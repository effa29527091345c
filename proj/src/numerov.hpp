#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "potential.hpp"
#include "spectrum.hpp"

namespace wsbound {

enum class PotentialKind {
    ExactEffective,  ///< centrifugal term + raw well, half line r >= 0
    Pekeris,         ///< smoothed barrier; defined on the whole line
};

/// Shooting-domain and search-bracket configuration.
///
/// The smoothed (Pekeris) potential approaches a finite plateau as
/// r -> -infinity, and the closed-form spectrum belongs to that full-line
/// problem; its default domain therefore starts well below r = 0
/// (r_min < 0 is legal for pole-free potentials). The exact effective
/// potential keeps the physical half line.
struct ShootingConfig {
    double h;             ///< grid step
    double r_min, r_max;  ///< integration domain, r_min < r_max
    double e_lo, e_hi;    ///< energy search bracket
    double tol_e = 1e-10; ///< relative energy tolerance
    int max_iter = 400;   ///< cap on integrations per level search

    void validate() const;
};

/// One outward integration of u'' = (V - E) u / (hbar^2/2mu).
struct Trajectory {
    std::vector<double> u;
    int nodes;        ///< sign changes of u along the trajectory
    double terminal;  ///< u at r_max
    int rescales;     ///< overflow rescalings applied
};

struct OracleLevel {
    int nodes;
    double energy;
    bool converged;  ///< bracket width at exit < tol_e * max(|E|, 1)
    int iterations;  ///< integrations spent
    PotentialKind kind;
};

struct LevelPair {
    int n;
    double e_analytic;
    double e_oracle;
    double delta;    ///< e_oracle - e_analytic
    double rel_err;  ///< |delta| / max(|e_analytic|, 1)
};

struct ComparisonReport {
    std::vector<LevelPair> pairs;        ///< matched by node count, sorted by n
    std::vector<int> analytic_only;
    std::vector<int> oracle_only;
    double max_rel_err;                  ///< 0 when there are no pairs
};

/// Numerov three-point outward integration (local error O(h^6)).
/// Seeds: with seed_power == 1 the trajectory starts from u(r_min) = 0,
/// u(r_min + h) = h; otherwise from the regular power law r^seed_power
/// evaluated at the first two grid points (requires r_min > 0, used to
/// step over a centrifugal pole).
Trajectory numerov_integrate(const std::function<double(double)>& potential,
                             double hbar2_over_2mu, double energy,
                             const ShootingConfig& cfg, double seed_power = 1.0);

/// Locates the level with the requested node count inside [e_lo, e_hi]:
/// first brackets it by node-count monotonicity, then bisects on the sign
/// of the terminal value. Returns nullopt when the bracket holds no such
/// level; throws grid_too_coarse_error when node counts behave
/// non-monotonically (grid cannot resolve neighboring levels).
/// On success *eigenfunction, when given, holds the trajectory at the
/// lower bracket edge (exactly n nodes).
std::optional<OracleLevel> numerov_find_level(
    const std::function<double(double)>& potential, double hbar2_over_2mu,
    int target_nodes, const ShootingConfig& cfg, double seed_power = 1.0,
    Trajectory* eigenfunction = nullptr);

/// Domain and bracket defaults for one channel of a spec, sized so bound
/// tails decay by at least e^-30 inside the domain. Levels closer to a
/// continuum edge than 0.5% of the well depth need an explicit config.
ShootingConfig default_shooting_config(const PotentialSpec& spec, PotentialKind kind,
                                       double l_tilde);

/// Finds levels n = 0..n_max of the chosen potential for channel l;
/// node counts with an empty bracket are skipped.
std::vector<OracleLevel> solve_levels(PotentialKind kind, const PotentialSpec& spec,
                                      int l, int n_max,
                                      const ShootingConfig* cfg = nullptr);

/// Pairs closed-form and shooting levels by node count and reports
/// per-level differences plus unmatched entries on both sides.
ComparisonReport compare_levels(std::span<const EnergyLevel> analytic,
                                std::span<const OracleLevel> oracle);

} // namespace wsbound
