#include "wsbound.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numerov.hpp"
#include "pekeris.hpp"
#include "potential.hpp"
#include "spectrum.hpp"
#include "wavefunction.hpp"

struct wsb_spec {
    wsbound::PotentialSpec spec;
};

struct wsb_levels {
    std::vector<wsbound::EnergyLevel> levels;
};

struct wsb_table {
    wsbound::RadialTable table;
};

struct wsb_oracle_levels {
    std::vector<wsbound::OracleLevel> levels;
};

struct wsb_comparison {
    wsbound::ComparisonReport report;
};

namespace {

thread_local std::string g_last_error;

wsb_status fail(wsb_status status, const char* what)
{
    g_last_error = what != nullptr ? what : "";
    return status;
}

/// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
wsb_status guarded(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return WSB_OK;
    } catch (const wsbound::grid_too_coarse_error& e) {
        return fail(WSB_ERR_GRID_TOO_COARSE, e.what());
    } catch (const wsbound::degenerate_wavefunction_error& e) {
        return fail(WSB_ERR_DEGENERATE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(WSB_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(WSB_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(WSB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(WSB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(WSB_ERR_INTERNAL, "unknown error");
    }
}

wsb_level to_c_level(const wsbound::EnergyLevel& lvl, double l_tilde)
{
    wsb_level out;
    out.n = lvl.n;
    out.l = lvl.l;
    out.dim = lvl.dim;
    out.valid = lvl.quantization.valid ? 1 : 0;
    out.failure = static_cast<int>(lvl.quantization.failure);
    out.l_tilde = l_tilde;
    out.n_prime = lvl.quantization.n_prime;
    out.epsilon = lvl.quantization.epsilon;
    out.s = lvl.quantization.s;
    out.energy = lvl.energy;
    return out;
}

wsbound::PotentialKind to_kind(int potential_kind)
{
    switch (potential_kind) {
        case WSB_POTENTIAL_EXACT_EFFECTIVE: return wsbound::PotentialKind::ExactEffective;
        case WSB_POTENTIAL_PEKERIS: return wsbound::PotentialKind::Pekeris;
        default: throw std::invalid_argument("unknown potential kind");
    }
}

wsbound::ShootingConfig to_cpp_config(const wsb_shooting_config& cfg)
{
    wsbound::ShootingConfig out;
    out.h = cfg.h;
    out.r_min = cfg.r_min;
    out.r_max = cfg.r_max;
    out.e_lo = cfg.e_lo;
    out.e_hi = cfg.e_hi;
    out.tol_e = cfg.tol_e;
    out.max_iter = cfg.max_iter;
    return out;
}

} // namespace

extern "C" {

const char* wsb_version(void)
{
    return "1.0.0";
}

const char* wsb_strerror(wsb_status status)
{
    switch (status) {
        case WSB_OK: return "ok";
        case WSB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case WSB_ERR_DOMAIN: return "domain error";
        case WSB_ERR_NO_SUCH_LEVEL: return "no such level";
        case WSB_ERR_GRID_TOO_COARSE: return "grid too coarse";
        case WSB_ERR_DEGENERATE: return "degenerate wavefunction";
        case WSB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* wsb_last_error_message(void)
{
    return g_last_error.c_str();
}

wsb_status wsb_spec_create(double v0, double r0, double a, double hbar2_over_2mu,
                           int dim, wsb_spec** out)
{
    if (out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        wsbound::PotentialSpec spec{v0, r0, a, hbar2_over_2mu, dim};
        spec.validate();
        *out = new wsb_spec{spec};
    });
}

void wsb_spec_destroy(wsb_spec* spec)
{
    delete spec;
}

int wsb_spec_thin_surface(const wsb_spec* spec)
{
    return spec != nullptr && spec->spec.thin_surface() ? 1 : 0;
}

wsb_status wsb_effective_l(int l, int dim, double* out)
{
    if (out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "out must not be NULL");
    }
    return guarded([&] { *out = wsbound::effective_l(l, dim); });
}

wsb_status wsb_woods_saxon(const wsb_spec* spec, double r, double* out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    return guarded([&] { *out = wsbound::woods_saxon(spec->spec, r); });
}

wsb_status wsb_effective_potential_exact(const wsb_spec* spec, int l, double r,
                                         double* out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    return guarded([&] {
        double lt = wsbound::effective_l(l, spec->spec.dim);
        *out = wsbound::effective_potential_exact(spec->spec, lt, r);
    });
}

wsb_status wsb_effective_potential_pekeris(const wsb_spec* spec, int l, double r,
                                           double* out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    return guarded([&] {
        double lt = wsbound::effective_l(l, spec->spec.dim);
        *out = wsbound::effective_potential_pekeris(spec->spec, lt, r);
    });
}

wsb_status wsb_dimensionless(const wsb_spec* spec, int l, wsb_dimensionless_set* out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    return guarded([&] {
        double lt = wsbound::effective_l(l, spec->spec.dim);
        wsbound::DimensionlessSet d = wsbound::dimensionless(spec->spec, lt);
        out->l_tilde = d.l_tilde;
        out->alpha = d.alpha;
        out->delta_tilde = d.delta_tilde;
        out->c0 = d.c0;
        out->c1 = d.c1;
        out->c2 = d.c2;
        out->beta_sq = d.beta_sq;
        out->gamma_sq = d.gamma_sq;
    });
}

wsb_status wsb_depth_threshold(const wsb_spec* spec, int l, double* v0_min,
                               int* never_binds)
{
    if (spec == nullptr || v0_min == nullptr || never_binds == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "arguments must not be NULL");
    }
    return guarded([&] {
        double lt = wsbound::effective_l(l, spec->spec.dim);
        wsbound::DepthThreshold thr = wsbound::depth_threshold(spec->spec, lt);
        *v0_min = thr.v0_min;
        *never_binds = thr.never_binds ? 1 : 0;
    });
}

wsb_status wsb_pekeris_error_profile(const wsb_spec* spec, int l, const double* r,
                                     int count, double* exact_out, double* approx_out,
                                     double* abs_diff_out, double* rel_diff_out)
{
    if (spec == nullptr || r == nullptr || count < 0) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "bad profile arguments");
    }
    return guarded([&] {
        double lt = wsbound::effective_l(l, spec->spec.dim);
        auto rows = wsbound::pekeris_error_profile(
            spec->spec, lt, std::span<const double>(r, static_cast<std::size_t>(count)));
        for (int i = 0; i < count; i++) {
            if (exact_out != nullptr) exact_out[i] = rows[i].exact;
            if (approx_out != nullptr) approx_out[i] = rows[i].approx;
            if (abs_diff_out != nullptr) abs_diff_out[i] = rows[i].abs_diff;
            if (rel_diff_out != nullptr) rel_diff_out[i] = rows[i].rel_diff;
        }
    });
}

wsb_status wsb_level_compute(const wsb_spec* spec, int n, int l, wsb_level* out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    return guarded([&] {
        wsbound::EnergyLevel lvl = wsbound::energy(spec->spec, n, l);
        *out = to_c_level(lvl, wsbound::effective_l(l, spec->spec.dim));
    });
}

wsb_status wsb_levels_enumerate(const wsb_spec* spec, int l_max, int include_invalid,
                                wsb_levels** out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        auto levels = wsbound::enumerate_levels(spec->spec, l_max, include_invalid != 0);
        *out = new wsb_levels{std::move(levels)};
    });
}

wsb_status wsb_levels_enumerate_channel(const wsb_spec* spec, int l, int include_invalid,
                                        wsb_levels** out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        if (l < 0) {
            throw std::invalid_argument("wsb_levels_enumerate_channel: l must be >= 0");
        }
        auto all = wsbound::enumerate_levels(spec->spec, l, include_invalid != 0);
        std::vector<wsbound::EnergyLevel> channel;
        for (const auto& lvl : all) {
            if (lvl.l == l) {
                channel.push_back(lvl);
            }
        }
        *out = new wsb_levels{std::move(channel)};
    });
}

int wsb_levels_count(const wsb_levels* levels)
{
    return levels != nullptr ? static_cast<int>(levels->levels.size()) : 0;
}

wsb_status wsb_levels_get(const wsb_levels* levels, int index, wsb_level* out)
{
    if (levels == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "levels and out must not be NULL");
    }
    if (index < 0 || index >= static_cast<int>(levels->levels.size())) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "index out of range");
    }
    const wsbound::EnergyLevel& lvl = levels->levels[static_cast<std::size_t>(index)];
    *out = to_c_level(lvl, wsbound::effective_l(lvl.l, lvl.dim));
    return WSB_OK;
}

void wsb_levels_destroy(wsb_levels* levels)
{
    delete levels;
}

const char* wsb_failure_name(int failure)
{
    return wsbound::failure_name(static_cast<wsbound::FailureReason>(failure));
}

wsb_status wsb_table_compute(const wsb_spec* spec, int n, int l, double r_max,
                             double step, wsb_table** out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    *out = nullptr;
    wsbound::EnergyLevel lvl;
    wsb_status status = guarded([&] { lvl = wsbound::energy(spec->spec, n, l); });
    if (status != WSB_OK) {
        return status;
    }
    if (!lvl.quantization.valid) {
        return fail(WSB_ERR_NO_SUCH_LEVEL,
                    wsbound::failure_name(lvl.quantization.failure));
    }
    return guarded([&] {
        wsbound::RadialGridSpec grid{r_max, step};
        auto table = wsbound::normalize(spec->spec, lvl.quantization, n, grid);
        *out = new wsb_table{std::move(table)};
    });
}

int wsb_table_size(const wsb_table* table)
{
    return table != nullptr ? static_cast<int>(table->table.r.size()) : 0;
}

wsb_status wsb_table_get(const wsb_table* table, int index, double* r, double* u,
                         double* radial)
{
    if (table == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "table must not be NULL");
    }
    if (index < 0 || index >= static_cast<int>(table->table.r.size())) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "index out of range");
    }
    auto i = static_cast<std::size_t>(index);
    if (r != nullptr) *r = table->table.r[i];
    if (u != nullptr) *u = table->table.u[i];
    if (radial != nullptr) *radial = table->table.radial[i];
    return WSB_OK;
}

wsb_status wsb_table_stats_get(const wsb_table* table, wsb_table_stats* out)
{
    if (table == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "table and out must not be NULL");
    }
    out->norm_constant = table->table.norm_constant;
    out->nodes = table->table.nodes;
    out->r_max = table->table.r_max;
    out->u0_ratio = table->table.u0_ratio;
    out->r0_extrapolated = table->table.r0_extrapolated ? 1 : 0;
    return WSB_OK;
}

void wsb_table_destroy(wsb_table* table)
{
    delete table;
}

wsb_status wsb_oracle_default_config(const wsb_spec* spec, int potential_kind, int l,
                                     wsb_shooting_config* out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    return guarded([&] {
        double lt = wsbound::effective_l(l, spec->spec.dim);
        wsbound::ShootingConfig cfg =
            wsbound::default_shooting_config(spec->spec, to_kind(potential_kind), lt);
        out->h = cfg.h;
        out->r_min = cfg.r_min;
        out->r_max = cfg.r_max;
        out->e_lo = cfg.e_lo;
        out->e_hi = cfg.e_hi;
        out->tol_e = cfg.tol_e;
        out->max_iter = cfg.max_iter;
    });
}

wsb_status wsb_oracle_solve(const wsb_spec* spec, int potential_kind, int l, int n_max,
                            const wsb_shooting_config* cfg, wsb_oracle_levels** out)
{
    if (spec == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "spec and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        wsbound::ShootingConfig local;
        const wsbound::ShootingConfig* cfg_ptr = nullptr;
        if (cfg != nullptr) {
            local = to_cpp_config(*cfg);
            cfg_ptr = &local;
        }
        auto levels =
            wsbound::solve_levels(to_kind(potential_kind), spec->spec, l, n_max, cfg_ptr);
        *out = new wsb_oracle_levels{std::move(levels)};
    });
}

int wsb_oracle_count(const wsb_oracle_levels* levels)
{
    return levels != nullptr ? static_cast<int>(levels->levels.size()) : 0;
}

wsb_status wsb_oracle_get(const wsb_oracle_levels* levels, int index,
                          wsb_oracle_level* out)
{
    if (levels == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "levels and out must not be NULL");
    }
    if (index < 0 || index >= static_cast<int>(levels->levels.size())) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "index out of range");
    }
    const wsbound::OracleLevel& lvl = levels->levels[static_cast<std::size_t>(index)];
    out->nodes = lvl.nodes;
    out->energy = lvl.energy;
    out->converged = lvl.converged ? 1 : 0;
    out->iterations = lvl.iterations;
    return WSB_OK;
}

void wsb_oracle_destroy(wsb_oracle_levels* levels)
{
    delete levels;
}

wsb_status wsb_numerov_find_level(wsb_potential_fn potential, void* user,
                                  double hbar2_over_2mu, double seed_power, int nodes,
                                  const wsb_shooting_config* cfg, wsb_oracle_level* out)
{
    if (potential == nullptr || cfg == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "potential, cfg and out must not be NULL");
    }
    bool found = false;
    wsb_status status = guarded([&] {
        auto level = wsbound::numerov_find_level(
            [potential, user](double r) { return potential(r, user); }, hbar2_over_2mu,
            nodes, to_cpp_config(*cfg), seed_power);
        if (level.has_value()) {
            out->nodes = level->nodes;
            out->energy = level->energy;
            out->converged = level->converged ? 1 : 0;
            out->iterations = level->iterations;
            found = true;
        }
    });
    if (status != WSB_OK) {
        return status;
    }
    if (!found) {
        return fail(WSB_ERR_NO_SUCH_LEVEL, "no level with that node count in bracket");
    }
    return WSB_OK;
}

wsb_status wsb_compare_levels(const wsb_levels* analytic, const wsb_oracle_levels* oracle,
                              wsb_comparison** out)
{
    if (analytic == nullptr || oracle == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "arguments must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        auto report = wsbound::compare_levels(analytic->levels, oracle->levels);
        *out = new wsb_comparison{std::move(report)};
    });
}

int wsb_comparison_pair_count(const wsb_comparison* cmp)
{
    return cmp != nullptr ? static_cast<int>(cmp->report.pairs.size()) : 0;
}

wsb_status wsb_comparison_pair(const wsb_comparison* cmp, int index, wsb_level_pair* out)
{
    if (cmp == nullptr || out == nullptr) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "cmp and out must not be NULL");
    }
    if (index < 0 || index >= static_cast<int>(cmp->report.pairs.size())) {
        return fail(WSB_ERR_INVALID_ARGUMENT, "index out of range");
    }
    const wsbound::LevelPair& pair = cmp->report.pairs[static_cast<std::size_t>(index)];
    out->n = pair.n;
    out->e_analytic = pair.e_analytic;
    out->e_oracle = pair.e_oracle;
    out->delta = pair.delta;
    out->rel_err = pair.rel_err;
    return WSB_OK;
}

static int copy_ints(const std::vector<int>& src, int* dst, int cap)
{
    if (dst != nullptr) {
        int limit = cap < static_cast<int>(src.size()) ? cap : static_cast<int>(src.size());
        for (int i = 0; i < limit; i++) {
            dst[i] = src[static_cast<std::size_t>(i)];
        }
    }
    return static_cast<int>(src.size());
}

int wsb_comparison_unmatched_analytic(const wsb_comparison* cmp, int* n_values, int cap)
{
    if (cmp == nullptr) {
        return 0;
    }
    return copy_ints(cmp->report.analytic_only, n_values, cap);
}

int wsb_comparison_unmatched_oracle(const wsb_comparison* cmp, int* n_values, int cap)
{
    if (cmp == nullptr) {
        return 0;
    }
    return copy_ints(cmp->report.oracle_only, n_values, cap);
}

double wsb_comparison_max_rel_err(const wsb_comparison* cmp)
{
    return cmp != nullptr ? cmp->report.max_rel_err : 0.0;
}

void wsb_comparison_destroy(wsb_comparison* cmp)
{
    delete cmp;
}

} // extern "C"
