/* wsbound - bound states of the D-dimensional smooth-surface spherical well.
 *
 * C API of the shared library. All entry points return a wsb_status and
 * hand results back through out-parameters; objects with dynamic extent
 * are returned as opaque handles that must be released with the matching
 * *_destroy call. Handles are immutable after creation and safe to read
 * from multiple threads; error detail (wsb_last_error_message) is
 * thread-local.
 *
 * Unit convention: energies are in the unit of v0, lengths in the unit of
 * r0 and a; hbar2_over_2mu = hbar^2/(2*mu) must be supplied consistently
 * in energy*length^2. Nothing is converted internally.
 */
#ifndef WSBOUND_H
#define WSBOUND_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wsb_status {
    WSB_OK = 0,
    WSB_ERR_INVALID_ARGUMENT = 1,
    WSB_ERR_DOMAIN = 2,
    WSB_ERR_NO_SUCH_LEVEL = 3,
    WSB_ERR_GRID_TOO_COARSE = 4,
    WSB_ERR_DEGENERATE = 5,
    WSB_ERR_INTERNAL = 6
} wsb_status;

/* Why a (n, l) cell holds no bound state. */
enum {
    WSB_FAILURE_NONE = 0,
    WSB_FAILURE_N_PRIME_NONPOSITIVE = 1,
    WSB_FAILURE_WELL_TOO_SHALLOW = 2,
    WSB_FAILURE_WINDOW_VIOLATED = 3
};

enum {
    WSB_POTENTIAL_EXACT_EFFECTIVE = 0,
    WSB_POTENTIAL_PEKERIS = 1
};

typedef struct wsb_spec wsb_spec;                   /* well parameters */
typedef struct wsb_levels wsb_levels;               /* closed-form level list */
typedef struct wsb_table wsb_table;                 /* sampled radial function */
typedef struct wsb_oracle_levels wsb_oracle_levels; /* shooting-solver levels */
typedef struct wsb_comparison wsb_comparison;       /* closed-form vs shooting */

typedef struct wsb_dimensionless_set {
    double l_tilde;
    double alpha;
    double delta_tilde;
    double c0, c1, c2;
    double beta_sq;  /* signed; negative for sub-threshold wells */
    double gamma_sq; /* signed; negative only at dim = 2, l = 0 */
} wsb_dimensionless_set;

typedef struct wsb_level {
    int n, l, dim;
    int valid;       /* 0/1 */
    int failure;     /* WSB_FAILURE_* */
    double l_tilde;
    double n_prime;
    double epsilon;  /* NaN unless valid */
    double s;        /* NaN unless valid */
    double energy;   /* NaN unless valid */
} wsb_level;

typedef struct wsb_table_stats {
    double norm_constant;
    int nodes;           /* sign changes of u on (0, r_max) */
    double r_max;
    double u0_ratio;     /* |u(0)| / max|u|, boundary-condition diagnostic */
    int r0_extrapolated; /* R(0) filled by quadratic extrapolation */
} wsb_table_stats;

typedef struct wsb_shooting_config {
    double h;
    double r_min, r_max; /* r_min may be negative for pole-free potentials */
    double e_lo, e_hi;
    double tol_e;        /* relative */
    int max_iter;
} wsb_shooting_config;

typedef struct wsb_oracle_level {
    int nodes;
    double energy;
    int converged;
    int iterations;
} wsb_oracle_level;

typedef struct wsb_level_pair {
    int n;
    double e_analytic;
    double e_oracle;
    double delta;
    double rel_err; /* |delta| / max(|e_analytic|, 1) */
} wsb_level_pair;

/* r in, V(r) out; `user` is passed through untouched. */
typedef double (*wsb_potential_fn)(double r, void* user);

const char* wsb_version(void);
const char* wsb_strerror(wsb_status status);
/* Detail for the most recent failure on this thread; empty if none. */
const char* wsb_last_error_message(void);

/* --- well parameters ---------------------------------------------------- */

wsb_status wsb_spec_create(double v0, double r0, double a, double hbar2_over_2mu,
                           int dim, wsb_spec** out);
void wsb_spec_destroy(wsb_spec* spec);
/* 1 when a < r0 (the regime the closed forms are derived for). */
int wsb_spec_thin_surface(const wsb_spec* spec);

/* --- scalar evaluations -------------------------------------------------- */

wsb_status wsb_effective_l(int l, int dim, double* out);
wsb_status wsb_woods_saxon(const wsb_spec* spec, double r, double* out);
wsb_status wsb_effective_potential_exact(const wsb_spec* spec, int l, double r,
                                         double* out);
wsb_status wsb_effective_potential_pekeris(const wsb_spec* spec, int l, double r,
                                           double* out);
wsb_status wsb_dimensionless(const wsb_spec* spec, int l, wsb_dimensionless_set* out);
/* Minimum depth for the channel to bind (necessary condition). never_binds
 * is set for channels that hold no states at any depth. */
wsb_status wsb_depth_threshold(const wsb_spec* spec, int l, double* v0_min,
                               int* never_binds);

/* Exact-vs-smoothed centrifugal term on caller-provided radii (> 0).
 * Any of the out arrays may be NULL to skip that column. */
wsb_status wsb_pekeris_error_profile(const wsb_spec* spec, int l, const double* r,
                                     int count, double* exact_out, double* approx_out,
                                     double* abs_diff_out, double* rel_diff_out);

/* --- closed-form spectrum ------------------------------------------------ */

wsb_status wsb_level_compute(const wsb_spec* spec, int n, int l, wsb_level* out);
/* All levels for l = 0..l_max sorted by (l, n). With include_invalid the
 * failed cells scanned along the way are included. */
wsb_status wsb_levels_enumerate(const wsb_spec* spec, int l_max, int include_invalid,
                                wsb_levels** out);
/* Levels of the single channel l, same conventions. */
wsb_status wsb_levels_enumerate_channel(const wsb_spec* spec, int l, int include_invalid,
                                        wsb_levels** out);
int wsb_levels_count(const wsb_levels* levels);
wsb_status wsb_levels_get(const wsb_levels* levels, int index, wsb_level* out);
void wsb_levels_destroy(wsb_levels* levels);
const char* wsb_failure_name(int failure);

/* --- radial wavefunction tables ------------------------------------------ */

/* Tabulates the normalized level (n, l). r_max <= 0 and step <= 0 pick
 * defaults (r0 + 40 a auto-extended; a/400). WSB_ERR_NO_SUCH_LEVEL when
 * the cell holds no bound state. */
wsb_status wsb_table_compute(const wsb_spec* spec, int n, int l, double r_max,
                             double step, wsb_table** out);
int wsb_table_size(const wsb_table* table);
wsb_status wsb_table_get(const wsb_table* table, int index, double* r, double* u,
                         double* radial);
wsb_status wsb_table_stats_get(const wsb_table* table, wsb_table_stats* out);
void wsb_table_destroy(wsb_table* table);

/* --- shooting solver (independent verification path) --------------------- */

wsb_status wsb_oracle_default_config(const wsb_spec* spec, int potential_kind, int l,
                                     wsb_shooting_config* out);
/* cfg == NULL picks the defaults. Node counts without a level in the
 * bracket are skipped, so fewer than n_max + 1 entries may come back. */
wsb_status wsb_oracle_solve(const wsb_spec* spec, int potential_kind, int l, int n_max,
                            const wsb_shooting_config* cfg, wsb_oracle_levels** out);
int wsb_oracle_count(const wsb_oracle_levels* levels);
wsb_status wsb_oracle_get(const wsb_oracle_levels* levels, int index,
                          wsb_oracle_level* out);
void wsb_oracle_destroy(wsb_oracle_levels* levels);

/* Level search for an arbitrary caller-supplied potential. seed_power = 1
 * starts from u(r_min) = 0; other powers seed the regular solution
 * r^seed_power and need r_min > 0. Returns WSB_ERR_NO_SUCH_LEVEL when the
 * bracket holds no level with the requested node count. */
wsb_status wsb_numerov_find_level(wsb_potential_fn potential, void* user,
                                  double hbar2_over_2mu, double seed_power, int nodes,
                                  const wsb_shooting_config* cfg,
                                  wsb_oracle_level* out);

/* --- closed-form vs shooting comparison ----------------------------------- */

wsb_status wsb_compare_levels(const wsb_levels* analytic,
                              const wsb_oracle_levels* oracle, wsb_comparison** out);
int wsb_comparison_pair_count(const wsb_comparison* cmp);
wsb_status wsb_comparison_pair(const wsb_comparison* cmp, int index,
                               wsb_level_pair* out);
/* Node counts present on one side only; returns the total count and fills
 * up to cap entries. */
int wsb_comparison_unmatched_analytic(const wsb_comparison* cmp, int* n_values, int cap);
int wsb_comparison_unmatched_oracle(const wsb_comparison* cmp, int* n_values, int cap);
double wsb_comparison_max_rel_err(const wsb_comparison* cmp);
void wsb_comparison_destroy(wsb_comparison* cmp);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WSBOUND_H */
