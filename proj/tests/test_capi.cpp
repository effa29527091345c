#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "wsbound.h"

namespace {

double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1.0);
}

wsb_spec* demo()
{
    wsb_spec* spec = nullptr;
    REQUIRE(wsb_spec_create(100.0, 1.0, 0.5, 1.0, 10, &spec) == WSB_OK);
    return spec;
}

} // namespace

TEST_CASE("spec lifecycle and argument checking")
{
    wsb_spec* spec = nullptr;
    CHECK(wsb_spec_create(-1.0, 1.0, 0.5, 1.0, 10, &spec) == WSB_ERR_INVALID_ARGUMENT);
    CHECK(spec == nullptr);
    CHECK(std::string(wsb_last_error_message()).find("v0") != std::string::npos);
    CHECK(wsb_spec_create(1.0, 1.0, 0.5, 1.0, 10, nullptr) == WSB_ERR_INVALID_ARGUMENT);

    spec = demo();
    CHECK(wsb_spec_thin_surface(spec) == 1);
    wsb_spec_destroy(spec);
    wsb_spec_destroy(nullptr); // must be a no-op

    CHECK(std::string(wsb_strerror(WSB_OK)) == "ok");
    CHECK(std::string(wsb_strerror(WSB_ERR_GRID_TOO_COARSE)) == "grid too coarse");
    CHECK(std::string(wsb_version()).find('.') != std::string::npos);
}

TEST_CASE("scalar evaluations through the C surface")
{
    wsb_spec* spec = demo();
    double v = 0.0;
    CHECK(wsb_effective_l(0, 10, &v) == WSB_OK);
    CHECK(v == 3.5);
    CHECK(wsb_effective_l(-1, 10, &v) == WSB_ERR_INVALID_ARGUMENT);

    CHECK(wsb_woods_saxon(spec, 1.0, &v) == WSB_OK);
    CHECK(v == doctest::Approx(-50.0).epsilon(1e-14));
    CHECK(wsb_woods_saxon(spec, -1.0, &v) == WSB_ERR_INVALID_ARGUMENT);

    CHECK(wsb_effective_potential_exact(spec, 0, 1.0, &v) == WSB_OK);
    CHECK(v == doctest::Approx(15.75 - 50.0).epsilon(1e-13));
    CHECK(wsb_effective_potential_exact(spec, 0, 0.0, &v) == WSB_ERR_DOMAIN);

    CHECK(wsb_effective_potential_pekeris(spec, 0, 1e4, &v) == WSB_OK);
    CHECK(v == doctest::Approx(31.5).epsilon(1e-12));

    wsb_dimensionless_set d;
    CHECK(wsb_dimensionless(spec, 0, &d) == WSB_OK);
    CHECK(d.l_tilde == 3.5);
    CHECK(d.alpha == 2.0);
    CHECK(d.beta_sq == doctest::Approx(56.5).epsilon(1e-14));
    CHECK(d.gamma_sq == doctest::Approx(47.25).epsilon(1e-14));

    double v0_min = 0.0;
    int never = -1;
    CHECK(wsb_depth_threshold(spec, 0, &v0_min, &never) == WSB_OK);
    CHECK(never == 0);
    CHECK(v0_min == doctest::Approx(63.0).epsilon(1e-14));
    wsb_spec_destroy(spec);
}

TEST_CASE("level enumeration and single-cell computation")
{
    wsb_spec* spec = demo();
    wsb_levels* levels = nullptr;
    REQUIRE(wsb_levels_enumerate(spec, 0, 0, &levels) == WSB_OK);
    REQUIRE(wsb_levels_count(levels) == 4);
    wsb_level lvl;
    REQUIRE(wsb_levels_get(levels, 0, &lvl) == WSB_OK);
    CHECK(lvl.valid == 1);
    CHECK(lvl.n == 0);
    CHECK(lvl.l_tilde == 3.5);
    CHECK(rel_err(lvl.energy, -29.952120003194153) < 1e-13);
    CHECK(wsb_levels_get(levels, 99, &lvl) == WSB_ERR_INVALID_ARGUMENT);
    wsb_levels_destroy(levels);

    REQUIRE(wsb_levels_enumerate(spec, 0, 1, &levels) == WSB_OK);
    CHECK(wsb_levels_count(levels) == 8);
    REQUIRE(wsb_levels_get(levels, 6, &lvl) == WSB_OK);
    CHECK(lvl.valid == 0);
    CHECK(lvl.failure == WSB_FAILURE_WINDOW_VIOLATED);
    CHECK(std::isnan(lvl.energy));
    CHECK(std::string(wsb_failure_name(lvl.failure)) == "window_violated");
    wsb_levels_destroy(levels);

    wsb_level single;
    REQUIRE(wsb_level_compute(spec, 1, 0, &single) == WSB_OK);
    CHECK(rel_err(single.energy, -19.016855784670054) < 1e-13);
    wsb_spec_destroy(spec);
}

TEST_CASE("channel enumeration keeps only the requested l")
{
    wsb_spec* spec = nullptr;
    REQUIRE(wsb_spec_create(32.0, 4.0, 1.0, 1.0, 3, &spec) == WSB_OK);
    wsb_levels* channel = nullptr;
    REQUIRE(wsb_levels_enumerate_channel(spec, 15, 0, &channel) == WSB_OK);
    REQUIRE(wsb_levels_count(channel) == 5);
    for (int i = 0; i < 5; i++) {
        wsb_level lvl;
        REQUIRE(wsb_levels_get(channel, i, &lvl) == WSB_OK);
        CHECK(lvl.l == 15);
        CHECK(lvl.n == i);
    }
    wsb_levels_destroy(channel);
    wsb_spec_destroy(spec);
}

TEST_CASE("radial table computation and stats")
{
    wsb_spec* spec = demo();
    wsb_table* table = nullptr;
    REQUIRE(wsb_table_compute(spec, 0, 0, 0.0, 0.0, &table) == WSB_OK);
    int size = wsb_table_size(table);
    CHECK(size > 1000);
    double r0v = -1.0, u0 = 0.0, radial0 = 0.0;
    REQUIRE(wsb_table_get(table, 0, &r0v, &u0, &radial0) == WSB_OK);
    CHECK(r0v == 0.0);
    wsb_table_stats stats;
    REQUIRE(wsb_table_stats_get(table, &stats) == WSB_OK);
    CHECK(stats.nodes == 0);
    CHECK(stats.norm_constant == doctest::Approx(83.430032628116980).epsilon(1e-5));
    CHECK(stats.u0_ratio == doctest::Approx(0.22518209).epsilon(5e-3));
    CHECK(stats.r0_extrapolated == 1);
    wsb_table_destroy(table);

    // invalid level is reported as such, with the reason in the message
    CHECK(wsb_table_compute(spec, 9, 0, 0.0, 0.0, &table) == WSB_ERR_NO_SUCH_LEVEL);
    CHECK(table == nullptr);
    wsb_spec_destroy(spec);
}

TEST_CASE("pekeris error profile batch fill")
{
    wsb_spec* spec = demo();
    const double r[3] = {0.5, 1.0, 2.0};
    double exact[3], approx[3], abs_diff[3], rel_diff[3];
    REQUIRE(wsb_pekeris_error_profile(spec, 0, r, 3, exact, approx, abs_diff,
                                      rel_diff) == WSB_OK);
    CHECK(exact[1] == doctest::Approx(15.75).epsilon(1e-14));
    CHECK(abs_diff[1] / 15.75 < 1e-12);
    CHECK(exact[2] == doctest::Approx(3.9375).epsilon(1e-14));
    CHECK(approx[2] == doctest::Approx(19.165996446130674).epsilon(1e-12));

    const double bad[1] = {0.0};
    double out[1];
    CHECK(wsb_pekeris_error_profile(spec, 0, bad, 1, out, nullptr, nullptr, nullptr) ==
          WSB_ERR_INVALID_ARGUMENT);
    wsb_spec_destroy(spec);
}

TEST_CASE("shooting solver and comparison through the C surface")
{
    wsb_spec* spec = demo();
    wsb_shooting_config cfg;
    REQUIRE(wsb_oracle_default_config(spec, WSB_POTENTIAL_PEKERIS, 0, &cfg) == WSB_OK);
    CHECK(cfg.r_min < 0.0); // full-line domain for the smoothed potential
    CHECK(cfg.h == doctest::Approx(0.0025).epsilon(1e-14));

    wsb_oracle_levels* oracle = nullptr;
    REQUIRE(wsb_oracle_solve(spec, WSB_POTENTIAL_PEKERIS, 0, 5, nullptr, &oracle) ==
            WSB_OK);
    REQUIRE(wsb_oracle_count(oracle) == 4);
    wsb_oracle_level first;
    REQUIRE(wsb_oracle_get(oracle, 0, &first) == WSB_OK);
    CHECK(first.converged == 1);
    CHECK(rel_err(first.energy, -29.952120003194153) < 1e-7);

    wsb_levels* analytic = nullptr;
    REQUIRE(wsb_levels_enumerate_channel(spec, 0, 0, &analytic) == WSB_OK);
    wsb_comparison* cmp = nullptr;
    REQUIRE(wsb_compare_levels(analytic, oracle, &cmp) == WSB_OK);
    CHECK(wsb_comparison_pair_count(cmp) == 4);
    CHECK(wsb_comparison_max_rel_err(cmp) < 1e-5);
    wsb_level_pair pair;
    REQUIRE(wsb_comparison_pair(cmp, 3, &pair) == WSB_OK);
    CHECK(pair.n == 3);
    CHECK(wsb_comparison_unmatched_analytic(cmp, nullptr, 0) == 0);
    CHECK(wsb_comparison_unmatched_oracle(cmp, nullptr, 0) == 0);

    wsb_comparison_destroy(cmp);
    wsb_levels_destroy(analytic);
    wsb_oracle_destroy(oracle);
    wsb_spec_destroy(spec);
}

namespace {
double square_well_callback(double r, void* user)
{
    (void)user;
    return r * r;
}
} // namespace

TEST_CASE("caller-supplied potential callback")
{
    wsb_shooting_config cfg;
    cfg.h = 0.01;
    cfg.r_min = 0.0;
    cfg.r_max = 12.0;
    cfg.e_lo = 0.5;
    cfg.e_hi = 16.0;
    cfg.tol_e = 1e-12;
    cfg.max_iter = 400;
    wsb_oracle_level level;
    REQUIRE(wsb_numerov_find_level(square_well_callback, nullptr, 1.0, 1.0, 1, &cfg,
                                   &level) == WSB_OK);
    CHECK(rel_err(level.energy, 7.0) < 1e-6);

    // an empty bracket is a distinct, recoverable condition
    cfg.e_hi = 2.0;
    CHECK(wsb_numerov_find_level(square_well_callback, nullptr, 1.0, 1.0, 1, &cfg,
                                 &level) == WSB_ERR_NO_SUCH_LEVEL);
    CHECK(wsb_numerov_find_level(nullptr, nullptr, 1.0, 1.0, 1, &cfg, &level) ==
          WSB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("repeated evaluation is bitwise deterministic")
{
    for (int round = 0; round < 2; round++) {
        wsb_spec* spec = demo();
        wsb_oracle_levels* oracle = nullptr;
        REQUIRE(wsb_oracle_solve(spec, WSB_POTENTIAL_PEKERIS, 0, 3, nullptr, &oracle) ==
                WSB_OK);
        static double stash[4];
        for (int i = 0; i < wsb_oracle_count(oracle); i++) {
            wsb_oracle_level lvl;
            wsb_oracle_get(oracle, i, &lvl);
            if (round == 0) {
                stash[i] = lvl.energy;
            } else {
                CHECK(std::memcmp(&stash[i], &lvl.energy, sizeof(double)) == 0);
            }
        }
        wsb_oracle_destroy(oracle);
        wsb_spec_destroy(spec);
    }
}
