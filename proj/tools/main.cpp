// wsbound command-line front end.
//
// Talks to libwsbound exclusively through the public C API. Subcommands:
//   levels        closed-form bound-state table for l = 0..l_max
//   wavefunction  normalized radial eigenfunction of one level
//   validate      closed forms vs the independent shooting solver
//   scan          one-parameter sweep of the spectrum
//   pekeris-error exact vs smoothed centrifugal term on a radial grid
//
// Output is CSV (default) or JSON, deterministic byte-for-byte for a
// given configuration: fixed column order, 17-significant-digit floats,
// LF line endings, '#'-prefixed metadata lines.

#include <clocale>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsbound.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;   // domain-level emptiness / validation failure
constexpr int kExitUsage = 2;   // bad flags or invalid input

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cell(double v)
{
    return std::isnan(v) ? std::string() : fmt(v);
}

json jnum(double v)
{
    return std::isnan(v) ? json() : json(v);
}

int exit_code_for(wsb_status status)
{
    if (status == WSB_OK) {
        return kExitOk;
    }
    return status == WSB_ERR_INVALID_ARGUMENT ? kExitUsage : kExitEmpty;
}

int report_error(const char* where, wsb_status status)
{
    std::cerr << "wsbound: " << where << ": " << wsb_strerror(status);
    const char* detail = wsb_last_error_message();
    if (detail != nullptr && detail[0] != '\0') {
        std::cerr << " (" << detail << ")";
    }
    std::cerr << "\n";
    return exit_code_for(status);
}

// ---------------------------------------------------------------------------
// configuration file: flat JSON object whose keys match the long flag names
// with dashes replaced by underscores; command-line flags override it.

const std::set<std::string>& known_config_keys()
{
    static const std::set<std::string> keys = {
        "V0", "R0", "a", "hbar2_over_2mu", "D", "format", "out", "verbose",
        "l_max", "n", "l", "n_max", "points_per_a", "r_max", "r_min", "points",
        "tol", "selftest", "param", "from", "to", "steps", "grid_h",
    };
    return keys;
}

json load_config_file(int argc, char** argv)
{
    std::string path;
    for (int i = 1; i < argc; i++) {
        std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
        }
    }
    if (path.empty()) {
        return json::object();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "wsbound: cannot open config file: " << path << "\n";
        std::exit(kExitUsage);
    }
    json cfg;
    try {
        in >> cfg;
    } catch (const std::exception& e) {
        std::cerr << "wsbound: bad config file " << path << ": " << e.what() << "\n";
        std::exit(kExitUsage);
    }
    if (!cfg.is_object()) {
        std::cerr << "wsbound: config file must hold a flat JSON object\n";
        std::exit(kExitUsage);
    }
    for (const auto& item : cfg.items()) {
        if (known_config_keys().count(item.key()) == 0) {
            std::cerr << "wsbound: unknown config key: " << item.key() << "\n";
            std::exit(kExitUsage);
        }
    }
    return cfg;
}

template <typename T>
void seed_from_config(const json& cfg, const char* key, T& var, bool& required)
{
    if (cfg.contains(key)) {
        var = cfg.at(key).get<T>();
        required = false;
    }
}

// shared well-parameter flags
struct SpecArgs {
    double v0 = 0.0, r0 = 0.0, a = 0.0, k = 0.0;
    int dim = 3;
};

void add_spec_options(CLI::App* cmd, const json& cfg, SpecArgs& spec)
{
    bool need_v0 = true, need_r0 = true, need_a = true, need_k = true, need_d = true;
    seed_from_config(cfg, "V0", spec.v0, need_v0);
    seed_from_config(cfg, "R0", spec.r0, need_r0);
    seed_from_config(cfg, "a", spec.a, need_a);
    seed_from_config(cfg, "hbar2_over_2mu", spec.k, need_k);
    seed_from_config(cfg, "D", spec.dim, need_d);
    auto* o1 = cmd->add_option("--V0", spec.v0, "well depth (energy unit)");
    auto* o2 = cmd->add_option("--R0", spec.r0, "well radius (length unit)");
    auto* o3 = cmd->add_option("--a", spec.a, "surface diffuseness (length unit)");
    auto* o4 = cmd->add_option("--hbar2-over-2mu", spec.k,
                               "hbar^2/(2 mu), energy*length^2");
    auto* o5 = cmd->add_option("--D", spec.dim, "spatial dimension (>= 2)");
    if (need_v0) o1->required();
    if (need_r0) o2->required();
    if (need_a) o3->required();
    if (need_k) o4->required();
    if (need_d) o5->required();
}

struct OutputArgs {
    std::string format = "csv";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, const json& cfg, OutputArgs& out)
{
    bool ignored = false;
    seed_from_config(cfg, "format", out.format, ignored);
    seed_from_config(cfg, "out", out.out_path, ignored);
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.out_path, "write output to this path (default stdout)");
}

class Output {
  public:
    explicit Output(const OutputArgs& args)
    {
        if (!args.out_path.empty()) {
            file_.open(args.out_path, std::ios::binary);
            if (!file_) {
                std::cerr << "wsbound: cannot open output path: " << args.out_path << "\n";
                std::exit(kExitUsage);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

wsb_spec* create_spec(const SpecArgs& args)
{
    wsb_spec* spec = nullptr;
    wsb_status status =
        wsb_spec_create(args.v0, args.r0, args.a, args.k, args.dim, &spec);
    if (status != WSB_OK) {
        std::exit(report_error("spec", status));
    }
    if (wsb_spec_thin_surface(spec) == 0) {
        std::cerr << "wsbound: note: a >= R0 lies outside the thin-surface regime the "
                     "closed forms assume\n";
    }
    return spec;
}

void write_spec_meta(std::ostream& os, const SpecArgs& a)
{
    os << "# units: energies in the unit of V0, lengths in the unit of R0 and a;"
          " hbar2_over_2mu must be supplied consistently\n";
    os << "# V0=" << fmt(a.v0) << " R0=" << fmt(a.r0) << " a=" << fmt(a.a)
       << " hbar2_over_2mu=" << fmt(a.k) << " D=" << a.dim << "\n";
}

json spec_json(const SpecArgs& a)
{
    return json{{"V0", a.v0}, {"R0", a.r0}, {"a", a.a},
                {"hbar2_over_2mu", a.k}, {"D", a.dim}};
}

json level_json(const wsb_level& lvl)
{
    return json{{"D", lvl.dim},
                {"l", lvl.l},
                {"l_tilde", lvl.l_tilde},
                {"n", lvl.n},
                {"n_prime", jnum(lvl.n_prime)},
                {"epsilon", jnum(lvl.epsilon)},
                {"E", jnum(lvl.energy)},
                {"status", wsb_failure_name(lvl.failure)}};
}

void print_threshold_diagnostics(wsb_spec* spec, const SpecArgs& args, int l_max)
{
    for (int l = 0; l <= l_max; l++) {
        double v0_min = 0.0;
        int never = 0;
        if (wsb_depth_threshold(spec, l, &v0_min, &never) != WSB_OK) {
            continue;
        }
        if (never != 0) {
            std::cerr << "wsbound: l=" << l;
            if (l == 0) {
                std::cerr << " (s-wave" << (args.dim == 3 ? ", D=3" : "") << ")";
            }
            std::cerr << ": no bound state at any depth in this model\n";
        } else {
            std::cerr << "wsbound: l=" << l << ": binding requires V0 > " << fmt(v0_min)
                      << " (supplied " << fmt(args.v0) << "), and then only inside the"
                      << " quantization window\n";
        }
    }
}

// ---------------------------------------------------------------------------
// levels

int cmd_levels(const SpecArgs& args, const OutputArgs& out_args, int l_max, bool verbose)
{
    wsb_spec* spec = create_spec(args);
    wsb_levels* levels = nullptr;
    wsb_status status = wsb_levels_enumerate(spec, l_max, verbose ? 1 : 0, &levels);
    if (status != WSB_OK) {
        wsb_spec_destroy(spec);
        return report_error("levels", status);
    }

    int total = wsb_levels_count(levels);
    int valid = 0;
    std::vector<wsb_level> rows(static_cast<std::size_t>(total));
    for (int i = 0; i < total; i++) {
        wsb_levels_get(levels, i, &rows[static_cast<std::size_t>(i)]);
        valid += rows[static_cast<std::size_t>(i)].valid;
    }

    Output output(out_args);
    std::ostream& os = output.stream();
    if (out_args.format == "csv") {
        os << "# wsbound levels\n";
        write_spec_meta(os, args);
        os << "# l_max=" << l_max << "\n";
        os << "D,l,l_tilde,n,n_prime,epsilon,E" << (verbose ? ",status" : "") << "\n";
        for (const wsb_level& lvl : rows) {
            os << lvl.dim << ',' << lvl.l << ',' << fmt(lvl.l_tilde) << ',' << lvl.n
               << ',' << cell(lvl.n_prime) << ',' << cell(lvl.epsilon) << ','
               << cell(lvl.energy);
            if (verbose) {
                os << ',' << wsb_failure_name(lvl.failure);
            }
            os << "\n";
        }
    } else {
        json doc;
        doc["command"] = "levels";
        doc["spec"] = spec_json(args);
        doc["l_max"] = l_max;
        doc["levels"] = json::array();
        for (const wsb_level& lvl : rows) {
            doc["levels"].push_back(level_json(lvl));
        }
        os << doc.dump(2) << "\n";
    }

    int code = kExitOk;
    if (valid == 0) {
        std::cerr << "wsbound: no valid levels for this spec\n";
        print_threshold_diagnostics(spec, args, l_max);
        code = kExitEmpty;
    }
    wsb_levels_destroy(levels);
    wsb_spec_destroy(spec);
    return code;
}

// ---------------------------------------------------------------------------
// wavefunction

int cmd_wavefunction(const SpecArgs& args, const OutputArgs& out_args, int n, int l,
                     double r_max, int points_per_a)
{
    if (points_per_a < 1) {
        std::cerr << "wsbound: points-per-a must be >= 1\n";
        return kExitUsage;
    }
    wsb_spec* spec = create_spec(args);
    double step = args.a / points_per_a;
    wsb_table* table = nullptr;
    wsb_status status = wsb_table_compute(spec, n, l, r_max, step, &table);
    if (status != WSB_OK) {
        wsb_spec_destroy(spec);
        return report_error("wavefunction", status);
    }
    wsb_table_stats stats;
    wsb_table_stats_get(table, &stats);
    int size = wsb_table_size(table);

    Output output(out_args);
    std::ostream& os = output.stream();
    if (out_args.format == "csv") {
        os << "# wsbound wavefunction\n";
        write_spec_meta(os, args);
        os << "# n=" << n << " l=" << l << "\n";
        os << "# C_nl=" << fmt(stats.norm_constant) << "\n";
        os << "# nodes=" << stats.nodes << "\n";
        os << "# r_max=" << fmt(stats.r_max) << "\n";
        os << "# u0_ratio=" << fmt(stats.u0_ratio) << "\n";
        os << "# R0_extrapolated=" << (stats.r0_extrapolated ? "true" : "false") << "\n";
        os << "r,u,R\n";
        for (int i = 0; i < size; i++) {
            double r, u, radial;
            wsb_table_get(table, i, &r, &u, &radial);
            os << fmt(r) << ',' << fmt(u) << ',' << fmt(radial) << "\n";
        }
    } else {
        json doc;
        doc["command"] = "wavefunction";
        doc["spec"] = spec_json(args);
        doc["n"] = n;
        doc["l"] = l;
        doc["meta"] = json{{"C_nl", stats.norm_constant},
                           {"nodes", stats.nodes},
                           {"r_max", stats.r_max},
                           {"u0_ratio", stats.u0_ratio},
                           {"R0_extrapolated", stats.r0_extrapolated != 0}};
        json r = json::array(), u = json::array(), radial = json::array();
        for (int i = 0; i < size; i++) {
            double rv, uv, bv;
            wsb_table_get(table, i, &rv, &uv, &bv);
            r.push_back(rv);
            u.push_back(uv);
            radial.push_back(bv);
        }
        doc["r"] = std::move(r);
        doc["u"] = std::move(u);
        doc["R"] = std::move(radial);
        os << doc.dump(2) << "\n";
    }
    wsb_table_destroy(table);
    wsb_spec_destroy(spec);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct OscillatorChannel {
    double cl; // l~(l~+1)
};

double oscillator_potential(double r, void* user)
{
    const auto* ch = static_cast<const OscillatorChannel*>(user);
    double centrifugal = ch->cl != 0.0 ? ch->cl / (r * r) : 0.0;
    return r * r + centrifugal;
}

int run_oscillator_selftest(std::ostream& os)
{
    // isotropic oscillator with hbar^2/2mu = 1: exact levels 4n + 2 l~ + 3
    bool all_ok = true;
    os << "# wsbound validate --selftest (isotropic oscillator, exact E = 4n+2l+3)\n";
    os << "l_tilde,n,h,E,E_exact,abs_err,status\n";
    for (double lt : {0.0, 1.0}) {
        OscillatorChannel ch{lt * (lt + 1.0)};
        for (int n = 0; n < 3; n++) {
            double exact = 4.0 * n + 2.0 * lt + 3.0;
            double prev_err = 0.0;
            for (double h : {0.08, 0.04, 0.02}) {
                wsb_shooting_config cfg;
                cfg.h = h;
                cfg.r_min = lt > 0.0 ? h : 0.0;
                cfg.r_max = 12.0;
                cfg.e_lo = 0.5;
                cfg.e_hi = 16.0;
                cfg.tol_e = 1e-12;
                cfg.max_iter = 400;
                wsb_oracle_level level;
                wsb_status status = wsb_numerov_find_level(
                    oscillator_potential, &ch, 1.0, lt + 1.0, n, &cfg, &level);
                if (status != WSB_OK) {
                    os << fmt(lt) << ',' << n << ',' << fmt(h) << ",,,"
                       << ",error\n";
                    all_ok = false;
                    continue;
                }
                double err = std::abs(level.energy - exact);
                // the accuracy gate applies at the finest step; each
                // halving of h must shrink the error at least 12x (the
                // integrator's fourth-order signature, with slack)
                bool ok = true;
                if (h == 0.02 && err >= 1e-6 * exact) {
                    ok = false;
                }
                if (prev_err > 0.0 && err > prev_err / 12.0) {
                    ok = false;
                }
                prev_err = err;
                all_ok = all_ok && ok;
                os << fmt(lt) << ',' << n << ',' << fmt(h) << ',' << fmt(level.energy)
                   << ',' << fmt(exact) << ',' << fmt(err) << ','
                   << (ok ? "pass" : "fail") << "\n";
            }
        }
    }
    os << "# selftest " << (all_ok ? "passed" : "FAILED") << "\n";
    return all_ok ? kExitOk : kExitEmpty;
}

int cmd_validate(const SpecArgs& args, const OutputArgs& out_args, int l, int n_max,
                 double tol, double grid_h, bool selftest)
{
    Output output(out_args);
    std::ostream& os = output.stream();
    if (selftest) {
        return run_oscillator_selftest(os);
    }

    wsb_spec* spec = create_spec(args);
    wsb_levels* analytic = nullptr;
    wsb_status status = wsb_levels_enumerate_channel(spec, l, 0, &analytic);
    if (status != WSB_OK) {
        wsb_spec_destroy(spec);
        return report_error("validate", status);
    }
    int n_analytic = wsb_levels_count(analytic);
    if (n_analytic == 0) {
        std::cerr << "wsbound: channel l=" << l
                  << " holds no closed-form levels; nothing to validate\n";
        print_threshold_diagnostics(spec, args, l);
        wsb_levels_destroy(analytic);
        wsb_spec_destroy(spec);
        return kExitEmpty;
    }
    if (n_max < 0) {
        wsb_level last;
        wsb_levels_get(analytic, n_analytic - 1, &last);
        n_max = last.n;
    }

    auto solve = [&](int kind, wsb_oracle_levels** out) {
        wsb_shooting_config cfg;
        wsb_status st = wsb_oracle_default_config(spec, kind, l, &cfg);
        if (st != WSB_OK) {
            return st;
        }
        if (grid_h > 0.0) {
            cfg.h = grid_h;
        }
        return wsb_oracle_solve(spec, kind, l, n_max, &cfg, out);
    };

    wsb_oracle_levels* pekeris = nullptr;
    status = solve(WSB_POTENTIAL_PEKERIS, &pekeris);
    if (status != WSB_OK) {
        wsb_levels_destroy(analytic);
        wsb_spec_destroy(spec);
        return report_error("validate (smoothed-barrier shooting)", status);
    }
    wsb_oracle_levels* exact = nullptr;
    status = solve(WSB_POTENTIAL_EXACT_EFFECTIVE, &exact);
    if (status != WSB_OK) {
        wsb_oracle_destroy(pekeris);
        wsb_levels_destroy(analytic);
        wsb_spec_destroy(spec);
        return report_error("validate (exact-potential shooting)", status);
    }

    wsb_comparison* cmp = nullptr;
    status = wsb_compare_levels(analytic, pekeris, &cmp);
    if (status != WSB_OK) {
        wsb_oracle_destroy(exact);
        wsb_oracle_destroy(pekeris);
        wsb_levels_destroy(analytic);
        wsb_spec_destroy(spec);
        return report_error("validate (comparison)", status);
    }
    double max_rel = wsb_comparison_max_rel_err(cmp);

    // assemble the three-way table keyed by n
    std::map<int, std::array<double, 3>> table;
    auto nan = std::nan("");
    for (int i = 0; i < wsb_levels_count(analytic); i++) {
        wsb_level lvl;
        wsb_levels_get(analytic, i, &lvl);
        table.emplace(lvl.n, std::array<double, 3>{nan, nan, nan});
        table[lvl.n][0] = lvl.energy;
    }
    for (int i = 0; i < wsb_oracle_count(pekeris); i++) {
        wsb_oracle_level lvl;
        wsb_oracle_get(pekeris, i, &lvl);
        table.emplace(lvl.nodes, std::array<double, 3>{nan, nan, nan});
        table[lvl.nodes][1] = lvl.energy;
    }
    for (int i = 0; i < wsb_oracle_count(exact); i++) {
        wsb_oracle_level lvl;
        wsb_oracle_get(exact, i, &lvl);
        table.emplace(lvl.nodes, std::array<double, 3>{nan, nan, nan});
        table[lvl.nodes][2] = lvl.energy;
    }

    bool pass = max_rel <= tol;
    if (out_args.format == "csv") {
        os << "# wsbound validate\n";
        write_spec_meta(os, args);
        os << "# l=" << l << " n_max=" << n_max << " tol=" << fmt(tol) << "\n";
        os << "# max_rel_err=" << fmt(max_rel)
           << " (closed form vs smoothed-barrier shooting)\n";
        os << "# verdict=" << (pass ? "pass" : "fail") << "\n";
        os << "n,E_analytic,E_numerov_pekeris,E_numerov_exact,pekeris_rel_err,"
              "exact_minus_analytic\n";
        for (const auto& [n, e] : table) {
            double rel = std::isnan(e[0]) || std::isnan(e[1])
                             ? nan
                             : std::abs(e[1] - e[0]) / std::max(std::abs(e[0]), 1.0);
            double shift = std::isnan(e[0]) || std::isnan(e[2]) ? nan : e[2] - e[0];
            os << n << ',' << cell(e[0]) << ',' << cell(e[1]) << ',' << cell(e[2])
               << ',' << cell(rel) << ',' << cell(shift) << "\n";
        }
    } else {
        json doc;
        doc["command"] = "validate";
        doc["spec"] = spec_json(args);
        doc["l"] = l;
        doc["n_max"] = n_max;
        doc["tol"] = tol;
        doc["max_rel_err"] = max_rel;
        doc["verdict"] = pass ? "pass" : "fail";
        doc["rows"] = json::array();
        for (const auto& [n, e] : table) {
            double rel = std::isnan(e[0]) || std::isnan(e[1])
                             ? nan
                             : std::abs(e[1] - e[0]) / std::max(std::abs(e[0]), 1.0);
            double shift = std::isnan(e[0]) || std::isnan(e[2]) ? nan : e[2] - e[0];
            doc["rows"].push_back(json{{"n", n},
                                       {"E_analytic", jnum(e[0])},
                                       {"E_numerov_pekeris", jnum(e[1])},
                                       {"E_numerov_exact", jnum(e[2])},
                                       {"pekeris_rel_err", jnum(rel)},
                                       {"exact_minus_analytic", jnum(shift)}});
        }
        os << doc.dump(2) << "\n";
    }
    if (!pass) {
        std::cerr << "wsbound: validation failed: max_rel_err=" << fmt(max_rel)
                  << " exceeds tol=" << fmt(tol) << "\n";
    }

    wsb_comparison_destroy(cmp);
    wsb_oracle_destroy(exact);
    wsb_oracle_destroy(pekeris);
    wsb_levels_destroy(analytic);
    wsb_spec_destroy(spec);
    return pass ? kExitOk : kExitEmpty;
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(const SpecArgs& args, const OutputArgs& out_args, const std::string& param,
             double from, double to, int steps, int l_max)
{
    if (steps < 1) {
        std::cerr << "wsbound: steps must be >= 1\n";
        return kExitUsage;
    }
    Output output(out_args);
    std::ostream& os = output.stream();

    json jrows = json::array();
    std::ostringstream csv;
    int total_levels = 0;
    for (int i = 0; i < steps; i++) {
        double value = steps == 1 ? from : from + (to - from) * i / (steps - 1);
        SpecArgs point = args;
        if (param == "V0") {
            point.v0 = value;
        } else if (param == "R0") {
            point.r0 = value;
        } else if (param == "a") {
            point.a = value;
        } else {
            value = std::round(value);
            point.dim = static_cast<int>(value);
        }
        wsb_spec* spec = nullptr;
        wsb_status status =
            wsb_spec_create(point.v0, point.r0, point.a, point.k, point.dim, &spec);
        if (status != WSB_OK) {
            return report_error("scan point", status);
        }
        wsb_levels* levels = nullptr;
        status = wsb_levels_enumerate(spec, l_max, 0, &levels);
        if (status != WSB_OK) {
            wsb_spec_destroy(spec);
            return report_error("scan point", status);
        }
        int count = wsb_levels_count(levels);
        if (count == 0) {
            csv << param << ',' << fmt(value) << ",,,,,,,empty\n";
            jrows.push_back(json{{"param", param}, {"value", value},
                                 {"status", "empty"}});
        }
        for (int j = 0; j < count; j++) {
            wsb_level lvl;
            wsb_levels_get(levels, j, &lvl);
            csv << param << ',' << fmt(value) << ',' << lvl.dim << ',' << lvl.l << ','
                << fmt(lvl.l_tilde) << ',' << lvl.n << ',' << cell(lvl.n_prime) << ','
                << cell(lvl.energy) << ",ok\n";
            json row = level_json(lvl);
            row["param"] = param;
            row["value"] = value;
            jrows.push_back(std::move(row));
            total_levels++;
        }
        wsb_levels_destroy(levels);
        wsb_spec_destroy(spec);
    }

    if (out_args.format == "csv") {
        os << "# wsbound scan\n";
        write_spec_meta(os, args);
        os << "# param=" << param << " from=" << fmt(from) << " to=" << fmt(to)
           << " steps=" << steps << " l_max=" << l_max << "\n";
        os << "param,value,D,l,l_tilde,n,n_prime,E,status\n";
        os << csv.str();
    } else {
        json doc;
        doc["command"] = "scan";
        doc["spec"] = spec_json(args);
        doc["param"] = param;
        doc["from"] = from;
        doc["to"] = to;
        doc["steps"] = steps;
        doc["l_max"] = l_max;
        doc["rows"] = std::move(jrows);
        os << doc.dump(2) << "\n";
    }
    if (total_levels == 0) {
        std::cerr << "wsbound: scan produced no valid levels\n";
        return kExitEmpty;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// pekeris-error

int cmd_pekeris_error(const SpecArgs& args, const OutputArgs& out_args, int l,
                      double r_min, double r_max, int points)
{
    if (points < 2) {
        std::cerr << "wsbound: points must be >= 2\n";
        return kExitUsage;
    }
    wsb_spec* spec = create_spec(args);
    if (r_max <= 0.0) {
        r_max = args.r0 + 10.0 * args.a;
    }
    if (r_min <= 0.0) {
        r_min = args.a / 10.0;
    }
    std::vector<double> r(static_cast<std::size_t>(points));
    for (int i = 0; i < points; i++) {
        r[static_cast<std::size_t>(i)] = r_min + (r_max - r_min) * i / (points - 1);
    }
    std::vector<double> exact(r.size()), approx(r.size()), abs_diff(r.size()),
        rel_diff(r.size());
    wsb_status status =
        wsb_pekeris_error_profile(spec, l, r.data(), points, exact.data(), approx.data(),
                                  abs_diff.data(), rel_diff.data());
    if (status != WSB_OK) {
        wsb_spec_destroy(spec);
        return report_error("pekeris-error", status);
    }

    Output output(out_args);
    std::ostream& os = output.stream();
    if (out_args.format == "csv") {
        os << "# wsbound pekeris-error\n";
        write_spec_meta(os, args);
        os << "# l=" << l << " (centrifugal term vs its smooth replacement)\n";
        os << "r,exact,approx,abs_diff,rel_diff\n";
        for (std::size_t i = 0; i < r.size(); i++) {
            os << fmt(r[i]) << ',' << fmt(exact[i]) << ',' << fmt(approx[i]) << ','
               << fmt(abs_diff[i]) << ',' << fmt(rel_diff[i]) << "\n";
        }
    } else {
        json doc;
        doc["command"] = "pekeris-error";
        doc["spec"] = spec_json(args);
        doc["l"] = l;
        doc["r"] = r;
        doc["exact"] = exact;
        doc["approx"] = approx;
        doc["abs_diff"] = abs_diff;
        doc["rel_diff"] = rel_diff;
        os << doc.dump(2) << "\n";
    }
    wsb_spec_destroy(spec);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    std::setlocale(LC_ALL, "C");
    json cfg = load_config_file(argc, argv);

    CLI::App app{"bound states of the D-dimensional smooth-edged spherical well"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON file supplying defaults for any long flag "
                   "(dashes become underscores); flags override it");

    SpecArgs spec;
    OutputArgs out;
    bool verbose = false;
    int l_max = 0, n = 0, l = 0, n_max = -1;
    int points_per_a = 400, points = 201, steps = 1;
    double r_max = 0.0, r_min = 0.0, tol = 1e-5, grid_h = 0.0;
    double from = 0.0, to = 0.0;
    std::string param;
    bool selftest = false;

    bool ignored = false;
    seed_from_config(cfg, "verbose", verbose, ignored);
    seed_from_config(cfg, "l_max", l_max, ignored);
    seed_from_config(cfg, "n", n, ignored);
    seed_from_config(cfg, "l", l, ignored);
    seed_from_config(cfg, "n_max", n_max, ignored);
    seed_from_config(cfg, "points_per_a", points_per_a, ignored);
    seed_from_config(cfg, "points", points, ignored);
    seed_from_config(cfg, "r_max", r_max, ignored);
    seed_from_config(cfg, "r_min", r_min, ignored);
    seed_from_config(cfg, "tol", tol, ignored);
    seed_from_config(cfg, "grid_h", grid_h, ignored);
    seed_from_config(cfg, "selftest", selftest, ignored);

    auto* levels_cmd = app.add_subcommand("levels", "closed-form bound-state table");
    levels_cmd->fallthrough();
    add_spec_options(levels_cmd, cfg, spec);
    add_output_options(levels_cmd, cfg, out);
    levels_cmd->add_option("--l-max", l_max, "largest orbital quantum number");
    levels_cmd->add_flag("--verbose", verbose,
                         "also list failed (n,l) cells with the failure reason");

    auto* wf_cmd = app.add_subcommand("wavefunction",
                                      "normalized radial eigenfunction of one level");
    wf_cmd->fallthrough();
    add_spec_options(wf_cmd, cfg, spec);
    add_output_options(wf_cmd, cfg, out);
    bool need_n = true, need_l = false;
    seed_from_config(cfg, "n", n, need_n);
    auto* n_opt = wf_cmd->add_option("--n", n, "radial quantum number");
    if (need_n) n_opt->required();
    wf_cmd->add_option("--l", l, "orbital quantum number");
    wf_cmd->add_option("--r-max", r_max, "table extent (0 = automatic)");
    wf_cmd->add_option("--points-per-a", points_per_a, "grid density per unit a");
    (void)need_l;

    auto* validate_cmd = app.add_subcommand(
        "validate", "closed forms vs the independent shooting solver");
    validate_cmd->fallthrough();
    add_spec_options(validate_cmd, cfg, spec);
    add_output_options(validate_cmd, cfg, out);
    validate_cmd->add_option("--l", l, "channel to validate");
    validate_cmd->add_option("--n-max", n_max,
                             "highest node count to solve for (-1 = all analytic)");
    validate_cmd->add_option("--tol", tol, "maximum allowed relative error");
    validate_cmd->add_option("--grid-h", grid_h, "override the shooting grid step");
    validate_cmd->add_flag("--selftest", selftest,
                           "run the isotropic-oscillator integrator check instead");

    auto* scan_cmd = app.add_subcommand("scan", "one-parameter sweep of the spectrum");
    scan_cmd->fallthrough();
    add_spec_options(scan_cmd, cfg, spec);
    add_output_options(scan_cmd, cfg, out);
    bool need_param = true, need_from = true, need_to = true;
    seed_from_config(cfg, "param", param, need_param);
    seed_from_config(cfg, "from", from, need_from);
    seed_from_config(cfg, "to", to, need_to);
    seed_from_config(cfg, "steps", steps, ignored);
    auto* param_opt = scan_cmd->add_option("--param", param, "V0 | R0 | a | D")
                          ->check(CLI::IsMember({"V0", "R0", "a", "D"}));
    auto* from_opt = scan_cmd->add_option("--from", from, "first parameter value");
    auto* to_opt = scan_cmd->add_option("--to", to, "last parameter value");
    if (need_param) param_opt->required();
    if (need_from) from_opt->required();
    if (need_to) to_opt->required();
    scan_cmd->add_option("--steps", steps, "number of sweep points");
    scan_cmd->add_option("--l-max", l_max, "largest orbital quantum number");

    auto* pe_cmd = app.add_subcommand(
        "pekeris-error", "exact vs smoothed centrifugal term on a radial grid");
    pe_cmd->fallthrough();
    add_spec_options(pe_cmd, cfg, spec);
    add_output_options(pe_cmd, cfg, out);
    pe_cmd->add_option("--l", l, "orbital quantum number");
    pe_cmd->add_option("--r-min", r_min, "first grid point (> 0; 0 = a/10)");
    pe_cmd->add_option("--r-max", r_max, "last grid point (0 = R0 + 10a)");
    pe_cmd->add_option("--points", points, "number of grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (levels_cmd->parsed()) {
            return cmd_levels(spec, out, l_max, verbose);
        }
        if (wf_cmd->parsed()) {
            return cmd_wavefunction(spec, out, n, l, r_max, points_per_a);
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(spec, out, l, n_max, tol, grid_h, selftest);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(spec, out, param, from, to, steps, l_max);
        }
        if (pe_cmd->parsed()) {
            return cmd_pekeris_error(spec, out, l, r_min, r_max, points);
        }
    } catch (const std::exception& e) {
        std::cerr << "wsbound: " << e.what() << "\n";
        return kExitEmpty;
    }
    return kExitUsage;
}
