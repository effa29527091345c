// End-to-end checks of the CLI binary; the path arrives as the first
// non-flag argument (see tests/CMakeLists.txt).
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

std::string g_cli;
int g_run_id = 0;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args)
{
    std::string out_path = "cli_out_" + std::to_string(g_run_id) + ".txt";
    std::string err_path = "cli_err_" + std::to_string(g_run_id) + ".txt";
    g_run_id++;
    std::string cmd = g_cli + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    RunResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

const char* kDemoFlags = "--V0 100 --R0 1 --a 0.5 --hbar2-over-2mu 1 --D 10";

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

TEST_CASE("levels: demo spec prints four rows with the right ground state")
{
    RunResult r = run(std::string("levels ") + kDemoFlags + " --l-max 0");
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5); // header + 4
    CHECK(rows[0][0] == "D");
    CHECK(std::abs(std::strtod(rows[1][6].c_str(), nullptr) - (-29.952120003194153)) <
          1e-10);
}

TEST_CASE("levels: D=3 s-wave exits 1 with a diagnostic")
{
    RunResult r = run("levels --V0 100 --R0 5 --a 0.5 --hbar2-over-2mu 1 --D 3 --l-max 0");
    CHECK(r.code == 1);
    CHECK(r.err.find("s-wave") != std::string::npos);
}

TEST_CASE("levels: verbose adds failure reasons")
{
    RunResult r = run(std::string("levels ") + kDemoFlags + " --l-max 0 --verbose");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("status") != std::string::npos);
    CHECK(r.out.find("window_violated") != std::string::npos);
    CHECK(r.out.find("n_prime_nonpositive") != std::string::npos);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run("levels --V0 100").code == 2);          // missing required flags
    CHECK(run("nonsense-subcommand").code == 2);      // unknown subcommand
    CHECK(run(std::string("levels ") + kDemoFlags + " --format yaml").code == 2);
    CHECK(run("levels --V0 -5 --R0 1 --a 0.5 --hbar2-over-2mu 1 --D 10").code == 2);
}

TEST_CASE("deterministic output: repeated runs are byte-identical")
{
    std::string args = std::string("levels ") + kDemoFlags + " --l-max 2 --verbose";
    RunResult a = run(args);
    RunResult b = run(args);
    REQUIRE(a.code == b.code);
    CHECK(a.out == b.out);

    std::string wf = std::string("wavefunction ") + kDemoFlags + " --n 1 --l 0";
    RunResult c = run(wf);
    RunResult d = run(wf);
    REQUIRE(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("JSON and CSV carry identical values")
{
    RunResult csv = run(std::string("levels ") + kDemoFlags + " --l-max 0");
    RunResult js = run(std::string("levels ") + kDemoFlags + " --l-max 0 --format json");
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    auto rows = csv_rows(csv.out);
    nlohmann::json doc = nlohmann::json::parse(js.out);
    REQUIRE(doc.at("levels").size() == rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); i++) {
        const auto& level = doc.at("levels").at(i - 1);
        double e_csv = std::strtod(rows[i][6].c_str(), nullptr);
        double e_json = level.at("E").get<double>();
        CHECK(std::abs(e_csv - e_json) <= 1e-15 * std::abs(e_json));
        double np_csv = std::strtod(rows[i][4].c_str(), nullptr);
        CHECK(std::abs(np_csv - level.at("n_prime").get<double>()) <=
              1e-15 * np_csv);
    }
}

TEST_CASE("config file supplies defaults, flags override")
{
    std::string cfg_path = "cli_cfg.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"V0": 100, "R0": 1, "a": 0.5, "hbar2_over_2mu": 1, "D": 10,)"
            << R"( "l_max": 0})";
    }
    RunResult from_cfg = run("levels --config " + cfg_path);
    REQUIRE(from_cfg.code == 0);
    auto rows = csv_rows(from_cfg.out);
    CHECK(rows.size() == 5);

    // a flag beats the file: drop the depth below threshold -> no levels
    RunResult overridden = run("levels --config " + cfg_path + " --V0 10");
    CHECK(overridden.code == 1);

    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"V0": 100, "mystery_knob": 3})";
    }
    CHECK(run("levels --config " + cfg_path).code == 2);
    std::remove(cfg_path.c_str());
}

TEST_CASE("wavefunction: metadata and the invalid-level refusal")
{
    RunResult r = run(std::string("wavefunction ") + kDemoFlags + " --n 0 --l 0");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# C_nl=") != std::string::npos);
    CHECK(r.out.find("# nodes=0") != std::string::npos);
    CHECK(r.out.find("# u0_ratio=") != std::string::npos);
    CHECK(r.out.find("r,u,R") != std::string::npos);

    // n = 5 sits past the window (n' > 0 but beta^2 - gamma^2 >= n'^2);
    // n = 9 has exhausted the channel entirely
    RunResult bad = run(std::string("wavefunction ") + kDemoFlags + " --n 5 --l 0");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("window_violated") != std::string::npos);
    RunResult gone = run(std::string("wavefunction ") + kDemoFlags + " --n 9 --l 0");
    CHECK(gone.code == 1);
    CHECK(gone.err.find("n_prime_nonpositive") != std::string::npos);
}

TEST_CASE("pekeris-error: grid output")
{
    RunResult r = run(std::string("pekeris-error ") + kDemoFlags +
                      " --l 0 --points 11 --r-min 0.5 --r-max 2");
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0][0] == "r");
}

TEST_CASE("scan: single point matches levels; sweep marks empty points")
{
    RunResult sweep = run(std::string("scan ") + kDemoFlags +
                          " --param V0 --from 55 --to 70 --steps 4 --l-max 0");
    REQUIRE(sweep.code == 0);
    auto rows = csv_rows(sweep.out);
    // 55 and 60 sit below the 63.0 onset: empty markers; 65 and 70 bind
    int empty = 0, ok = 0;
    for (std::size_t i = 1; i < rows.size(); i++) {
        if (rows[i].back() == "empty") {
            empty++;
        } else {
            ok++;
        }
    }
    CHECK(empty == 2);
    CHECK(ok > 0);

    RunResult single = run(std::string("scan ") + kDemoFlags +
                           " --param V0 --from 100 --to 100 --steps 1 --l-max 0");
    RunResult direct = run(std::string("levels ") + kDemoFlags + " --l-max 0");
    auto srows = csv_rows(single.out);
    auto drows = csv_rows(direct.out);
    REQUIRE(srows.size() == drows.size());
    for (std::size_t i = 1; i < srows.size(); i++) {
        CHECK(srows[i][7] == drows[i][6]); // identical E text
    }
}

TEST_CASE("validate: demo spec passes, coarse grid fails, selftest passes")
{
    RunResult good = run(std::string("validate ") + kDemoFlags + " --l 0");
    CHECK(good.code == 0);
    CHECK(good.out.find("# verdict=pass") != std::string::npos);

    RunResult coarse =
        run(std::string("validate ") + kDemoFlags + " --l 0 --grid-h 0.25");
    CHECK(coarse.code == 1);

    RunResult self = run(std::string("validate ") + kDemoFlags + " --selftest");
    CHECK(self.code == 0);
    CHECK(self.out.find("# selftest passed") != std::string::npos);
}

int main(int argc, char** argv)
{
    for (int i = 1; i < argc; i++) {
        if (argv[i][0] != '-') {
            g_cli = argv[i];
        }
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-wsbound-binary>\n");
        return 1;
    }
    doctest::Context context;
    context.applyCommandLine(argc, argv);
    return context.run();
}
