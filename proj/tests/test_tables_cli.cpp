#include <array>
#include <cstdio>
#include <fstream>
#include <cmath>
#include <sstream>
#include <vector>
#include <string>

#include "doctest.h"
#include "lognsum/format.hpp"
#include "lognsum/tables.hpp"

using namespace lognsum;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LOGNSUM_CLI_PATH) + " " + args + " 2>&1";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("deterministic tables match the golden files") {
    for (const char* id : {"t1", "saddle-n4", "saddle-n64", "cdf-n4", "cdf-n64", "cdf-n256",
                           "cdf-s0125", "cdf-s0072", "pdf-n4", "pdf-n64", "pdf-n256", "pdf-s0125",
                           "pdf-s0072", "laplace-n256"}) {
        const std::string golden = read_file(std::string(LOGNSUM_GOLDEN_DIR) + "/" + id + ".csv");
        const OutputTable t = compute_table(find_table(id), 0, 0);
        CHECK_MESSAGE(to_csv(t) == golden, "table " << id << " deviates from its golden file");
    }
}

TEST_CASE("format helpers") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1234567891234) == "0.123456789");
    CHECK(format_double(1.5e-108) == "1.5e-108");
    OutputTable t;
    t.columns = {"a", "b"};
    t.rows = {{1.0, 2.5}};
    CHECK(to_csv(t) == "a,b\n1,2.5\n");
    const std::string plain = to_plain(t);
    CHECK(plain.find("a") != std::string::npos);
    const std::string json = to_json(t);
    CHECK(json.find("\"columns\"") != std::string::npos);
}

TEST_CASE("cli: value commands") {
    auto r = run_cli("laplace --sigma 0.25 --theta 1e-12 --k 0 --numeric --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\n1e-12,0,1\n") != std::string::npos);

    r = run_cli("laplace --sigma 0.25 --theta 0.5002 --k 0 --asymptotic --power 256 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3.7") != std::string::npos);  // 3.69e-57 to 2 digits

    r = run_cli("theta --sigma 0.25 --x 0.5 --refine --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("23.1845282") != std::string::npos);
    CHECK(r.out.find("22.7639315") != std::string::npos);

    r = run_cli("cdf --sigma 0.25 --n 4 --x 0.65 --method saddle1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.000153608") != std::string::npos);
}

TEST_CASE("cli: sampler output is seed-deterministic") {
    const auto a = run_cli("sample --sigma 0.25 --theta 100 --count 50 --seed 42 --format csv");
    const auto b = run_cli("sample --sigma 0.25 --theta 100 --count 50 --seed 42 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto c = run_cli("sample --sigma 0.25 --theta 100 --count 50 --seed 43 --format csv");
    CHECK(a.out != c.out);
    // plain format carries the sampler report
    const auto rep = run_cli("sample --sigma 0.25 --theta 100 --count 200 --seed 1");
    CHECK(rep.out.find("# algorithm=gamma") != std::string::npos);
    CHECK(rep.out.find("# acceptance=") != std::string::npos);
}

TEST_CASE("cli: monte carlo determinism across workers") {
    const std::string base = "cdf --sigma 0.25 --n 4 --x 0.7 --method mc --R 4000 --seed 5 --format csv";
    const auto t1 = run_cli(base + " --threads 1");
    const auto t2 = run_cli(base + " --threads 2");
    const auto t1b = run_cli(base + " --threads 1");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == t2.out);
    CHECK(t1.out == t1b.out);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("cdf --sigma 0.25 --n 4 --method mc").exit_code == 2);       // no --x
    CHECK(run_cli("bogus-subcommand").exit_code == 2);                          // parse error
    CHECK(run_cli("tables --table nope").exit_code == 2);                       // bad table id
    CHECK(run_cli("laplace --sigma -1 --theta 1 --k 0").exit_code == 3);        // domain
    CHECK(run_cli("theta --sigma 0.25 --x 2.0").exit_code == 3);                // not left tail
    CHECK(run_cli("laplace --sigma 0.25 --theta 0 --k 0 --numeric").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: mc cdf command lands on the reference row") {
    const auto r = run_cli("cdf --sigma 0.25 --n 64 --x 0.921875 --method mc --R 100000 --seed 1 --format csv");
    REQUIRE(r.exit_code == 0);
    // parse value and half width from the csv row
    const auto header_end = r.out.find('\n');
    std::istringstream row(r.out.substr(header_end + 1));
    std::string cell;
    std::vector<double> cells;
    while (std::getline(row, cell, ',')) cells.push_back(std::stod(cell));
    REQUIRE(cells.size() == 5);
    const double value = cells[3], hw = cells[4];
    CHECK(std::fabs(value - 2.04e-4) <= hw + 3.0 * 2.56e-6);
    CHECK(hw / 2.56e-6 > 0.3);
    CHECK(hw / 2.56e-6 < 3.0);
}

TEST_CASE("cli: tables command emits csv with the expected grid") {
    const auto r = run_cli("tables --table t1 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream ss(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(ss, line)) ++lines;
    CHECK(lines == 8);  // header + 7 rows
    CHECK(r.out.rfind("x,mean_at_theta_tilde,theta_tilde,theta\n", 0) == 0);
}

TEST_CASE("cli: env override of the quadrature budget is accepted") {
    const auto r = run_cli("laplace --sigma 0.25 --theta 5 --k 0 --numeric --format csv");
    REQUIRE(r.exit_code == 0);
    CliResult env;
    {
        const std::string cmd =
            std::string("LOGNSUM_QUAD_NODES=128 ") + LOGNSUM_CLI_PATH
            + " laplace --sigma 0.25 --theta 5 --k 0 --numeric --format csv 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf{};
        std::size_t got = 0;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) env.out.append(buf.data(), got);
        env.exit_code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(env.exit_code == 0);
    // denser nodes agree with the default to print precision
    CHECK(env.out == r.out);
}
