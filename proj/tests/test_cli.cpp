#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() /
                 ("singwell_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    const fs::path out = scratch_dir() / "stdout.txt";
    const fs::path err = scratch_dir() / "stderr.txt";
    const std::string cmd = std::string(SINGWELL_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream fs_(line);
        std::string field;
        while (std::getline(fs_, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST_CASE("classify") {
    SUBCASE("beta=2 composite is doubly degenerate") {
        const auto r = run("classify --beta 2 --g2 0.3 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["degeneracy"] == "double");
        CHECK(j["allowed_parities"] == json::array({"even", "odd"}));
        CHECK(j["s_plus"].get<double>() == doctest::Approx(1.4219544457292887));
    }
    SUBCASE("1 <= beta < 2 admits only odd extensions") {
        const auto r = run("classify --beta 1.5 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["allowed_parities"] == json::array({"odd"}));
        CHECK(j["degeneracy"] == "nondegenerate");
    }
    SUBCASE("supercritical coupling exits with 2 and names the critical value") {
        const auto r = run("classify --beta 2 --g2 -0.2");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("-1/8") != std::string::npos);
    }
    SUBCASE("csv output carries one row per branch") {
        const auto r = run("classify --beta 0.5");
        REQUIRE(r.exit_code == 0);
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 3);  // header + two branches
        CHECK(rows[0][0] == "s_plus");
        CHECK(rows[1][4] == "finite");  // s=0 branch: psi(0+) finite
        CHECK(rows[2][4] == "zero");
    }
}

TEST_CASE("spectrum") {
    SUBCASE("hydrogen levels") {
        const auto r = run("spectrum --g1 -10 --g2 0 --nmax 2");
        REQUIRE(r.exit_code == 0);
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0] == std::vector<std::string>{"n", "energy", "s", "kappa"});
        CHECK(std::strtod(rows[1][1].c_str(), nullptr) == -50.0);
        CHECK(std::strtod(rows[2][1].c_str(), nullptr) == -12.5);
        CHECK(std::strtod(rows[3][1].c_str(), nullptr) == -100.0 / 18.0);
    }
    SUBCASE("pure inverse-square verdict is an empty table") {
        const auto r = run("spectrum --g1 0 --g2 0.3");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out == "n,energy,s,kappa\n");
        CHECK(r.err.find("no bound states") != std::string::npos);
    }
    SUBCASE("supercritical exits with 2") {
        CHECK(run("spectrum --g1 -10 --g2 -0.3").exit_code == 2);
    }
    SUBCASE("json numbers survive a round trip bit-exactly") {
        const auto r = run("spectrum --g1 -10 --g2 0.3 --nmax 1 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["verdict"] == "ok");
        REQUIRE(j["states"].size() == 2);
        const double s = 0.5 * (1.0 + std::sqrt(3.4));
        const double kappa0 = 10.0 / s;
        CHECK(j["states"][0]["energy"].get<double>() == -0.5 * kappa0 * kappa0);
        CHECK(j["states"][0]["s"].get<double>() == s);
        CHECK(j["states"][1]["n"] == 1);
    }
    SUBCASE("missing required flag exits with 2") {
        CHECK(run("spectrum --g2 0.3").exit_code == 2);
    }
}

TEST_CASE("wavefunction") {
    SUBCASE("samples with density") {
        const auto r = run("wavefunction --g1 -10 --g2 0 --n 0 --samples 10 --zmax 1");
        REQUIRE(r.exit_code == 0);
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 11);
        CHECK(rows[0] == std::vector<std::string>{"zeta", "psi", "rho"});
        CHECK(std::strtod(rows[1][1].c_str(), nullptr) == 0.0);  // Dirichlet at origin
        const double psi = std::strtod(rows[5][1].c_str(), nullptr);
        const double rho = std::strtod(rows[5][2].c_str(), nullptr);
        CHECK(rho == psi * psi);
    }
    SUBCASE("no bound states is an invalid request here") {
        CHECK(run("wavefunction --g1 5 --g2 0").exit_code == 2);
    }
}

TEST_CASE("oracle cross-validation") {
    const auto r = run("oracle --g1 -10 --g2 0.3 --nmax 1");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] ==
          std::vector<std::string>{"n", "energy_analytic", "energy_grid", "rel_error"});
    for (int n = 1; n <= 2; ++n) {
        const double rel = std::strtod(rows[n][3].c_str(), nullptr);
        CHECK(rel < 5e-3);
    }
}

TEST_CASE("figures command") {
    const fs::path dir = scratch_dir() / "figs";
    fs::create_directories(dir);
    const auto r = run("figures --out-dir " + dir.string() + " --samples 101");
    REQUIRE(r.exit_code == 0);

    const auto fig1 = parse_csv(slurp(dir / "fig1.csv"));
    REQUIRE(fig1.size() == 1 + 5 * 101);
    CHECK(fig1[0] == std::vector<std::string>{"g2", "zeta", "psi"});
    // every curve starts at the origin with psi = 0
    for (int c = 0; c < 5; ++c) CHECK(std::strtod(fig1[1 + c * 101][2].c_str(), nullptr) == 0.0);

    const auto fig2 = parse_csv(slurp(dir / "fig2.csv"));
    REQUIRE(fig2.size() == 1 + 2 * 101);
    CHECK(fig2[0] == std::vector<std::string>{"g1", "zeta", "psi"});

    SUBCASE("byte-identical on a repeated run") {
        const std::string before = slurp(dir / "fig1.csv");
        const auto again = run("figures --out-dir " + dir.string() + " --samples 101");
        REQUIRE(again.exit_code == 0);
        CHECK(slurp(dir / "fig1.csv") == before);
    }
    SUBCASE("unwritable output directory is an I/O failure") {
        CHECK(run("figures --out-dir " + (dir / "missing" / "nested").string()).exit_code == 1);
    }
}

TEST_CASE("deterministic output and --output plumbing") {
    const auto a = run("spectrum --g1 -7.3 --g2 0.12 --nmax 4");
    const auto b = run("spectrum --g1 -7.3 --g2 0.12 --nmax 4");
    CHECK(a.out == b.out);

    const fs::path target = scratch_dir() / "spec.csv";
    const auto r = run("spectrum --g1 -7.3 --g2 0.12 --nmax 4 --output " + target.string());
    REQUIRE(r.exit_code == 0);
    CHECK(slurp(target) == a.out);

    CHECK(run("spectrum --g1 -1 --output /nonexistent_dir_xyz/out.csv").exit_code == 1);
}
