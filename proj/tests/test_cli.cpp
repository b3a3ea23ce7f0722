#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef APERYLAB_CLI_PATH
#error "APERYLAB_CLI_PATH must be defined"
#endif

namespace {

int run_cli(const std::string& args, std::string& output) {
    const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/aperylab_cli_out.txt";
    const std::string cmd = std::string(APERYLAB_CLI_PATH) + " " + args + " > " + out_path +
                            " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    output = ss.str();
    std::remove(out_path.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("usage errors exit 2 and name the offending token") {
    std::string out;
    CHECK(run_cli("verify --primes 2..10", out) == 2);
    CHECK(out.find("2..10") != std::string::npos);

    CHECK(run_cli("verify --primes banana", out) == 2);
    CHECK(out.find("banana") != std::string::npos);

    CHECK(run_cli("verify --statements nosuch --primes 7..13", out) == 2);
    CHECK(out.find("nosuch") != std::string::npos);

    CHECK(run_cli("verify --engine quantum --primes 7..13", out) == 2);
    CHECK(run_cli("frobnicate", out) == 2);
    CHECK(run_cli("verify --format xml", out) == 2);
    CHECK(run_cli("verify --output /nonexistent-dir/x.json --primes 7..7 --statements mc1 "
                  "--engine exact", out) == 2);
}

TEST_CASE("bernoulli subcommand") {
    std::string out;
    CHECK(run_cli("bernoulli --index 12", out) == 0);
    CHECK(out.find("-691/2730") != std::string::npos);
    CHECK(run_cli("bernoulli --index 3", out) == 0);
    CHECK(out == "0\n");
    CHECK(run_cli("bernoulli --index 2 --mod 7", out) == 0);
    CHECK(out == "6\n");
    CHECK(run_cli("bernoulli --index 300", out) == 2);
}

TEST_CASE("verify emits a parseable passing report") {
    std::string out;
    const int rc = run_cli(
        "verify --statements mc1,mc2 --primes 7..31 --engine exact --format json --output -",
        out);
    CHECK(rc == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["rows"].size() == 16);  // 8 primes x 2 statements
    for (const auto& row : j["rows"]) CHECK(row["pass"] == true);
    CHECK(j["meta"]["engine"] == "exact");
}

TEST_CASE("draft statements do not gate the exit code by default") {
    std::string out;
    CHECK(run_cli("verify --statements draft --primes 7..13 --engine exact --format csv", out) ==
          0);
    CHECK(out.find("claim_5_864") != std::string::npos);
}

TEST_CASE("identities, sharpness and limits subcommands") {
    std::string out;
    CHECK(run_cli("identities --family invbinom --max-n 8", out) == 0);
    CHECK(out.find("failures=0") != std::string::npos);
    CHECK(run_cli("identities --family ccc --max-n 6", out) == 0);
    CHECK(run_cli("identities --family odd --max-n 4 --r 1,3", out) == 0);
    CHECK(run_cli("identities --family odd --max-n 4 --r 2", out) == 2);
    CHECK(run_cli("identities --family all --r 1,3", out) == 2);
    CHECK(run_cli("identities --family nope", out) == 2);

    CHECK(run_cli("sharpness --statement mc1 --primes 7..13", out) == 0);
    CHECK(out.find("achieved=5") != std::string::npos);
    CHECK(run_cli("sharpness --statement nosuch --primes 7..13", out) == 2);

    CHECK(run_cli("limits --terms 40", out) == 0);
    CHECK(out.find("arctan_pi3") != std::string::npos);
    CHECK(out.find("h2_pi3_648") != std::string::npos);
    CHECK(run_cli("limits --terms 0", out) == 2);
}

TEST_CASE("config file mirrors flags and flags win") {
    const std::string cfg_path =
        std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
        "/aperylab_test_cfg.ini";
    {
        std::ofstream cfg(cfg_path);
        cfg << "statements=mc1\nprimes=7..13\nengine=exact\nformat=csv\n";
    }
    std::string out;
    CHECK(run_cli("verify --config " + cfg_path, out) == 0);
    // primes 7,11,13 -> three data lines + header
    CHECK(std::count(out.begin(), out.end(), '\n') == 4);
    CHECK(out.find("mc1") != std::string::npos);

    CHECK(run_cli("verify --config " + cfg_path + " --primes 7..11", out) == 0);
    CHECK(std::count(out.begin(), out.end(), '\n') == 3);
    std::remove(cfg_path.c_str());
}
