#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef WSCHUR_BIN
#error "WSCHUR_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WSCHUR_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("dist emits the exact outcome table as csv") {
    const auto r = run_cli("dist --n 4 --k 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text ==
          "l,probability,probability_decimal\n"
          "0,1/6,0.166666666667\n"
          "1,1/2,0.5\n"
          "2,1/3,0.333333333333\n");
}

TEST_CASE("dist rejects k above n/2 with exit 2") {
    const auto r = run_cli("dist --n 4 --k 3");
    CHECK(r.exit_code == 2);
    CHECK(r.stdout_text.empty());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("dist --n 4").exit_code == 2);       // missing --k
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("dist --n 4 --k 1 --format xml").exit_code == 2);
}

TEST_CASE("threshold reports the closed-form success") {
    const auto r = run_cli("threshold --n 4 --t 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("worst_case_success,4/5,0.8") != std::string::npos);
}

TEST_CASE("parity reports its worst-case success") {
    const auto r = run_cli("parity --n 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("worst_case_success,3/5,0.6") != std::string::npos);
}

TEST_CASE("char and dims") {
    CHECK(run_cli("char --lambda 2,1 --rho 3 --format csv").stdout_text.find("-1") !=
          std::string::npos);
    const auto dims = run_cli("dims --n 6 --format csv");
    CHECK(dims.stdout_text.find("2,\"(4,2)\",9,9") != std::string::npos);
}

TEST_CASE("verify exits zero and reports passes") {
    const auto r = run_cli("verify --n 3 --level all --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("FAIL") == std::string::npos);
    CHECK(r.stdout_text.find("pass") != std::string::npos);
}

TEST_CASE("deterministic invocations are byte-identical") {
    const std::string cmd =
        "simulate --n 10 --k 2 --trials 2000 --seed 31 --format json --deterministic";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK_FALSE(a.stdout_text.empty());
}

TEST_CASE("strategy subcommand emits a value row") {
    const auto r = run_cli("strategy --n 4 --objective bayes --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("value,,25/36,") != std::string::npos);
}

TEST_CASE("prior files drive the bayes objective") {
    const std::string path = "/tmp/wschur_test_prior.csv";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("0,0\n1,0\n2,1\n", f);
        fclose(f);
    }
    const auto r = run_cli("strategy --n 4 --objective bayes --prior " + path + " --format csv");
    CHECK(r.exit_code == 0);
    // Point mass at k=2: success is Pr[anything <= 2 | 2] routed to 2 -> 1.
    CHECK(r.stdout_text.find("value,,1,1") != std::string::npos);

    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("0,not-a-number\n", f);
        fclose(f);
    }
    CHECK(run_cli("strategy --n 4 --objective bayes --prior " + path).exit_code == 2);
    remove(path.c_str());
}
