#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("exit codes: 0 on pass, 2 on usage") {
    CHECK(run("spectrum --n 3 --g 2 --m0 1 --m1 1 --kmax 3") == 0);
    CHECK(run("spectrum --n 3 --g 5 --m0 1 --m1 1") == 2);   // invalid g
    CHECK(run("spectrum --n 3 --g 1 --m0 1 --m1 1") == 2);   // dimension mismatch
    CHECK(run("bogus-subcommand") == 2);
    CHECK(run("circle") == 2);  // no mode selected
    CHECK(run("lambda2 --r 0.5") == 0);
    CHECK(run("circle --alpha-over-pi 1/3") == 0);
    CHECK(run("circle --k 2 --ell 1 --t 0.4") == 0);
    CHECK(run("addition --n 2 --ell 1") == 0);
}

TEST_CASE("freak-radius table lands in a file with fingerprint") {
    std::string path = "/tmp/pompeiu_cli_zeros.csv";
    CHECK(run("zeros --n 2 --g 1 --m0 1 --m1 1 --kmax 2 --out " + path) == 0);
    std::string csv = slurp(path);
    CHECK(csv.find("# cmd=zeros") == 0);
    CHECK(csv.find("t_zero") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify CSV is byte-identical across seeds/workers") {
    std::string base = "verify --n 3 --g 2 --m0 1 --m1 1 --degree 1 --radii 0.4 "
                       "--rotations 3 --samples 100000 --seed 42";
    CHECK(run(base + " --workers 1 --out /tmp/pompeiu_cli_v1.csv") == 0);
    CHECK(run(base + " --workers 3 --out /tmp/pompeiu_cli_v3.csv") == 0);
    std::string a = slurp("/tmp/pompeiu_cli_v1.csv");
    std::string b = slurp("/tmp/pompeiu_cli_v3.csv");
    // Only the worker count differs between the two fingerprints.
    CHECK(a.substr(a.find('\n')) == b.substr(b.find('\n')));
    CHECK(a.find("FAILS_POMPEIU_WITNESSED") != std::string::npos);
    CHECK(a.find("POSITIVE_CONTROL_NONZERO") != std::string::npos);
    std::remove("/tmp/pompeiu_cli_v1.csv");
    std::remove("/tmp/pompeiu_cli_v3.csv");
}
