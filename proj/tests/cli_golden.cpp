#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify subcommand exit codes") {
    CHECK(run("verify --id cor1.6/1 --N 6").exit_code == 0);
    CHECK(run("verify --id nosuch --N 4").exit_code == 2);
    CHECK(run("verify --bad-flag").exit_code == 2);
}

TEST_CASE("coeffs golden output") {
    RunResult r = run("coeffs --rhs cor1.6/1 --N 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "q^0 : 1\nq^1 : 1\nq^2 : 3\nq^3 : 6\nq^4 : 13\nq^5 : 24\nq^6 : 48\n");
    RunResult n0 = run("coeffs --rhs cor1.6/1 --N 0");
    CHECK(n0.out == "q^0 : 1\n");
    RunResult colored = run("coeffs --rhs thm1.5/eq5 --N 2 --params S=odds");
    CHECK(colored.out ==
          "q^0 : 1\n"
          "q^1 : 1 * c(1~)\n"
          "q^1 : 1 * c(2~)\n"
          "q^2 : 1 * c(1~)*c(2~)\n"
          "q^2 : 1 * c(3~)\n"
          "q^2 : 1 * c(4~)\n");
    RunResult erased = run("coeffs --rhs thm1.12/eq18 --params U=Unk(2,1) --N 4 --set-colors all=1");
    CHECK(erased.exit_code == 0);
    CHECK(!erased.out.empty());
}

TEST_CASE("enumerate golden output") {
    // the 7 partitions of 5, in DFS order
    RunResult r = run("enumerate --family p --weight 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "(1,1,1,1,1)\n(2,1,1,1)\n(2,2,1)\n(3,1,1)\n(3,2)\n(4,1)\n(5)\n# count: 7\n");
}

TEST_CASE("enumerate exact weight and S-weight") {
    RunResult swr = run("enumerate --family p --S odds --s-weight 3 --distinct");
    CHECK(swr.exit_code == 0);
    CHECK(swr.out == "(3)\n(3,1)\n(3,2)\n# count: 3\n");
    RunResult zero = run("enumerate --family ovp --weight 0");
    CHECK(zero.out == "()\n# count: 1\n");
}

TEST_CASE("environment default caps are honored") {
    RunResult r = run("coeffs --rhs cor1.6/1", "SCHMIDT_DEFAULT_CAPS=4,2");
    CHECK(r.out == "q^0 : 1\nq^1 : 1\nq^2 : 3\nq^3 : 6\nq^4 : 13\n");
    RunResult bad = run("coeffs --rhs cor1.6/1", "SCHMIDT_DEFAULT_CAPS=nope");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify --id all is byte-stable, including its JSON report") {
    std::string json1 = "/tmp/schmidt_report_1.json", json2 = "/tmp/schmidt_report_2.json";
    RunResult a = run("verify --id all --N 5 --D 2 --json " + json1);
    RunResult b = run("verify --id all --N 5 --D 2 --json " + json2);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    std::string ja = slurp(json1), jb = slurp(json2);
    CHECK(!ja.empty());
    CHECK(ja == jb);
    CHECK(ja.find("elapsed") == std::string::npos);
    std::remove(json1.c_str());
    std::remove(json2.c_str());
}

int main(int argc, char** argv) {
    doctest::Context context;
    int shift = 0;
    if (argc > 1 && argv[1][0] != '-') {
        g_binary = argv[1];
        shift = 1;
    }
    if (g_binary.empty()) g_binary = "./tools/schmidtc";
    context.applyCommandLine(argc - shift, argv + shift);
    return context.run();
}
