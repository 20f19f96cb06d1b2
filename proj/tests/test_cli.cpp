#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("TWISTDEC_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "TWISTDEC_BIN must point at the cli binary");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(TWISTDEC_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path();
    return (dir / ("twistdec_cli_" + std::to_string(getpid()) + "_" + name)).string();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

const std::string kExample1Codeword =
    "4,14,6,13,4,9,14,17,15,14,16,6,8,3,8,17,11,14,11,4,22,16,7";
const std::string kExample1Received =
    "4,14,13,13,5,9,14,17,0,22,21,6,8,3,8,2,11,0,5,8,10,4,7";

}  // namespace

TEST_CASE("cli encode reproduces the worked codeword") {
    auto r = run_cli("encode --spec " + fixture("example1.json") + " --message 4,2,10 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out == kExample1Codeword + "\n");
}

TEST_CASE("cli encode rejects wrong message length and bad symbols") {
    auto r = run_cli("encode --spec " + fixture("example1.json") + " --message 4,2 --seed 11");
    CHECK(r.exit_code == 2);
    auto s = run_cli("encode --spec " + fixture("example1.json") + " --message 4,2,23 --seed 11");
    CHECK(s.exit_code == 2);
    CHECK(s.out.find("out of range") != std::string::npos);
}

TEST_CASE("cli decode recovers the message and honours exit codes") {
    auto ok = run_cli("decode --spec " + fixture("example1.json") + " --received " +
                      kExample1Received + " --tau 11");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "4,2,10\n");

    auto hole = run_cli("decode --spec " + fixture("example2.json") +
                        " --received 7,19,3,11,0,16,9,1,20,5,14,2,22,8,17,4,12,21,6,10,15,3,9,18"
                        " --tau 2");
    CHECK(hole.exit_code == 1);
    CHECK(hole.out.substr(0, 4) == "FAIL");
}

TEST_CASE("cli decode reports the largest feasible radius on an infeasible request") {
    auto r = run_cli("decode --spec " + fixture("example1.json") + " --received " +
                     kExample1Received + " --tau 12");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("11") != std::string::npos);
}

TEST_CASE("cli decode requires --tau") {
    auto r = run_cli("decode --spec " + fixture("example1.json") + " --received " +
                     kExample1Received);
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli decode --list prints every candidate with its amd verdict") {
    auto r = run_cli("decode --spec " + fixture("example1.json") + " --received " +
                     kExample1Received + " --tau 11 --list");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "candidate: 22,1,9,15,12 distance 10 amd: reject\n"
          "candidate: 4,2,10,11,8 distance 11 amd: accept\n");
}

TEST_CASE("cli paper-example transcripts match the frozen fixtures") {
    auto one = run_cli("paper-example --which 1");
    CHECK(one.exit_code == 0);
    CHECK(one.out == slurp(fixture("example1_expected.txt")));
    CHECK(one.out.find("recovered: 4,2,10\n") != std::string::npos);

    auto two = run_cli("paper-example --which 2");
    CHECK(two.exit_code == 0);
    CHECK(two.out == slurp(fixture("example2_expected.txt")));
    CHECK(two.out.find("amd check 22,9,7,12,0,6: reject") != std::string::npos);
    CHECK(two.out.find("amd check 18,13,14,21,22,3: accept, message 18,13,14,21") !=
          std::string::npos);

    auto bad = run_cli("paper-example --which 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli trials writes a reproducible csv") {
    std::string cfg = tmp_path("trials.json");
    spit(cfg, R"({
      "spec": {
        "field": {"p": 23},
        "code": {"type": "tgrs", "k": 5,
                 "alphas": [0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22],
                 "vs": [1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1],
                 "twists": [{"t": 1, "h": 1, "eta": 1}]},
        "amd": {"b": 1}
      },
      "weights": [0, 5, 9],
      "trials": 30,
      "seed": 77,
      "tau": 9
    })");
    std::string out1 = tmp_path("t1.csv"), out2 = tmp_path("t2.csv");

    auto a = run_cli("trials --config " + cfg + " --out " + out1);
    CHECK(a.exit_code == 0);
    auto b = run_cli("trials --config " + cfg + " --out " + out2);
    CHECK(b.exit_code == 0);

    std::string csv1 = slurp(out1);
    CHECK(csv1 == slurp(out2));
    CHECK(csv1.substr(0, csv1.find('\n')) ==
          "weight,trials,successes,failures,ambiguous,mean_list,max_list,"
          "amd_false_accepts,seconds");

    std::filesystem::remove(cfg);
    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
}

TEST_CASE("cli trials rejects an empty weight list") {
    std::string cfg = tmp_path("empty.json");
    spit(cfg, R"({
      "spec": {"field": {"p": 7},
               "code": {"type": "grs", "k": 2, "alphas": [0,1,2,3,4,5],
                        "vs": [1,1,1,1,1,1]}},
      "weights": [], "trials": 10, "seed": 1, "tau": 2
    })");
    auto r = run_cli("trials --config " + cfg + " --out " + tmp_path("never.csv"));
    CHECK(r.exit_code == 2);
    std::filesystem::remove(cfg);
}

TEST_CASE("cli oracle prints distance and classification") {
    std::string spec = tmp_path("grs7.json");
    spit(spec, R"({"field": {"p": 7},
                   "code": {"type": "grs", "k": 2, "alphas": [0,1,2,3,4,5],
                            "vs": [1,1,1,1,1,1]}})");
    auto r = run_cli("oracle --spec " + spec);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n = 6, k = 2, q = 7\n") != std::string::npos);
    CHECK(r.out.find("minimum distance: 5\n") != std::string::npos);
    CHECK(r.out.find("classification: mds\n") != std::string::npos);
    std::filesystem::remove(spec);
}

TEST_CASE("cli rejects unknown flags, missing files, and bare seeds") {
    CHECK(run_cli("decode --frobnicate").exit_code == 2);
    CHECK(run_cli("oracle --spec /nonexistent/path.json").exit_code == 2);
    CHECK(run_cli("--help >/dev/null").exit_code == 0);

    std::string spec = tmp_path("bare.json");
    spit(spec, R"({"field": {"p": 7},
                   "code": {"type": "grs", "k": 2, "alphas": [0,1,2,3,4,5],
                            "vs": [1,1,1,1,1,1]}})");
    auto r = run_cli("encode --spec " + spec + " --message 1,1 --seed 3");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("amd") != std::string::npos);
    std::filesystem::remove(spec);
}
