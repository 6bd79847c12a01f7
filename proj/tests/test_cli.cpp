#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(ROOTLOCI_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start < s.size()) {
        size_t end = s.find('\n', start);
        if (end == std::string::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("tp text output is stable") {
    RunResult r = run_cli("tp --lambda 2,1");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "lambda: 2,1\n"
          "d: 3\n"
          "codim: 1\n"
          "tp: 6*c1\n"
          "degree: 4\n"
          "methods: reduce,naive,sum\n");
}

TEST_CASE("tp json output is canonical") {
    RunResult r = run_cli("tp --lambda '1^3 3' --format json");
    CHECK(r.code == 0);
    ordered_json expected;
    expected["d"] = 6;
    expected["lambda"] = std::vector<int>({3, 1, 1, 1});
    expected["codim"] = 2;
    expected["tp"] = ordered_json::array(
        {ordered_json::array({"120", 2, 0}), ordered_json::array({"-48", 0, 1})});
    expected["degree"] = 12;
    expected["methods"] = std::vector<std::string>({"reduce", "naive", "sum"});
    CHECK(r.out == expected.dump(2) + "\n");
    // byte-exact round trip through a parser
    CHECK(ordered_json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("tp method selection") {
    RunResult r = run_cli("tp --lambda 3 --method reduce");
    CHECK(r.code == 0);
    CHECK(r.out.find("tp: 6*c1^2 + 3*c2\n") != std::string::npos);
    CHECK(r.out.find("methods: reduce\n") != std::string::npos);
    RunResult s = run_cli("tp --lambda 3 --method sum");
    CHECK(s.out.find("methods: sum\n") != std::string::npos);
}

TEST_CASE("degree subcommand") {
    RunResult r = run_cli("degree --lambda 2,1");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    CHECK(run_cli("degree --lambda 1,1,1,1").out == "1\n");
    CHECK(run_cli("degree --lambda 3,2").out == "12\n");
}

TEST_CASE("table text output") {
    RunResult r = run_cli("table --d 3");
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "lambda=3 codim=2 degree=3 tp=6*c1^2 + 3*c2");
    CHECK(ls[1] == "lambda=2,1 codim=1 degree=4 tp=6*c1");
    CHECK(ls[2] == "lambda=1,1,1 codim=0 degree=1 tp=1");
}

TEST_CASE("table json output") {
    RunResult r = run_cli("table --d 4 --format json");
    CHECK(r.code == 0);
    ordered_json arr = ordered_json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    CHECK(arr[0]["lambda"] == ordered_json::array({4}));
    CHECK(arr[0]["tp"] == ordered_json::array({ordered_json::array({"24", 3, 0}),
                                               ordered_json::array({"32", 1, 1})}));
    CHECK(arr[4]["tp"] == ordered_json::array({ordered_json::array({"1", 0, 0})}));
    CHECK(arr[2]["degree"] == 4);
    CHECK(ordered_json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("moduli equivariant presentation") {
    RunResult r = run_cli("moduli --d 5 --space ss");
    CHECK(r.code == 0);
    CHECK(r.out.find("space: ss-equivariant\n") != std::string::npos);
    CHECK(r.out.find("relation: 60*c1^2 - 15*c2\n") != std::string::npos);
    CHECK(r.out.find("relation: 120*c1^3 + 20*c1*c2\n") != std::string::npos);
    CHECK(r.out.find("series: 1,1,1,0,0,0,0,0,0,0,0\n") != std::string::npos);
    CHECK(r.out.find("verified: yes\n") != std::string::npos);
}

TEST_CASE("moduli stable presentation") {
    RunResult r = run_cli("moduli --d 6 --space stable");
    CHECK(r.code == 0);
    CHECK(r.out.find("space: stable-quotient\n") != std::string::npos);
    CHECK(r.out.find("relation: 120*c1^2 - 48*c2\n") != std::string::npos);
    CHECK(r.out.find("verified: yes\n") != std::string::npos);
    // odd d has no separate stable quotient
    RunResult bad = run_cli("moduli --d 5 --space stable", true);
    CHECK(bad.code == 2);
    CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("moduli link presentation") {
    RunResult r = run_cli("moduli --d 6 --space link --format json");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["betti"] == ordered_json::array({1, 0, 0, 0, 0, 1}));
    CHECK(j["verified"] == true);
    CHECK(j["grading"] == "cohomological degree");
    CHECK(j["generators"][1]["name"] == "g");
    CHECK(j["generators"][1]["degree"] == 5);
}

TEST_CASE("moduli quotient series with bound") {
    RunResult r = run_cli("moduli --d 6 --space ss-quotient --bound 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("series: 1,1,1,1,0,0,0\n") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("tp --lambda 0,2", true).code == 2);
    CHECK(run_cli("tp --lambda 0,2", true).out.find(
              "error: partition: non-positive part") != std::string::npos);
    CHECK(run_cli("tp", true).code == 2);
    CHECK(run_cli("frobnicate", true).code == 2);
    CHECK(run_cli("", true).code == 2);
    CHECK(run_cli("tp --lambda 2,1 --method bogus", true).code == 2);
    CHECK(run_cli("moduli --d 6 --space nope", true).code == 2);
    CHECK(run_cli("table --d 0", true).code == 2);
    CHECK(run_cli("verify --suite nope", true).code == 2);
    CHECK(run_cli("--help", true).code == 0);
}

TEST_CASE("verify suite") {
    RunResult r = run_cli("verify --max-d 4 --suite tp");
    CHECK(r.code == 0);
    CHECK(r.out == "checks: 11 passed: 11 failed: 0\n");
    RunResult m = run_cli("verify --max-d 6 --suite moduli");
    CHECK(m.code == 0);
    CHECK(m.out.find(" failed: 0\n") != std::string::npos);
    RunResult par = run_cli("verify --max-d 5 --suite tp --jobs 4");
    CHECK(par.code == 0);
    CHECK(par.out.find("checks: 18 passed: 18 failed: 0") != std::string::npos);
}
