// End-to-end tests for the metdim binary: every documented invocation shape,
// the exit-code contract, and byte-stable output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with the given arguments, stderr dropped, stdout captured.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + "\"" + METDIM_CLI_PATH + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string join_names(const json& names) {
  std::string s;
  for (const auto& n : names) {
    if (!s.empty()) s += ',';
    s += n.get<std::string>();
  }
  return s;
}

}  // namespace

TEST_CASE("dim emits a complete record") {
  const auto r = run_cli("dim --host Qd:4 --kind metric --stable-output");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["host"] == "Q_4");
  CHECK(j["kind"] == "metric");
  CHECK(j["value"] == 4);
  CHECK(j["exact"] == true);
  CHECK(j["basis"].size() == 4);
  CHECK(!j.contains("lower_bound"));
  CHECK(j["subsets_examined"].get<long long>() > 0);
  CHECK(j["elapsed_ms"] == 0.0);
}

TEST_CASE("dim csv carries the documented header") {
  const auto r = run_cli("dim --host Qd:4 --kind edge --format csv --stable-output");
  REQUIRE(r.exit_code == 0);
  const auto nl = r.out.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(r.out.substr(0, nl) ==
        "host,kind,value,basis,exact,lower_bound,subsets_examined,elapsed_ms,note");
  CHECK(r.out.find("Q_4,edge,3,") != std::string::npos);
}

TEST_CASE("dim markdown renders") {
  const auto r = run_cli("dim --host Qd:3 --kind mixed --format markdown --stable-output");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("mixed") != std::string::npos);
  CHECK(r.out.find('3') != std::string::npos);
}

TEST_CASE("verify splits OK from witness by exit code") {
  SUBCASE("a real mixed generator") {
    const auto r = run_cli("verify --host Qd:3 --kind mixed --basis 111,010,001");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"result\":\"OK\"}\n");
  }
  SUBCASE("a failing candidate reports its first witness") {
    const auto r = run_cli("verify --host Qd:2 --kind metric --basis 00");
    CHECK(r.exit_code == 3);
    const json j = json::parse(r.out);
    CHECK(j["result"] == "witness");
    CHECK(j["witness"]["a"] == "10");
    CHECK(j["witness"]["b"] == "01");
    CHECK(j["witness"]["kind"] == "metric");
  }
  SUBCASE("csv witness row") {
    const auto r = run_cli("verify --host Qd:2 --kind metric --basis 00 --format csv");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("result,kind,a,b,signature\nwitness,") == 0);
  }
}

TEST_CASE("usage and input errors exit 1") {
  CHECK(run_cli("dim --kind metric").exit_code == 1);                       // missing --host
  CHECK(run_cli("dim --host Qd:3 --kind sideways").exit_code == 1);         // bad kind
  CHECK(run_cli("dim --host Qd:0 --kind metric").exit_code == 1);           // bad dimension
  CHECK(run_cli("dim --host Qd:64 --kind metric").exit_code == 1);          // out of range
  CHECK(run_cli("dim --host Qd:3x --kind metric").exit_code == 1);          // trailing junk
  CHECK(run_cli("dim --host /no/such/file.txt --kind metric").exit_code == 1);
  CHECK(run_cli("dim --host Qd:3 --kind metric --strategy guess").exit_code == 1);
  CHECK(run_cli("dim --host Qd:3 --kind metric --format yaml").exit_code == 1);
  CHECK(run_cli("verify --host Qd:3 --kind metric --basis 1x1").exit_code == 1);
  CHECK(run_cli("verify --host Qd:3 --kind metric --basis 11").exit_code == 1);  // wrong length
  CHECK(run_cli("table 0 3").exit_code == 1);
  CHECK(run_cli("table 1 9").exit_code == 1);
  CHECK(run_cli("table 4 2").exit_code == 1);
  CHECK(run_cli("lemma-check lemma99").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help >/dev/null").exit_code == 0);
  CHECK(run_cli("dim --help >/dev/null").exit_code == 0);
}

TEST_CASE("table prints rows and consistency checks") {
  SUBCASE("csv digest") {
    const auto r = run_cli("table 1 3 --format csv --stable-output");
    REQUIRE(r.exit_code == 0);
    const auto nl = r.out.find('\n');
    REQUIRE(nl != std::string::npos);
    CHECK(r.out.substr(0, nl) == "d,edim,dim,mdim,conjecture");
  }
  SUBCASE("json rows and PASS checks") {
    const auto r = run_cli("table 1 4 --stable-output");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][3]["d"] == 4);
    for (const auto& c : j["consistency"]) CHECK(c["status"] == "PASS");
  }
}

TEST_CASE("lemma-check runs a statement end to end") {
  const auto r = run_cli("lemma-check lemma4 --d 2..3 --trials 20 --seed 7");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  for (const auto& rep : j) {
    CHECK(rep["statement"] == "lemma4");
    CHECK(rep["counterexamples"].empty());
  }
}

TEST_CASE("repeated runs are byte-identical") {
  SUBCASE("stable dim record") {
    const auto a = run_cli("dim --host Qd:5 --kind metric --stable-output");
    const auto b = run_cli("dim --host Qd:5 --kind metric --stable-output");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
  SUBCASE("worker count does not leak into stable output") {
    const auto a = run_cli("dim --host Qd:5 --kind mixed --stable-output --workers 1");
    const auto b = run_cli("dim --host Qd:5 --kind mixed --stable-output --workers 8");
    const auto c = run_cli("dim --host Qd:5 --kind mixed --stable-output",
                           "METDIM_WORKERS=3 ");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  SUBCASE("seeded lemma reports") {
    const auto a = run_cli("lemma-check lemma3 --d 3..4 --trials 50 --seed 9");
    const auto b = run_cli("lemma-check lemma3 --d 3..4 --trials 50 --seed 9");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("greedy strategy reports an honest upper bound and exits 0") {
  const auto r = run_cli("dim --host Qd:8 --kind metric --strategy greedy --stable-output");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["exact"] == false);
  REQUIRE(j.contains("lower_bound"));
  CHECK(j["lower_bound"].get<int>() <= j["value"].get<int>());
  CHECK(j["value"].get<int>() >= 5);
}

TEST_CASE("an exhausted budget exits 2 with a usable fallback") {
  const auto r =
      run_cli("dim --host Qd:6 --kind metric --budget 0.000000001 --stable-output");
  CHECK(r.exit_code == 2);
  const json j = json::parse(r.out);
  CHECK(j["exact"] == false);
  CHECK(j["note"].get<std::string>().find("budget") != std::string::npos);
  // the fallback basis still verifies
  const auto v =
      run_cli("verify --host Qd:6 --kind metric --basis " + join_names(j["basis"]));
  CHECK(v.exit_code == 0);
}

TEST_CASE("record output round-trips into verify") {
  const auto r = run_cli("dim --host Qd:4 --kind mixed --stable-output");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const auto v =
      run_cli("verify --host Qd:4 --kind mixed --basis " + join_names(j["basis"]));
  CHECK(v.exit_code == 0);
  CHECK(v.out == "{\"result\":\"OK\"}\n");
}

TEST_CASE("edge-list files work as hosts") {
  const std::string path = "/tmp/metdim_cli_p4.txt";
  {
    std::ofstream f(path);
    f << "1 2\n2 3\n3 4\n";
  }
  SUBCASE("dim on a path graph") {
    const auto r = run_cli("dim --host " + path + " --kind metric --stable-output");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"] == 1);
    CHECK(j["host"] == path);
  }
  SUBCASE("verify accepts original labels") {
    const auto ok = run_cli("verify --host " + path + " --kind metric --basis 1");
    CHECK(ok.exit_code == 0);
    const auto bad = run_cli("verify --host " + path + " --kind metric --basis 9");
    CHECK(bad.exit_code == 1);  // unknown label
  }
  SUBCASE("fix-zero is refused on graph hosts") {
    const auto r = run_cli("dim --host " + path + " --kind metric --fix-zero");
    CHECK(r.exit_code == 1);
  }
}
