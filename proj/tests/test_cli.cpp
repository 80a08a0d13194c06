#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string outfile = "/tmp/crsym_cli_out.txt";
  std::string cmd = env + " " + std::string(CRSYM_CLI_PATH) + " " + args + " > " +
                    outfile + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(outfile);
  return r;
}

}  // namespace

TEST_CASE("free growth from the command line") {
  auto r = run("gnla free --depth 10 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dims"] == nlohmann::json({2, 1, 2, 3, 6, 9, 18, 30, 56, 99}));
  CHECK(run("gnla free --depth 10 --json").out == slurp("tests/golden/free10.json"));
}

TEST_CASE("growth golden output") {
  auto r = run("gnla growth m_HC --json");
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp("tests/golden/growth_mhc.json"));
}

TEST_CASE("catalog checks pass") {
  CHECK(run("gnla check 'Gou(5)'").code == 0);
  CHECK(run("gnla check 'nGou(7)'").code == 0);
  CHECK(run("gnla check mprime5 --json").code == 0);
}

TEST_CASE("deprolongation endpoints and errors") {
  auto r = run("gnla deprolong 'Gou(3)' --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dims"] == nlohmann::json({2, 1}));
  auto bad = run("gnla deprolong m_HC");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("not deprolongable") != std::string::npos);
}

TEST_CASE("enumerate golden output with per-depth counts 1,1,2,1,2,1,2") {
  auto r = run("extend enumerate --growth 211 --max-depth 9 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<int> counts;
  for (const auto& d : j) counts.push_back(static_cast<int>(d["classes"].size()));
  CHECK(counts == std::vector<int>{1, 1, 2, 1, 2, 1, 2});
  CHECK(r.out == slurp("tests/golden/enumerate211.json"));
}

TEST_CASE("prolongation report via the CLI") {
  auto r = run("prolong run heis3 --cr-J standard --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 8);
  auto inf = run("prolong run 'Gou(4)' --cr-J none --max-degree 3 --json");
  auto ji = nlohmann::json::parse(inf.out);
  CHECK(ji["terminated"] == false);
}

TEST_CASE("model subcommands") {
  auto r = run("model all fixtures/2123.crm");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("dimension 10") != std::string::npos);
  auto sym = run("model symbol fixtures/2121.crm --set a=0 --json");
  REQUIRE(sym.code == 0);
  auto j = nlohmann::json::parse(sym.out);
  CHECK(j["symbol"]["type"] == "hyperbolic");
  // a model whose listed field is not a symmetry exits with a check failure
  {
    std::ofstream bad("/tmp/bad_model.crm");
    bad << "coord z : weight 1;\ncoord u : weight 2;\nIm(u) = |z|^2;\n"
        << "field B = z*d(u);\n";
  }
  CHECK(run("model verify /tmp/bad_model.crm").code == 1);
  // malformed files are usage errors
  {
    std::ofstream bad("/tmp/bad_syntax.crm");
    bad << "coord z : weight 1;\ncoord u : weight;\n";
  }
  CHECK(run("model parse /tmp/bad_syntax.crm").code == 2);
}

TEST_CASE("jnorm") {
  auto r = run("jnorm 'Gou(6)' --a 3 --b 7 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["normal"]["a"] == "1");
  CHECK(j["normal"]["b"] == "0");
  auto n = run("jnorm 'nGou(5)' --a 2 --b 5 --json");
  CHECK(nlohmann::json::parse(n.out)["normal"]["b"] == "5");
}

TEST_CASE("usage errors") {
  CHECK(run("gnla growth NoSuchAlgebra").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("extend enumerate --growth 222 --max-depth 5").code == 2);
}

TEST_CASE("the depth limit responds to GNLA_MAX_DEPTH") {
  CHECK(run("gnla free --depth 11").code == 2);
  CHECK(run("gnla free --depth 11", "GNLA_MAX_DEPTH=11").code == 0);
}

TEST_CASE("paper-suite output is byte-identical across runs") {
  auto a = run("paper-suite --json");
  auto b = run("paper-suite --json");
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.size() == 13);
}
