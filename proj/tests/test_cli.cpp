#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;
namespace cli = gkws::cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gamma reproduces the listed generating sets") {
  auto r = run({"gamma", "--n", "2", "--m", "1"});
  REQUIRE(r.code == cli::kOk);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["tuples"] == json::parse("[[1,19],[2,11],[3,3],[4,13],[5,5],[7,7],[10,10],[11,2],[13,4],[19,1]]"));
  CHECK(j["verification"]["result"] == "MATCH");

  r = run({"gamma", "--n", "2", "--m", "2"});
  REQUIRE(r.code == cli::kOk);
  j = json::parse(r.out);
  CHECK(j["tuples"] == json::parse("[[1,1,10],[1,10,1],[2,2,2],[4,4,4],[10,1,1]]"));
  CHECK(j["verification"]["result"] == "MATCH");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"gamma", "--n", "2", "--m", "3"}).code == cli::kUsage);
  CHECK(run({"gamma", "--n", "6", "--m", "1"}).code == cli::kUsage);
  CHECK(run({"gamma", "--n", "2"}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"semigroup", "--n", "2", "--m", "1", "--T", "41"}).code == cli::kUsage);
  CHECK(run({"dim", "--n", "2", "--divisor", "{inf:3}"}).code == cli::kUsage);
  CHECK(run({"dim", "--n", "2", "--divisor", "{\"inf\":1,\"pj\":[1,1,1]}"}).code == cli::kUsage);
  CHECK(run({"code", "--n", "2", "--G", "[1,2]"}).code == cli::kUsage);
  CHECK(run({"code", "--n", "2", "--G", "{\"inf\":0}"}).code == cli::kUsage);
  CHECK(run({"puregaps", "--n", "2", "--m", "1", "--check", "1,x"}).code == cli::kUsage);
  CHECK(run({"gamma", "--n", "2", "--m", "1", "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("gamma") != std::string::npos);
}

TEST_CASE("a pure-gap pair that fails the oracle exits with 4") {
  const auto r = run({"code", "--n", "2", "--alpha", "3,3", "--beta", "11,1"});
  CHECK(r.code == cli::kHypothesis);
}

TEST_CASE("dim and points") {
  auto r = run({"dim", "--n", "2", "--divisor", "{\"inf\":19,\"pj\":[]}"});
  REQUIRE(r.code == cli::kOk);
  CHECK(json::parse(r.out)["dim"] == 10);
  r = run({"dim", "--n", "2", "--divisor", "{\"inf\":0,\"pj\":[9]}", "--format", "csv"});
  CHECK(r.out == "dim\n4\n");

  r = run({"points", "--n", "2"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["total"] == 225);
  CHECK(j["orbit1"].size() == 9);
  CHECK(j["counts"]["others"] == 216);
  r = run({"points", "--n", "2", "--format", "csv"});
  CHECK(r.out.rfind("label,x,y,z\nP_inf,,,\n", 0) == 0);
}

TEST_CASE("code summary") {
  auto r = run({"code", "--n", "2", "--G", "{\"inf\":21,\"pj\":[]}", "--dual-check"});
  REQUIRE(r.code == cli::kOk);
  auto j = json::parse(r.out);
  CHECK(j["length"] == 224);
  CHECK(j["k"] == 12);
  CHECK(j["goppa_d"] == 203);
  CHECK(j["k_omega"] == 212);
  CHECK(j["dual_orthogonal"] == true);
  CHECK(j["puregap_d_omega"].is_null());

  r = run({"code", "--n", "2", "--alpha", "11,1", "--beta", "11,1", "--min-weight"});
  REQUIRE(r.code == cli::kOk);
  j = json::parse(r.out);
  CHECK(j["puregap_d_omega"] == 6);
  CHECK(j["min_weight"] == "unknown");

  const auto path = (std::filesystem::temp_directory_path() / "gkws_gen_test.csv").string();
  r = run({"code", "--n", "2", "--G", "{\"inf\":9,\"pj\":[]}", "--dump-generator", path, "--min-weight"});
  REQUIRE(r.code == cli::kOk);
  CHECK(json::parse(r.out)["min_weight"] == 224 - 9);
  std::ifstream f(path);
  std::string line;
  int rows = 0;
  while (std::getline(f, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 223);
  }
  CHECK(rows == 4);
  std::remove(path.c_str());
}

TEST_CASE("puregaps sections") {
  auto r = run({"puregaps", "--n", "2", "--m", "1"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["oracle"]["status"] == "enumerated");
  bool has_11_1 = false, has_3_2 = false;
  for (const auto& v : j["ladder"]) {
    has_11_1 |= v["tuple"] == json::parse("[11,1]") && v["pure"] == true;
    has_3_2 |= v["tuple"] == json::parse("[3,2]") && v["pure"] == true;
  }
  CHECK(has_11_1);
  CHECK(has_3_2);
  CHECK(j["unit_tail"].size() > 0);

  r = run({"puregaps", "--n", "3", "--m", "3", "--check", "114,2,2,1"});
  REQUIRE(r.code == cli::kOk);
  const auto k = json::parse(r.out);
  CHECK(k["oracle"]["status"] == "skipped");
  CHECK(k["checks"][0]["pure"] == true);
}

TEST_CASE("csv output") {
  const auto r = run({"gaps", "--n", "2", "--m", "1", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.rfind("p_inf,p1\n0,1\n", 0) == 0);
  const auto g = run({"gamma", "--n", "2", "--m", "2", "--format", "csv"});
  CHECK(g.out.rfind("p_inf,p1,p2\n1,1,10\n", 0) == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"semigroup", "--n", "2", "--m", "2", "--threads", "3"},
        {"points", "--n", "3"},
        {"code", "--n", "2", "--G", "{\"inf\":5,\"pj\":[3,0]}"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
  }
  auto one = run({"semigroup", "--n", "2", "--m", "2", "--threads", "1"});
  auto four = run({"semigroup", "--n", "2", "--m", "2", "--threads", "4"});
  CHECK(one.out == four.out);
}
