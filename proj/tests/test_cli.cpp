#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recip/cli.hpp"
#include "recip/compositions.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace recip;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("count emits the census") {
  const Run r = run({"count", "--t", "7", "--D", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"t,D,n,count,source", "7,1,0,1,dp", "7,1,1,21,dp",
                                                 "7,1,2,35,dp", "7,1,3,7,dp"});

  const Run table = run({"count", "--t", "7", "--D", "1"});
  CHECK(table.code == 0);
  CHECK(lines(table.out).size() == 5);

  const Run only = run({"count", "--t", "7", "--D", "1", "--n", "2", "--format", "csv"});
  CHECK(lines(only.out) == std::vector<std::string>{"t,D,n,count,source", "7,1,2,35,dp"});
}

TEST_CASE("json-lines counts round-trip exactly") {
  const Run r = run({"count", "--t-max", "150", "--D", "2", "--format", "json-lines"});
  REQUIRE(r.code == 0);
  std::size_t records = 0;
  for (const auto& l : lines(r.out)) {
    const auto j = nlohmann::json::parse(l);
    CHECK(j["schema"] == "census");
    const BigCount parsed(j["count"].get<std::string>());
    CHECK(parsed == count_exact_excursions(j["t"].get<unsigned>(), j["n"].get<unsigned>(), 2));
    ++records;
  }
  CHECK(records > 150);
}

TEST_CASE("output is reproducible and thread independent") {
  const Run a = run({"count", "--t-max", "80", "--D", "3", "--format", "csv"});
  const Run b = run({"count", "--t-max", "80", "--D", "3", "--format", "csv", "--threads", "6"});
  CHECK(a.out == b.out);
  CHECK(a.out == run({"count", "--t-max", "80", "--D", "3", "--format", "csv"}).out);
}

TEST_CASE("alpha and constants") {
  const Run r = run({"alpha", "--D", "2", "--digits", "12", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"D,lo,hi,digits", "2,1.618033988749,1.618033988750,12"});
  CHECK(run({"alpha", "--D", "1"}).code == 2);
  CHECK(run({"alpha"}).code == 2);

  const Run c = run({"constants", "--D", "2", "--digits", "8", "--format", "csv"});
  CHECK(c.code == 0);
  const auto ls = lines(c.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[2] == "d,2,0.72360679,0.72360680,8");
  CHECK(ls[3] == "two_excursion_limit,2,0.32360679,0.32360680,8");
  CHECK(ls[4] == "depth_one_limit,1,0.50000000,0.50000000,8");
}

TEST_CASE("table1 and bounds") {
  const Run r = run({"table1", "--t", "20", "--D", "2", "--format", "json-lines"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(nlohmann::json::parse(ls[0])["count"] == "524288");
  CHECK(nlohmann::json::parse(ls[2])["count"] == "190");
  CHECK(nlohmann::json::parse(ls[1])["digits"] == 20);

  const Run b = run({"bounds", "--t-max", "30", "--D", "3", "--format", "csv"});
  CHECK(b.code == 0);
  CHECK(b.out.find("fail") == std::string::npos);
  CHECK(run({"bounds", "--t", "5", "--t-max", "6", "--D", "3"}).code == 2);
}

TEST_CASE("enumerate") {
  const Run r = run({"enumerate", "--t", "3", "--format", "csv"});
  CHECK(lines(r.out) == std::vector<std::string>{"index,t,composition", "0,3,1+1+1", "1,3,2+1",
                                                 "2,3,1+2", "3,3,3"});
  const Run w = run({"enumerate", "--t", "5", "--n", "1", "--D", "2", "--words", "--format", "csv"});
  CHECK(lines(w.out).size() == 9);
  CHECK(run({"enumerate", "--t", "21"}).code == 2);
}

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", "--suite", "matrices", "--format", "csv"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find(",fail,") == std::string::npos);

  const Run small = run({"verify", "--suite", "partition", "--oracle-max-t", "8"});
  CHECK(small.code == 0);

  const Run bad = run({"verify", "--suite", "thm34", "--tolerance", "1e-12"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("FAILED thm34.limit") != std::string::npos);

  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--t", "3", "--format", "xml"}).code == 2);
  const Run r = run({"count", "--t", "3", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "recipgeo_cli_test.csv";
  const Run r = run({"count", "--t", "4", "--D", "2", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "t,D,n,count,source\n4,2,0,5,dp\n4,2,1,3,dp\n");
  std::filesystem::remove(path);
}
