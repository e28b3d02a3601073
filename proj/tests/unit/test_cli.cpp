#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "gopkit/cli.hpp"

using gopkit::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gop, rank, threshold, count") {
  CHECK(call({"gop", "11:6,3,2,5,8,10,9,4,7,6,5"}).out == "[2,2,1,3]@11\n");
  const Result t = call({"threshold", "[2,2,1,3]@11"});
  CHECK(t.code == 0);
  CHECK(t.out == "11:1,0,0,0,0,6,5,7,9,10,8\nrank=25938474637\n");
  CHECK(call({"count", "[2,2,1,3]@11"}).out == "11180400\napprox 1.11e7\n");
  CHECK(call({"count", "[2]@2"}).out == "1\n");
  const auto j = nlohmann::json::parse(call({"count", "[5,2,10,8,15,2,3]@50", "--out", "json"}).out);
  CHECK(j["count"] == "124065425615280788411509764670729431180399083520000000000000000");
}

TEST_CASE("rank/unrank round trip is byte-exact") {
  for (const char* literal : {"11:6,3,2,5,8,10,9,4,7,6,5", "1:0", "4:3,3,3,3", "5:0,1,2,3,4"}) {
    const Result r = call({"rank", literal});
    REQUIRE(r.code == 0);
    const std::string n = std::string(literal).substr(0, std::string(literal).find(':'));
    const Result u = call({"unrank", "--n", n, "--rank", r.out.substr(0, r.out.size() - 1)});
    CHECK(u.out == std::string(literal) + "\n");
  }
}

TEST_CASE("analyze") {
  const Result r = call({"analyze", "8:1,0,0,3,5,6,7,4"});
  CHECK(r.out ==
        "function 8:1,0,0,3,5,6,7,4\n"
        "gop [2,1,4]@8\n"
        "components 3\n"
        "component 0: period 2 cycle {0,1} component {0,1,2} attractive\n"
        "component 1: period 1 cycle {3} component {3} repulsive\n"
        "component 2: period 4 cycle {4,5,6,7} component {4,5,6,7} repulsive\n");
  const auto j = nlohmann::json::parse(call({"analyze", "3:1,0,0", "--out", "json"}).out);
  CHECK(j["gop"] == "[2]@3");
  CHECK(j["components"][0]["component"].size() == 3);
}

TEST_CASE("order") {
  const Result r = call({"order", "--n", "5", "--out", "csv"});
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  std::getline(lines, line);
  CHECK(line == "gop,modulus,modulus_minus_first");
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 31);
  CHECK(rows.front() == "\"[1]\",1,0");
  CHECK(rows[4] == "\"[1,1,1,1]\",4,3");
  CHECK(rows.back() == "\"[5]\",5,0");
  CHECK(call({"order", "--n", "21"}).code == 1);
  CHECK(call({"order", "--n", "4"}).out.rfind("gop      modulus  modulus-w1\n[1]      1        0\n", 0) == 0);
  CHECK(call({"order", "--n", "5"}).out.find("[1~3,2]") != std::string::npos);
}

TEST_CASE("enumerate and rigid") {
  const Result e = call({"enumerate", "--n", "3", "--quiet"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("gop,count\n\"[1]@3\",9\n", 0) == 0);
  CHECK(e.err.empty());
  const Result p = call({"enumerate", "--n", "4", "--partitions", "3"});
  CHECK(p.err.find("partition 3/3") != std::string::npos);
  const auto j = nlohmann::json::parse(
      call({"enumerate", "--n", "5", "--filter", "rigid:1:1", "--out", "json", "--quiet"}).out);
  CHECK(j["total"] == "259");
  CHECK(call({"enumerate", "--n", "11"}).code == 1);
  CHECK(call({"enumerate", "--n", "11"}).err.find("--allow-large") != std::string::npos);
  CHECK(call({"enumerate", "--n", "4", "--filter", "rigid:x:1"}).code == 2);

  const Result r = call({"rigid", "--n", "10", "--alphas", "20,9,5,2,1", "--q", "66"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q max_period max_modulus gops functions\n66 4 10 37 952228\n") != std::string::npos);
  const Result csv = call({"rigid", "--n", "5", "--alphas", "1", "--q", "1", "--out", "csv", "--quiet"});
  CHECK(csv.out.rfind("gop,count\n\"[1]@5\",95\n", 0) == 0);
  CHECK(csv.err.find("1 2 5 10 259") != std::string::npos);
}

TEST_CASE("discretize and dpcycle") {
  const Result t = call({"discretize", "--map", "logistic", "--n", "100"});
  CHECK(t.out.find("100 6 {11,39,94,18,58,96} 72\n") != std::string::npos);
  const auto j = nlohmann::json::parse(call({"discretize", "--n", "9", "--out", "json"}).out);
  CHECK(j["denominator"] == "n-1");
  CHECK(j["cycles"].size() == 3);
  CHECK(call({"discretize", "--n", "9", "--out", "function"}).out == "9:0,3,6,7,8,7,6,3,0\n");
  CHECK(call({"discretize", "--map", "tentpow", "--n", "9"}).code == 2);
  CHECK(call({"discretize", "--map", "tentpow", "--ell", "3", "--n", "9"}).code == 1);
  const Result d = call({"dpcycle", "--seeds", "3", "--map", "tentpow", "--ell", "1"});
  CHECK(d.out == "length least hits\n1 0 3\n");
}

TEST_CASE("verify") {
  const Result r = call({"verify", "--suite", "formulas", "--n-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(call({"verify", "--suite", "formulas", "--n-max", "11"}).code == 1);
}

TEST_CASE("usage and domain errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  const Result bad = call({"gop", "3:1,x,0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 4") != std::string::npos);
  CHECK(call({"gop", "3:1,0,7"}).code == 2);
  CHECK(call({"unrank", "--n", "3", "--rank", "28"}).code == 1);
  CHECK(call({"unrank", "--n", "3", "--rank", "-1"}).code == 2);
  CHECK(call({"threshold", "[2,2]@3"}).code == 2);
  CHECK(call({"unrank", "--n", "2", "--rank", "5"}).code == 1);
  CHECK(call({"--version"}).out.find("gopkit ") == 0);
  const Result help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}
