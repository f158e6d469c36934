#include "doctest.h"

#include <sstream>

#include <nlohmann/json.hpp>

#include "cmforge/cli.hpp"

using cmforge::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gznorm") {
  auto r = call({"gznorm", "--p", "47", "--D", "163", "--d", "39"});
  CHECK(r.code == 0);
  CHECK(r.out.find("norm = 217") != std::string::npos);
  r = call({"gznorm", "--p", "47", "--D", "19", "--d", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("norm = 1\n") != std::string::npos);
  r = call({"gznorm", "--p", "47", "--D", "39", "--d", "39"});
  CHECK(r.code == 2);
  CHECK(r.err.find("d and D must be distinct") != std::string::npos);
  CHECK(call({"gznorm", "--p", "2", "--D", "4", "--d", "7"}).code == 2);
  CHECK(call({"gznorm", "--p", "2", "--D", "15", "--d", "7", "--beta", "0"}).code == 2);
}

TEST_CASE("gznorm json and csv") {
  auto r = call({"--format", "json", "gznorm", "--p", "47", "--D", "163", "--d", "39"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "gznorm");
  CHECK(j["result"]["norm"] == 217);
  CHECK(j["result"]["log_norm"]["7"] == "8/1");
  CHECK(j["params"]["ramified_exponent"] == "of_mD");
  r = call({"--format", "csv", "gznorm", "--p", "47", "--D", "163", "--d", "39"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p,d,beta,D,mu,prime,exponent\n", 0) == 0);
  CHECK(r.out.find(",31,8/1") != std::string::npos);
}

TEST_CASE("crosscheck") {
  auto r = call({"crosscheck", "--p", "5", "--d", "19", "--D", "59"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = call({"crosscheck", "--p", "47", "--d", "39", "--D", "163"});
  CHECK(r.code == 2);
  CHECK(r.err.find("series data required") != std::string::npos);
  CHECK(call({"crosscheck", "--p", "2", "--d", "7", "--D", "7"}).code == 2);
  r = call({"--format", "json", "crosscheck", "--p", "2", "--d", "7", "--D", "15"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["status"] == "PASS");
}

TEST_CASE("crosscheck reports a failing variant") {
  const auto r = call({"--ramified", "of_m", "crosscheck", "--p", "2", "--d", "7", "--D", "15"});
  CHECK(r.code == 4);
}

TEST_CASE("classpoly") {
  auto r = call({"classpoly", "--p", "47", "--d", "39"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Y = X^4 - X^3 + 2*X^2 - 2*X + 1") != std::string::npos);
  CHECK(call({"classpoly", "--p", "47", "--d", "151"}).code == 5);
  r = call({"classpoly", "--p", "46", "--d", "39"});
  CHECK(r.code == 2);
  CHECK(r.err.find("46 is not prime") != std::string::npos);
  r = call({"--format", "json", "classpoly", "--p", "47", "--d", "39"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["coefficients"] == json::array({1, -2, 2, -1, 1}));
}

TEST_CASE("sset and heegner") {
  auto r = call({"sset", "--p", "47"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{-11, -19, -43, -67, -163}") != std::string::npos);
  CHECK(call({"sset", "--p", "37"}).code == 2);
  r = call({"heegner", "--d", "11", "--p", "47", "--beta", "41"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(47,41,9)") != std::string::npos);
  CHECK(r.out.find("(-41+sqrt(-11))/94") != std::string::npos);
  CHECK(call({"heegner", "--d", "11", "--p", "47", "--beta", "40"}).code == 2);
}

TEST_CASE("eval") {
  auto r = call({"eval", "--p", "2", "--tau", "0.0+1.0i"});
  CHECK(r.code == 0);
  CHECK(r.out.find("j*_2(tau) = 520") != std::string::npos);
  CHECK(call({"eval", "--p", "2", "--tau", "0.5-1i"}).code == 2);
  CHECK(call({"eval", "--p", "2", "--tau", "garbage"}).code == 2);
  CHECK(call({"eval", "--p", "11", "--tau", "0+1i"}).code == 2);
}

TEST_CASE("interpolate") {
  auto r = call({"interpolate", "--pairs", "0:1,1:1,-1:7,2:13,4:217", "--d", "39"});
  CHECK(r.code == 0);
  CHECK(r.out.find("X^4 - X^3 + 2*X^2 - 2*X + 1") != std::string::npos);
  CHECK(call({"interpolate", "--pairs", "0:1,1:1,-1:8,2:13,4:217"}).code == 6);
  CHECK(call({"interpolate", "--pairs", "0:1,0:2"}).code == 6);
  CHECK(call({"interpolate", "--pairs", "0:1,x"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"gznorm", "--p", "47"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

}
