#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using qci::cli::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qci::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome o = run(std::move(args));
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("analyze-curve json") {
  const Json doc = run_json({"analyze-curve", "--f", "x*y*z"});
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "analyze-curve");
  const Json& r = doc["results"];
  CHECK(r["tau"] == 3);
  CHECK(r["r"] == 1);
  CHECK(r["class"] == "free");
  CHECK(r["exponents"] == Json::array({1, 1}));
  CHECK(doc["diagnostics"]["k_star"] == 4);
  CHECK_FALSE(doc["diagnostics"].contains("timings_ms"));
}

TEST_CASE("analyze-qci json") {
  const Json doc = run_json({"analyze-qci", "--fa", "x", "--fb", "y^2", "--fc", "y*z"});
  const Json& r = doc["results"];
  CHECK(r["verdict"] == "analyzed");
  CHECK(r["t"] == 1);
  CHECK(r["r"] == 1);
  CHECK(r["c2_at_r"] == 1);
  CHECK(r["splits"] == false);
  CHECK(r["h1_at_m0"] == 1);
  CHECK(r["classification"]["tag"] == "c2-one");
  CHECK(r["classification"]["resolution_verified"] == true);

  const Json refused = run_json({"analyze-qci", "--fa", "x", "--fb", "y", "--fc", "z"});
  CHECK(refused["results"]["verdict"] == "refused");
  CHECK(refused["results"]["dimension_class"] == "empty");
}

TEST_CASE("input order is echoed") {
  const Json doc = run_json({"analyze-qci", "--fa", "y*z", "--fb", "x", "--fc", "y^2"});
  CHECK(doc["input"]["degrees"] == Json::array({2, 1, 2}));
  CHECK(doc["input"]["sorted_degrees"] == Json::array({1, 2, 2}));
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze-curve", "--f", "x^2 + y"}).code == 2);
  CHECK(run({"analyze-curve", "--f", "x^2 +"}).code == 2);
  CHECK(run({"analyze-curve"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"analyze-curve", "--f", "x"}).code == 3);
  CHECK(run({"--prime", "32004", "analyze-curve", "--f", "x*y*z"}).code == 3);
  CHECK(run({"sweep", "--family", "cubics", "--d-range", "3..4"}).code == 3);
  CHECK(run({"sweep", "--family", "lines", "--d-range", "3-4"}).code == 2);
  // 5 vanishes mod 5, leaving the zero polynomial
  CHECK(run({"--prime", "5", "analyze-curve", "--f", "5*x^7"}).code == 2);
}

TEST_CASE("text output carries the same numbers") {
  const Outcome text = run({"analyze-curve", "--f", "x*y*z"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("results.tau: 3\n") != std::string::npos);
  CHECK(text.out.find("results.class: free\n") != std::string::npos);
}

TEST_CASE("prime option") {
  const Json doc = run_json({"--prime", "31013", "analyze-curve", "--f", "x*y*z"});
  CHECK(doc["input"]["prime"] == 31013);
  CHECK(doc["results"]["tau"] == 3);
}

TEST_CASE("hilbert subcommand") {
  const Json doc = run_json({"hilbert", "--fa", "y*z", "--fb", "x*z", "--fc", "x*y"});
  const Json& rows = doc["results"]["hilbert"];
  REQUIRE(rows.size() >= 4);
  CHECK(rows[0]["h_quotient"] == 1);
  CHECK(rows[1]["h_quotient"] == 3);
  CHECK(rows[2]["h_quotient"] == 3);
  CHECK(doc["results"]["plateau"] == 3);
  CHECK(run({"hilbert"}).code == 2);
  const Outcome text = run({"hilbert", "--f", "x*y*z"});
  CHECK(text.code == 0);
  CHECK(text.out.find("plateau: 3") != std::string::npos);
}

TEST_CASE("sweep csv") {
  const Outcome o = run({"sweep", "--family", "lines", "--d-range", "3..5"});
  REQUIRE(o.code == 0);
  CHECK(o.out ==
        "family,d,prime,tau,r,c2,class,dpw_i,dpw_ii,status\n"
        "lines,3,32003,4,0,0,lines-through-point,pass,n/a,ok\n"
        "lines,4,32003,9,0,0,lines-through-point,pass,n/a,ok\n"
        "lines,5,32003,16,0,0,lines-through-point,pass,n/a,ok\n");
  const Outcome empty = run({"sweep", "--family", "lines", "--d-range", "5..4"});
  CHECK(empty.code == 0);
  CHECK(empty.out == std::string(qci::cli::kSweepHeader) + "\n");
}

TEST_CASE("sweep is independent of the number of jobs") {
  const Outcome serial = run({"sweep", "--family", "smooth-plus-line", "--d-range", "3..6", "--jobs", "1"});
  const Outcome parallel = run({"sweep", "--family", "smooth-plus-line", "--d-range", "3..6", "--jobs", "4"});
  REQUIRE(serial.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("json output is byte-identical across runs") {
  const Outcome a = run({"analyze-curve", "--f", "x^2*y*z + y^4", "--json"});
  const Outcome b = run({"analyze-curve", "--f", "x^2*y*z + y^4", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
