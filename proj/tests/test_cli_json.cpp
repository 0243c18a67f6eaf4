#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "schubert/cli.hpp"
#include "schubert/json_io.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

template <class T>
T round_trip(const T& value) {
  const std::string text = Json(value).dump();
  return Json::parse(text).get<T>();
}
}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"classify", "3312"}).code == cli::kUsageError);
  CHECK(run({"tower", "3142"}).code == cli::kUsageError);
  CHECK(run({"cohomology"}).code == cli::kUsageError);
  CHECK(run({"verify", "--suite", "nope", "--n", "4"}).code == cli::kUsageError);
  CHECK(run({"classify", "--help"}).code == cli::kSuccess);
  for (const char* verb : {"classify", "report", "enumerate", "polytope", "faces", "hasse", "bott", "tower",
                           "cohomology", "verify"}) {
    const Run r = run({verb, "--help"});
    INFO(verb);
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
}

TEST_CASE("classify and report text") {
  const Run r = run({"classify", "3412"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("complexity: 1") != std::string::npos);
  CHECK(r.out.find("singular") != std::string::npos);
  const Run s = run({"report", "23541"});
  CHECK(s.code == cli::kSuccess);
  CHECK(s.out.find("normalized generators") != std::string::npos);
}

TEST_CASE("enumerate complexity one in S4") {
  const Run r = run({"enumerate", "--n", "4", "--filter", "complexity=1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "1432\n2431\n3214\n3241\n3412\n4132\n4213\n");
  const Run s = run({"enumerate", "--n", "4", "--filter", "complexity=1", "--filter", "smooth=0"});
  CHECK(s.out == "3412\n");
  CHECK(run({"enumerate", "--n", "4", "--filter", "colour=1"}).code == cli::kUsageError);
}

TEST_CASE("polytope f-vector") {
  const Run r = run({"polytope", "e", "35412", "--f-vector"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "(60,123,82,19,1)\n");
  const Run off = run({"polytope", "e", "321", "--format", "off"});
  CHECK(off.out.rfind("OFF", 0) == 0);
  CHECK(run({"polytope", "3142", "2413"}).code == cli::kUsageError);
}

TEST_CASE("faces, hasse and bott output") {
  const Run g = run({"faces", "e", "1432", "--graph", "1324", "1342"});
  CHECK(g.code == cli::kSuccess);
  CHECK(g.out.find("\"3,4\"") != std::string::npos);
  const Run f = run({"faces", "e", "321"});
  CHECK(std::count(f.out.begin(), f.out.end(), '\n') == 13);
  CHECK(run({"hasse", "e", "321"}).out.find("digraph") != std::string::npos);
  const Run b = run({"bott", "1,2,1"});
  CHECK(b.code == cli::kSuccess);
  CHECK(b.out.find(" 2") != std::string::npos);
  CHECK(run({"bott", "1,1"}).code == cli::kUsageError);
}

TEST_CASE("machine output is stable across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"classify", "3412", "--json"},
                                                                {"polytope", "e", "4132", "--format", "json"},
                                                                {"cohomology", "23541", "--json"},
                                                                {"hasse", "e", "3412"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--suite", "complexity-one-list", "--n", "4", "--jobs", "1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.rfind("PASS complexity-one-list n=4", 0) == 0);
  const Run j = run({"verify", "--suite", "bott", "--n", "4", "--json"});
  CHECK(j.code == cli::kSuccess);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed.is_object());
  CHECK(parsed.get<SuiteReport>().ok());
  const Run both = run({"verify", "--suite", "all", "--n", "3", "--json"});
  CHECK(both.code == cli::kSuccess);
  CHECK(Json::parse(both.out).is_array());
}

TEST_CASE("JSON round trips") {
  CHECK(round_trip(P("3412")) == P("3412"));
  CHECK(round_trip(Word{{1, 2, 1}}) == Word{{1, 2, 1}});
  CHECK(round_trip(pattern_profile(P("4231"))) == pattern_profile(P("4231")));
  const auto q = bruhat_interval_polytope(Permutation::identity(4), P("3412"));
  CHECK(round_trip(q) == q);
  const auto m = bott_matrix(Word{{1, 2, 3, 2}});
  CHECK(round_trip(m) == m);
  const auto coh = cohomology_presentation(P("23541"));
  CHECK(round_trip(coh) == coh);
  CHECK(round_trip(coh.sequence) == coh.sequence);
  CHECK(round_trip(coh.tower) == coh.tower);
  CHECK(round_trip(coh.normalized[2]) == coh.normalized[2]);
  for (const char* w : {"3214", "3412", "3142", "4321"}) {
    const auto r = classify(P(w));
    CHECK(round_trip(r) == r);
  }
  const auto s = sweep(4, "complexity-one-list", {.jobs = 1});
  CHECK(round_trip(s) == s);
  CHECK(round_trip(Counterexample{"3412", "x"}) == Counterexample{"3412", "x"});
}

TEST_CASE("JSON shape of a classification") {
  const Json j = Json::parse(run({"classify", "3214", "--json"}).out);
  CHECK(j.at("complexity") == 1);
  CHECK(j.at("poset") == "s3-x-boolean");
  CHECK(j.at("polytope") == "hexagon-x-cube");
}

TEST_CASE("config file supplies defaults, flags override") {
  const std::string path = "schubert_cli_test.toml";
  {
    std::ofstream f(path);
    f << "[verify]\nn = 4\nsuite = \"bott\"\n";
  }
  const Run r = run({"verify", "--config", path});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.rfind("PASS bott n=4", 0) == 0);
  const Run o = run({"verify", "--config", path, "--n", "3"});
  CHECK(o.out.rfind("PASS bott n=3", 0) == 0);
  std::remove(path.c_str());
}
