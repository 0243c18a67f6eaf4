// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails. Time budgets are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/cli.hpp"
#include "schubert/face_graph.hpp"
#include "schubert/polytope.hpp"
#include "schubert/sweep.hpp"
#include "schubert/tower.hpp"

using namespace schubert;

namespace {

// Seconds.
constexpr double kBudgetFVector = 30.0;  // each polytope
constexpr double kBudgetQuick = 1.0;
constexpr double kBudgetTheoremsS5 = 300.0;
constexpr double kBudgetTheoremsS6 = 600.0;
constexpr double kBudgetFaceOracle = 300.0;
constexpr double kBudgetLemma = 120.0;
constexpr double kBudgetProduct = 300.0;
constexpr double kBudgetCounting = 120.0;
constexpr double kBudgetRank = 120.0;

constexpr int kFaceSamplesS5 = 200;
constexpr int kLemmaSamplesS5 = 10000;
constexpr int kProductSamplesS5 = 200;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Permutation P(const char* s) { return parse_permutation(s); }

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

// Runs a suite and folds it into the outcome; returns the report.
SuiteReport suite(Outcome& o, int n, const std::string& name, SweepOptions opts = {}) {
  const SuiteReport r = sweep(n, name, opts);
  std::string tag = name + " n=" + std::to_string(n) + " checked=" + std::to_string(r.checked);
  if (!r.ok()) {
    tag += " failed=" + std::to_string(r.failed);
    if (!r.counterexamples.empty()) tag += " first=" + r.counterexamples.front().subject + " " + r.counterexamples.front().detail;
  }
  o.need(r.ok(), tag);
  if (r.ok()) o.detail += (o.detail.empty() ? "" : "; ") + tag;
  return r;
}

Outcome criterion1() {
  Outcome o;
  const std::vector<std::pair<const char*, const char*>> cases{{"35412", "(60,123,82,19,1)"},
                                                              {"45132", "(60,122,81,19,1)"}};
  for (const auto& [w, expected] : cases) {
    const auto t0 = Clock::now();
    int code = -1;
    std::string got = cli_out({"polytope", "e", w, "--f-vector"}, &code);
    const double dt = seconds_since(t0);
    if (!got.empty() && got.back() == '\n') got.pop_back();
    o.need(code == cli::kSuccess && got == expected, std::string(w) + " gave " + got);
    o.need(dt < kBudgetFVector, std::string(w) + " over time budget");
    if (got == expected) o.detail += (o.detail.empty() ? "" : "; ") + std::string(w) + " " + got;
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const SuiteReport r = sweep(4, "complexity-one-list", {});
  o.need(r.summary.at("members") == "1432 2431 3214 3241 3412 4132 4213", "members " + r.summary.at("members"));
  o.need(r.summary.at("smooth") == "1432 2431 3214 3241 4132 4213", "smooth " + r.summary.at("smooth"));
  o.need(r.summary.at("singular") == "3412", "singular " + r.summary.at("singular"));
  o.need(r.ok(), "suite reported failures");
  if (o.ok) o.detail = "7 members, 3412 singular";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Permutation x = P("1324"), y = P("1342"), e = Permutation::identity(4), w = P("1432");
  o.need(upper_T(x, x, y) == TranspositionSet{{3, 4}}, "upper_T(x,[x,y])");
  o.need(upper_T(y, e, w) == TranspositionSet{{2, 3}}, "upper_T(y,[e,w])");
  o.need(lower_T(x, e, w) == TranspositionSet{{2, 3}}, "lower_T(x,[e,w])");
  o.need(!is_face(x, y, e, w), "is_face should be false");
  const IntervalFaceGraph g = face_graph(x, y, e, w);
  o.need(g.classes == std::vector<std::vector<int>>{{1}, {2}, {3, 4}}, "classes");
  if (o.ok) o.detail = "sets {(3,4)},{(2,3)},{(2,3)}; not a face";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Permutation w = evaluate(Word{{1, 2, 3, 4, 3}}, 5);
  const FlagTowerData t = flag_tower_vectors(interval_sequence(w));
  const std::vector<std::vector<int>> got{t.at(1, 2, 1), t.at(1, 3, 1), t.at(1, 3, 2), t.at(2, 3, 1), t.at(2, 3, 2)};
  o.need(got == std::vector<std::vector<int>>{{-1}, {0}, {0}, {-1}, {0}}, "tower vectors");

  const CohomologyPresentation c = cohomology_presentation(w);
  const std::size_t N = 7;
  auto y = [&](std::size_t i) { return Polynomial::variable(N, i); };
  const Polynomial one = Polynomial::constant(N, 1);
  const std::vector<Polynomial> raw{(one - y(0)) * (one - y(1)) - one,
                                    (one - y(2)) * (one - y(3)) - (one + y(0)),
                                    (one - y(4)) * (one - y(5)) * (one - y(6)) - (one + y(2))};
  o.need(c.raw == raw, "raw generators");
  auto z = [](std::size_t i) { return Polynomial::variable(4, i - 1); };
  const std::vector<Polynomial> normalized{z(1) * z(1), z(2) * (z(1) + z(2)),
                                           (z(2) + z(3)) * z(3) + (z(2) + z(3) + z(4)) * z(4),
                                           z(3) * z(4) * (z(2) + z(3) + z(4))};
  o.need(c.normalized == normalized, "normalized generators");
  o.need(verify_substitution_identity(w), "substitution identities");
  if (o.ok) o.detail = "vectors (-1,0,0,-1,0); 3 raw and 4 normalized generators match";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const char* name : {"theorem-1", "theorem-smooth", "theorem-singular"})
    suite(o, 5, name, {.include_polytopes = true});
  o.need(seconds_since(t0) < kBudgetTheoremsS5, "S5 over time budget");
  const auto t1 = Clock::now();
  for (const char* name : {"theorem-1", "theorem-smooth", "theorem-singular"})
    suite(o, 6, name, {.include_polytopes = false});
  o.need(seconds_since(t1) < kBudgetTheoremsS6, "S6 over time budget");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = Clock::now();
  suite(o, 4, "face-oracle");
  suite(o, 5, "face-oracle", {.samples = kFaceSamplesS5});
  o.need(seconds_since(t0) < kBudgetFaceOracle, "over time budget");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = Clock::now();
  suite(o, 4, "lemma");
  suite(o, 5, "lemma", {.samples = kLemmaSamplesS5});
  o.need(seconds_since(t0) < kBudgetLemma, "over time budget");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto t0 = Clock::now();
  suite(o, 4, "product-prop");
  suite(o, 5, "product-prop", {.samples = kProductSamplesS5});
  o.need(seconds_since(t0) < kBudgetProduct, "over time budget");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string counts;
  for (int n = 3; n <= 6; ++n) {
    const SuiteReport r = sweep(n, "counting-bijection", {});
    const std::string a = r.summary.at("profile-101-in-n"), b = r.summary.at("profile-011-in-n+1");
    o.need(r.ok() && a == b, "n=" + std::to_string(n) + " " + a + " vs " + b);
    counts += (counts.empty() ? "" : " ") + a;
  }
  o.need(seconds_since(t0) < kBudgetCounting, "over time budget");
  if (o.ok) o.detail = "counts " + counts;
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 3; n <= 6; ++n) suite(o, n, "rank-polynomial");
  o.need(seconds_since(t0) < kBudgetRank, "over time budget");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"f-vectors of Q_{e,35412} and Q_{e,45132}", criterion1},
      {"S4 complexity-one census", criterion2},
      {"face-criterion worked example", criterion3},
      {"flag tower integers and cohomology generators", criterion4},
      {"theorem equivalence suites", criterion5},
      {"face enumeration oracle", criterion6},
      {"transposition-set lemma", criterion7},
      {"product proposition", criterion8},
      {"counting bijection", criterion9},
      {"rank polynomial factorization", criterion10},
  };
  const std::vector<double> quick{0, kBudgetQuick, kBudgetQuick, kBudgetQuick};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (i >= 1 && i <= 3) o.need(dt < quick[i], "over time budget");
    all = all && o.ok;
    std::printf("%s %zu %s (%.2fs): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), dt,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
