#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/classify.hpp"
#include "schubert/sweep.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("classify 3214") {
  const ClassificationReport r = classify(P("3214"));
  CHECK(r.complexity == 1);
  CHECK(r.smooth);
  CHECK(r.profile == PatternCount{1, 0, 1});
  CHECK(r.poset == PosetVerdict::S3TimesBoolean);
  REQUIRE(r.polytope);
  CHECK(*r.polytope == PolytopeVerdict::HexagonTimesCube);
  CHECK(r.tower);
  CHECK(r.consistent);
  CHECK(r.disagreements.empty());
}

TEST_CASE("classify 3412") {
  const ClassificationReport r = classify(P("3412"));
  CHECK(r.complexity == 1);
  CHECK_FALSE(r.smooth);
  CHECK(r.profile == PatternCount{0, 1, 1});
  CHECK(r.poset == PosetVerdict::P3412TimesBoolean);
  REQUIRE(r.polytope);
  CHECK(*r.polytope == PolytopeVerdict::Q3412TimesCube);
  REQUIRE(r.witness);
  CHECK(r.witness->kind == FactorKind::Braid3412);
  CHECK(r.consistent);
}

TEST_CASE("classify 3142") {
  const ClassificationReport r = classify(P("3142"));
  CHECK(r.complexity == 0);
  CHECK(r.smooth);
  CHECK(r.distinct_letters);
  CHECK(r.poset == PosetVerdict::Boolean);
  REQUIRE(r.polytope);
  CHECK(*r.polytope == PolytopeVerdict::Cube);
  CHECK_FALSE(r.tower);
  CHECK(r.consistent);
}

TEST_CASE("classify 4321 and the polytope switch") {
  const ClassificationReport r = classify(P("4321"), {.polytope = false});
  CHECK(r.complexity == 3);
  CHECK(r.poset == PosetVerdict::None);
  CHECK_FALSE(r.polytope);
  CHECK(r.consistent);
}

TEST_CASE("distinct-letter words") {
  const auto word = distinct_letter_word(P("3142"));
  REQUIRE(word);
  CHECK(evaluate(*word, 4) == P("3142"));
  CHECK_FALSE(distinct_letter_word(P("321")));
  CHECK(has_distinct_letter_word(P("2341")));
}

TEST_CASE("theorem conditions agree on S4") {
  for (const auto& w : all_permutations(4))
    for (auto t : {Theorem::ComplexityZero, Theorem::SmoothOne, Theorem::SingularOne}) {
      const TheoremConditions c = theorem_conditions(w, t, true);
      INFO(w.to_string() << " " << c.describe());
      REQUIRE(c.agree());
    }
  const TheoremConditions c = theorem_conditions(P("3142"), Theorem::ComplexityZero, true);
  CHECK(c.items.size() == 7);
  CHECK(c.describe().rfind("(0)=1", 0) == 0);
}

TEST_CASE("classification is consistent on S5") {
  for (const auto& w : all_permutations(5)) {
    const ClassificationReport r = classify(w);
    INFO(w.to_string());
    REQUIRE(r.consistent);
  }
}

TEST_CASE("complexity-one list in S4") {
  const SuiteReport r = sweep(4, "complexity-one-list", {.jobs = 1});
  CHECK(r.ok());
  CHECK(r.summary.at("members") == "1432 2431 3214 3241 3412 4132 4213");
}

TEST_CASE("sweep guards and determinism") {
  CHECK_THROWS_AS(sweep(4, "no-such-suite"), std::invalid_argument);
  CHECK_THROWS_AS(sweep(8, "bott"), std::invalid_argument);
  CHECK_THROWS_AS(sweep(1, "bott"), std::invalid_argument);
  CHECK(resolve_jobs({.jobs = 3}) == 3);
  const SuiteReport a = sweep(4, "theorem-smooth", {.jobs = 1});
  const SuiteReport b = sweep(4, "theorem-smooth", {.jobs = 4});
  CHECK(a == b);
  CHECK(a.ok());
  const SuiteReport s1 = sweep(5, "lemma", {.jobs = 2, .samples = 300, .seed = 7});
  const SuiteReport s2 = sweep(5, "lemma", {.jobs = 1, .samples = 300, .seed = 7});
  CHECK(s1 == s2);
  CHECK(s1.checked == 300);
}

TEST_CASE("every suite passes on S4") {
  for (const auto& name : suite_names()) {
    const SuiteReport r = sweep(4, name, {.jobs = 2});
    INFO(name);
    CHECK(r.ok());
    CHECK(r.checked > 0);
  }
}
