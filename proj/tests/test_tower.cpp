#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schubert/permutation.hpp"
#include "schubert/poset.hpp"
#include "schubert/tower.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
const Permutation kWorked = evaluate(Word{{1, 2, 3, 4, 3}}, 5);

std::vector<long long> multiply(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}
}  // namespace

TEST_CASE("bott matrices") {
  CHECK(bott_matrix(Word{{1, 2}}).at(1, 2) == -1);
  CHECK(bott_matrix(Word{{1, 3}}).at(1, 2) == 0);
  const BottMatrix m = bott_matrix(Word{{1, 2, 1}});
  CHECK(m.size() == 3);
  CHECK(m.at(1, 2) == -1);
  CHECK(m.at(1, 3) == 2);
  CHECK(m.at(2, 3) == -1);
  CHECK_THROWS_AS(bott_matrix(Word{{1, 1}}), std::invalid_argument);
}

TEST_CASE("bott entries over all reduced words, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& word : reduced_words(w)) {
        const BottMatrix m = bott_matrix(word);
        const auto& L = word.letters;
        const bool distinct = std::set<int>(L.begin(), L.end()).size() == L.size();
        for (int j = 1; j <= m.size(); ++j)
          for (int k = j + 1; k <= m.size(); ++k) {
            const int a = L[static_cast<std::size_t>(j - 1)], b = L[static_cast<std::size_t>(k - 1)];
            const int expected = a == b ? 2 : (a - b == 1 || b - a == 1) ? -1 : 0;
            REQUIRE(m.at(j, k) == expected);
            if (distinct) REQUIRE(m.at(j, k) <= 0);
          }
      }
}

TEST_CASE("interval sequences of the examples") {
  const IntervalSequence a = interval_sequence(evaluate(Word{{1, 2, 1, 3}}, 4));
  CHECK(a.sets == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(a.block == 1);
  CHECK(a.smooth());
  CHECK(a.product_matches);

  const IntervalSequence b = interval_sequence(kWorked);
  CHECK(b.sets == std::vector<std::vector<int>>{{1}, {2}, {3, 4}});
  CHECK(b.block == 3);
  CHECK(b.product_matches);

  const IntervalSequence c = interval_sequence(P("3412"));
  CHECK(c.sets == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(c.block == 1);
  CHECK_FALSE(c.smooth());
  CHECK(c.block_word == Word{{2, 1, 3, 2}});

  CHECK_THROWS_AS(interval_sequence(P("3142")), std::domain_error);
  CHECK_THROWS_AS(interval_sequence(P("4321")), std::domain_error);
}

TEST_CASE("interval sequences of every complexity-one permutation, n <= 6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      if (complexity(w) != 1) continue;
      const IntervalSequence s = interval_sequence(w);
      std::set<int> seen;
      int blocks = 0;
      for (const auto& set : s.sets) {
        for (int x : set) REQUIRE(seen.insert(x).second);
        for (std::size_t i = 1; i < set.size(); ++i) REQUIRE(set[i] == set[i - 1] + 1);
        blocks += set.size() > 1;
      }
      REQUIRE(blocks == 1);
      REQUIRE(s.sets[static_cast<std::size_t>(s.block - 1)].size() == (s.smooth() ? 2u : 3u));
      REQUIRE(s.smooth() == is_smooth(w));
      Permutation product = Permutation::identity(n);
      int total = 0;
      for (const auto& f : s.factors) {
        product = compose(product, f);
        total += length(f);
      }
      REQUIRE(product == w);
      REQUIRE(total == length(w));
      REQUIRE(s.product_matches);
    }
}

TEST_CASE("rank polynomials of complexity-one intervals, n <= 6") {
  const std::vector<long long> hexagon{1, 2, 2, 1}, q3412{1, 3, 5, 4, 1};
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      if (complexity(w) != 1) continue;
      std::vector<long long> expected = is_smooth(w) ? hexagon : q3412;
      const int cube = length(w) - (is_smooth(w) ? 3 : 4);
      for (int i = 0; i < cube; ++i) expected = multiply(expected, {1, 1});
      REQUIRE(rank_polynomial(interval(Permutation::identity(n), w)) == expected);
    }
}

TEST_CASE("flag tower vectors") {
  const FlagTowerData t = flag_tower_vectors(interval_sequence(kWorked));
  CHECK(t.fiber_sizes == std::vector<int>{1, 1, 2});
  CHECK(t.at(1, 2, 1) == std::vector<int>{-1});
  CHECK(t.at(1, 3, 1) == std::vector<int>{0});
  CHECK(t.at(1, 3, 2) == std::vector<int>{0});
  CHECK(t.at(2, 3, 1) == std::vector<int>{-1});
  CHECK(t.at(2, 3, 2) == std::vector<int>{0});
  CHECK(t.vectors.size() == 5);
  CHECK_THROWS_AS(t.at(1, 2, 2), std::out_of_range);

  CHECK(flag_tower_vectors({{1}, {3}}).at(1, 2, 1) == std::vector<int>{0});
  CHECK(flag_tower_vectors({{1}, {2}}).at(1, 2, 1) == std::vector<int>{-1});
  CHECK_THROWS_AS(flag_tower_vectors({{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(flag_tower_vectors(std::vector<std::vector<int>>{{}}), std::invalid_argument);
}

TEST_CASE("flag tower entries lie in {-1,0,1,2}") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      if (complexity(w) != 1) continue;
      for (const auto& v : flag_tower_vectors(interval_sequence(w)).vectors)
        for (int x : v.values) REQUIRE((x >= -1 && x <= 2));
    }
}

TEST_CASE("cohomology generators of the worked example") {
  const CohomologyPresentation c = cohomology_presentation(kWorked);
  REQUIRE(c.variables == std::vector<std::string>{"y1_1", "y1_2", "y2_1", "y2_2", "y3_1", "y3_2", "y3_3"});
  const std::size_t N = 7;
  auto y = [&](std::size_t i) { return Polynomial::variable(N, i); };
  const Polynomial one = Polynomial::constant(N, 1);
  // Indices: y1_1=0 y1_2=1 y2_1=2 y2_2=3 y3_1=4 y3_2=5 y3_3=6
  const Polynomial I1 = (one - y(0)) * (one - y(1)) - one;
  const Polynomial I2 = (one - y(2)) * (one - y(3)) - (one + y(0));
  const Polynomial I3 = (one - y(4)) * (one - y(5)) * (one - y(6)) - (one + y(2));
  REQUIRE(c.raw.size() == 3);
  CHECK(c.raw[0] == I1);
  CHECK(c.raw[1] == I2);
  CHECK(c.raw[2] == I3);
  for (const auto& rel : c.relations) {
    const int d = rel.degree();
    CHECK(rel == rel.homogeneous_part(d));
  }

  REQUIRE(c.normalized_variables == std::vector<std::string>{"y1", "y2", "y3", "y4"});
  auto z = [](std::size_t i) { return Polynomial::variable(4, i - 1); };
  const std::vector<Polynomial> expected{
      z(1) * z(1),
      z(2) * (z(1) + z(2)),
      (z(2) + z(3)) * z(3) + (z(2) + z(3) + z(4)) * z(4),
      z(3) * z(4) * (z(2) + z(3) + z(4)),
  };
  REQUIRE(c.normalized.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(c.normalized[i] == expected[i].sign_normalized());
  CHECK(c.normalized[0].to_string(c.normalized_variables) == "y1^2");

  CHECK_THROWS_AS(cohomology_presentation(P("3142")), std::domain_error);
  CHECK_THROWS_AS(cohomology_presentation(P("3412")), std::domain_error);
}

TEST_CASE("cohomology presentations exist for every smooth complexity-one permutation, n <= 5") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      if (complexity(w) != 1 || !is_smooth(w)) continue;
      const CohomologyPresentation c = cohomology_presentation(w);
      REQUIRE(c.raw.size() == c.sequence.sets.size());
      REQUIRE(static_cast<int>(c.normalized_variables.size()) == length(w) - 1);
      for (const auto& g : c.normalized) REQUIRE(g.degree() >= 2);
    }
}

TEST_CASE("partition presentation") {
  const PartitionPresentation p = partition_presentation({2, 3, 5, 5, 5});
  CHECK(p.w == P("23541"));
  CHECK(p.w == kWorked);
  REQUIRE(p.generators.size() == 5);
  const Polynomial x1 = Polynomial::variable(5, 0);
  CHECK(p.generators[0] == x1 * x1);
  CHECK(p.variables == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});

  const PartitionPresentation id = partition_presentation({1, 2, 3, 4});
  CHECK(id.w == Permutation::identity(4));
  for (const auto& g : id.generators) CHECK(g.degree() == 1);

  CHECK_THROWS_AS(partition_presentation({3, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(partition_presentation({1, 1, 3}), std::domain_error);
}

TEST_CASE("substitution identities") {
  const auto ids = substitution_identities(kWorked);
  CHECK(ids.size() == 8);
  for (const auto& id : ids) {
    INFO(id.name);
    CHECK(id.holds());
  }
  CHECK(verify_substitution_identity(kWorked));

  PolynomialIdentity broken = ids.front();
  Polynomial::Exponents e(4, 0);
  e[0] = 2;
  broken.lhs.add_term(e, 1);
  CHECK_FALSE(broken.holds());

  CHECK_THROWS_AS(substitution_identities(P("3214")), std::invalid_argument);
}
