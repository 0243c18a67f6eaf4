#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schubert/permutation.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(P("3412").one_line()[0] == 3);
  CHECK(P("[3,4,1,2]") == P("3412"));
  CHECK(parse_permutation("e", 4) == Permutation::identity(4));
  CHECK_THROWS_AS(parse_permutation("e"), std::invalid_argument);
  CHECK_THROWS_AS(P("3312"), std::invalid_argument);
  CHECK_THROWS_AS(P("3402"), std::invalid_argument);
  CHECK(Permutation::identity(10).to_string() == "[1,2,3,4,5,6,7,8,9,10]");
  CHECK(parse_word("s2 s1 s3 s2") == Word{{2, 1, 3, 2}});
  CHECK(parse_word("2 1 3 2") == Word{{2, 1, 3, 2}});
  CHECK(parse_word("2,1,3,2") == Word{{2, 1, 3, 2}});
  CHECK(parse_word("e").letters.empty());
  CHECK(Word{{1, 2}}.to_string() == "s1 s2");
}

TEST_CASE("compose") {
  const Permutation w = P("2413");
  CHECK(compose(Permutation::identity(4), w) == w);
  CHECK(compose(Permutation::simple(3, 1), Permutation::simple(3, 1)) == Permutation::identity(3));
  const Permutation s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  CHECK(compose(compose(s1, s2), s1) == P("321"));
  CHECK_THROWS_AS(compose(P("12"), P("123")), std::invalid_argument);
  // (u o v)(i) = u(v(i))
  const Permutation u = P("3142"), v = P("2431");
  const Permutation uv = compose(u, v);
  for (int i = 1; i <= 4; ++i) CHECK(uv(i) == u(v(i)));
}

TEST_CASE("word evaluation conventions") {
  CHECK(evaluate(Word{{1, 2, 3, 4, 3}}, 5) == P("23541"));
  CHECK(evaluate(Word{{1, 2, 1, 3}}, 4) == P("3241"));
  CHECK(evaluate(Word{{2, 1, 3, 2}}, 4) == P("3412"));
  CHECK_FALSE(is_reduced(Word{{1, 1}}, 2));
  CHECK_THROWS(evaluate(Word{{4}}, 4));
}

TEST_CASE("length") {
  CHECK(length(P("1234")) == 0);
  CHECK(length(P("4132")) == 4);
  CHECK(length(P("35412")) == 7);
}

TEST_CASE("pattern counts") {
  CHECK(count_pattern(P("4231"), P("321")) == 2);
  CHECK(count_pattern(P("1234"), P("321")) == 0);
  CHECK(count_pattern(P("3412"), P("3412")) == 1);
  CHECK(pattern_profile(P("3412")) == PatternCount{0, 1, 1});
  CHECK(pattern_profile(P("1432")) == PatternCount{1, 0, 1});
  CHECK(pattern_profile(P("4321")) == PatternCount{4, 0, 4});
}

TEST_CASE("support and complexity") {
  CHECK(support(Permutation::identity(4)).empty());
  CHECK(support(P("4132")) == std::vector<int>{1, 2, 3});
  CHECK(support(P("321")) == std::vector<int>{1, 2});
  CHECK(complexity(P("3142")) == 0);
  CHECK(complexity(P("4132")) == 1);
  CHECK(complexity(P("4321")) == 3);
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(P("3214")));
  CHECK_FALSE(is_smooth(P("3412")));
  CHECK_FALSE(is_smooth(P("4231")));
  CHECK(is_smooth(Permutation::identity(4)));
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(P("321")) == std::vector<Word>{Word{{1, 2, 1}}, Word{{2, 1, 2}}});
  CHECK(reduced_words(P("3412")) == std::vector<Word>{Word{{2, 1, 3, 2}}, Word{{2, 3, 1, 2}}});
  CHECK(reduced_words(Permutation::identity(3)) == std::vector<Word>{Word{}});
}

TEST_CASE("single repetition factor") {
  const auto f = find_single_repetition_factor(P("3214"), FactorKind::Braid321);
  REQUIRE(f);
  CHECK(f->word == Word{{1, 2, 1}});
  CHECK(f->position == 1);
  CHECK(f->base == 1);

  const auto g = find_single_repetition_factor(P("3412"), FactorKind::Braid3412);
  REQUIRE(g);
  CHECK(g->word == Word{{2, 1, 3, 2}});
  CHECK(g->position == 1);
  CHECK(g->base == 1);

  CHECK_FALSE(find_single_repetition_factor(P("3142"), FactorKind::Braid321));
  CHECK_FALSE(find_single_repetition_factor(P("3412"), FactorKind::Braid321));
  CHECK_FALSE(find_single_repetition_factor(P("3214"), FactorKind::Braid3412));

  const auto h = find_single_repetition_factor(P("23541"), FactorKind::Braid321);
  REQUIRE(h);
  CHECK(h->word == Word{{1, 2, 3, 4, 3}});
  CHECK(h->position == 3);
  CHECK(h->base == 3);
}

TEST_CASE("inverse is an involution preserving length") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      CHECK(w.inverse().inverse() == w);
      CHECK(length(w) == length(w.inverse()));
    }
}

TEST_CASE("length and reduced words agree with the Cayley graph, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const oracle::CayleyBfs bfs(n);
    for (const auto& w : all_permutations(n)) {
      REQUIRE(length(w) == bfs.length(w));
      REQUIRE(length(w) == oracle::inversions(w));
      const auto letters = oracle::word_letters(bfs, w);
      REQUIRE(support(w) == std::vector<int>(letters.begin(), letters.end()));
      if (n <= 5) {
        const auto& words = reduced_words(w);
        REQUIRE(std::is_sorted(words.begin(), words.end()));
        for (const auto& word : words) {
          REQUIRE(static_cast<int>(word.size()) == length(w));
          REQUIRE(evaluate(word, n) == w);
        }
        // The BFS word is one of them.
        REQUIRE(std::find(words.begin(), words.end(), Word{bfs.reduced_word(w)}) != words.end());
      }
    }
  }
}

TEST_CASE("pattern counts agree with independent counters, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) {
      const PatternCount p = pattern_profile(w);
      REQUIRE(p.count_321 == oracle::count_321(w));
      REQUIRE(p.count_3412 == oracle::count_3412(w));
      REQUIRE(p.combined == p.count_321 + p.count_3412);
    }
}

TEST_CASE("factor words are genuine witnesses, n <= 6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : all_permutations(n))
      for (auto kind : {FactorKind::Braid321, FactorKind::Braid3412}) {
        const auto f = find_single_repetition_factor(w, kind);
        if (!f) continue;
        const auto& L = f->word.letters;
        REQUIRE(evaluate(f->word, n) == w);
        REQUIRE(static_cast<int>(L.size()) == length(w));
        const int i = f->base;
        const std::vector<int> factor =
            kind == FactorKind::Braid321 ? std::vector<int>{i, i + 1, i} : std::vector<int>{i + 1, i, i + 2, i + 1};
        REQUIRE(std::equal(factor.begin(), factor.end(), L.begin() + (f->position - 1)));
        std::multiset<int> letters(L.begin(), L.end());
        int repeated = 0;
        for (int x : std::set<int>(L.begin(), L.end())) {
          REQUIRE(letters.count(x) <= 2);
          repeated += letters.count(x) == 2;
        }
        REQUIRE(repeated == 1);
      }
}

TEST_CASE("cache is stable across clears") {
  const auto before = reduced_words(P("4321"));
  clear_reduced_word_cache();
  CHECK(reduced_words(P("4321")) == before);
  CHECK(before.size() == 16);
}
