#include "schubert/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace schubert {

namespace {

const Permutation& p321() {
  static const Permutation p({3, 2, 1});
  return p;
}
const Permutation& p3412() {
  static const Permutation p({3, 4, 1, 2});
  return p;
}

// Reference polytopes are rebuilt often in sweeps; keep one copy per shape.
const LatticePolytope& reference_polytope(PolytopeVerdict kind, int cube_dim) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LatticePolytope> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_pair(static_cast<int>(kind), cube_dim);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LatticePolytope base;
  switch (kind) {
    case PolytopeVerdict::Cube:
      base = point_polytope();
      break;
    case PolytopeVerdict::HexagonTimesCube:
      base = bruhat_interval_polytope(Permutation::identity(3), p321());
      break;
    case PolytopeVerdict::Q3412TimesCube:
      base = bruhat_interval_polytope(Permutation::identity(4), p3412());
      break;
    case PolytopeVerdict::None:
      throw std::invalid_argument("reference_polytope: no shape");
  }
  return cache.emplace(key, product_polytope(base, cube(cube_dim))).first->second;
}

long long pow2(int k) { return 1LL << k; }

bool poset_matches(const AbstractPoset& p, PosetVerdict kind, int l) {
  switch (kind) {
    case PosetVerdict::Boolean:
      return p.size() == pow2(l) && poset_isomorphic(p, boolean_algebra(l));
    case PosetVerdict::S3TimesBoolean:
      return l >= 3 && p.size() == 6 * pow2(l - 3) && poset_isomorphic(p, product(s3_poset(), boolean_algebra(l - 3)));
    case PosetVerdict::P3412TimesBoolean:
      return l >= 4 && p.size() == 14 * pow2(l - 4) &&
             poset_isomorphic(p, product(p3412_poset(), boolean_algebra(l - 4)));
    case PosetVerdict::None:
      break;
  }
  return false;
}

bool polytope_matches(const LatticePolytope& q, PolytopeVerdict kind, int l) {
  int cube_dim = 0;
  long long count = 0;
  switch (kind) {
    case PolytopeVerdict::Cube:
      cube_dim = l;
      count = pow2(l);
      break;
    case PolytopeVerdict::HexagonTimesCube:
      if (l < 3) return false;
      cube_dim = l - 3;
      count = 6 * pow2(cube_dim);
      break;
    case PolytopeVerdict::Q3412TimesCube:
      if (l < 4) return false;
      cube_dim = l - 4;
      count = 14 * pow2(cube_dim);
      break;
    case PolytopeVerdict::None:
      return false;
  }
  if (static_cast<long long>(q.vertices.size()) != count) return false;
  const LatticePolytope& ref = reference_polytope(kind, cube_dim);
  return q.dim == ref.dim && combinatorially_equivalent(q, ref);
}

bool search_distinct(const Permutation& w, std::vector<bool>& used, std::vector<int>& letters) {
  if (w.is_identity()) return true;
  int free = 0;
  for (std::size_t i = 1; i < used.size(); ++i) free += used[i] ? 0 : 1;
  if (length(w) > free) return false;
  for (int d = 1; d < w.size(); ++d) {
    if (used[static_cast<std::size_t>(d)] || w(d) < w(d + 1)) continue;
    used[static_cast<std::size_t>(d)] = true;
    letters.push_back(d);
    if (search_distinct(w.swap_positions(d, d + 1), used, letters)) return true;
    letters.pop_back();
    used[static_cast<std::size_t>(d)] = false;
  }
  return false;
}

std::vector<std::vector<int>> singletons(const Word& word) {
  std::vector<std::vector<int>> out;
  for (int letter : word.letters) out.push_back({letter});
  return out;
}

// Proxy for (4): [e,w] against the product of the [e, s_i] along the word.
bool boolean_factorization(const Permutation& w, const Word& word) {
  if (word.letters.empty()) return length(w) == 0;  // empty product, one-point poset
  std::vector<Permutation> factors;
  for (int letter : word.letters) factors.push_back(Permutation::simple(w.size(), letter));
  return interval_factorization(w, singletons(word), factors).matches_interval;
}

// Proxy for (4') and (4''): the tower built from the word factors [e,w].
bool factorization_proxy(const Permutation& w, FactorKind kind) {
  const auto witness = find_single_repetition_factor(w, kind);
  if (!witness) return false;
  const IntervalSequence seq = interval_sequence(w, *witness);
  const int expected = length(w) - (kind == FactorKind::Braid321 ? 2 : 3);
  return static_cast<int>(seq.sets.size()) == expected && seq.kind == kind && seq.product_matches;
}

}  // namespace

std::string to_string(PosetVerdict v) {
  switch (v) {
    case PosetVerdict::Boolean:
      return "boolean";
    case PosetVerdict::S3TimesBoolean:
      return "s3-x-boolean";
    case PosetVerdict::P3412TimesBoolean:
      return "p3412-x-boolean";
    case PosetVerdict::None:
      break;
  }
  return "none";
}

std::string to_string(PolytopeVerdict v) {
  switch (v) {
    case PolytopeVerdict::Cube:
      return "cube";
    case PolytopeVerdict::HexagonTimesCube:
      return "hexagon-x-cube";
    case PolytopeVerdict::Q3412TimesCube:
      return "q3412-x-cube";
    case PolytopeVerdict::None:
      break;
  }
  return "none";
}

PosetVerdict poset_verdict(const Permutation& w) {
  const int l = length(w);
  const AbstractPoset p = interval(Permutation::identity(w.size()), w).to_poset();
  for (auto kind : {PosetVerdict::Boolean, PosetVerdict::S3TimesBoolean, PosetVerdict::P3412TimesBoolean})
    if (poset_matches(p, kind, l)) return kind;
  return PosetVerdict::None;
}

PolytopeVerdict polytope_verdict(const LatticePolytope& q_ew, int l) {
  for (auto kind : {PolytopeVerdict::Cube, PolytopeVerdict::HexagonTimesCube, PolytopeVerdict::Q3412TimesCube})
    if (polytope_matches(q_ew, kind, l)) return kind;
  return PolytopeVerdict::None;
}

std::optional<Word> distinct_letter_word(const Permutation& w) {
  std::vector<bool> used(static_cast<std::size_t>(w.size()), false);
  std::vector<int> letters;
  if (!search_distinct(w, used, letters)) return std::nullopt;
  // Letters were stripped from the right.
  std::reverse(letters.begin(), letters.end());
  return Word{letters};
}

bool has_distinct_letter_word(const Permutation& w) { return distinct_letter_word(w).has_value(); }

ClassificationReport classify(const Permutation& w, const ClassifyOptions& options) {
  ClassificationReport r;
  r.w = w;
  r.length = length(w);
  r.complexity = complexity(w);
  r.smooth = is_smooth(w);
  r.profile = pattern_profile(w);
  r.distinct_letters = has_distinct_letter_word(w);
  r.witness = find_single_repetition_factor(w, FactorKind::Braid321);
  if (!r.witness) r.witness = find_single_repetition_factor(w, FactorKind::Braid3412);
  r.poset = poset_verdict(w);
  if (options.polytope)
    r.polytope = polytope_verdict(bruhat_interval_polytope(Permutation::identity(w.size()), w), r.length);
  if (r.witness) r.tower = interval_sequence(w, *r.witness);

  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) r.disagreements.push_back(what);
  };
  auto expect_polytope = [&](PolytopeVerdict v) {
    if (r.polytope) expect(*r.polytope == v, "polytope " + to_string(*r.polytope) + " != " + to_string(v));
  };
  const bool has_321 = r.witness && r.witness->kind == FactorKind::Braid321;
  const bool has_3412 = r.witness && r.witness->kind == FactorKind::Braid3412;
  if (r.complexity == 0) {
    expect(r.profile.combined == 0, "pattern count");
    expect(r.smooth, "smoothness");
    expect(r.distinct_letters, "distinct-letter word");
    expect(!r.witness, "factor witness");
    expect(r.poset == PosetVerdict::Boolean, "poset " + to_string(r.poset));
    expect_polytope(PolytopeVerdict::Cube);
  } else if (r.complexity == 1 && r.smooth) {
    expect(r.profile == PatternCount{1, 0, 1}, "pattern profile");
    expect(!r.distinct_letters, "distinct-letter word");
    expect(has_321, "braid-321 witness");
    expect(r.poset == PosetVerdict::S3TimesBoolean, "poset " + to_string(r.poset));
    expect_polytope(PolytopeVerdict::HexagonTimesCube);
    expect(r.tower && r.tower->smooth() && r.tower->product_matches, "tower");
  } else if (r.complexity == 1) {
    expect(r.profile == PatternCount{0, 1, 1}, "pattern profile");
    expect(!r.distinct_letters, "distinct-letter word");
    expect(has_3412, "braid-3412 witness");
    expect(r.poset == PosetVerdict::P3412TimesBoolean, "poset " + to_string(r.poset));
    expect_polytope(PolytopeVerdict::Q3412TimesCube);
    expect(r.tower && !r.tower->smooth() && r.tower->product_matches, "tower");
  } else {
    expect(r.profile.combined >= 2, "pattern count");
    expect(!r.distinct_letters, "distinct-letter word");
    expect(!r.witness, "factor witness");
    expect(r.poset == PosetVerdict::None, "poset " + to_string(r.poset));
    expect_polytope(PolytopeVerdict::None);
  }
  r.consistent = r.disagreements.empty();
  return r;
}

bool TheoremConditions::agree() const {
  return std::all_of(items.begin(), items.end(), [&](const auto& item) { return item.second == items.front().second; });
}

std::string TheoremConditions::describe() const {
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += ' ';
    out += name + '=' + (value ? '1' : '0');
  }
  return out;
}

TheoremConditions theorem_conditions(const Permutation& w, Theorem theorem, bool include_polytope) {
  TheoremConditions out;
  const int l = length(w);
  const int c = complexity(w);
  const long long n321 = count_pattern(w, p321());
  const long long n3412 = count_pattern(w, p3412());
  auto poset = [&](PosetVerdict kind) {
    return poset_matches(interval(Permutation::identity(w.size()), w).to_poset(), kind, l);
  };
  auto polytope = [&](PolytopeVerdict kind) {
    return polytope_matches(bruhat_interval_polytope(Permutation::identity(w.size()), w), kind, l);
  };
  switch (theorem) {
    case Theorem::ComplexityZero: {
      const auto word = distinct_letter_word(w);
      out.items.emplace_back("(0)", c == 0);
      out.items.emplace_back("(1)", c == 0 && is_smooth(w));
      out.items.emplace_back("(2)", n321 == 0 && n3412 == 0);
      out.items.emplace_back("(3)", word.has_value());
      out.items.emplace_back("(4)", word && boolean_factorization(w, *word));
      out.items.emplace_back("(5)", poset(PosetVerdict::Boolean));
      if (include_polytope) out.items.emplace_back("(6)", polytope(PolytopeVerdict::Cube));
      break;
    }
    case Theorem::SmoothOne:
      out.items.emplace_back("(1')", c == 1 && is_smooth(w));
      out.items.emplace_back("(2')", n321 == 1 && n3412 == 0);
      out.items.emplace_back("(3')", find_single_repetition_factor(w, FactorKind::Braid321).has_value());
      out.items.emplace_back("(4')", factorization_proxy(w, FactorKind::Braid321));
      out.items.emplace_back("(5')", poset(PosetVerdict::S3TimesBoolean));
      if (include_polytope) out.items.emplace_back("(6')", polytope(PolytopeVerdict::HexagonTimesCube));
      break;
    case Theorem::SingularOne:
      out.items.emplace_back("(1'')", c == 1 && !is_smooth(w));
      out.items.emplace_back("(2'')", n3412 == 1 && n321 == 0);
      out.items.emplace_back("(3'')", find_single_repetition_factor(w, FactorKind::Braid3412).has_value());
      out.items.emplace_back("(4'')", factorization_proxy(w, FactorKind::Braid3412));
      out.items.emplace_back("(5'')", poset(PosetVerdict::P3412TimesBoolean));
      if (include_polytope) out.items.emplace_back("(6'')", polytope(PolytopeVerdict::Q3412TimesCube));
      break;
  }
  return out;
}

}  // namespace schubert
