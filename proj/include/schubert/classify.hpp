#pragma once

// Per-permutation classification against the three equivalence theorems
// (complexity zero, smooth complexity one, singular complexity one). Every
// condition is computed on its own path: patterns, reduced words, posets,
// polytopes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polytope.hpp"
#include "schubert/poset.hpp"
#include "schubert/tower.hpp"

namespace schubert {

enum class PosetVerdict { Boolean, S3TimesBoolean, P3412TimesBoolean, None };
enum class PolytopeVerdict { Cube, HexagonTimesCube, Q3412TimesCube, None };

std::string to_string(PosetVerdict v);
std::string to_string(PolytopeVerdict v);

/// [e,w] compared with B_l, S_3 x B_{l-3} and [e,3412] x B_{l-4}.
PosetVerdict poset_verdict(const Permutation& w);
/// Q_{e,w} compared with I^l, hexagon x I^{l-3} and Q_{e,3412} x I^{l-4}.
PolytopeVerdict polytope_verdict(const LatticePolytope& q_ew, int length);

/// Some reduced word of w uses every letter at most once.
bool has_distinct_letter_word(const Permutation& w);
/// A word with distinct letters, if any.
std::optional<Word> distinct_letter_word(const Permutation& w);

struct ClassifyOptions {
  bool polytope = true;
};

struct ClassificationReport {
  Permutation w;
  int length = 0;
  int complexity = 0;
  bool smooth = true;
  PatternCount profile;
  bool distinct_letters = false;
  std::optional<FactorWitness> witness;
  PosetVerdict poset = PosetVerdict::None;
  std::optional<PolytopeVerdict> polytope;
  std::optional<IntervalSequence> tower;
  bool consistent = false;
  std::vector<std::string> disagreements;
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(const Permutation& w, const ClassifyOptions& options = {});

/// Named conditions of one theorem evaluated for w; the theorem asserts
/// that they are all true or all false.
struct TheoremConditions {
  std::vector<std::pair<std::string, bool>> items;
  bool agree() const;
  std::string describe() const;  // "(0)=1 (1)=1 ..."
};

enum class Theorem { ComplexityZero, SmoothOne, SingularOne };

/// (4), (4') and (4'') are represented by the interval factorization built
/// from the corresponding reduced word.
TheoremConditions theorem_conditions(const Permutation& w, Theorem theorem, bool include_polytope);

}  // namespace schubert
