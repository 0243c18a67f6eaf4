#pragma once

// Integer data of Bott towers and flag Bott towers attached to reduced words
// and to complexity-one permutations, plus the cohomology ideal generators
// built from it.

#include <optional>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/poset.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// a_{j,k} = <e_{i_j} - e_{i_j+1}, e_{i_k} - e_{i_k+1}> for j < k.
struct BottMatrix {
  Word word;
  std::vector<std::vector<int>> entries;  // l x l, zero on and below the diagonal

  int size() const { return static_cast<int>(entries.size()); }
  /// 1-based, j < k.
  int at(int j, int k) const { return entries[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)]; }
  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;
};

/// Throws std::invalid_argument for a non-reduced word.
BottMatrix bott_matrix(const Word& word);

struct IntervalSequence {
  Permutation w;
  std::vector<std::vector<int>> sets;  // I_1, ..., I_r, each sorted
  int block = 0;                       // q, 1-based
  FactorKind kind = FactorKind::Braid321;
  Word block_word;
  FactorWitness witness;
  std::vector<Permutation> factors;  // w_1, ..., w_r
  bool product_matches = false;      // prod [e, w_k] is isomorphic to [e, w]

  bool smooth() const { return kind == FactorKind::Braid321; }
  friend bool operator==(const IntervalSequence&, const IntervalSequence&) = default;
};

/// Built from the lexicographically smallest factor word. Throws
/// std::domain_error unless complexity(w) = 1.
IntervalSequence interval_sequence(const Permutation& w);
/// Same construction from a given factor word, without the complexity guard.
IntervalSequence interval_sequence(const Permutation& w, const FactorWitness& witness);

struct FlagTowerData {
  struct Vector {
    int j = 0;
    int k = 0;
    int m = 0;
    std::vector<int> values;  // length n_j
    friend bool operator==(const Vector&, const Vector&) = default;
  };

  std::vector<std::vector<int>> sets;
  std::vector<int> fiber_sizes;  // n_k = |I_k|
  std::vector<Vector> vectors;   // ordered by (k, j, m)

  /// a_{j,k}^{(m)}; 1-based indices. Throws std::out_of_range if absent.
  const std::vector<int>& at(int j, int k, int m) const;
  friend bool operator==(const FlagTowerData&, const FlagTowerData&) = default;
};

/// Throws std::invalid_argument unless every set is a nonempty run of
/// consecutive integers.
FlagTowerData flag_tower_vectors(const std::vector<std::vector<int>>& sets);
FlagTowerData flag_tower_vectors(const IntervalSequence& seq);

struct CohomologyPresentation {
  IntervalSequence sequence;
  FlagTowerData tower;
  std::vector<std::string> variables;  // y{k}_{p}
  std::vector<Polynomial> raw;         // I_1, ..., I_r before expansion into components
  std::vector<Polynomial> relations;   // homogeneous parts of positive degree
  std::vector<std::string> normalized_variables;  // y1, y2, ...
  std::vector<Polynomial> normalized;
  friend bool operator==(const CohomologyPresentation&, const CohomologyPresentation&) = default;
};

/// Throws std::domain_error unless w is smooth of complexity one.
CohomologyPresentation cohomology_presentation(const Permutation& w);

struct PartitionPresentation {
  std::vector<int> lambda;
  Permutation w;
  std::vector<std::string> variables;  // x1, ..., xn
  std::vector<Polynomial> generators;  // h_{lambda_i - i + 1}(x_1, ..., x_i)
};

/// Throws std::invalid_argument for a sequence that is not weakly increasing
/// in [0, n], std::domain_error when the rule hits an empty set.
PartitionPresentation partition_presentation(const std::vector<int>& lambda);

struct PolynomialIdentity {
  std::string name;
  std::vector<std::string> variables;
  Polynomial lhs;
  Polynomial rhs;

  bool holds() const { return lhs == rhs; }
};

/// The substitution y1 -> -x1, y2 -> x1+x2, y3 -> x3, y4 -> x4 applied to
/// the normalized generators of 23541, each compared with its combination
/// of the partition-side generators. Throws std::invalid_argument for any
/// other permutation.
std::vector<PolynomialIdentity> substitution_identities(const Permutation& w);
bool verify_substitution_identity(const Permutation& w);

}  // namespace schubert
