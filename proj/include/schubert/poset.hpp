#pragma once

// Bruhat order, Bruhat intervals and the small library of reference posets
// (Boolean algebras, S_3, [e,3412] and products) they are compared against.

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

/// u <= w in Bruhat order (tableau criterion on sorted prefixes).
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// A finite poset given by its Hasse diagram. Ranks are longest-chain
/// heights from the minimal elements.
class AbstractPoset {
 public:
  AbstractPoset() = default;
  AbstractPoset(std::vector<std::string> labels, std::vector<std::vector<int>> up_covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& up_covers() const { return up_; }
  const std::vector<int>& rank() const { return rank_; }
  /// Every cover raises the rank by one and all maximal elements share a rank.
  bool is_graded() const { return graded_; }
  std::size_t cover_count() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> up_;
  std::vector<int> rank_;
  bool graded_ = true;
};

/// The interval [v,w]: elements sorted by (length, one-line), Hasse covers
/// as index lists, rank = l(u) - l(v).
class BruhatInterval {
 public:
  /// Throws std::invalid_argument unless v <= w.
  BruhatInterval(const Permutation& v, const Permutation& w);

  const Permutation& bottom() const { return v_; }
  const Permutation& top() const { return w_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& up_covers() const { return up_; }
  const std::vector<int>& rank() const { return rank_; }
  std::optional<int> index_of(const Permutation& u) const;
  bool contains(const Permutation& u) const { return index_.count(u) > 0; }
  std::vector<std::pair<Permutation, Permutation>> covers() const;

  AbstractPoset to_poset() const;

 private:
  Permutation v_;
  Permutation w_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> up_;
  std::vector<int> rank_;
  std::unordered_map<Permutation, int> index_;
};

inline BruhatInterval interval(const Permutation& v, const Permutation& w) {
  return BruhatInterval(v, w);
}

/// Coefficient k counts rank-k elements. Throws std::domain_error when the
/// poset is not graded.
std::vector<long long> rank_polynomial(const AbstractPoset& poset);
std::vector<long long> rank_polynomial(const BruhatInterval& interval);
std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b);

AbstractPoset boolean_algebra(int k);
AbstractPoset s3_poset();
AbstractPoset p3412_poset();
AbstractPoset product(const AbstractPoset& p, const AbstractPoset& q);

bool poset_isomorphic(const AbstractPoset& p, const AbstractPoset& q);

struct Factorization {
  AbstractPoset product;        // prod_k [e, w_k]
  bool matches_interval = false;  // product is isomorphic to [e, w]
};

/// Checks that the index sets are pairwise disjoint, that each factor is
/// supported in its set and that the factors multiply to w; throws
/// std::invalid_argument otherwise.
Factorization interval_factorization(const Permutation& w,
                                     const std::vector<std::vector<int>>& index_sets,
                                     const std::vector<Permutation>& factors);

/// Hasse diagram in DOT, ranks laid out bottom to top.
std::string hasse_dot(const BruhatInterval& interval);

}  // namespace schubert
