#pragma once

// Permutations of [n] in one-line notation, reduced words and pattern data.
//
// Conventions: one-line values are 1-based; (u*v)(i) = u(v(i)); the simple
// transposition s_i swaps i and i+1; a word (i_1,...,i_l) evaluates to
// s_{i_1} * ... * s_{i_l}, so right multiplication by s_i swaps the entries
// in positions i and i+1.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

class Permutation {
 public:
  Permutation() = default;
  /// Validates that `one_line` is a bijection of {1,...,n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// s_i in S_n, 1 <= i < n.
  static Permutation simple(int n, int i);
  /// The transposition exchanging i and j.
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(one_line_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> one_line() const { return one_line_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// u*(i,j): exchange the entries in positions i and j.
  Permutation swap_positions(int i, int j) const;
  /// (a,b)*u: exchange the values a and b.
  Permutation swap_values(int a, int b) const;

  /// Digits when n <= 9, "[a,b,...]" otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.one_line_ <=> b.one_line_;
  }

 private:
  std::vector<int> one_line_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

/// A sequence of simple-transposition indices.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  std::string to_string() const;  // "s1 s2 s1"; "e" for the empty word
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

struct PatternCount {
  long long count_321 = 0;
  long long count_3412 = 0;
  long long combined = 0;
  friend bool operator==(const PatternCount&, const PatternCount&) = default;
};

enum class FactorKind { Braid321, Braid3412 };

std::string to_string(FactorKind kind);

/// A reduced word whose only repetition sits in one consecutive factor.
struct FactorWitness {
  Word word;
  int position = 0;  // 1-based start of the factor
  int base = 0;      // i in s_i s_{i+1} s_i or s_{i+1} s_i s_{i+2} s_{i+1}
  FactorKind kind = FactorKind::Braid321;
  friend bool operator==(const FactorWitness&, const FactorWitness&) = default;
};

Permutation compose(const Permutation& u, const Permutation& v);
int length(const Permutation& w);

/// Product s_{i_1} ... s_{i_l} in S_n. Throws on letters outside 1..n-1.
Permutation evaluate(const Word& word, int n);
bool is_reduced(const Word& word, int n);

/// Number of occurrences of `pattern` as an order-isomorphic subsequence.
long long count_pattern(const Permutation& w, const Permutation& pattern);
PatternCount pattern_profile(const Permutation& w);
bool contains_pattern(const Permutation& w, const Permutation& pattern);

/// {i : s_i <= w}, sorted.
std::vector<int> support(const Permutation& w);
int complexity(const Permutation& w);
/// Avoids 3412 and 4231.
bool is_smooth(const Permutation& w);

/// The reduced word obtained by always stripping the smallest right descent;
/// letters come out in reverse, so this is not the lexicographic minimum.
Word canonical_reduced_word(const Permutation& w);

/// All reduced words of w, lexicographically sorted. Results are memoized
/// process-wide; the cache is safe to use from several threads.
const std::vector<Word>& reduced_words(const Permutation& w);
void clear_reduced_word_cache();

/// Lexicographically smallest reduced word with the requested factor and no
/// other repeated letter.
std::optional<FactorWitness> find_single_repetition_factor(const Permutation& w,
                                                           FactorKind kind);

/// All of S_n in lexicographic order of one-line notation. Cached.
const std::vector<Permutation>& all_permutations(int n);

/// "3412", "[3,4,1,2]", or "e" (needs `size`).
Permutation parse_permutation(std::string_view text, std::optional<int> size = std::nullopt);
/// "s2 s1 s3 s2", "2 1 3 2", "2,1,3,2" or "e".
Word parse_word(std::string_view text);

}  // namespace schubert

template <>
struct std::hash<schubert::Permutation> {
  std::size_t operator()(const schubert::Permutation& w) const noexcept {
    return schubert::PermutationHash{}(w);
  }
};
