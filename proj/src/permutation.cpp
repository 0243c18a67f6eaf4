#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("permutation must be non-empty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int value : one_line_) {
    if (value < 1 || value > n || seen[static_cast<std::size_t>(value)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(value)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("s_" + std::to_string(i) + " is not in S_" + std::to_string(n));
  return identity(n).swap_positions(i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("invalid transposition");
  return identity(n).swap_positions(i, j);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation out;
  out.one_line_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    if (one_line_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::swap_positions(int i, int j) const {
  Permutation out = *this;
  std::swap(out.one_line_[static_cast<std::size_t>(i - 1)],
            out.one_line_[static_cast<std::size_t>(j - 1)]);
  return out;
}

Permutation Permutation::swap_values(int a, int b) const {
  Permutation out = *this;
  for (int& value : out.one_line_) {
    if (value == a)
      value = b;
    else if (value == b)
      value = a;
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int value : one_line_) out.push_back(static_cast<char>('0' + value));
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(one_line_[i]);
  }
  return out + "]";
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int value : w.one_line()) {
    h ^= static_cast<std::size_t>(value);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Word::to_string() const {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(letters[k]);
  }
  return out;
}

std::string to_string(FactorKind kind) {
  return kind == FactorKind::Braid321 ? "braid-321" : "braid-3412";
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(out));
}

int length(const Permutation& w) {
  int inversions = 0;
  const auto values = w.one_line();
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) ++inversions;
  return inversions;
}

Permutation evaluate(const Word& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int letter : word.letters) {
    if (letter < 1 || letter >= n)
      throw std::invalid_argument("letter s" + std::to_string(letter) + " outside S_" +
                                  std::to_string(n));
    w = w.swap_positions(letter, letter + 1);
  }
  return w;
}

bool is_reduced(const Word& word, int n) {
  return length(evaluate(word, n)) == static_cast<int>(word.size());
}

namespace {

// Visits every k-subset of positions in increasing order; stops early when
// `visit` returns false.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!visit(idx)) return;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
}

bool order_isomorphic(std::span<const int> values, const std::vector<int>& idx,
                      std::span<const int> pattern) {
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if ((values[static_cast<std::size_t>(idx[a])] < values[static_cast<std::size_t>(idx[b])]) !=
          (pattern[a] < pattern[b]))
        return false;
  return true;
}

long long scan_pattern(const Permutation& w, const Permutation& pattern, bool stop_at_first) {
  long long count = 0;
  const auto values = w.one_line();
  const auto shape = pattern.one_line();
  for_each_subset(w.size(), pattern.size(), [&](const std::vector<int>& idx) {
    if (order_isomorphic(values, idx, shape)) {
      ++count;
      if (stop_at_first) return false;
    }
    return true;
  });
  return count;
}

const Permutation& pattern_321() {
  static const Permutation p({3, 2, 1});
  return p;
}
const Permutation& pattern_3412() {
  static const Permutation p({3, 4, 1, 2});
  return p;
}
const Permutation& pattern_4231() {
  static const Permutation p({4, 2, 3, 1});
  return p;
}

}  // namespace

long long count_pattern(const Permutation& w, const Permutation& pattern) {
  return scan_pattern(w, pattern, false);
}

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  return scan_pattern(w, pattern, true) > 0;
}

PatternCount pattern_profile(const Permutation& w) {
  PatternCount out;
  out.count_321 = count_pattern(w, pattern_321());
  out.count_3412 = count_pattern(w, pattern_3412());
  out.combined = out.count_321 + out.count_3412;
  return out;
}

Word canonical_reduced_word(const Permutation& w) {
  Word word;
  Permutation current = w;
  while (true) {
    int descent = 0;
    for (int i = 1; i < current.size(); ++i) {
      if (current(i) > current(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    word.letters.push_back(descent);
    current = current.swap_positions(descent, descent + 1);
  }
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

std::vector<int> support(const Permutation& w) {
  std::vector<int> letters = canonical_reduced_word(w).letters;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

int complexity(const Permutation& w) {
  return length(w) - static_cast<int>(support(w).size());
}

bool is_smooth(const Permutation& w) {
  return !contains_pattern(w, pattern_3412()) && !contains_pattern(w, pattern_4231());
}

namespace {

class ReducedWordCache {
 public:
  const std::vector<Word>& get(const Permutation& w) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(w);
      if (it != table_.end()) return *it->second;
    }
    auto words = std::make_unique<std::vector<Word>>(compute(w));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(w, std::move(words));
    return *it->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  // R(w) = union over right descents i of R(w s_i) followed by i.
  std::vector<Word> compute(const Permutation& w) {
    std::vector<Word> out;
    bool any_descent = false;
    for (int i = 1; i < w.size(); ++i) {
      if (w(i) <= w(i + 1)) continue;
      any_descent = true;
      for (const Word& prefix : get(w.swap_positions(i, i + 1))) {
        Word word = prefix;
        word.letters.push_back(i);
        out.push_back(std::move(word));
      }
    }
    if (!any_descent) out.push_back(Word{});
    std::sort(out.begin(), out.end());
    return out;
  }

  std::shared_mutex mutex_;
  std::unordered_map<Permutation, std::unique_ptr<std::vector<Word>>> table_;
};

ReducedWordCache& reduced_word_cache() {
  static ReducedWordCache cache;
  return cache;
}

// The factor (and its repeated letter) at `pos` if the word has one there.
std::optional<int> factor_base_at(const std::vector<int>& letters, std::size_t pos,
                                  FactorKind kind) {
  if (kind == FactorKind::Braid321) {
    if (pos + 3 > letters.size()) return std::nullopt;
    const int i = letters[pos];
    if (letters[pos + 1] == i + 1 && letters[pos + 2] == i) return i;
    return std::nullopt;
  }
  if (pos + 4 > letters.size()) return std::nullopt;
  const int i = letters[pos + 1];
  if (letters[pos] == i + 1 && letters[pos + 2] == i + 2 && letters[pos + 3] == i + 1) return i;
  return std::nullopt;
}

}  // namespace

const std::vector<Word>& reduced_words(const Permutation& w) { return reduced_word_cache().get(w); }

void clear_reduced_word_cache() { reduced_word_cache().clear(); }

std::optional<FactorWitness> find_single_repetition_factor(const Permutation& w, FactorKind kind) {
  // Exactly one letter of multiplicity two forces l(w) - |supp(w)| = 1.
  if (complexity(w) != 1) return std::nullopt;
  for (const Word& word : reduced_words(w)) {
    std::map<int, int> multiplicity;
    for (int letter : word.letters) ++multiplicity[letter];
    for (std::size_t pos = 0; pos < word.letters.size(); ++pos) {
      const auto base = factor_base_at(word.letters, pos, kind);
      if (!base) continue;
      const int repeated = kind == FactorKind::Braid321 ? *base : *base + 1;
      bool only_factor_repeats = true;
      for (const auto& [letter, count] : multiplicity) {
        if (count != (letter == repeated ? 2 : 1)) {
          only_factor_repeats = false;
          break;
        }
      }
      if (only_factor_repeats)
        return FactorWitness{word, static_cast<int>(pos) + 1, *base, kind};
    }
  }
  return std::nullopt;
}

const std::vector<Permutation>& all_permutations(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<Permutation>>> cache;
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Permutation>>();
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    do {
      slot->emplace_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
  }
  return *slot;
}

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad integer '" + token + "'");
    out.push_back(value);
    token.clear();
  };
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> size) {
  text = trim(text);
  if (text == "e") {
    if (!size) throw std::invalid_argument("'e' needs a known permutation size");
    return Permutation::identity(*size);
  }
  std::vector<int> values;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated '[' in permutation");
    values = parse_int_list(text.substr(1, text.size() - 2));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("permutation digits must be 1-9: '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  if (values.empty()) throw std::invalid_argument("empty permutation");
  Permutation w(std::move(values));
  if (size && w.size() != *size)
    throw std::invalid_argument("expected a permutation of size " + std::to_string(*size));
  return w;
}

Word parse_word(std::string_view text) {
  text = trim(text);
  if (text == "e" || text.empty()) return Word{};
  std::string cleaned;
  for (char c : text) {
    if (c == 's' || c == 'S')
      cleaned.push_back(' ');
    else
      cleaned.push_back(c);
  }
  Word word{parse_int_list(cleaned)};
  for (int letter : word.letters)
    if (letter < 1) throw std::invalid_argument("word letters must be positive");
  return word;
}

}  // namespace schubert
