#include "schubert/tower.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

namespace {

int simple_root_product(int a, int b) {
  if (a == b) return 2;
  if (a - b == 1 || b - a == 1) return -1;
  return 0;
}

// <e_a - e_b, e_c - e_d>
int root_product(int a, int b, int c, int d) {
  return (a == c) - (a == d) - (b == c) + (b == d);
}

std::vector<int> singleton(int i) { return {i}; }

Polynomial one_minus(const Polynomial& p) { return Polynomial::constant(p.variables(), 1) - p; }

}  // namespace

BottMatrix bott_matrix(const Word& word) {
  int n = 1;
  for (int letter : word.letters) {
    if (letter < 1) throw std::invalid_argument("bott_matrix: letters must be positive");
    n = std::max(n, letter + 1);
  }
  if (!is_reduced(word, n)) throw std::invalid_argument("bott_matrix: word " + word.to_string() + " is not reduced");
  const std::size_t l = word.size();
  BottMatrix m{word, std::vector<std::vector<int>>(l, std::vector<int>(l, 0))};
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t k = j + 1; k < l; ++k) m.entries[j][k] = simple_root_product(word.letters[j], word.letters[k]);
  return m;
}

IntervalSequence interval_sequence(const Permutation& w) {
  if (complexity(w) != 1)
    throw std::domain_error("interval_sequence: " + w.to_string() + " does not have complexity one");
  std::optional<FactorWitness> witness = find_single_repetition_factor(w, FactorKind::Braid321);
  if (!witness) witness = find_single_repetition_factor(w, FactorKind::Braid3412);
  if (!witness)
    throw std::logic_error("interval_sequence: no factor word found for complexity-one " + w.to_string());
  return interval_sequence(w, *witness);
}

IntervalSequence interval_sequence(const Permutation& w, const FactorWitness& witness_word) {
  const int n = w.size();
  if (evaluate(witness_word.word, n) != w)
    throw std::invalid_argument("interval_sequence: witness word does not evaluate to " + w.to_string());
  const FactorWitness* witness = &witness_word;
  const auto& letters = witness->word.letters;
  const int q = witness->position;
  const int i = witness->base;
  const bool smooth = witness->kind == FactorKind::Braid321;
  const int span = smooth ? 3 : 4;

  IntervalSequence seq;
  seq.w = w;
  seq.block = q;
  seq.kind = witness->kind;
  seq.witness = *witness;
  seq.block_word = smooth ? Word{{i, i + 1, i}} : Word{{i + 1, i, i + 2, i + 1}};
  for (int k = 1; k < q; ++k) {
    const int letter = letters[static_cast<std::size_t>(k - 1)];
    seq.sets.push_back(singleton(letter));
    seq.factors.push_back(Permutation::simple(n, letter));
  }
  seq.sets.push_back(smooth ? std::vector<int>{i, i + 1} : std::vector<int>{i, i + 1, i + 2});
  seq.factors.push_back(evaluate(seq.block_word, n));
  // Off the block the k-th set uses the letter after the factor, i.e. the
  // (k + span - 1)-th letter of the word.
  for (std::size_t pos = static_cast<std::size_t>(q - 1 + span); pos < letters.size(); ++pos) {
    seq.sets.push_back(singleton(letters[pos]));
    seq.factors.push_back(Permutation::simple(n, letters[pos]));
  }
  seq.product_matches = interval_factorization(w, seq.sets, seq.factors).matches_interval;
  return seq;
}

const std::vector<int>& FlagTowerData::at(int j, int k, int m) const {
  for (const auto& v : vectors)
    if (v.j == j && v.k == k && v.m == m) return v.values;
  throw std::out_of_range("FlagTowerData::at: no vector (" + std::to_string(j) + "," + std::to_string(k) + "," +
                          std::to_string(m) + ")");
}

FlagTowerData flag_tower_vectors(const std::vector<std::vector<int>>& sets) {
  FlagTowerData data;
  // u[k] holds u_{k,1} < ... < u_{k,n_k} followed by u_{k,n_k+1}.
  std::vector<std::vector<int>> u;
  for (auto set : sets) {
    std::sort(set.begin(), set.end());
    if (set.empty()) throw std::invalid_argument("flag_tower_vectors: empty set");
    for (std::size_t p = 1; p < set.size(); ++p)
      if (set[p] != set[p - 1] + 1) throw std::invalid_argument("flag_tower_vectors: set is not an interval");
    data.sets.push_back(set);
    data.fiber_sizes.push_back(static_cast<int>(set.size()));
    set.push_back(set.back() + 1);
    u.push_back(std::move(set));
  }
  const int r = static_cast<int>(u.size());
  for (int k = 1; k <= r; ++k) {
    const auto& uk = u[static_cast<std::size_t>(k - 1)];
    const int nk = static_cast<int>(uk.size()) - 1;
    for (int j = 1; j < k; ++j) {
      const auto& uj = u[static_cast<std::size_t>(j - 1)];
      const int nj = static_cast<int>(uj.size()) - 1;
      for (int m = 1; m <= nk; ++m) {
        FlagTowerData::Vector vec{j, k, m, {}};
        for (int p = 1; p <= nj; ++p)
          vec.values.push_back(root_product(uj[static_cast<std::size_t>(p - 1)], uj.back(),
                                            uk[static_cast<std::size_t>(m - 1)], uk.back()));
        data.vectors.push_back(std::move(vec));
      }
    }
  }
  return data;
}

FlagTowerData flag_tower_vectors(const IntervalSequence& seq) { return flag_tower_vectors(seq.sets); }

CohomologyPresentation cohomology_presentation(const Permutation& w) {
  if (complexity(w) != 1 || !is_smooth(w))
    throw std::domain_error("cohomology_presentation: " + w.to_string() + " is not smooth of complexity one");
  CohomologyPresentation out;
  out.sequence = interval_sequence(w);
  out.tower = flag_tower_vectors(out.sequence);
  const auto& sizes = out.tower.fiber_sizes;
  const std::size_t r = sizes.size();

  // Variable y_{k,p} for p = 1..n_k+1, laid out block by block.
  std::vector<std::size_t> offset(r + 1, 0);
  for (std::size_t k = 0; k < r; ++k) offset[k + 1] = offset[k] + static_cast<std::size_t>(sizes[k]) + 1;
  const std::size_t nvars = offset[r];
  auto y = [&](std::size_t k, std::size_t p) { return Polynomial::variable(nvars, offset[k] + p); };
  for (std::size_t k = 0; k < r; ++k)
    for (int p = 1; p <= sizes[k] + 1; ++p)
      out.variables.push_back("y" + std::to_string(k + 1) + "_" + std::to_string(p));

  for (std::size_t k = 0; k < r; ++k) {
    Polynomial fiber = Polynomial::constant(nvars, 1);
    for (std::size_t p = 0; p <= static_cast<std::size_t>(sizes[k]); ++p) fiber = fiber * one_minus(y(k, p));
    Polynomial base = Polynomial::constant(nvars, 1);
    for (int m = 1; m <= sizes[k]; ++m) {
      Polynomial sum(nvars);
      for (std::size_t j = 0; j < k; ++j) {
        const auto& a = out.tower.at(static_cast<int>(j + 1), static_cast<int>(k + 1), m);
        for (std::size_t p = 0; p < a.size(); ++p) sum += static_cast<Integer>(a[p]) * y(j, p);
      }
      base = base * one_minus(sum);
    }
    out.raw.push_back(fiber - base);
  }
  for (const auto& g : out.raw)
    for (int d = 1; d <= g.degree(); ++d) {
      Polynomial part = g.homogeneous_part(d);
      if (!part.is_zero()) out.relations.push_back(part);
    }

  // Eliminate y_{k,n_k+1} with the degree-one part of I_k, which reads
  // -y_{k,n_k+1} + (terms in earlier or kept variables).
  std::size_t kept = 0;
  for (int s : sizes) kept += static_cast<std::size_t>(s);
  for (std::size_t i = 1; i <= kept; ++i) out.normalized_variables.push_back("y" + std::to_string(i));
  std::vector<Polynomial> images(nvars, Polynomial(kept));
  std::size_t next = 0;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t p = 0; p < static_cast<std::size_t>(sizes[k]); ++p)
      images[offset[k] + p] = Polynomial::variable(kept, next++);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t last = offset[k] + static_cast<std::size_t>(sizes[k]);
    const Polynomial linear = out.raw[k].homogeneous_part(1);
    Polynomial::Exponents e(nvars, 0);
    e[last] = 1;
    if (linear.coefficient(e) != -1) throw std::logic_error("cohomology_presentation: unexpected linear relation");
    Polynomial rest = linear + y(k, static_cast<std::size_t>(sizes[k]));
    // rest only involves variables whose images are already fixed.
    std::vector<Polynomial> partial = images;
    partial[last] = Polynomial(kept);
    images[last] = rest.substitute(partial);
  }
  for (const auto& rel : out.relations) {
    if (rel.degree() < 2) continue;
    Polynomial g = rel.substitute(images).sign_normalized();
    if (!g.is_zero()) out.normalized.push_back(std::move(g));
  }
  return out;
}

PartitionPresentation partition_presentation(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n == 0) throw std::invalid_argument("partition_presentation: empty sequence");
  for (int i = 0; i < n; ++i) {
    const int li = lambda[static_cast<std::size_t>(i)];
    if (li < 0 || li > n || (i > 0 && li < lambda[static_cast<std::size_t>(i - 1)]))
      throw std::invalid_argument("partition_presentation: need 0 <= l_1 <= ... <= l_n <= n");
  }
  PartitionPresentation out;
  out.lambda = lambda;
  std::set<int> used;
  std::vector<int> one_line;
  for (int i = 1; i <= n; ++i) {
    int pick = 0;
    for (int c = lambda[static_cast<std::size_t>(i - 1)]; c >= 1; --c)
      if (!used.count(c)) {
        pick = c;
        break;
      }
    if (pick == 0)
      throw std::domain_error("partition_presentation: no value left at step " + std::to_string(i));
    used.insert(pick);
    one_line.push_back(pick);
  }
  out.w = Permutation(one_line);
  for (int i = 1; i <= n; ++i) {
    out.variables.push_back("x" + std::to_string(i));
    out.generators.push_back(complete_homogeneous(lambda[static_cast<std::size_t>(i - 1)] - i + 1, i,
                                                  static_cast<std::size_t>(n)));
  }
  return out;
}

std::vector<PolynomialIdentity> substitution_identities(const Permutation& w) {
  if (w != Permutation({2, 3, 5, 4, 1}))
    throw std::invalid_argument("substitution_identities: only the worked permutation 23541 is supported");
  const CohomologyPresentation pres = cohomology_presentation(w);
  if (pres.normalized.size() != 4) throw std::logic_error("substitution_identities: expected four generators");

  const std::size_t nx = 4;
  auto x = [&](std::size_t i) { return Polynomial::variable(nx, i - 1); };
  const std::vector<std::string> xs{"x1", "x2", "x3", "x4"};
  const std::vector<Polynomial> images{-x(1), x(1) + x(2), x(3), x(4)};

  const Polynomial s3 = x(1) + x(2) + x(3);
  const Polynomial s4 = s3 + x(4);
  const Polynomial j1 = x(1) * x(1);
  const Polynomial j2 = (x(1) + x(2)) * x(2);
  const Polynomial j3 = s3 * x(3) * x(3);
  const Polynomial j4 = s3 * x(3) + s4 * x(4);

  std::vector<PolynomialIdentity> out;
  const std::vector<std::pair<std::string, Polynomial>> targets{
      {"g1 -> J'1", j1}, {"g2 -> J'2", j2}, {"g3 -> J'4", j4}, {"g4 -> x3*J'4 - J'3", x(3) * j4 - j3}};
  for (std::size_t i = 0; i < 4; ++i)
    out.push_back({targets[i].first, xs, pres.normalized[i].substitute(images), targets[i].second});
  out.push_back({"x3*x4*(x1+x2+x3+x4) = x3*J'4 - J'3", xs, x(3) * x(4) * s4, x(3) * j4 - j3});

  // J' is J with x5 eliminated through h1(5).
  const PartitionPresentation part = partition_presentation({2, 3, 5, 5, 5});
  std::vector<Polynomial> drop_x5{x(1), x(2), x(3), x(4), -s4};
  const auto& h = part.generators;
  out.push_back({"h2(2) - h2(1) = J'2", xs, (h[1] - h[0]).substitute(drop_x5), j2});
  out.push_back({"h2(4) - h2(2) = J'4", xs, (h[3] - h[1]).substitute(drop_x5), j4});
  const auto x5 = [](std::size_t i) { return Polynomial::variable(5, i - 1); };
  out.push_back({"h3(3) - x3*h2(2) - x2*(h2(2) - h2(1)) - (x1+x2)*h2(1) = J'3", xs,
                 (h[2] - x5(3) * h[1] - x5(2) * (h[1] - h[0]) - (x5(1) + x5(2)) * h[0]).substitute(drop_x5),
                 j3});
  return out;
}

bool verify_substitution_identity(const Permutation& w) {
  const auto ids = substitution_identities(w);
  return std::all_of(ids.begin(), ids.end(), [](const PolynomialIdentity& id) { return id.holds(); });
}

}  // namespace schubert
