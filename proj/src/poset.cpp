#include "schubert/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schubert/isomorphism.hpp"

namespace schubert {

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = u.size();
  // For every prefix length i and threshold t: #{k <= i : u(k) >= t} <= same for w.
  std::vector<int> cu(static_cast<std::size_t>(n) + 2, 0), cw(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int t = 1; t <= u(i); ++t) ++cu[static_cast<std::size_t>(t)];
    for (int t = 1; t <= w(i); ++t) ++cw[static_cast<std::size_t>(t)];
    for (int t = 1; t <= n; ++t)
      if (cu[static_cast<std::size_t>(t)] > cw[static_cast<std::size_t>(t)]) return false;
  }
  return true;
}

AbstractPoset::AbstractPoset(std::vector<std::string> labels, std::vector<std::vector<int>> up_covers)
    : labels_(std::move(labels)), up_(std::move(up_covers)) {
  const int n = size();
  if (static_cast<int>(up_.size()) != n) throw std::invalid_argument("poset: cover list size mismatch");
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& targets : up_) {
    for (int t : targets) {
      if (t < 0 || t >= n) throw std::invalid_argument("poset: cover target out of range");
      ++indegree[static_cast<std::size_t>(t)];
    }
  }
  // Longest chain heights in topological order.
  rank_.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  std::size_t head = 0;
  while (head < queue.size()) {
    const int v = queue[head++];
    for (int t : up_[static_cast<std::size_t>(v)]) {
      rank_[static_cast<std::size_t>(t)] = std::max(rank_[static_cast<std::size_t>(t)], rank_[static_cast<std::size_t>(v)] + 1);
      if (--indegree[static_cast<std::size_t>(t)] == 0) queue.push_back(t);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw std::invalid_argument("poset: cover relation has a cycle");

  int top = -1;
  for (int v = 0; v < n; ++v) {
    for (int t : up_[static_cast<std::size_t>(v)])
      if (rank_[static_cast<std::size_t>(t)] != rank_[static_cast<std::size_t>(v)] + 1) graded_ = false;
    if (up_[static_cast<std::size_t>(v)].empty()) {
      if (top >= 0 && top != rank_[static_cast<std::size_t>(v)]) graded_ = false;
      top = rank_[static_cast<std::size_t>(v)];
    }
  }
}

std::size_t AbstractPoset::cover_count() const {
  std::size_t total = 0;
  for (const auto& targets : up_) total += targets.size();
  return total;
}

BruhatInterval::BruhatInterval(const Permutation& v, const Permutation& w) : v_(v), w_(w) {
  if (!bruhat_leq(v, w))
    throw std::invalid_argument("interval: " + v.to_string() + " is not below " + w.to_string());
  const int base = length(v);
  std::vector<std::pair<int, Permutation>> members;
  for (const Permutation& u : all_permutations(v.size()))
    if (bruhat_leq(v, u) && bruhat_leq(u, w)) members.emplace_back(length(u), u);
  std::sort(members.begin(), members.end());
  for (auto& [len, u] : members) {
    index_.emplace(u, static_cast<int>(elements_.size()));
    rank_.push_back(len - base);
    elements_.push_back(std::move(u));
  }
  up_.resize(elements_.size());
  const int n = v.size();
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        // A transposition raises the length by one only if it swaps an ascent.
        if (elements_[a](i) > elements_[a](j)) continue;
        const Permutation b = elements_[a].swap_positions(i, j);
        auto it = index_.find(b);
        if (it != index_.end() && rank_[static_cast<std::size_t>(it->second)] == rank_[a] + 1)
          up_[a].push_back(it->second);
      }
    }
    std::sort(up_[a].begin(), up_[a].end());
  }
}

std::optional<int> BruhatInterval::index_of(const Permutation& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Permutation, Permutation>> BruhatInterval::covers() const {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (int b : up_[a]) out.emplace_back(elements_[a], elements_[static_cast<std::size_t>(b)]);
  return out;
}

AbstractPoset BruhatInterval::to_poset() const {
  std::vector<std::string> labels;
  for (const auto& u : elements_) labels.push_back(u.to_string());
  return AbstractPoset(std::move(labels), up_);
}

std::vector<long long> rank_polynomial(const AbstractPoset& poset) {
  if (!poset.is_graded()) throw std::domain_error("rank_polynomial: poset is not graded");
  std::vector<long long> coeffs;
  for (int r : poset.rank()) {
    if (static_cast<std::size_t>(r) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(r) + 1, 0);
    ++coeffs[static_cast<std::size_t>(r)];
  }
  return coeffs;
}

std::vector<long long> rank_polynomial(const BruhatInterval& interval) {
  std::vector<long long> coeffs;
  for (int r : interval.rank()) {
    if (static_cast<std::size_t>(r) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(r) + 1, 0);
    ++coeffs[static_cast<std::size_t>(r)];
  }
  return coeffs;
}

std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

AbstractPoset boolean_algebra(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("boolean_algebra: rank out of range");
  const int n = 1 << k;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
  for (int mask = 0; mask < n; ++mask) {
    std::string label = "{";
    for (int bit = 0; bit < k; ++bit) {
      if (mask & (1 << bit)) {
        if (label.size() > 1) label += ',';
        label += std::to_string(bit + 1);
      } else {
        up[static_cast<std::size_t>(mask)].push_back(mask | (1 << bit));
      }
    }
    labels.push_back(label + "}");
  }
  return AbstractPoset(std::move(labels), std::move(up));
}

AbstractPoset s3_poset() {
  // Bruhat order on S_3: e < s1, s2 < s1s2, s2s1 < s1s2s1, every rank-1
  // element below both rank-2 elements.
  return AbstractPoset({"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"},
                       {{1, 2}, {3, 4}, {3, 4}, {5}, {5}, {}});
}

AbstractPoset p3412_poset() {
  return interval(Permutation::identity(4), Permutation({3, 4, 1, 2})).to_poset();
}

AbstractPoset product(const AbstractPoset& p, const AbstractPoset& q) {
  const int np = p.size();
  const int nq = q.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> up(static_cast<std::size_t>(np * nq));
  for (int a = 0; a < np; ++a) {
    for (int b = 0; b < nq; ++b) {
      const int idx = a * nq + b;
      labels.push_back("(" + p.labels()[static_cast<std::size_t>(a)] + "," + q.labels()[static_cast<std::size_t>(b)] + ")");
      for (int a2 : p.up_covers()[static_cast<std::size_t>(a)]) up[static_cast<std::size_t>(idx)].push_back(a2 * nq + b);
      for (int b2 : q.up_covers()[static_cast<std::size_t>(b)]) up[static_cast<std::size_t>(idx)].push_back(a * nq + b2);
    }
  }
  return AbstractPoset(std::move(labels), std::move(up));
}

namespace {

ColoredDigraph hasse_graph(const AbstractPoset& p) {
  ColoredDigraph g;
  g.out_edges = p.up_covers();
  std::vector<int> down(static_cast<std::size_t>(p.size()), 0);
  for (const auto& targets : p.up_covers())
    for (int t : targets) ++down[static_cast<std::size_t>(t)];
  for (int v = 0; v < p.size(); ++v) {
    const auto up = static_cast<std::int64_t>(p.up_covers()[static_cast<std::size_t>(v)].size());
    g.color.push_back((static_cast<std::int64_t>(p.rank()[static_cast<std::size_t>(v)]) << 32) |
                      (up << 16) | down[static_cast<std::size_t>(v)]);
  }
  return g;
}

}  // namespace

bool poset_isomorphic(const AbstractPoset& p, const AbstractPoset& q) {
  if (p.size() != q.size() || p.cover_count() != q.cover_count()) return false;
  return isomorphic(hasse_graph(p), hasse_graph(q));
}

Factorization interval_factorization(const Permutation& w,
                                     const std::vector<std::vector<int>>& index_sets,
                                     const std::vector<Permutation>& factors) {
  if (index_sets.size() != factors.size())
    throw std::invalid_argument("interval_factorization: one factor per index set");
  if (factors.empty()) throw std::invalid_argument("interval_factorization: no factors");
  std::vector<int> seen;
  for (const auto& set : index_sets) {
    for (int i : set) {
      if (std::find(seen.begin(), seen.end(), i) != seen.end())
        throw std::invalid_argument("interval_factorization: index sets overlap at " + std::to_string(i));
      seen.push_back(i);
    }
  }
  Permutation total = Permutation::identity(w.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (int letter : support(factors[k]))
      if (std::find(index_sets[k].begin(), index_sets[k].end(), letter) == index_sets[k].end())
        throw std::invalid_argument("interval_factorization: factor " + factors[k].to_string() +
                                    " uses s" + std::to_string(letter) + " outside its index set");
    total = compose(total, factors[k]);
  }
  if (total != w)
    throw std::invalid_argument("interval_factorization: factors multiply to " + total.to_string() +
                                ", not " + w.to_string());

  const Permutation e = Permutation::identity(w.size());
  AbstractPoset prod = interval(e, factors.front()).to_poset();
  for (std::size_t k = 1; k < factors.size(); ++k) prod = product(prod, interval(e, factors[k]).to_poset());
  Factorization out;
  out.matches_interval = poset_isomorphic(prod, interval(e, w).to_poset());
  out.product = std::move(prod);
  return out;
}

std::string hasse_dot(const BruhatInterval& interval) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  const auto& elements = interval.elements();
  int current = -1;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    const int r = interval.rank()[a];
    if (r != current) {
      if (current >= 0) out << " }\n";
      out << "  { rank=same;";
      current = r;
    }
    out << " \"" << elements[a].to_string() << "\";";
  }
  if (current >= 0) out << " }\n";
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (int b : interval.up_covers()[a])
      out << "  \"" << elements[a].to_string() << "\" -> \"" << elements[static_cast<std::size_t>(b)].to_string()
          << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace schubert
