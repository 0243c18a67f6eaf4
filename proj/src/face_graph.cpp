#include "schubert/face_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schubert/linear_algebra.hpp"
#include "schubert/poset.hpp"

namespace schubert {

namespace {

void require_between(const Permutation& v, const Permutation& u, const Permutation& w, const char* what) {
  if (!bruhat_leq(v, u) || !bruhat_leq(u, w))
    throw std::invalid_argument(std::string(what) + ": need " + v.to_string() + " <= " + u.to_string() +
                                " <= " + w.to_string());
}

std::pair<int, int> ordered(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (at(a) != a) a = at(a) = at(at(a));
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) at(std::max(a, b)) = std::min(a, b);
  }

 private:
  int& at(int a) { return parent_[static_cast<std::size_t>(a)]; }
  std::vector<int> parent_;
};

// Graph assembly once the three transposition sets are known.
IntervalFaceGraph assemble(int n, const TranspositionSet& merge, const TranspositionSet& up_from_top,
                           const TranspositionSet& down_from_bottom) {
  UnionFind uf(n);
  for (auto [a, b] : merge) uf.unite(a - 1, b - 1);
  IntervalFaceGraph g;
  g.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (g.class_of[static_cast<std::size_t>(root)] < 0) {
      g.class_of[static_cast<std::size_t>(root)] = static_cast<int>(g.classes.size());
      g.classes.emplace_back();
    }
    g.class_of[static_cast<std::size_t>(i)] = g.class_of[static_cast<std::size_t>(root)];
    g.classes[static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(i)])].push_back(i + 1);
  }
  for (auto [i, j] : up_from_top)
    g.directed_edges.emplace(g.class_of[static_cast<std::size_t>(i - 1)], g.class_of[static_cast<std::size_t>(j - 1)]);
  for (auto [i, j] : down_from_bottom)
    g.directed_edges.emplace(g.class_of[static_cast<std::size_t>(j - 1)], g.class_of[static_cast<std::size_t>(i - 1)]);
  return g;
}

TranspositionSet upper_unchecked(const Permutation& u, const Permutation& w) {
  TranspositionSet out;
  const int n = u.size();
  const int len = length(u);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (u(i) > u(j)) continue;
      const Permutation b = u.swap_positions(i, j);
      if (length(b) == len + 1 && bruhat_leq(b, w)) out.emplace(i, j);
    }
  return out;
}

TranspositionSet lower_unchecked(const Permutation& u, const Permutation& v) {
  TranspositionSet out;
  const int n = u.size();
  const int len = length(u);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (u(i) < u(j)) continue;
      const Permutation b = u.swap_positions(i, j);
      if (length(b) == len - 1 && bruhat_leq(v, b)) out.emplace(i, j);
    }
  return out;
}

}  // namespace

TranspositionSet upper_T(const Permutation& u, const Permutation& v, const Permutation& w) {
  require_between(v, u, w, "upper_T");
  return upper_unchecked(u, w);
}

TranspositionSet lower_T(const Permutation& u, const Permutation& v, const Permutation& w) {
  require_between(v, u, w, "lower_T");
  return lower_unchecked(u, v);
}

bool IntervalFaceGraph::has_cycle() const {
  const int k = static_cast<int>(classes.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (auto [a, b] : directed_edges) {
    if (a == b) return true;
    adj[static_cast<std::size_t>(a)].push_back(b);
  }
  // Kahn: a cycle leaves nodes with positive indegree.
  std::vector<int> indegree(static_cast<std::size_t>(k), 0);
  for (const auto& targets : adj)
    for (int t : targets) ++indegree[static_cast<std::size_t>(t)];
  std::vector<int> ready;
  for (int c = 0; c < k; ++c)
    if (indegree[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
  int removed = 0;
  while (!ready.empty()) {
    const int c = ready.back();
    ready.pop_back();
    ++removed;
    for (int t : adj[static_cast<std::size_t>(c)])
      if (--indegree[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
  }
  return removed != k;
}

std::string IntervalFaceGraph::label(int cls) const {
  std::string out;
  for (int i : classes[static_cast<std::size_t>(cls)]) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

IntervalFaceGraph face_graph(const Permutation& x, const Permutation& y, const Permutation& v,
                             const Permutation& w) {
  if (!bruhat_leq(v, x) || !bruhat_leq(x, y) || !bruhat_leq(y, w))
    throw std::invalid_argument("face_graph: [" + x.to_string() + "," + y.to_string() + "] is not inside [" +
                                v.to_string() + "," + w.to_string() + "]");
  return assemble(x.size(), upper_unchecked(x, y), upper_unchecked(y, w), lower_unchecked(x, v));
}

bool is_face(const Permutation& x, const Permutation& y, const Permutation& v, const Permutation& w) {
  return !face_graph(x, y, v, w).has_cycle();
}

std::vector<IntervalFace> enumerate_faces(const Permutation& v, const Permutation& w) {
  const BruhatInterval whole(v, w);
  const auto& elements = whole.elements();
  std::vector<TranspositionSet> up_to_top, down_to_bottom;
  for (const auto& u : elements) {
    up_to_top.push_back(upper_unchecked(u, w));
    down_to_bottom.push_back(lower_unchecked(u, v));
  }
  std::vector<IntervalFace> out;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const Permutation& x = elements[a];
      const Permutation& y = elements[b];
      if (!bruhat_leq(x, y)) continue;
      const auto g = assemble(x.size(), upper_unchecked(x, y), up_to_top[b], down_to_bottom[a]);
      if (g.has_cycle()) continue;
      IntervalFace face{x, y, 0, {}};
      std::vector<IntVector> points;
      for (const auto& u : elements) {
        if (bruhat_leq(x, u) && bruhat_leq(u, y)) {
          face.members.push_back(u);
          points.emplace_back(u.one_line().begin(), u.one_line().end());
        }
      }
      std::sort(face.members.begin(), face.members.end());
      face.dim = affine_dimension(points);
      out.push_back(std::move(face));
    }
  }
  std::sort(out.begin(), out.end(), [](const IntervalFace& a, const IntervalFace& b) {
    return std::tie(a.dim, a.x, a.y) < std::tie(b.dim, b.x, b.y);
  });
  return out;
}

bool LemmaReport::all() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

LemmaReport check_lemma_identities(const Permutation& u, const Permutation& v, const Permutation& w, int r) {
  const int n = w.size();
  require_between(v, u, w, "check_lemma_identities");
  if (r < 1 || r >= n) throw std::invalid_argument("check_lemma_identities: r out of range");
  const auto supp = support(w);
  if (std::find(supp.begin(), supp.end(), r) != supp.end())
    throw std::invalid_argument("check_lemma_identities: s_r lies in supp(w)");

  const Permutation sr = Permutation::simple(n, r);
  const Permutation sr_w = compose(sr, w);
  const Permutation w_sr = compose(w, sr);
  const Permutation sr_u = compose(sr, u);
  const Permutation u_sr = compose(u, sr);
  const Permutation u_inv = u.inverse();
  const auto value_pair = ordered(u_inv(r), u_inv(r + 1));
  const auto adjacent = std::make_pair(r, r + 1);
  auto conjugate = [&](const TranspositionSet& set) {
    TranspositionSet out;
    for (auto [i, j] : set) out.insert(ordered(sr(i), sr(j)));
    return out;
  };
  auto with = [](TranspositionSet set, std::pair<int, int> extra) {
    set.insert(extra);
    return set;
  };

  const auto up = upper_T(u, v, w);
  const auto down = lower_T(u, v, w);
  LemmaReport report;
  report.holds[0] = lower_T(u, v, sr_w) == down && lower_T(u, v, w_sr) == down;
  report.holds[1] = upper_T(u, v, sr_w) == with(up, value_pair);
  report.holds[2] = upper_T(u, v, w_sr) == with(up, adjacent);
  report.holds[3] = upper_T(sr_u, v, sr_w) == up;
  report.holds[4] = lower_T(sr_u, v, sr_w) == with(down, value_pair);
  report.holds[5] = upper_T(u_sr, v, w_sr) == conjugate(up);
  report.holds[6] = lower_T(u_sr, v, w_sr) == with(conjugate(down), adjacent);
  return report;
}

std::string face_graph_dot(const IntervalFaceGraph& g) {
  std::ostringstream out;
  out << "digraph face_graph {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t c = 0; c < g.classes.size(); ++c) out << "  \"" << g.label(static_cast<int>(c)) << "\";\n";
  for (auto [a, b] : g.directed_edges)
    out << "  \"" << g.label(a) << "\" -> \"" << g.label(b) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace schubert
