#include "schubert/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace schubert {

namespace {

// Both graphs live side by side in one node range [0, na + nb) so that
// refinement assigns comparable color ids on the two sides.
class JointSearch {
 public:
  JointSearch(const ColoredDigraph& a, const ColoredDigraph& b)
      : a_(a), b_(b), na_(a.size()), total_(a.size() + b.size()) {
    out_.resize(static_cast<std::size_t>(total_));
    in_.resize(static_cast<std::size_t>(total_));
    add_edges(a, 0);
    add_edges(b, na_);
  }

  std::optional<std::vector<int>> run() {
    std::map<std::int64_t, int> ids;
    for (auto c : a_.color) ids.emplace(c, 0);
    for (auto c : b_.color) ids.emplace(c, 0);
    int next = 0;
    for (auto& [c, id] : ids) id = next++;
    std::vector<int> colors(static_cast<std::size_t>(total_));
    for (int v = 0; v < na_; ++v) colors[static_cast<std::size_t>(v)] = ids[a_.color[static_cast<std::size_t>(v)]];
    for (int v = 0; v < b_.size(); ++v)
      colors[static_cast<std::size_t>(na_ + v)] = ids[b_.color[static_cast<std::size_t>(v)]];
    if (!refine(colors)) return std::nullopt;
    return search(colors);
  }

 private:
  void add_edges(const ColoredDigraph& g, int offset) {
    for (int v = 0; v < g.size(); ++v) {
      for (int t : g.out_edges[static_cast<std::size_t>(v)]) {
        out_[static_cast<std::size_t>(offset + v)].push_back(offset + t);
        in_[static_cast<std::size_t>(offset + t)].push_back(offset + v);
      }
    }
  }

  // Refines to a stable partition; false if the two sides become unbalanced.
  bool refine(std::vector<int>& colors) const {
    int classes = count_classes(colors);
    while (true) {
      std::vector<std::vector<int>> signature(static_cast<std::size_t>(total_));
      for (int v = 0; v < total_; ++v) {
        auto& sig = signature[static_cast<std::size_t>(v)];
        sig.push_back(colors[static_cast<std::size_t>(v)]);
        std::vector<int> outs, ins;
        for (int t : out_[static_cast<std::size_t>(v)]) outs.push_back(colors[static_cast<std::size_t>(t)]);
        for (int s : in_[static_cast<std::size_t>(v)]) ins.push_back(colors[static_cast<std::size_t>(s)]);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        sig.push_back(-1);
        sig.insert(sig.end(), outs.begin(), outs.end());
        sig.push_back(-2);
        sig.insert(sig.end(), ins.begin(), ins.end());
      }
      std::map<std::vector<int>, int> ids;
      for (const auto& sig : signature) ids.emplace(sig, 0);
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (int v = 0; v < total_; ++v)
        colors[static_cast<std::size_t>(v)] = ids[signature[static_cast<std::size_t>(v)]];
      if (!balanced(colors)) return false;
      const int refined = static_cast<int>(ids.size());
      if (refined == classes) return true;
      classes = refined;
    }
  }

  int count_classes(const std::vector<int>& colors) const {
    return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  }

  bool balanced(const std::vector<int>& colors) const {
    std::map<int, int> tally;
    for (int v = 0; v < na_; ++v) ++tally[colors[static_cast<std::size_t>(v)]];
    for (int v = na_; v < total_; ++v) --tally[colors[static_cast<std::size_t>(v)]];
    return std::all_of(tally.begin(), tally.end(), [](const auto& kv) { return kv.second == 0; });
  }

  std::optional<std::vector<int>> search(const std::vector<int>& colors) const {
    std::map<int, std::vector<int>> left, right;
    for (int v = 0; v < na_; ++v) left[colors[static_cast<std::size_t>(v)]].push_back(v);
    for (int v = na_; v < total_; ++v) right[colors[static_cast<std::size_t>(v)]].push_back(v - na_);

    int target = -1;
    std::size_t best = 0;
    for (const auto& [c, members] : left) {
      if (members.size() > 1 && (target < 0 || members.size() < best)) {
        target = c;
        best = members.size();
      }
    }
    if (target < 0) {
      std::vector<int> map(static_cast<std::size_t>(na_));
      for (const auto& [c, members] : left) map[static_cast<std::size_t>(members.front())] = right[c].front();
      if (verify(map)) return map;
      return std::nullopt;
    }

    const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    const int g = left[target].front();
    for (int h : right[target]) {
      std::vector<int> trial = colors;
      trial[static_cast<std::size_t>(g)] = fresh;
      trial[static_cast<std::size_t>(na_ + h)] = fresh;
      if (!refine(trial)) continue;
      if (auto found = search(trial)) return found;
    }
    return std::nullopt;
  }

  bool verify(const std::vector<int>& map) const {
    for (int v = 0; v < na_; ++v) {
      const int image = map[static_cast<std::size_t>(v)];
      if (a_.color[static_cast<std::size_t>(v)] != b_.color[static_cast<std::size_t>(image)]) return false;
      std::vector<int> mapped;
      for (int t : a_.out_edges[static_cast<std::size_t>(v)]) mapped.push_back(map[static_cast<std::size_t>(t)]);
      std::vector<int> expected = b_.out_edges[static_cast<std::size_t>(image)];
      std::sort(mapped.begin(), mapped.end());
      std::sort(expected.begin(), expected.end());
      if (mapped != expected) return false;
    }
    return true;
  }

  const ColoredDigraph& a_;
  const ColoredDigraph& b_;
  int na_;
  int total_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

std::size_t edge_count(const ColoredDigraph& g) {
  std::size_t total = 0;
  for (const auto& edges : g.out_edges) total += edges.size();
  return total;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.size() != b.size() || edge_count(a) != edge_count(b)) return std::nullopt;
  if (a.size() == 0) return std::vector<int>{};
  return JointSearch(a, b).run();
}

}  // namespace schubert
