#pragma once

// Isomorphism of vertex-colored directed graphs by color refinement and
// individualization. Hasse diagrams and vertex-facet incidence graphs are
// both fed through here.

#include <cstdint>
#include <optional>
#include <vector>

namespace schubert {

struct ColoredDigraph {
  std::vector<std::int64_t> color;         // initial invariant per node
  std::vector<std::vector<int>> out_edges;  // adjacency by node index

  int size() const { return static_cast<int>(color.size()); }
};

/// A bijection `map[a] = b` that preserves colors and directed edges, if any.
std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b);

inline bool isomorphic(const ColoredDigraph& a, const ColoredDigraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace schubert
