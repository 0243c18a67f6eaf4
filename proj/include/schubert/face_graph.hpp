#pragma once

// Face criterion for Bruhat interval polytopes: Q_{x,y} is a face of Q_{v,w}
// iff the contracted directed graph G_{x,y}^{v,w} is acyclic.

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

/// Position pairs (i, j) with i < j.
using TranspositionSet = std::set<std::pair<int, int>>;

/// {(i,j) : u < u(i,j) <= w, l(u(i,j)) = l(u) + 1}. Requires v <= u <= w.
TranspositionSet upper_T(const Permutation& u, const Permutation& v, const Permutation& w);
/// {(i,j) : v <= u(i,j) < u, l(u) = l(u(i,j)) + 1}. Requires v <= u <= w.
TranspositionSet lower_T(const Permutation& u, const Permutation& v, const Permutation& w);

struct IntervalFaceGraph {
  std::vector<std::vector<int>> classes;      // merged vertices of [n], ordered by least member
  std::vector<int> class_of;                  // class index for vertex i at position i-1
  std::set<std::pair<int, int>> directed_edges;  // class indices; self-loops kept

  bool has_cycle() const;
  std::string label(int cls) const;  // "3,4"
};

/// Requires v <= x <= y <= w; throws std::invalid_argument otherwise.
IntervalFaceGraph face_graph(const Permutation& x, const Permutation& y, const Permutation& v,
                             const Permutation& w);
bool is_face(const Permutation& x, const Permutation& y, const Permutation& v, const Permutation& w);

struct IntervalFace {
  Permutation x;
  Permutation y;
  int dim = 0;                        // dim Q_{x,y}
  std::vector<Permutation> members;  // [x,y], sorted
};

/// Every subinterval [x,y] of [v,w] whose polytope is a face, sorted by
/// (dim, x, y).
std::vector<IntervalFace> enumerate_faces(const Permutation& v, const Permutation& w);

/// Both sides of the seven transposition-set identities for
/// v <= u <= w with s_r outside supp(w).
struct LemmaReport {
  std::array<bool, 7> holds{};
  bool all() const;
};

LemmaReport check_lemma_identities(const Permutation& u, const Permutation& v, const Permutation& w, int r);

std::string face_graph_dot(const IntervalFaceGraph& g);

}  // namespace schubert
