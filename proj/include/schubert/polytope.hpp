#pragma once

// Lattice polytopes with exact facets and face lattices. Bruhat interval
// polytopes Q_{v,w} = conv{(u(1),...,u(n)) : v <= u <= w} are built here.

#include <string>
#include <vector>

#include "schubert/linear_algebra.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

using Point = IntVector;

/// normal . x >= offset on the polytope, with equality exactly on `vertices`.
struct Facet {
  IntVector normal;          // primitive, ambient coordinates
  Integer offset = 0;
  std::vector<int> vertices;  // sorted indices into LatticePolytope::vertices
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct LatticePolytope {
  int ambient_dim = 0;
  int dim = 0;
  std::vector<Point> vertices;   // lexicographically sorted
  std::vector<Facet> facets;     // sorted by vertex set
  std::vector<int> chart;        // coordinates on which projection is injective
  std::vector<Point> non_vertices;  // input points that were not vertices

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
};

struct FaceLattice {
  std::vector<std::vector<int>> faces;  // vertex-index sets, sorted by (dim, set)
  std::vector<int> dims;

  std::size_t size() const { return faces.size(); }
};

/// Exact convex hull. Throws std::invalid_argument on empty input or mixed
/// dimensions.
LatticePolytope hull(std::vector<Point> points);

std::vector<Point> bip_vertices(const Permutation& v, const Permutation& w);
/// hull(bip_vertices(v, w)).
LatticePolytope bruhat_interval_polytope(const Permutation& v, const Permutation& w);

FaceLattice face_lattice(const LatticePolytope& p);
/// (f_0, ..., f_dim) with the polytope itself as the trailing 1.
std::vector<long long> f_vector(const LatticePolytope& p);
std::vector<long long> f_vector(const FaceLattice& lattice);

/// Vertex-facet incidence isomorphism.
bool combinatorially_equivalent(const LatticePolytope& p, const LatticePolytope& q);

LatticePolytope product_polytope(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope point_polytope();
LatticePolytope segment();
LatticePolytope cube(int k);

/// OFF text of the polytope in its intrinsic coordinates; dim <= 3 only.
std::string to_off(const LatticePolytope& p);

}  // namespace schubert
