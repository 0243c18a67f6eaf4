#include "schubert/polytope.hpp"

#include <algorithm>
#include <array>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schubert/isomorphism.hpp"
#include "schubert/poset.hpp"

namespace schubert {

namespace {

using Bits = boost::dynamic_bitset<>;

Point project(const Point& p, const std::vector<int>& chart) {
  Point out;
  out.reserve(chart.size());
  for (int c : chart) out.push_back(p[static_cast<std::size_t>(c)]);
  return out;
}

IntVector difference(const Point& a, const Point& b) {
  IntVector d(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) d[c] = checked_add(a[c], -b[c]);
  return d;
}

// Beneath-beyond insertion in intrinsic coordinates. Points are inserted in
// the given (lexicographic) order; incidence sets index into `points_`.
class IncrementalHull {
 public:
  struct WorkFacet {
    IntVector normal;
    Integer offset = 0;
    Bits incidence;
  };

  IncrementalHull(std::vector<Point> points, int dim)
      : points_(std::move(points)), dim_(dim), inserted_(points_.size()) {}

  void run() {
    build_simplex();
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (!inserted_.test(p)) insert(p);
  }

  const std::vector<WorkFacet>& facets() const { return facets_; }

  bool is_vertex(std::size_t p) const {
    IntMatrix normals;
    for (const auto& f : facets_)
      if (f.incidence.test(p)) normals.push_back(f.normal);
    return rank(normals, static_cast<std::size_t>(dim_)) == dim_;
  }

 private:
  int affine_dim_of(const Bits& set) const {
    std::vector<Point> subset;
    for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) subset.push_back(points_[i]);
    return affine_dimension(subset);
  }

  Integer slack(const WorkFacet& f, const Point& x) const { return checked_add(dot(f.normal, x), -f.offset); }

  Bits incidence_of(const WorkFacet& f) const {
    Bits out(points_.size());
    for (auto i = inserted_.find_first(); i != Bits::npos; i = inserted_.find_next(i))
      if (slack(f, points_[i]) == 0) out.set(i);
    return out;
  }

  // Hyperplane through `on` with `off_point` on the positive side.
  WorkFacet hyperplane(const std::vector<std::size_t>& on, const Point& off_point) const {
    IntMatrix rows;
    for (std::size_t k = 1; k < on.size(); ++k) rows.push_back(difference(points_[on[k]], points_[on[0]]));
    auto normal = kernel_line(rows, static_cast<std::size_t>(dim_));
    if (!normal) throw std::logic_error("hull: degenerate hyperplane");
    WorkFacet f;
    f.normal = std::move(*normal);
    f.offset = dot(f.normal, points_[on[0]]);
    if (slack(f, off_point) < 0) {
      for (Integer& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    return f;
  }

  void build_simplex() {
    std::vector<std::size_t> chosen;
    for (std::size_t p = 0; p < points_.size() && static_cast<int>(chosen.size()) <= dim_; ++p) {
      std::vector<Point> trial;
      for (auto c : chosen) trial.push_back(points_[c]);
      trial.push_back(points_[p]);
      if (affine_dimension(trial) == static_cast<int>(chosen.size())) chosen.push_back(p);
    }
    if (static_cast<int>(chosen.size()) != dim_ + 1) throw std::logic_error("hull: no spanning simplex");
    for (auto c : chosen) inserted_.set(c);
    for (std::size_t omit = 0; omit < chosen.size(); ++omit) {
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < chosen.size(); ++k)
        if (k != omit) on.push_back(chosen[k]);
      WorkFacet f = hyperplane(on, points_[chosen[omit]]);
      f.incidence = incidence_of(f);
      facets_.push_back(std::move(f));
    }
  }

  void insert(std::size_t p) {
    const Point& x = points_[p];
    std::vector<Integer> s;
    s.reserve(facets_.size());
    bool outside = false;
    for (const auto& f : facets_) {
      s.push_back(slack(f, x));
      outside = outside || s.back() < 0;
    }
    if (outside) {
      std::map<std::pair<IntVector, Integer>, WorkFacet> created;
      for (std::size_t a = 0; a < facets_.size(); ++a) {
        if (s[a] >= 0) continue;
        for (std::size_t b = 0; b < facets_.size(); ++b) {
          if (s[b] <= 0) continue;
          const Bits ridge = facets_[a].incidence & facets_[b].incidence;
          if (static_cast<int>(ridge.count()) < dim_ - 1) continue;
          if (affine_dim_of(ridge) != dim_ - 2) continue;
          std::vector<std::size_t> on{p};
          for (auto i = ridge.find_first(); i != Bits::npos; i = ridge.find_next(i)) on.push_back(i);
          const Bits rest = facets_[b].incidence - ridge;
          const auto witness = rest.find_first();
          if (witness == Bits::npos) throw std::logic_error("hull: facet without interior point");
          WorkFacet f = hyperplane(on, points_[witness]);
          auto key = std::make_pair(f.normal, f.offset);
          created.try_emplace(std::move(key), std::move(f));
        }
      }
      std::vector<WorkFacet> kept;
      for (std::size_t a = 0; a < facets_.size(); ++a)
        if (s[a] >= 0) kept.push_back(std::move(facets_[a]));
      facets_ = std::move(kept);
      inserted_.set(p);
      for (auto& f : facets_)
        if (slack(f, x) == 0) f.incidence.set(p);
      for (auto& [key, f] : created) {
        f.incidence = incidence_of(f);
        facets_.push_back(std::move(f));
      }
    } else {
      inserted_.set(p);
      for (std::size_t a = 0; a < facets_.size(); ++a)
        if (s[a] == 0) facets_[a].incidence.set(p);
    }
  }

  std::vector<Point> points_;
  int dim_;
  Bits inserted_;
  std::vector<WorkFacet> facets_;
};

}  // namespace

LatticePolytope hull(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("hull: no points");
  const std::size_t ambient = points.front().size();
  for (const auto& p : points)
    if (p.size() != ambient) throw std::invalid_argument("hull: points of different dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope out;
  out.ambient_dim = static_cast<int>(ambient);
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(difference(points[i], points[0]));
  out.chart = reduced_echelon(diffs, ambient).pivots;
  out.dim = static_cast<int>(out.chart.size());
  if (out.dim == 0) {
    out.vertices = points;
    return out;
  }

  std::vector<Point> local;
  for (const auto& p : points) local.push_back(project(p, out.chart));
  IncrementalHull engine(local, out.dim);
  engine.run();

  std::vector<int> vertex_index(points.size(), -1);
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (engine.is_vertex(p)) {
      vertex_index[p] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(points[p]);
    } else {
      out.non_vertices.push_back(points[p]);
    }
  }
  for (const auto& wf : engine.facets()) {
    Facet f;
    f.normal.assign(ambient, 0);
    for (std::size_t k = 0; k < out.chart.size(); ++k) f.normal[static_cast<std::size_t>(out.chart[k])] = wf.normal[k];
    f.offset = wf.offset;
    for (auto i = wf.incidence.find_first(); i != Bits::npos; i = wf.incidence.find_next(i))
      if (vertex_index[i] >= 0) f.vertices.push_back(vertex_index[i]);
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<Point> bip_vertices(const Permutation& v, const Permutation& w) {
  const BruhatInterval iv(v, w);
  std::vector<Point> out;
  for (const auto& u : iv.elements()) out.emplace_back(u.one_line().begin(), u.one_line().end());
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolytope bruhat_interval_polytope(const Permutation& v, const Permutation& w) {
  return hull(bip_vertices(v, w));
}

FaceLattice face_lattice(const LatticePolytope& p) {
  std::vector<int> all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{all};
  std::vector<std::vector<int>> queue;
  for (const auto& f : p.facets)
    if (!f.vertices.empty() && seen.insert(f.vertices).second) queue.push_back(f.vertices);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& f : p.facets) {
      std::vector<int> meet;
      std::set_intersection(queue[head].begin(), queue[head].end(), f.vertices.begin(), f.vertices.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<std::pair<int, std::vector<int>>> graded;
  for (const auto& face : seen) {
    std::vector<Point> pts;
    for (int i : face) pts.push_back(p.vertices[static_cast<std::size_t>(i)]);
    graded.emplace_back(affine_dimension(pts), face);
  }
  std::sort(graded.begin(), graded.end());
  FaceLattice out;
  for (auto& [d, face] : graded) {
    out.dims.push_back(d);
    out.faces.push_back(std::move(face));
  }
  return out;
}

std::vector<long long> f_vector(const FaceLattice& lattice) {
  std::vector<long long> f;
  for (int d : lattice.dims) {
    if (static_cast<std::size_t>(d) >= f.size()) f.resize(static_cast<std::size_t>(d) + 1, 0);
    ++f[static_cast<std::size_t>(d)];
  }
  return f;
}

std::vector<long long> f_vector(const LatticePolytope& p) { return f_vector(face_lattice(p)); }

namespace {

ColoredDigraph incidence_graph(const LatticePolytope& p) {
  ColoredDigraph g;
  const int nv = static_cast<int>(p.vertices.size());
  std::vector<std::int64_t> degree(static_cast<std::size_t>(nv), 0);
  for (const auto& f : p.facets)
    for (int v : f.vertices) ++degree[static_cast<std::size_t>(v)];
  g.out_edges.resize(static_cast<std::size_t>(nv) + p.facets.size());
  for (int v = 0; v < nv; ++v) g.color.push_back(degree[static_cast<std::size_t>(v)]);
  for (std::size_t k = 0; k < p.facets.size(); ++k) {
    g.color.push_back((std::int64_t{1} << 40) + static_cast<std::int64_t>(p.facets[k].vertices.size()));
    for (int v : p.facets[k].vertices) g.out_edges[static_cast<std::size_t>(v)].push_back(nv + static_cast<int>(k));
  }
  return g;
}

}  // namespace

bool combinatorially_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim != q.dim || p.vertices.size() != q.vertices.size() || p.facets.size() != q.facets.size())
    return false;
  return isomorphic(incidence_graph(p), incidence_graph(q));
}

LatticePolytope product_polytope(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<Point> pts;
  for (const auto& a : p.vertices) {
    for (const auto& b : q.vertices) {
      Point c = a;
      c.insert(c.end(), b.begin(), b.end());
      pts.push_back(std::move(c));
    }
  }
  return hull(std::move(pts));
}

LatticePolytope point_polytope() { return hull({Point{}}); }

LatticePolytope segment() { return hull({Point{0}, Point{1}}); }

LatticePolytope cube(int k) {
  if (k < 0) throw std::invalid_argument("cube: negative dimension");
  LatticePolytope out = point_polytope();
  const LatticePolytope unit = segment();
  for (int i = 0; i < k; ++i) out = product_polytope(out, unit);
  return out;
}

namespace {

std::array<Integer, 3> cross(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  return {checked_add(checked_mul(a[1], b[2]), -checked_mul(a[2], b[1])),
          checked_add(checked_mul(a[2], b[0]), -checked_mul(a[0], b[2])),
          checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0]))};
}

Integer dot3(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  return checked_add(checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])), checked_mul(a[2], b[2]));
}

// Counterclockwise order around `axis` of coplanar points.
std::vector<int> cyclic_order(const std::vector<std::array<Integer, 3>>& coords, std::vector<int> ids,
                              const std::array<Integer, 3>& axis) {
  const auto m = static_cast<Integer>(ids.size());
  std::array<Integer, 3> sum{0, 0, 0};
  for (int i : ids)
    for (int c = 0; c < 3; ++c) sum[static_cast<std::size_t>(c)] += coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
  std::map<int, std::array<Integer, 3>> centered;
  for (int i : ids) {
    std::array<Integer, 3> q{};
    for (std::size_t c = 0; c < 3; ++c) q[c] = checked_add(checked_mul(m, coords[static_cast<std::size_t>(i)][c]), -sum[c]);
    centered[i] = q;
  }
  const auto ref = centered[ids.front()];
  auto half = [&](const std::array<Integer, 3>& q) {
    const Integer turn = dot3(cross(ref, q), axis);
    return (turn > 0 || (turn == 0 && dot3(ref, q) > 0)) ? 0 : 1;
  };
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const auto& qa = centered[a];
    const auto& qb = centered[b];
    if (half(qa) != half(qb)) return half(qa) < half(qb);
    return dot3(cross(qa, qb), axis) > 0;
  });
  return ids;
}

}  // namespace

std::string to_off(const LatticePolytope& p) {
  if (p.dim > 3) throw std::invalid_argument("OFF export needs dimension <= 3");
  std::vector<std::array<Integer, 3>> coords;
  for (const auto& v : p.vertices) {
    std::array<Integer, 3> c{0, 0, 0};
    for (std::size_t k = 0; k < p.chart.size(); ++k) c[k] = v[static_cast<std::size_t>(p.chart[k])];
    coords.push_back(c);
  }
  std::vector<std::vector<int>> faces;
  if (p.dim == 3) {
    for (const auto& f : p.facets) {
      std::array<Integer, 3> outward{};
      for (std::size_t k = 0; k < 3; ++k) outward[k] = -f.normal[static_cast<std::size_t>(p.chart[k])];
      faces.push_back(cyclic_order(coords, f.vertices, outward));
    }
  } else if (p.dim == 2) {
    std::vector<int> ids(p.vertices.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    faces.push_back(cyclic_order(coords, ids, {0, 0, 1}));
  }
  const auto f = f_vector(p);
  const long long edges = f.size() > 1 ? f[1] : 0;
  std::ostringstream out;
  out << "OFF\n" << p.vertices.size() << ' ' << faces.size() << ' ' << edges << '\n';
  for (const auto& c : coords) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  for (const auto& face : faces) {
    out << face.size();
    for (int i : face) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

}  // namespace schubert
