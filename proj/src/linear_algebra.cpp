#include "schubert/linear_algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace schubert {

Integer checked_mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in exact arithmetic");
  return out;
}

Integer checked_add(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in exact arithmetic");
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total = checked_add(total, checked_mul(a[i], b[i]));
  return total;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (Integer x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (Integer& x : v) x /= g;
  return v;
}

Echelon reduced_echelon(IntMatrix m, std::size_t columns) {
  Echelon out;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < columns && next_row < m.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[next_row]);
    IntVector& prow = m[next_row];
    if (prow[col] < 0)
      for (Integer& x : prow) x = -x;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next_row || m[r][col] == 0) continue;
      const Integer g = std::gcd(prow[col], m[r][col] < 0 ? -m[r][col] : m[r][col]);
      const Integer scale_row = prow[col] / g;
      const Integer scale_pivot = m[r][col] / g;
      for (std::size_t c = 0; c < columns; ++c)
        m[r][c] = checked_add(checked_mul(m[r][c], scale_row), -checked_mul(prow[c], scale_pivot));
      m[r] = primitive(std::move(m[r]));
    }
    out.pivots.push_back(static_cast<int>(col));
    ++next_row;
  }
  m.resize(next_row);
  out.rows = std::move(m);
  return out;
}

int rank(const IntMatrix& m, std::size_t columns) {
  return static_cast<int>(reduced_echelon(m, columns).pivots.size());
}

std::optional<IntVector> kernel_line(const IntMatrix& m, std::size_t columns) {
  const Echelon ech = reduced_echelon(m, columns);
  if (ech.pivots.size() + 1 != columns) return std::nullopt;
  std::vector<bool> is_pivot(columns, false);
  for (int p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  Integer scale = 1;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const Integer p = ech.rows[r][static_cast<std::size_t>(ech.pivots[r])];
    scale = checked_mul(scale / std::gcd(scale, p), p);
  }
  IntVector v(columns, 0);
  v[free_col] = scale;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const auto pc = static_cast<std::size_t>(ech.pivots[r]);
    v[pc] = -checked_mul(ech.rows[r][free_col], scale / ech.rows[r][pc]);
  }
  return primitive(std::move(v));
}

int affine_dimension(const std::vector<IntVector>& points) {
  if (points.empty()) return -1;
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return rank(diffs, points[0].size());
}

}  // namespace schubert
