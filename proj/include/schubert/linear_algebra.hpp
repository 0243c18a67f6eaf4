#pragma once

// Exact integer linear algebra for small dense matrices. Elimination is
// fraction-free with row content removal, so entries stay small; every
// multiply/add is overflow-checked.

#include <cstdint>
#include <optional>
#include <vector>

namespace schubert {

using Integer = std::int64_t;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

Integer checked_mul(Integer a, Integer b);
Integer checked_add(Integer a, Integer b);
Integer dot(const IntVector& a, const IntVector& b);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

struct Echelon {
  IntMatrix rows;           // nonzero rows, reduced: zero above and below pivots
  std::vector<int> pivots;  // pivot column of each row
};

Echelon reduced_echelon(IntMatrix m, std::size_t columns);
int rank(const IntMatrix& m, std::size_t columns);

/// The primitive generator of a one-dimensional kernel, or nullopt when the
/// kernel has any other dimension.
std::optional<IntVector> kernel_line(const IntMatrix& m, std::size_t columns);

/// Dimension of the affine hull of the points (-1 for none).
int affine_dimension(const std::vector<IntVector>& points);

}  // namespace schubert
