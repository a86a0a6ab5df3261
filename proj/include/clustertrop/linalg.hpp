#pragma once

#include "clustertrop/rational.hpp"

#include <optional>
#include <vector>

namespace clustertrop {

using RationalMatrix = std::vector<RationalVector>;

/// Rank of a dense rational matrix (rows may be empty).
std::size_t rank(RationalMatrix rows);

/// Affine rank of a point set: dimension of its affine hull, -1 when empty.
int affine_dimension(const std::vector<RationalVector>& points);

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent;
/// when the solution is not unique, free variables are set to zero and
/// `unique` (if given) is cleared.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b, bool* unique = nullptr);

Rational determinant(RationalMatrix a);

}  // namespace clustertrop
