#pragma once

// Points of a rational polytope in (1/q) Z^m.

#include "clustertrop/polytope.hpp"
#include "clustertrop/search.hpp"

namespace clustertrop {

class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default bound on the number of box points visited.
inline constexpr std::uint64_t kLatticeBoxLimit = 200'000'000;

/// All points of p in (1/q) Z^m, sorted lexicographically. Throws
/// EnumerationTooLarge when the bounding box exceeds box_limit points.
std::vector<RationalVector> lattice_points(const RationalPolytope& p, std::int64_t q, Exec exec = Exec::Parallel,
                                           std::uint64_t box_limit = kLatticeBoxLimit);

std::uint64_t lattice_point_count(const RationalPolytope& p, std::int64_t q, Exec exec = Exec::Parallel,
                                  std::uint64_t box_limit = kLatticeBoxLimit);

}  // namespace clustertrop
