#pragma once

// Quiver view of skew-symmetric exchange matrices: eps_{j,i} >= 0 gives
// eps_{j,i} arrows i -> j.

#include "clustertrop/exchange_matrix.hpp"
#include "clustertrop/rootsys.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace clustertrop {

struct Arrow {
  Label from;
  Label to;
  std::int64_t count;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Signed entry eps_{r,f} for a mutable r and frozen f.
struct FrozenEntry {
  Label row;
  Label frozen;
  std::int64_t value;

  friend bool operator==(const FrozenEntry&, const FrozenEntry&) = default;
};

struct Quiver {
  std::vector<Label> vertices;
  std::vector<Label> frozen;
  std::vector<Arrow> arrows;  // sorted, counts > 0
  std::vector<FrozenEntry> frozen_entries;

  /// Number of arrows from -> to (0 when absent).
  std::int64_t arrow_count(Label from, Label to) const;
  bool is_frozen(Label v) const;
};

/// Throws std::invalid_argument when the mutable part is not skew-symmetric.
Quiver to_quiver(const ExchangeMatrix& eps);

/// Inverse of to_quiver. Arrows between two frozen vertices are rejected.
ExchangeMatrix from_quiver(const std::vector<Label>& vertices, const std::vector<Label>& frozen,
                           const std::vector<Arrow>& arrows);

/// Throws std::invalid_argument for non-simply-laced Cartan data.
Quiver gls_quiver(const CartanMatrix& c, const WeylWord& w);

/// Ordered pairs (v1, v2) of mutable vertices joined by exactly two arrows v1 -> v2.
std::vector<std::pair<Label, Label>> double_arrows(const Quiver& q);

/// Oriented cycle 1..p+q with arrows i -> i+1 for the first p edges and
/// i+1 -> i for the remaining q (indices mod p+q). For p = q = 1 this is the
/// Kronecker quiver 1 => 2.
ExchangeMatrix affine_a_quiver(int p, int q);

/// (p, q) when the mutable part is of type A~_{p,q} with p, q > 0.
std::optional<std::pair<int, int>> affine_a_type(const ExchangeMatrix& eps);

/// A trace avoiding a whose result has a double arrow a => v. Throws
/// std::invalid_argument when the mutable part is not of type A~_{p,q} or a is
/// not one of its vertices.
MutationTrace apq_normalize(const ExchangeMatrix& eps, Label a);

struct FtWitness {
  MutationTrace trace;
  Label v1;
  Label v2;
  std::int64_t b1;
  std::int64_t b2;
};

/// b_v = (arrows v -> f) - (arrows f -> v) = -eps_{v,f}.
std::int64_t frozen_balance(const ExchangeMatrix& eps, Label v, Label f);

/// When the mutable part is of type A~_{p,q} and f is joined to a single
/// vertex a, the witness comes from apq_normalize(eps, a). Otherwise searches
/// the mutation class (breadth first, at most budget matrices) for a
/// double arrow v1 => v2 with b1 != -b2 or b2 < 0. Requires exactly one frozen
/// column and a skew-symmetric mutable part whose class closes within
/// budget; violations throw std::invalid_argument. nullopt means the budget
/// ran out, not that the class is finite.
std::optional<FtWitness> ft_infinite_witness(const ExchangeMatrix& eps, std::size_t budget);

}  // namespace clustertrop
