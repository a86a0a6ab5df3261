#pragma once

// Extended exchange matrices epsilon = (eps_{r,s}) with r in J_uf, s in J, and
// their mutations. Column labels are arbitrary integers and are preserved by
// every operation, so a restricted matrix keeps the labels of its parent.

#include "clustertrop/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace clustertrop {

using Label = int;

/// Raised for mutation directions that are frozen or unknown.
class FrozenDirectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;

  /// rows maps every mutable label (cols minus frozen) to a row of length
  /// cols.size(). Throws std::invalid_argument when labels are inconsistent,
  /// d is not positive, or eps_{r,s} d_r + eps_{s,r} d_s != 0 on J_uf.
  ExchangeMatrix(std::vector<Label> cols, std::vector<Label> frozen, std::vector<std::int64_t> d,
                 const std::map<Label, IntVector>& rows);

  /// Builds a matrix whose mutable rows are listed in column order.
  static ExchangeMatrix from_rows(std::vector<Label> cols, std::vector<Label> frozen,
                                  std::vector<std::int64_t> d, const std::vector<IntVector>& rows);

  const std::vector<Label>& columns() const { return cols_; }
  std::vector<Label> mutable_labels() const;
  std::vector<Label> frozen_labels() const;
  const std::vector<std::int64_t>& skew_symmetrizer() const { return d_; }

  std::size_t num_columns() const { return cols_.size(); }
  std::size_t num_rows() const { return rows_.size(); }

  bool has_label(Label j) const;
  bool is_mutable(Label j) const;
  std::size_t column_index(Label j) const;
  std::int64_t d(Label j) const { return d_[column_index(j)]; }

  /// eps_{r,s}; r must be mutable.
  std::int64_t entry(Label r, Label s) const;
  /// Row of a mutable label in column order.
  const IntVector& row(Label r) const;
  /// Dense rows (mutable labels in column order).
  const std::vector<IntVector>& rows() const { return rows_; }

  /// eps_{j,k} for any j (frozen rows are recovered from the skew-symmetrizer
  /// relation, so the value can be fractional).
  Rational extended_entry(Label j, Label k) const;

  /// eps_{r,s} d_r + eps_{s,r} d_s == 0 for all mutable r, s.
  bool is_skew_symmetrizable() const;
  /// eps_{r,s} == -eps_{s,r} on J_uf.
  bool mutable_part_skew_symmetric() const;

  /// max |eps_{r,s}| over mutable r and frozen s (0 when nothing is frozen).
  std::int64_t max_frozen_magnitude() const;
  std::int64_t max_magnitude() const;

  std::size_t hash() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.cols_ == b.cols_ && a.frozen_ == b.frozen_ && a.d_ == b.d_ && a.rows_ == b.rows_;
  }

 private:
  friend ExchangeMatrix mutate(const ExchangeMatrix& eps, Label k);

  void index();

  std::vector<Label> cols_;
  std::vector<bool> frozen_;  // per column
  std::vector<std::int64_t> d_;
  std::vector<IntVector> rows_;
  std::vector<int> row_of_col_;  // -1 for frozen columns
};

struct ExchangeMatrixHash {
  std::size_t operator()(const ExchangeMatrix& m) const { return m.hash(); }
};

/// mu_k. Throws FrozenDirectionError if k is frozen or unknown and
/// OverflowError if an entry leaves int64.
ExchangeMatrix mutate(const ExchangeMatrix& eps, Label k);

/// Applies mutations left to right: seq = {6, 2, 3} computes mu_3 mu_2 mu_6.
ExchangeMatrix mutate_sequence(const ExchangeMatrix& eps, std::span<const Label> seq);

/// Columns restricted to keep (in the parent's column order), rows to keep
/// intersected with J_uf. Unknown labels throw std::invalid_argument.
ExchangeMatrix restrict_to(const ExchangeMatrix& eps, std::span<const Label> keep);

/// The mutable part eps|_{J_uf}.
ExchangeMatrix mutable_part(const ExchangeMatrix& eps);

struct MutationTrace {
  ExchangeMatrix initial;
  std::vector<Label> seq;
  ExchangeMatrix result;

  /// True iff mutating initial along seq reproduces result.
  bool replays() const;
};

MutationTrace make_trace(const ExchangeMatrix& initial, std::vector<Label> seq);

/// Seed basis: e_j in N (integer coordinates relative to the initial seed) and
/// the dual scaled vectors f_j = d_j^{-1} e_j^* in M_R.
struct SeedBasis {
  std::vector<Label> labels;
  std::vector<IntVector> e;
  std::vector<RationalVector> f;
};

/// e_j = standard basis, f_j = d_j^{-1} e_j^*.
SeedBasis initial_seed_basis(const ExchangeMatrix& eps);

/// e'_k = -e_k, e'_j = e_j + [eps_{j,k}]_+ e_k; f'_k = -f_k + sum_i [-eps_{k,i}]_+ f_i,
/// f'_j = f_j. eps is the matrix of the seed being mutated.
SeedBasis mutate_seed_basis(const SeedBasis& b, const ExchangeMatrix& eps, Label k);

}  // namespace clustertrop
