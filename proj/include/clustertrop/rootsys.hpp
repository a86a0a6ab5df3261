#pragma once

// Finite-type Cartan matrices and Weyl words.
//
// Convention: a[i][j] = <alpha_i^vee, alpha_j>, nodes numbered as in Bourbaki
// (C3 has a[2][3] = -2, B3 has a[3][2] = -2, G2 has a[1][2] = -3). Indices in
// the public API are 1-based to match the usual s_1, s_2, ... notation.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clustertrop {

class CartanMatrix {
 public:
  /// Validates the Cartan axioms and symmetrizability; throws std::invalid_argument.
  CartanMatrix(std::string label, std::vector<std::vector<int>> entries);

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  /// 1-based access.
  int at(int i, int j) const { return entries_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  /// Row symmetrizer: diag[i] a[i][j] = diag[j] a[j][i], gcd 1.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  /// Column symmetrizer: a[i][j] c[j] = a[j][i] c[i], gcd 1.
  const std::vector<int>& column_symmetrizer() const { return column_symmetrizer_; }
  bool is_symmetric() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::string label_;
  std::vector<std::vector<int>> entries_;
  std::vector<int> symmetrizer_;
  std::vector<int> column_symmetrizer_;
};

/// type_label is one of A..G. Throws std::invalid_argument for invalid combinations.
CartanMatrix cartan_matrix(char type_label, int rank);

/// Parses "C3", "G2", "A5" ...
CartanMatrix parse_cartan_type(std::string_view text);

/// Coefficients in the simple-root basis.
using RootVector = std::vector<std::int64_t>;

RootVector simple_root(const CartanMatrix& c, int i);

/// s_i(r) = r - <alpha_i^vee, r> alpha_i.
RootVector reflect(const CartanMatrix& c, int i, const RootVector& r);

/// Nonzero with all coordinates >= 0.
bool is_positive(const RootVector& r);
bool is_negative(const RootVector& r);

/// All positive roots, sorted by height then lexicographically.
std::vector<RootVector> positive_roots(const CartanMatrix& c);

struct WeylWord {
  std::vector<int> letters;  // 1-based simple reflection indices

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Parses "3,2,3,2,1". Throws std::invalid_argument on malformed input.
WeylWord parse_word(std::string_view text);
std::string format_word(const WeylWord& w);

/// Throws std::invalid_argument if a letter is outside 1..rank.
void check_letters(const CartanMatrix& c, const WeylWord& w);

/// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}).
std::vector<RootVector> inversion_roots(const CartanMatrix& c, const WeylWord& w);

bool is_reduced(const CartanMatrix& c, const WeylWord& w);

bool is_longest(const CartanMatrix& c, const WeylWord& w);

/// w(r) = s_{i_1} ... s_{i_m} (r).
RootVector apply_word(const CartanMatrix& c, const WeylWord& w, const RootVector& r);

/// A reduced word for w0, built by greedily appending the smallest letter that
/// keeps the word reduced.
WeylWord longest_word(const CartanMatrix& c);

/// Index bookkeeping for a word of length m. Positions are 1-based; plus[k]
/// is m+1 when letter k never recurs, minus[k] is 0 when it never occurred.
struct WordIndices {
  std::vector<int> plus;   // plus[k-1] = k^+
  std::vector<int> minus;  // minus[k-1] = k^-
  std::vector<int> frozen;
  std::vector<int> mutable_;
  std::vector<int> support;  // sorted distinct letters
};

WordIndices word_indices(const WeylWord& w);

}  // namespace clustertrop
