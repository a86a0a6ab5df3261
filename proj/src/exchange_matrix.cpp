#include "clustertrop/exchange_matrix.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace clustertrop {

namespace {

std::string label_str(Label j) { return std::to_string(j); }

}  // namespace

ExchangeMatrix::ExchangeMatrix(std::vector<Label> cols, std::vector<Label> frozen, std::vector<std::int64_t> d,
                               const std::map<Label, IntVector>& rows)
    : cols_(std::move(cols)), d_(std::move(d)) {
  if (d_.size() != cols_.size()) throw std::invalid_argument("d must have one entry per column");
  std::set<Label> seen;
  for (Label j : cols_)
    if (!seen.insert(j).second) throw std::invalid_argument("duplicate column label " + label_str(j));
  std::set<Label> frozen_set;
  for (Label j : frozen) {
    if (!seen.count(j)) throw std::invalid_argument("frozen label " + label_str(j) + " is not a column");
    frozen_set.insert(j);
  }
  for (auto x : d_)
    if (x <= 0) throw std::invalid_argument("d entries must be positive");
  frozen_.resize(cols_.size());
  for (std::size_t c = 0; c < cols_.size(); ++c) frozen_[c] = frozen_set.count(cols_[c]) > 0;
  for (const auto& [label, row] : rows) {
    if (!seen.count(label)) throw std::invalid_argument("row label " + label_str(label) + " is not a column");
    if (frozen_set.count(label)) throw std::invalid_argument("row label " + label_str(label) + " is frozen");
    if (row.size() != cols_.size())
      throw std::invalid_argument("row " + label_str(label) + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(cols_.size()));
  }
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (frozen_[c]) continue;
    auto it = rows.find(cols_[c]);
    if (it == rows.end()) throw std::invalid_argument("missing row for mutable label " + label_str(cols_[c]));
    rows_.push_back(it->second);
  }
  index();
  if (!is_skew_symmetrizable())
    throw std::invalid_argument("matrix violates eps_{r,s} d_r + eps_{s,r} d_s = 0 on mutable indices");
}

ExchangeMatrix ExchangeMatrix::from_rows(std::vector<Label> cols, std::vector<Label> frozen,
                                         std::vector<std::int64_t> d, const std::vector<IntVector>& rows) {
  std::set<Label> frozen_set(frozen.begin(), frozen.end());
  std::map<Label, IntVector> by_label;
  std::size_t next = 0;
  for (Label j : cols) {
    if (frozen_set.count(j)) continue;
    if (next >= rows.size()) throw std::invalid_argument("too few rows for the mutable labels");
    by_label[j] = rows[next++];
  }
  if (next != rows.size()) throw std::invalid_argument("too many rows for the mutable labels");
  return ExchangeMatrix(std::move(cols), std::move(frozen), std::move(d), by_label);
}

void ExchangeMatrix::index() {
  row_of_col_.assign(cols_.size(), -1);
  int r = 0;
  for (std::size_t c = 0; c < cols_.size(); ++c)
    if (!frozen_[c]) row_of_col_[c] = r++;
}

std::vector<Label> ExchangeMatrix::mutable_labels() const {
  std::vector<Label> out;
  for (std::size_t c = 0; c < cols_.size(); ++c)
    if (!frozen_[c]) out.push_back(cols_[c]);
  return out;
}

std::vector<Label> ExchangeMatrix::frozen_labels() const {
  std::vector<Label> out;
  for (std::size_t c = 0; c < cols_.size(); ++c)
    if (frozen_[c]) out.push_back(cols_[c]);
  return out;
}

bool ExchangeMatrix::has_label(Label j) const { return std::find(cols_.begin(), cols_.end(), j) != cols_.end(); }

std::size_t ExchangeMatrix::column_index(Label j) const {
  auto it = std::find(cols_.begin(), cols_.end(), j);
  if (it == cols_.end()) throw std::invalid_argument("unknown label " + label_str(j));
  return static_cast<std::size_t>(it - cols_.begin());
}

bool ExchangeMatrix::is_mutable(Label j) const {
  auto it = std::find(cols_.begin(), cols_.end(), j);
  return it != cols_.end() && !frozen_[it - cols_.begin()];
}

const IntVector& ExchangeMatrix::row(Label r) const {
  const auto c = column_index(r);
  if (frozen_[c]) throw FrozenDirectionError("label " + label_str(r) + " is frozen and has no row");
  return rows_[row_of_col_[c]];
}

std::int64_t ExchangeMatrix::entry(Label r, Label s) const { return row(r)[column_index(s)]; }

Rational ExchangeMatrix::extended_entry(Label j, Label k) const {
  if (is_mutable(j)) return Rational(entry(j, k));
  // eps_{k,j} d_k + eps_{j,k} d_j = 0
  return Rational(-entry(k, j) * d(k), d(j));
}

bool ExchangeMatrix::is_skew_symmetrizable() const {
  for (std::size_t a = 0; a < cols_.size(); ++a) {
    if (frozen_[a]) continue;
    for (std::size_t b = a; b < cols_.size(); ++b) {
      if (frozen_[b]) continue;
      const auto& ra = rows_[row_of_col_[a]];
      const auto& rb = rows_[row_of_col_[b]];
      const Integer lhs = Integer(ra[b]) * d_[a] + Integer(rb[a]) * d_[b];
      if (lhs != 0) return false;
    }
  }
  return true;
}

bool ExchangeMatrix::mutable_part_skew_symmetric() const {
  for (std::size_t a = 0; a < cols_.size(); ++a) {
    if (frozen_[a]) continue;
    for (std::size_t b = a; b < cols_.size(); ++b) {
      if (frozen_[b]) continue;
      if (rows_[row_of_col_[a]][b] != -rows_[row_of_col_[b]][a]) return false;
    }
  }
  return true;
}

std::int64_t ExchangeMatrix::max_frozen_magnitude() const {
  std::int64_t best = 0;
  for (const auto& r : rows_)
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (frozen_[c]) best = std::max(best, r[c] < 0 ? -r[c] : r[c]);
  return best;
}

std::int64_t ExchangeMatrix::max_magnitude() const {
  std::int64_t best = 0;
  for (const auto& r : rows_)
    for (auto x : r) best = std::max(best, x < 0 ? -x : x);
  return best;
}

std::size_t ExchangeMatrix::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (Label j : cols_) mix(static_cast<std::uint64_t>(j));
  for (const auto& r : rows_)
    for (auto x : r) mix(static_cast<std::uint64_t>(x));
  return h;
}

ExchangeMatrix mutate(const ExchangeMatrix& eps, Label k) {
  if (!eps.has_label(k)) throw FrozenDirectionError("mutation direction " + label_str(k) + " is not a column");
  if (!eps.is_mutable(k)) throw FrozenDirectionError("cannot mutate at frozen index " + label_str(k));
  const std::size_t kc = eps.column_index(k);
  const auto& krow = eps.rows_[eps.row_of_col_[kc]];
  ExchangeMatrix out = eps;
  for (std::size_t rc = 0; rc < eps.cols_.size(); ++rc) {
    if (eps.frozen_[rc]) continue;
    const auto& src = eps.rows_[eps.row_of_col_[rc]];
    auto& dst = out.rows_[eps.row_of_col_[rc]];
    for (std::size_t sc = 0; sc < eps.cols_.size(); ++sc) {
      if (rc == kc || sc == kc) {
        dst[sc] = -src[sc];
        continue;
      }
      const std::int64_t prod = checked_mul(src[kc], krow[sc]);
      if (prod > 0) dst[sc] = checked_add(src[sc], sign(krow[sc]) * prod);
    }
  }
  return out;
}

ExchangeMatrix mutate_sequence(const ExchangeMatrix& eps, std::span<const Label> seq) {
  ExchangeMatrix cur = eps;
  for (Label k : seq) cur = mutate(cur, k);
  return cur;
}

ExchangeMatrix restrict_to(const ExchangeMatrix& eps, std::span<const Label> keep) {
  std::set<Label> keep_set;
  for (Label j : keep) {
    if (!eps.has_label(j)) throw std::invalid_argument("restriction label " + label_str(j) + " is not a column");
    keep_set.insert(j);
  }
  std::vector<Label> cols;
  std::vector<Label> frozen;
  std::vector<std::int64_t> d;
  std::vector<std::size_t> src_cols;
  for (std::size_t c = 0; c < eps.columns().size(); ++c) {
    const Label j = eps.columns()[c];
    if (!keep_set.count(j)) continue;
    cols.push_back(j);
    d.push_back(eps.skew_symmetrizer()[c]);
    src_cols.push_back(c);
    if (!eps.is_mutable(j)) frozen.push_back(j);
  }
  std::map<Label, IntVector> rows;
  for (Label j : cols) {
    if (!eps.is_mutable(j)) continue;
    const auto& src = eps.row(j);
    IntVector r;
    r.reserve(src_cols.size());
    for (auto c : src_cols) r.push_back(src[c]);
    rows[j] = std::move(r);
  }
  return ExchangeMatrix(std::move(cols), std::move(frozen), std::move(d), rows);
}

ExchangeMatrix mutable_part(const ExchangeMatrix& eps) {
  const auto keep = eps.mutable_labels();
  return restrict_to(eps, keep);
}

bool MutationTrace::replays() const {
  try {
    return mutate_sequence(initial, seq) == result;
  } catch (const std::exception&) {
    return false;
  }
}

MutationTrace make_trace(const ExchangeMatrix& initial, std::vector<Label> seq) {
  MutationTrace t{initial, std::move(seq), {}};
  t.result = mutate_sequence(initial, t.seq);
  return t;
}

SeedBasis initial_seed_basis(const ExchangeMatrix& eps) {
  const std::size_t n = eps.num_columns();
  SeedBasis b;
  b.labels = eps.columns();
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0);
    e[j] = 1;
    RationalVector f(n, Rational(0));
    f[j] = Rational(1, eps.skew_symmetrizer()[j]);
    b.e.push_back(std::move(e));
    b.f.push_back(std::move(f));
  }
  return b;
}

SeedBasis mutate_seed_basis(const SeedBasis& b, const ExchangeMatrix& eps, Label k) {
  if (!eps.has_label(k) || !eps.is_mutable(k))
    throw FrozenDirectionError("cannot mutate seed basis at frozen index " + label_str(k));
  if (b.labels != eps.columns()) throw std::invalid_argument("seed basis labels do not match the matrix");
  const std::size_t n = b.labels.size();
  const std::size_t kc = eps.column_index(k);
  SeedBasis out = b;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == kc) {
      for (auto& x : out.e[j]) x = -x;
      continue;
    }
    const Rational c = positive_part(eps.extended_entry(b.labels[j], k));
    if (!is_integer(c))
      throw std::domain_error("eps_{" + label_str(b.labels[j]) + "," + label_str(k) +
                              "} is fractional; e' would leave the lattice");
    const auto ci = to_int64(numerator(c));
    for (std::size_t t = 0; t < n; ++t) out.e[j][t] = checked_add(out.e[j][t], checked_mul(ci, b.e[kc][t]));
  }
  RationalVector fk(n, Rational(0));
  for (std::size_t t = 0; t < n; ++t) fk[t] = -b.f[kc][t];
  const auto& krow = eps.row(k);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t c = positive_part(-krow[i]);
    if (c == 0) continue;
    for (std::size_t t = 0; t < n; ++t) fk[t] += c * b.f[i][t];
  }
  out.f[kc] = std::move(fk);
  return out;
}

}  // namespace clustertrop
