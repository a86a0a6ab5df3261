#include "clustertrop/rootsys.hpp"

#include "clustertrop/rational.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clustertrop {

namespace {

// Positive solution of x[i] m[i][j] = x[j] m[j][i], normalized to gcd 1.
std::vector<int> solve_symmetrizer(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (x[root] != 0) continue;
    x[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const auto i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || m[i][j] == 0) continue;
        const Rational want = x[i] * m[i][j] / m[j][i];
        if (x[j] == 0) {
          x[j] = want;
          todo.push(j);
        } else if (x[j] != want) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Integer l = 1;
  for (const auto& v : x) l = boost::multiprecision::lcm(l, denominator(v));
  std::vector<Integer> scaled;
  for (const auto& v : x) scaled.push_back(numerator(v) * (l / denominator(v)));
  const Integer g = gcd_of(scaled);
  std::vector<int> out;
  for (const auto& v : scaled) out.push_back(static_cast<int>(to_int64(v / g)));
  return out;
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<int>> t(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

CartanMatrix::CartanMatrix(std::string label, std::vector<std::vector<int>> entries)
    : label_(std::move(label)), entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw std::invalid_argument("Cartan matrix must be square");
    if (entries_[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0) throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }
  symmetrizer_ = solve_symmetrizer(entries_);
  column_symmetrizer_ = solve_symmetrizer(transpose(entries_));
}

bool CartanMatrix::is_symmetric() const { return entries_ == transpose(entries_); }

CartanMatrix cartan_matrix(char type_label, int rank) {
  const auto bad = [&] {
    return std::invalid_argument(std::string("invalid Cartan type ") + type_label + std::to_string(rank));
  };
  if (rank < 1) throw bad();
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  const auto edge = [&](int i, int j) {  // 1-based, simple edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  const auto chain = [&](int last) {
    for (int i = 1; i < last; ++i) edge(i, i + 1);
  };
  switch (type_label) {
    case 'A':
      chain(rank);
      break;
    case 'B':
      if (rank < 2) throw bad();
      chain(rank);
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) throw bad();
      chain(rank);
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 4) throw bad();
      chain(rank - 1);
      edge(rank - 2, rank);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw bad();
      edge(1, 3);
      edge(2, 4);
      for (int i = 3; i < rank; ++i) edge(i, i + 1);
      break;
    case 'F':
      if (rank != 4) throw bad();
      chain(4);
      a[2][1] = -2;
      break;
    case 'G':
      if (rank != 2) throw bad();
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw bad();
  }
  return CartanMatrix(std::string(1, type_label) + std::to_string(rank), std::move(a));
}

CartanMatrix parse_cartan_type(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed Cartan type '" + std::string(text) + "'");
  int rank = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("malformed Cartan type '" + std::string(text) + "'");
  return cartan_matrix(text[0], rank);
}

RootVector simple_root(const CartanMatrix& c, int i) {
  if (i < 1 || i > c.rank()) throw std::invalid_argument("simple root index out of range");
  RootVector r(c.rank(), 0);
  r[i - 1] = 1;
  return r;
}

RootVector reflect(const CartanMatrix& c, int i, const RootVector& r) {
  if (i < 1 || i > c.rank()) throw std::invalid_argument("reflection index out of range");
  std::int64_t pairing = 0;
  for (int j = 1; j <= c.rank(); ++j) pairing += r[j - 1] * c.at(i, j);
  RootVector out = r;
  out[i - 1] -= pairing;
  return out;
}

bool is_positive(const RootVector& r) {
  bool nonzero = false;
  for (auto x : r) {
    if (x < 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

bool is_negative(const RootVector& r) {
  RootVector neg(r.size());
  std::transform(r.begin(), r.end(), neg.begin(), [](auto x) { return -x; });
  return is_positive(neg);
}

std::vector<RootVector> positive_roots(const CartanMatrix& c) {
  std::set<RootVector> seen;
  std::queue<RootVector> todo;
  for (int i = 1; i <= c.rank(); ++i) {
    seen.insert(simple_root(c, i));
    todo.push(simple_root(c, i));
  }
  while (!todo.empty()) {
    const auto r = todo.front();
    todo.pop();
    for (int i = 1; i <= c.rank(); ++i) {
      auto s = reflect(c, i, r);
      if (is_positive(s) && seen.insert(s).second) todo.push(std::move(s));
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    const auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

WeylWord parse_word(std::string_view text) {
  WeylWord w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed word token '" + std::string(token) + "'");
    w.letters.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string format_word(const WeylWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "," : "") << w.letters[i];
  return os.str();
}

void check_letters(const CartanMatrix& c, const WeylWord& w) {
  for (int l : w.letters)
    if (l < 1 || l > c.rank())
      throw std::invalid_argument("word letter " + std::to_string(l) + " outside 1.." + std::to_string(c.rank()));
}

std::vector<RootVector> inversion_roots(const CartanMatrix& c, const WeylWord& w) {
  check_letters(c, w);
  std::vector<RootVector> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    RootVector r = simple_root(c, w.letters[k]);
    for (std::size_t j = k; j-- > 0;) r = reflect(c, w.letters[j], r);
    out.push_back(std::move(r));
  }
  return out;
}

bool is_reduced(const CartanMatrix& c, const WeylWord& w) {
  const auto roots = inversion_roots(c, w);
  return std::all_of(roots.begin(), roots.end(), [](const RootVector& r) { return is_positive(r); });
}

bool is_longest(const CartanMatrix& c, const WeylWord& w) {
  return w.size() == positive_roots(c).size() && is_reduced(c, w);
}

RootVector apply_word(const CartanMatrix& c, const WeylWord& w, const RootVector& r) {
  check_letters(c, w);
  RootVector out = r;
  for (std::size_t j = w.size(); j-- > 0;) out = reflect(c, w.letters[j], out);
  return out;
}

WeylWord longest_word(const CartanMatrix& c) {
  WeylWord w;
  const std::size_t target = positive_roots(c).size();
  while (w.size() < target) {
    bool extended = false;
    for (int i = 1; i <= c.rank() && !extended; ++i) {
      w.letters.push_back(i);
      if (is_reduced(c, w)) {
        extended = true;
      } else {
        w.letters.pop_back();
      }
    }
    if (!extended) break;
  }
  return w;
}

WordIndices word_indices(const WeylWord& w) {
  const int m = static_cast<int>(w.size());
  WordIndices idx;
  idx.plus.assign(m, m + 1);
  idx.minus.assign(m, 0);
  for (int k = 0; k < m; ++k) {
    for (int j = k + 1; j < m; ++j)
      if (w.letters[j] == w.letters[k]) {
        idx.plus[k] = j + 1;
        break;
      }
    for (int j = k - 1; j >= 0; --j)
      if (w.letters[j] == w.letters[k]) {
        idx.minus[k] = j + 1;
        break;
      }
    (idx.plus[k] == m + 1 ? idx.frozen : idx.mutable_).push_back(k + 1);
  }
  std::set<int> supp(w.letters.begin(), w.letters.end());
  idx.support.assign(supp.begin(), supp.end());
  return idx;
}

}  // namespace clustertrop
