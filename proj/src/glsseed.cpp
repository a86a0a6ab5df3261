#include "clustertrop/glsseed.hpp"

#include <map>

namespace clustertrop {

ExchangeMatrix gls_exchange_matrix(const CartanMatrix& c, const WeylWord& w) {
  check_letters(c, w);
  if (!is_reduced(c, w)) throw std::invalid_argument("word " + format_word(w) + " is not reduced");
  const auto idx = word_indices(w);
  const int m = static_cast<int>(w.size());
  const auto letter = [&](int k) { return w.letters[k - 1]; };
  const auto plus = [&](int k) { return idx.plus[k - 1]; };

  std::vector<Label> cols;
  std::vector<std::int64_t> d;
  for (int j = 1; j <= m; ++j) {
    cols.push_back(j);
    d.push_back(c.column_symmetrizer()[letter(j) - 1]);
  }
  std::map<Label, IntVector> rows;
  for (int r : idx.mutable_) {
    IntVector row(m, 0);
    for (int s = 1; s <= m; ++s) {
      const int a = c.at(letter(s), letter(r));
      std::int64_t v = 0;
      if (r == plus(s))
        v = -1;
      else if (s < r && r < plus(s) && plus(s) < plus(r))
        v = -a;
      else if (plus(r) == s)
        v = 1;
      else if (r < s && s < plus(r) && plus(r) < plus(s))
        v = a;
      row[s - 1] = v;
    }
    rows[r] = std::move(row);
  }
  return ExchangeMatrix(std::move(cols), idx.frozen, std::move(d), rows);
}

}  // namespace clustertrop
