#include "clustertrop/quiver.hpp"

#include "clustertrop/glsseed.hpp"
#include "clustertrop/search.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace clustertrop {

std::int64_t Quiver::arrow_count(Label from, Label to) const {
  for (const auto& a : arrows)
    if (a.from == from && a.to == to) return a.count;
  return 0;
}

bool Quiver::is_frozen(Label v) const { return std::find(frozen.begin(), frozen.end(), v) != frozen.end(); }

Quiver to_quiver(const ExchangeMatrix& eps) {
  if (!eps.mutable_part_skew_symmetric())
    throw std::invalid_argument("quiver view needs a skew-symmetric mutable part");
  Quiver q;
  q.vertices = eps.columns();
  q.frozen = eps.frozen_labels();
  for (Label j : eps.mutable_labels())
    for (Label i : eps.columns()) {
      const std::int64_t e = eps.entry(j, i);
      if (e > 0) q.arrows.push_back({i, j, e});
      if (!eps.is_mutable(i)) {
        if (e < 0) q.arrows.push_back({j, i, -e});
        if (e != 0) q.frozen_entries.push_back({j, i, e});
      }
    }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

ExchangeMatrix from_quiver(const std::vector<Label>& vertices, const std::vector<Label>& frozen,
                           const std::vector<Arrow>& arrows) {
  const std::set<Label> fz(frozen.begin(), frozen.end());
  std::map<Label, IntVector> rows;
  std::map<Label, std::size_t> col;
  for (std::size_t c = 0; c < vertices.size(); ++c) col[vertices[c]] = c;
  for (Label v : vertices)
    if (!fz.count(v)) rows[v] = IntVector(vertices.size(), 0);
  for (const auto& a : arrows) {
    if (!col.count(a.from) || !col.count(a.to))
      throw std::invalid_argument("arrow " + std::to_string(a.from) + "->" + std::to_string(a.to) +
                                  " uses an unknown vertex");
    if (a.from == a.to) throw std::invalid_argument("loops are not allowed");
    if (a.count < 0) throw std::invalid_argument("arrow counts must be nonnegative");
    if (fz.count(a.from) && fz.count(a.to)) throw std::invalid_argument("arrows between frozen vertices are not stored");
    if (!fz.count(a.to)) rows[a.to][col[a.from]] = checked_add(rows[a.to][col[a.from]], a.count);
    if (!fz.count(a.from)) rows[a.from][col[a.to]] = checked_add(rows[a.from][col[a.to]], -a.count);
  }
  return ExchangeMatrix(vertices, frozen, std::vector<std::int64_t>(vertices.size(), 1), rows);
}

Quiver gls_quiver(const CartanMatrix& c, const WeylWord& w) {
  if (!c.is_symmetric()) throw std::invalid_argument("quiver needs a simply laced Cartan matrix, got " + c.label());
  return to_quiver(gls_exchange_matrix(c, w));
}

std::vector<std::pair<Label, Label>> double_arrows(const Quiver& q) {
  std::vector<std::pair<Label, Label>> out;
  for (const auto& a : q.arrows)
    if (a.count == 2 && !q.is_frozen(a.from) && !q.is_frozen(a.to)) out.emplace_back(a.from, a.to);
  return out;
}

ExchangeMatrix affine_a_quiver(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("A~_{p,q} needs p, q >= 1");
  const int n = p + q;
  std::vector<Label> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    if (i <= p)
      arrows.push_back({i, next, 1});
    else
      arrows.push_back({next, i, 1});
  }
  return from_quiver(v, {}, arrows);
}

std::optional<std::pair<int, int>> affine_a_type(const ExchangeMatrix& eps) {
  if (!eps.mutable_part_skew_symmetric()) return std::nullopt;
  const auto labels = eps.mutable_labels();
  const std::size_t n = labels.size();
  if (n < 2) return std::nullopt;
  if (n == 2) {
    const auto e = eps.entry(labels[0], labels[1]);
    if (e == 2 || e == -2) return std::make_pair(1, 1);
    return std::nullopt;
  }
  std::map<Label, std::vector<Label>> nbrs;
  for (Label r : labels)
    for (Label s : labels) {
      const auto e = eps.entry(r, s);
      if (e == 0) continue;
      if (e != 1 && e != -1) return std::nullopt;
      nbrs[r].push_back(s);
    }
  for (Label r : labels)
    if (nbrs[r].size() != 2) return std::nullopt;
  int forward = 0;
  int backward = 0;
  Label prev = labels[0];
  Label cur = nbrs[prev][0];
  // walk labels[0] -> cur -> ... back to labels[0]
  (eps.entry(cur, prev) > 0 ? forward : backward)++;
  std::size_t steps = 1;
  while (cur != labels[0]) {
    const Label nxt = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
    (eps.entry(nxt, cur) > 0 ? forward : backward)++;
    prev = cur;
    cur = nxt;
    if (++steps > n) return std::nullopt;
  }
  if (steps != n || forward == 0 || backward == 0) return std::nullopt;
  return std::make_pair(forward, backward);
}

MutationTrace apq_normalize(const ExchangeMatrix& eps, Label a) {
  const ExchangeMatrix core = mutable_part(eps);
  if (!affine_a_type(core)) throw std::invalid_argument("mutable part is not of type A~_{p,q} with p, q > 0");
  if (!core.is_mutable(a)) throw std::invalid_argument("vertex " + std::to_string(a) + " is not on the cycle");
  std::vector<Label> moves;
  for (Label k : core.mutable_labels())
    if (k != a) moves.push_back(k);
  const auto done = [&](const ExchangeMatrix& m) {
    for (Label v : m.mutable_labels())
      if (m.entry(v, a) == 2) return true;
    return false;
  };
  // Breadth first over the mutable part; the class of A~_{p,q} is finite.
  struct Step {
    ExchangeMatrix m;
    std::ptrdiff_t parent;
    Label move;
  };
  std::vector<Step> steps{{core, -1, 0}};
  std::unordered_set<ExchangeMatrix, ExchangeMatrixHash> seen{core};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (done(steps[i].m)) {
      std::vector<Label> seq;
      for (auto j = static_cast<std::ptrdiff_t>(i); steps[j].parent >= 0; j = steps[j].parent)
        seq.push_back(steps[j].move);
      std::reverse(seq.begin(), seq.end());
      return make_trace(eps, std::move(seq));
    }
    for (Label k : moves) {
      auto child = mutate(steps[i].m, k);
      if (seen.insert(child).second) steps.push_back({std::move(child), static_cast<std::ptrdiff_t>(i), k});
    }
  }
  throw std::logic_error("no double arrow out of " + std::to_string(a) + " in the reachable class");
}

std::int64_t frozen_balance(const ExchangeMatrix& eps, Label v, Label f) { return -eps.entry(v, f); }

std::optional<FtWitness> ft_infinite_witness(const ExchangeMatrix& eps, std::size_t budget) {
  const auto frozen = eps.frozen_labels();
  if (frozen.size() != 1) throw std::invalid_argument("exactly one frozen vertex is required");
  if (!eps.mutable_part_skew_symmetric()) throw std::invalid_argument("mutable part must be skew-symmetric");
  const auto fin = classify_finiteness(eps, budget);
  if (fin.verdict != Finiteness::Finite)
    throw std::invalid_argument("mutable part must be mutation finite (" + to_string(fin.verdict) + ": " +
                                fin.reason + ")");
  const Label f = frozen.front();
  const auto labels = eps.mutable_labels();
  const auto witness = [&](const ExchangeMatrix& m) -> std::optional<std::pair<Label, Label>> {
    for (Label v1 : labels)
      for (Label v2 : labels) {
        if (m.entry(v2, v1) != 2) continue;
        const auto b1 = frozen_balance(m, v1, f);
        const auto b2 = frozen_balance(m, v2, f);
        if (b1 != -b2 || b2 < 0) return std::make_pair(v1, v2);
      }
    return std::nullopt;
  };
  // A~_{p,q} with f attached to a single vertex a: normalize away from a.
  std::vector<Label> attached;
  for (Label v : labels)
    if (eps.entry(v, f) != 0) attached.push_back(v);
  if (attached.size() == 1 && affine_a_type(mutable_part(eps))) {
    const Label a = attached.front();
    auto t = apq_normalize(eps, a);
    for (Label v : labels) {
      if (t.result.entry(v, a) != 2) continue;
      const auto b1 = frozen_balance(t.result, a, f);
      const auto b2 = frozen_balance(t.result, v, f);
      if (b1 != -b2 || b2 < 0) return FtWitness{std::move(t), a, v, b1, b2};
    }
  }
  struct Step {
    ExchangeMatrix m;
    std::ptrdiff_t parent;
    Label move;
  };
  std::vector<Step> steps{{eps, -1, 0}};
  std::unordered_set<ExchangeMatrix, ExchangeMatrixHash> seen{eps};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (auto w = witness(steps[i].m)) {
      std::vector<Label> seq;
      for (auto j = static_cast<std::ptrdiff_t>(i); steps[j].parent >= 0; j = steps[j].parent)
        seq.push_back(steps[j].move);
      std::reverse(seq.begin(), seq.end());
      const auto& m = steps[i].m;
      return FtWitness{{eps, std::move(seq), m}, w->first, w->second, frozen_balance(m, w->first, f),
                       frozen_balance(m, w->second, f)};
    }
    for (Label k : labels) {
      if (steps.size() >= budget) return std::nullopt;
      auto child = mutate(steps[i].m, k);
      if (seen.insert(child).second) steps.push_back({std::move(child), static_cast<std::ptrdiff_t>(i), k});
    }
  }
  return std::nullopt;
}

}  // namespace clustertrop
