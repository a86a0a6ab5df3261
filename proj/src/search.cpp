#include "clustertrop/search.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

namespace clustertrop {

namespace {

struct Node {
  ExchangeMatrix m;
  std::ptrdiff_t parent;
  Label move;
};

std::optional<ExchangeMatrix> try_mutate(const ExchangeMatrix& m, Label k) {
  try {
    return mutate(m, k);
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

std::vector<Label> path_to(const std::vector<Node>& nodes, std::ptrdiff_t i) {
  std::vector<Label> seq;
  for (; nodes[i].parent >= 0; i = nodes[i].parent) seq.push_back(nodes[i].move);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

// Outcome of offering one child to the BFS bookkeeping.
enum class Offer { Skip, Added, Exceeded, Full };

class ClassBfs {
 public:
  ClassBfs(const ExchangeMatrix& eps, std::size_t node_cap, std::int64_t entry_cap)
      : initial_(eps), node_cap_(node_cap), entry_cap_(entry_cap) {}

  ClassBfsResult run_serial() {
    if (auto r = start()) return *r;
    const auto labels = initial_.mutable_labels();
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (Label k : labels)
        if (auto r = offer(static_cast<std::ptrdiff_t>(i), k, try_mutate(nodes_[i].m, k))) return *r;
    return finite();
  }

  ClassBfsResult run_parallel() {
    if (auto r = start()) return *r;
    const auto labels = initial_.mutable_labels();
    const auto nk = static_cast<std::ptrdiff_t>(labels.size());
    std::size_t begin = 0;
    while (begin < nodes_.size()) {
      const std::size_t end = nodes_.size();
      const auto width = static_cast<std::ptrdiff_t>(end - begin);
      std::vector<std::optional<ExchangeMatrix>> kids(static_cast<std::size_t>(width * nk));
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t t = 0; t < width * nk; ++t)
        kids[t] = try_mutate(nodes_[begin + t / nk].m, labels[t % nk]);
      for (std::ptrdiff_t t = 0; t < width * nk; ++t)
        if (auto r = offer(static_cast<std::ptrdiff_t>(begin + t / nk), labels[t % nk], std::move(kids[t])))
          return *r;
      begin = end;
    }
    return finite();
  }

 private:
  std::optional<ClassBfsResult> start() {
    nodes_.push_back({initial_, -1, 0});
    seen_.insert(initial_);
    if (initial_.max_magnitude() > entry_cap_) {
      ClassBfsResult r;
      r.kind = ClassBfsResult::Kind::EntryExceeded;
      r.trace = MutationTrace{initial_, {}, initial_};
      r.explored = 1;
      return r;
    }
    return std::nullopt;
  }

  std::optional<ClassBfsResult> offer(std::ptrdiff_t parent, Label k, std::optional<ExchangeMatrix> child) {
    ClassBfsResult r;
    if (!child || child->max_magnitude() > entry_cap_) {
      if (child && seen_.count(*child)) return std::nullopt;
      auto seq = path_to(nodes_, parent);
      seq.push_back(k);
      r.kind = ClassBfsResult::Kind::EntryExceeded;
      r.trace = MutationTrace{initial_, seq, child ? *child : ExchangeMatrix{}};
      r.explored = nodes_.size();
      return r;
    }
    if (!seen_.insert(*child).second) return std::nullopt;
    nodes_.push_back({std::move(*child), parent, k});
    if (nodes_.size() > node_cap_) {
      r.kind = ClassBfsResult::Kind::CapExhausted;
      r.explored = nodes_.size();
      return r;
    }
    return std::nullopt;
  }

  ClassBfsResult finite() {
    ClassBfsResult r;
    r.kind = ClassBfsResult::Kind::Finite;
    r.explored = nodes_.size();
    for (auto& n : nodes_) r.members.push_back(std::move(n.m));
    return r;
  }

  ExchangeMatrix initial_;
  std::size_t node_cap_;
  std::int64_t entry_cap_;
  std::vector<Node> nodes_;
  std::unordered_set<ExchangeMatrix, ExchangeMatrixHash> seen_;
};

}  // namespace

ClassBfsResult mutation_class_bfs(const ExchangeMatrix& eps, std::size_t node_cap, std::int64_t entry_cap,
                                  Exec exec) {
  if (node_cap == 0 || entry_cap <= 0) throw std::invalid_argument("BFS caps must be positive");
  ClassBfs bfs(eps, node_cap, entry_cap);
  return exec == Exec::Serial ? bfs.run_serial() : bfs.run_parallel();
}

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite:
      return "finite";
    case Finiteness::Infinite:
      return "infinite";
    case Finiteness::Unknown:
      break;
  }
  return "unknown";
}

std::vector<std::vector<Label>> mutable_components(const ExchangeMatrix& eps) {
  const auto labels = eps.mutable_labels();
  std::map<Label, Label> parent;
  for (Label l : labels) parent[l] = l;
  const std::function<Label(Label)> find = [&](Label x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Label r : labels)
    for (Label s : labels)
      if (eps.entry(r, s) != 0) parent[find(r)] = find(s);
  std::map<Label, std::vector<Label>> groups;
  for (Label l : labels) groups[find(l)].push_back(l);
  std::vector<std::vector<Label>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return eps.column_index(a.front()) < eps.column_index(b.front()); });
  return out;
}

FinitenessReport classify_finiteness(const ExchangeMatrix& eps, std::size_t node_cap, Exec exec) {
  const ExchangeMatrix core = mutable_part(eps);
  bool unknown = false;
  FinitenessReport report;
  for (const auto& comp : mutable_components(core)) {
    if (comp.size() <= 2) continue;
    const ExchangeMatrix sub = restrict_to(core, comp);
    const bool skew = sub.mutable_part_skew_symmetric();
    for (Label r : comp)
      for (Label s : comp) {
        const std::int64_t e = sub.entry(r, s);
        const bool big = skew ? (e >= 3 || e <= -3) : (e * sub.entry(s, r) <= -5);
        if (big) {
          report.verdict = Finiteness::Infinite;
          report.reason = "entry at (" + std::to_string(r) + "," + std::to_string(s) + ") exceeds the finite-type bound";
          return report;
        }
      }
    const auto bfs = mutation_class_bfs(sub, node_cap, skew ? 2 : 4, exec);
    if (bfs.kind == ClassBfsResult::Kind::EntryExceeded) {
      report.verdict = Finiteness::Infinite;
      report.reason = "mutation reaches an entry beyond the finite-type bound";
      report.trace = bfs.trace;
      return report;
    }
    if (bfs.kind == ClassBfsResult::Kind::CapExhausted) unknown = true;
  }
  report.verdict = unknown ? Finiteness::Unknown : Finiteness::Finite;
  report.reason = unknown ? "class did not close within the node cap" : "every component closes";
  return report;
}

namespace {

struct Candidate {
  ExchangeMatrix m;
  std::vector<Label> seq;
};

std::optional<LargeEntryResult> accept(const ExchangeMatrix& initial, const Candidate& c, std::int64_t target) {
  const auto rows = c.m.mutable_labels();
  const auto frozen = c.m.frozen_labels();
  for (Label r : rows)
    for (Label s : frozen)
      if (-c.m.entry(r, s) >= target) return LargeEntryResult{{initial, c.seq, c.m}, r, s, c.m.entry(r, s)};
  for (Label r : rows)
    for (Label s : frozen)
      if (c.m.entry(r, s) >= target) {
        auto seq = c.seq;
        seq.push_back(r);
        auto m = mutate(c.m, r);
        const auto v = m.entry(r, s);
        return LargeEntryResult{{initial, std::move(seq), std::move(m)}, r, s, v};
      }
  return std::nullopt;
}

}  // namespace

std::optional<LargeEntryResult> large_entry_search(const ExchangeMatrix& eps, std::int64_t target,
                                                   const LargeEntryOptions& opts) {
  if (target < 1) throw std::invalid_argument("target must be at least 1");
  if (opts.beam == 0) throw std::invalid_argument("beam width must be positive");
  const auto labels = eps.mutable_labels();
  const auto nk = static_cast<std::ptrdiff_t>(labels.size());
  std::vector<Candidate> beam{{eps, {}}};
  std::unordered_set<ExchangeMatrix, ExchangeMatrixHash> seen{eps};
  std::size_t generated = 0;
  while (!beam.empty()) {
    for (const auto& c : beam)
      if (auto hit = accept(eps, c, target)) return hit;
    const auto width = static_cast<std::ptrdiff_t>(beam.size());
    std::vector<std::optional<ExchangeMatrix>> kids(static_cast<std::size_t>(width * nk));
    const auto expand = [&](std::ptrdiff_t t) {
      const auto& c = beam[t / nk];
      const Label k = labels[t % nk];
      if (!c.seq.empty() && c.seq.back() == k) return;
      kids[t] = try_mutate(c.m, k);
    };
    if (opts.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t t = 0; t < width * nk; ++t) expand(t);
    } else {
      for (std::ptrdiff_t t = 0; t < width * nk; ++t) expand(t);
    }
    std::vector<Candidate> next;
    for (std::ptrdiff_t t = 0; t < width * nk; ++t) {
      if (!kids[t]) continue;
      if (++generated > opts.budget) return std::nullopt;
      if (!seen.insert(*kids[t]).second) continue;
      auto seq = beam[t / nk].seq;
      seq.push_back(labels[t % nk]);
      next.push_back({std::move(*kids[t]), std::move(seq)});
    }
    std::stable_sort(next.begin(), next.end(), [](const Candidate& a, const Candidate& b) {
      const auto ma = a.m.max_frozen_magnitude();
      const auto mb = b.m.max_frozen_magnitude();
      return ma != mb ? ma > mb : a.seq < b.seq;
    });
    if (next.size() > opts.beam) next.resize(opts.beam);
    beam = std::move(next);
  }
  return std::nullopt;
}

}  // namespace clustertrop
