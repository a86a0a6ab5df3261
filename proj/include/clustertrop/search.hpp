#pragma once

// Searches over mutation classes. Every search has a serial and an OpenMP
// implementation that return identical results.

#include "clustertrop/exchange_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clustertrop {

enum class Exec { Serial, Parallel };

struct ClassBfsResult {
  enum class Kind { Finite, EntryExceeded, CapExhausted };
  Kind kind = Kind::CapExhausted;
  /// Finite: the labeled class in discovery order.
  std::vector<ExchangeMatrix> members;
  /// EntryExceeded: first trace reaching |entry| > entry_cap.
  std::optional<MutationTrace> trace;
  std::size_t explored = 0;
};

/// Breadth-first enumeration of the labeled mutation class with exact
/// equality dedup. node_cap bounds the number of distinct matrices.
ClassBfsResult mutation_class_bfs(const ExchangeMatrix& eps, std::size_t node_cap, std::int64_t entry_cap,
                                  Exec exec = Exec::Parallel);

enum class Finiteness { Finite, Infinite, Unknown };

std::string to_string(Finiteness f);

struct FinitenessReport {
  Finiteness verdict = Finiteness::Unknown;
  std::string reason;
  /// Evidence for Infinite when it came from a search.
  std::optional<MutationTrace> trace;
};

/// Mutation finiteness of the mutable part, decided per connected component:
/// components of size <= 2 are finite; in size >= 3 a skew-symmetric entry of
/// absolute value >= 3 (or |eps_{r,s} eps_{s,r}| >= 5 in the skew-symmetrizable
/// case) anywhere in the class means infinite; a closed BFS means finite;
/// anything else is Unknown.
FinitenessReport classify_finiteness(const ExchangeMatrix& eps, std::size_t node_cap, Exec exec = Exec::Parallel);

struct LargeEntryResult {
  MutationTrace trace;
  Label r;
  Label s;
  std::int64_t value;  // eps_{r,s} of the result, <= -target
};

struct LargeEntryOptions {
  std::size_t budget = 200000;  // matrices generated
  std::size_t beam = 64;
  Exec exec = Exec::Parallel;
};

/// Beam search for a matrix in the class with -eps_{r,s} >= target, r mutable,
/// s frozen. Candidates are ranked by max frozen magnitude, ties by mutation
/// sequence. A positive entry eps_{r,s} >= target is turned around by a final
/// mu_r. nullopt when the budget runs out.
std::optional<LargeEntryResult> large_entry_search(const ExchangeMatrix& eps, std::int64_t target,
                                                   const LargeEntryOptions& opts = {});

/// Connected components of the mutable part, each sorted by column order.
std::vector<std::vector<Label>> mutable_components(const ExchangeMatrix& eps);

}  // namespace clustertrop
