#pragma once

// Tropicalized cluster mutations on points, graded point sets and polytopes,
// and the lattice-count certificate for families of mutated polytopes.
// Coordinates are indexed by the matrix columns in column order.

#include "clustertrop/exchange_matrix.hpp"
#include "clustertrop/polytope.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace clustertrop {

/// u'_k = -u_k; u'_j = u_j + [eps_{k,j}]_+ u_k if u_k >= 0, u_j + [-eps_{k,j}]_+ u_k if u_k <= 0.
RationalVector trop_mutate_point(const ExchangeMatrix& eps, Label k, const RationalVector& u);
IntVector trop_mutate_point(const ExchangeMatrix& eps, Label k, const IntVector& u);

/// Linear branch of the map on {u_k >= 0} (positive = true) or {u_k <= 0}, as
/// an integer matrix acting on column vectors.
std::vector<IntVector> branch_matrix(const ExchangeMatrix& eps, Label k, bool positive);

/// Known elements (level, point) of a graded semigroup.
using GradedPointSet = std::set<std::pair<std::int64_t, IntVector>>;

GradedPointSet trop_mutate_graded(const GradedPointSet& s, const ExchangeMatrix& eps, Label k);

struct SaturationWindow {
  std::int64_t max_level = 1;
  std::int64_t radius = 0;  // bound on |coordinate|
};

struct SaturationViolation {
  std::int64_t factor;                      // n
  std::pair<std::int64_t, IntVector> x;     // n x lies in S, x does not
};

/// Every (n, x) in the window with n x in S and x not in S. An empty result is
/// evidence at this scale only.
std::vector<SaturationViolation> saturation_probe(const GradedPointSet& s, const SaturationWindow& window);

struct TropImage {
  bool convex = false;
  /// Hull of the image, present when the image is convex.
  std::optional<RationalPolytope> polytope;
  /// Images of Delta cap {u_k >= 0} and Delta cap {u_k <= 0}.
  PolytopePiece plus_image;
  PolytopePiece minus_image;
};

TropImage trop_mutate_polytope(const ExchangeMatrix& eps, Label k, const RationalPolytope& p);

struct CenterReport {
  bool fixed = false;              // u0_k = 0 at every mutable k
  bool fixed_by_mutation = false;  // mu_k^T(u0) = u0 for every mutable k
  std::vector<Label> violating;    // mutable k with u0_k != 0
};

CenterReport center_fixedness(const ExchangeMatrix& eps, const RationalVector& u0);

enum class QgfPreservationStatus { Preserved, NotQGF, CenterNotFixed, NonConvexImage, ImageNotQGF, SizeChanged, CenterMoved };

std::string to_string(QgfPreservationStatus s);

struct QgfPreservationReport {
  QgfPreservationStatus status = QgfPreservationStatus::NotQGF;
  std::optional<QGFCertificate> before;
  std::optional<QGFCertificate> after;
  std::optional<RationalPolytope> image;
  RationalVector mutated_center;
};

QgfPreservationReport qgf_preservation_check(const ExchangeMatrix& eps, Label k, const RationalPolytope& p);

enum class SupportStatus { Supported, FrozenDirection, OriginOutside, NotInHalfSpace, ImageNotInHalfSpace, PositiveEntry, Failed };

std::string to_string(SupportStatus s);

struct SupportReport {
  SupportStatus status = SupportStatus::Failed;
  HalfSpace halfspace;   // H+_{e_s - eps_{r,s} e_r, 0}
  RationalVector witness;  // point of Delta on the hyperplane
};

/// Verifies that H+_{e_s - eps_{r,s} e_r, 0} supports Delta under the hypotheses
/// 0 in Delta, Delta in H+_{e_s,0}, mu_r^T(Delta) in H+_{e'_s,0}, eps_{r,s} <= 0.
SupportReport supporting_halfspace_lemma(const ExchangeMatrix& eps, Label r, Label s, const RationalPolytope& p);

struct FamilyStage {
  std::vector<Label> seq;  // mutations from the initial seed, applied left to right
  Label r = 0;
  Label s = 0;
  std::optional<RationalPolytope> polytope;  // expected Delta at this stage
};

struct FamilySpec {
  ExchangeMatrix matrix;
  RationalPolytope polytope;
  std::vector<FamilyStage> stages;
};

struct StageCertificate {
  std::vector<Label> seq;
  Label r = 0;
  Label s = 0;
  std::int64_t epsilon = 0;
  bool replay_convex = false;
  std::optional<bool> explicit_matches;
  bool condition2 = false;  // Delta in H+_{e_s,0}
  bool condition3 = false;  // mu_r^T(Delta) in H+_{e'_s,0}
  bool supported = false;   // H+_{e_s - eps e_r, 0} supports Delta
  bool qgf_consistent = false;  // same size and center as the initial certificate
  Rational a_s;
  Integer p = 0;
  std::int64_t q = 0;
  Integer lower_bound = 0;                    // 1 - eps
  std::optional<std::uint64_t> segment_count;  // points of the segment in (1/q) Z^J, all inside the dual
  std::optional<std::uint64_t> dual_count;     // all points of the dual in (1/q) Z^J
  bool valid = false;
  std::vector<std::string> diagnostics;
};

struct DistinguishCertificate {
  bool origin_in_initial = false;
  std::optional<QGFCertificate> initial_qgf;
  CenterReport center;
  bool initial_ok = false;
  std::vector<StageCertificate> stages;
  bool strictly_increasing = false;
  bool distinct = false;
  std::vector<std::string> diagnostics;
};

struct CertificateOptions {
  std::uint64_t box_limit = 50'000'000;
};

DistinguishCertificate distinguish_certificate(const FamilySpec& f, const CertificateOptions& opt = {});

}  // namespace clustertrop
