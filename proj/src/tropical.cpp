#include "clustertrop/tropical.hpp"

#include "clustertrop/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace clustertrop {

namespace {

void require_mutable(const ExchangeMatrix& eps, Label k) {
  if (!eps.is_mutable(k)) throw FrozenDirectionError("tropical mutation at non-mutable index " + std::to_string(k));
}

RationalVector origin(std::size_t n) { return RationalVector(n, Rational(0)); }

std::vector<RationalVector> map_points(const ExchangeMatrix& eps, Label k, const std::vector<RationalVector>& pts) {
  std::vector<RationalVector> out;
  out.reserve(pts.size());
  for (const auto& u : pts) out.push_back(trop_mutate_point(eps, k, u));
  return out;
}

bool all_nonnegative_at(const std::vector<RationalVector>& pts, std::size_t c) {
  return std::all_of(pts.begin(), pts.end(), [c](const RationalVector& u) { return u[c] >= 0; });
}

}  // namespace

RationalVector trop_mutate_point(const ExchangeMatrix& eps, Label k, const RationalVector& u) {
  require_mutable(eps, k);
  if (u.size() != eps.num_columns()) throw std::invalid_argument("point dimension does not match the matrix");
  const std::size_t kc = eps.column_index(k);
  const auto& row = eps.row(k);
  const Rational uk = u[kc];
  RationalVector out = u;
  out[kc] = -uk;
  if (uk == 0) return out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j == kc) continue;
    const std::int64_t c = uk > 0 ? positive_part(row[j]) : positive_part(-row[j]);
    if (c != 0) out[j] += c * uk;
  }
  return out;
}

IntVector trop_mutate_point(const ExchangeMatrix& eps, Label k, const IntVector& u) {
  require_mutable(eps, k);
  if (u.size() != eps.num_columns()) throw std::invalid_argument("point dimension does not match the matrix");
  const std::size_t kc = eps.column_index(k);
  const auto& row = eps.row(k);
  const std::int64_t uk = u[kc];
  IntVector out = u;
  out[kc] = -uk;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j == kc) continue;
    const std::int64_t c = uk >= 0 ? positive_part(row[j]) : positive_part(-row[j]);
    out[j] = checked_add(out[j], checked_mul(c, uk));
  }
  return out;
}

std::vector<IntVector> branch_matrix(const ExchangeMatrix& eps, Label k, bool positive) {
  require_mutable(eps, k);
  const std::size_t n = eps.num_columns();
  const std::size_t kc = eps.column_index(k);
  const auto& row = eps.row(k);
  std::vector<IntVector> m(n, IntVector(n, 0));
  for (std::size_t j = 0; j < n; ++j) m[j][j] = 1;
  m[kc][kc] = -1;
  for (std::size_t j = 0; j < n; ++j)
    if (j != kc) m[j][kc] = positive ? positive_part(row[j]) : positive_part(-row[j]);
  return m;
}

GradedPointSet trop_mutate_graded(const GradedPointSet& s, const ExchangeMatrix& eps, Label k) {
  require_mutable(eps, k);
  GradedPointSet out;
  for (const auto& [level, u] : s) out.emplace(level, trop_mutate_point(eps, k, u));
  return out;
}

std::vector<SaturationViolation> saturation_probe(const GradedPointSet& s, const SaturationWindow& window) {
  std::vector<SaturationViolation> out;
  for (const auto& [level, u] : s) {
    if (level <= 0) throw std::invalid_argument("graded point set levels must be positive");
    for (std::int64_t n = 2; n <= level; ++n) {
      if (level % n != 0) continue;
      if (!std::all_of(u.begin(), u.end(), [n](std::int64_t x) { return x % n == 0; })) continue;
      IntVector x;
      for (auto c : u) x.push_back(c / n);
      const std::int64_t xl = level / n;
      if (xl > window.max_level) continue;
      if (std::any_of(x.begin(), x.end(), [&](std::int64_t c) { return c > window.radius || -c > window.radius; }))
        continue;
      if (!s.count({xl, x})) out.push_back({n, {xl, x}});
    }
  }
  return out;
}

TropImage trop_mutate_polytope(const ExchangeMatrix& eps, Label k, const RationalPolytope& p) {
  require_mutable(eps, k);
  const std::size_t n = p.dimension();
  if (n != eps.num_columns()) throw std::invalid_argument("polytope dimension does not match the matrix");
  const std::size_t kc = eps.column_index(k);
  RationalVector ek(n, Rational(0));
  ek[kc] = 1;
  const auto halves = slice(p, {ek, 0});
  TropImage img;
  img.plus_image = make_piece(n, map_points(eps, k, halves.plus.vertices));
  img.minus_image = make_piece(n, map_points(eps, k, halves.minus.vertices));
  std::vector<RationalVector> all = img.plus_image.vertices;
  all.insert(all.end(), img.minus_image.vertices.begin(), img.minus_image.vertices.end());
  const auto hull = RationalPolytope::hull(all);
  // u_k >= 0 lands in u'_k <= 0 and vice versa
  const auto cut = slice(hull, {ek, 0});
  img.convex = cut.minus.vertices == img.plus_image.vertices && cut.plus.vertices == img.minus_image.vertices;
  if (img.convex) img.polytope = hull;
  return img;
}

CenterReport center_fixedness(const ExchangeMatrix& eps, const RationalVector& u0) {
  CenterReport r;
  r.fixed = true;
  r.fixed_by_mutation = true;
  for (Label k : eps.mutable_labels()) {
    if (u0[eps.column_index(k)] != 0) {
      r.fixed = false;
      r.violating.push_back(k);
    }
    if (trop_mutate_point(eps, k, u0) != u0) r.fixed_by_mutation = false;
  }
  return r;
}

std::string to_string(QgfPreservationStatus s) {
  switch (s) {
    case QgfPreservationStatus::Preserved: return "preserved";
    case QgfPreservationStatus::NotQGF: return "input is not Q-Gorenstein Fano";
    case QgfPreservationStatus::CenterNotFixed: return "center has a nonzero coordinate in the mutation direction";
    case QgfPreservationStatus::NonConvexImage: return "image is not convex";
    case QgfPreservationStatus::ImageNotQGF: return "image is not Q-Gorenstein Fano";
    case QgfPreservationStatus::SizeChanged: return "image has a different size";
    case QgfPreservationStatus::CenterMoved: return "image center differs from the mutated center";
  }
  return "unknown";
}

QgfPreservationReport qgf_preservation_check(const ExchangeMatrix& eps, Label k, const RationalPolytope& p) {
  require_mutable(eps, k);
  QgfPreservationReport r;
  r.before = qgf_certificate(p);
  if (!r.before) {
    r.status = QgfPreservationStatus::NotQGF;
    return r;
  }
  const auto& u0 = r.before->center;
  r.mutated_center = trop_mutate_point(eps, k, u0);
  if (u0[eps.column_index(k)] != 0) {
    r.status = QgfPreservationStatus::CenterNotFixed;
    return r;
  }
  auto img = trop_mutate_polytope(eps, k, p);
  if (!img.convex) {
    r.status = QgfPreservationStatus::NonConvexImage;
    return r;
  }
  r.image = *img.polytope;
  r.after = qgf_certificate(*r.image);
  if (!r.after)
    r.status = QgfPreservationStatus::ImageNotQGF;
  else if (r.after->nu != r.before->nu)
    r.status = QgfPreservationStatus::SizeChanged;
  else if (r.after->center != r.mutated_center)
    r.status = QgfPreservationStatus::CenterMoved;
  else
    r.status = QgfPreservationStatus::Preserved;
  return r;
}

std::string to_string(SupportStatus s) {
  switch (s) {
    case SupportStatus::Supported: return "supported";
    case SupportStatus::FrozenDirection: return "r is not mutable";
    case SupportStatus::OriginOutside: return "origin is not in the polytope";
    case SupportStatus::NotInHalfSpace: return "polytope is not in H+_{e_s,0}";
    case SupportStatus::ImageNotInHalfSpace: return "mutated polytope is not in H+_{e'_s,0}";
    case SupportStatus::PositiveEntry: return "eps_{r,s} > 0";
    case SupportStatus::Failed: return "half-space does not support the polytope";
  }
  return "unknown";
}

SupportReport supporting_halfspace_lemma(const ExchangeMatrix& eps, Label r, Label s, const RationalPolytope& p) {
  const std::size_t n = eps.num_columns();
  if (p.dimension() != n) throw std::invalid_argument("polytope dimension does not match the matrix");
  const std::size_t sc = eps.column_index(s);
  SupportReport rep;
  rep.witness = origin(n);
  if (!eps.is_mutable(r)) {
    rep.status = SupportStatus::FrozenDirection;
    return rep;
  }
  const std::size_t rc = eps.column_index(r);
  const std::int64_t e = eps.entry(r, s);
  rep.halfspace.normal = origin(n);
  rep.halfspace.normal[sc] += 1;
  rep.halfspace.normal[rc] -= e;
  rep.halfspace.offset = 0;
  if (!p.contains(origin(n))) {
    rep.status = SupportStatus::OriginOutside;
  } else if (!all_nonnegative_at(p.vertices(), sc)) {
    rep.status = SupportStatus::NotInHalfSpace;
  } else {
    const auto img = trop_mutate_polytope(eps, r, p);
    if (!all_nonnegative_at(img.plus_image.vertices, sc) || !all_nonnegative_at(img.minus_image.vertices, sc))
      rep.status = SupportStatus::ImageNotInHalfSpace;
    else if (e > 0)
      rep.status = SupportStatus::PositiveEntry;
    else
      rep.status = is_supporting(rep.halfspace, p) ? SupportStatus::Supported : SupportStatus::Failed;
  }
  return rep;
}

DistinguishCertificate distinguish_certificate(const FamilySpec& f, const CertificateOptions& opt) {
  DistinguishCertificate cert;
  const std::size_t n = f.matrix.num_columns();
  if (f.polytope.dimension() != n) throw std::invalid_argument("initial polytope dimension does not match the matrix");
  cert.origin_in_initial = f.polytope.contains(origin(n));
  if (!cert.origin_in_initial) cert.diagnostics.push_back("initial polytope does not contain the origin");
  std::string why;
  cert.initial_qgf = qgf_certificate(f.polytope, &why);
  if (!cert.initial_qgf) {
    cert.diagnostics.push_back("initial polytope is not Q-Gorenstein Fano: " + why);
  } else {
    cert.center = center_fixedness(f.matrix, cert.initial_qgf->center);
    if (!cert.center.fixed) cert.diagnostics.push_back("center has nonzero mutable coordinates");
  }
  cert.initial_ok = cert.origin_in_initial && cert.initial_qgf && cert.center.fixed && cert.center.fixed_by_mutation;

  for (const auto& stage : f.stages) {
    StageCertificate sc;
    sc.seq = stage.seq;
    sc.r = stage.r;
    sc.s = stage.s;
    auto note = [&sc](std::string m) { sc.diagnostics.push_back(std::move(m)); };
    ExchangeMatrix eps = f.matrix;
    std::optional<RationalPolytope> delta = f.polytope;
    try {
      for (Label k : stage.seq) {
        auto img = trop_mutate_polytope(eps, k, *delta);
        if (!img.convex) {
          note("image under mutation at " + std::to_string(k) + " is not convex");
          delta.reset();
          break;
        }
        delta = *img.polytope;
        eps = mutate(eps, k);
      }
    } catch (const std::exception& e) {
      note(std::string("replay failed: ") + e.what());
      delta.reset();
    }
    sc.replay_convex = delta.has_value();
    if (stage.polytope && delta) {
      sc.explicit_matches = *stage.polytope == *delta;
      if (!*sc.explicit_matches) note("given polytope differs from the replayed image");
    }
    if (!delta) {
      cert.stages.push_back(std::move(sc));
      continue;
    }
    if (!eps.has_label(stage.s) || !eps.is_mutable(stage.r) || stage.r == stage.s) {
      note("stage indices must satisfy r mutable, s a column, r != s");
      cert.stages.push_back(std::move(sc));
      continue;
    }
    const std::size_t rc = eps.column_index(stage.r), scol = eps.column_index(stage.s);
    sc.epsilon = eps.entry(stage.r, stage.s);
    sc.lower_bound = Integer(1) - sc.epsilon;
    if (sc.epsilon >= 0) note("eps_{r,s} is not negative");
    sc.condition2 = all_nonnegative_at(delta->vertices(), scol);
    if (!sc.condition2) note("condition (2) fails");
    const auto img = trop_mutate_polytope(eps, stage.r, *delta);
    sc.condition3 = all_nonnegative_at(img.plus_image.vertices, scol) && all_nonnegative_at(img.minus_image.vertices, scol);
    if (!sc.condition3) note("condition (3) fails");
    const auto support = supporting_halfspace_lemma(eps, stage.r, stage.s, *delta);
    sc.supported = support.status == SupportStatus::Supported;
    if (!sc.supported) note("support check: " + to_string(support.status));

    if (cert.initial_qgf) {
      const auto local = qgf_certificate(*delta);
      sc.qgf_consistent = local && local->nu == cert.initial_qgf->nu && local->center == cert.initial_qgf->center;
      if (!sc.qgf_consistent) note("stage polytope does not keep the initial size and center");
      sc.a_s = cert.initial_qgf->center[scol];
      if (sc.a_s == 0) note("a_s = 0, the scaling nu/a_s is undefined");
    }
    if (sc.qgf_consistent && sc.a_s != 0) {
      const Rational ratio = Rational(cert.initial_qgf->nu) / sc.a_s;
      sc.p = numerator(ratio);
      sc.q = to_int64(denominator(ratio));
      const auto dual = combinatorial_dual(*delta, cert.initial_qgf->center, cert.initial_qgf->nu);
      if (sc.epsilon < 0) {
        // points (p/q)(e_s + t e_r) with t in [0, -eps] and p t integral
        const Integer steps = abs(sc.p) * (-sc.epsilon);
        std::uint64_t count = 0;
        for (Integer j = 0; j <= steps; ++j) {
          RationalVector u = origin(n);
          u[scol] = ratio;
          u[rc] = ratio * Rational(j, abs(sc.p));
          count += dual.contains(u);
        }
        sc.segment_count = count;
        if (count != steps + 1) note("segment leaves the combinatorial dual");
      }
      try {
        sc.dual_count = lattice_point_count(dual, sc.q, Exec::Parallel, opt.box_limit);
      } catch (const EnumerationTooLarge& e) {
        note(std::string("dual enumeration infeasible: ") + e.what());
      }
    }
    sc.valid = cert.initial_ok && sc.explicit_matches.value_or(true) && sc.epsilon < 0 && sc.condition2 &&
               sc.condition3 && sc.supported && sc.qgf_consistent && sc.segment_count && sc.dual_count &&
               Integer(*sc.segment_count) >= sc.lower_bound && Integer(*sc.dual_count) >= sc.lower_bound;
    cert.stages.push_back(std::move(sc));
  }

  const bool all_valid =
      !cert.stages.empty() && std::all_of(cert.stages.begin(), cert.stages.end(), [](const auto& s) { return s.valid; });
  cert.strictly_increasing = all_valid;
  for (std::size_t i = 1; i < cert.stages.size() && all_valid; ++i)
    if (*cert.stages[i].dual_count <= *cert.stages[i - 1].dual_count) cert.strictly_increasing = false;
  cert.distinct = all_valid && cert.strictly_increasing;
  if (!all_valid) cert.diagnostics.push_back("some stage failed verification");
  return cert;
}

}  // namespace clustertrop
