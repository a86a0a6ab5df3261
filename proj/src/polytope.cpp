#include "clustertrop/polytope.hpp"

#include "clustertrop/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace clustertrop {

namespace {

using IntegerVector = std::vector<Integer>;
using Bits = boost::dynamic_bitset<>;

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IntegerVector& v) {
  const Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Integer row proportional to a rational row.
IntegerVector scaled(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (l / denominator(x)));
  return out;
}

struct Ray {
  IntegerVector x;
  Bits zero;
};

// Extreme rays of the pointed cone {x : A x >= 0} by the double description
// method with the combinatorial adjacency test. Returns nullopt when A does
// not have full column rank (the cone has a lineality space).
std::optional<std::vector<IntegerVector>> extreme_rays(const std::vector<IntegerVector>& a, std::size_t d) {
  const std::size_t rows = a.size();
  // greedy basis of rows
  std::vector<std::size_t> basis;
  RationalMatrix acc;
  for (std::size_t i = 0; i < rows && basis.size() < d; ++i) {
    RationalVector r(a[i].begin(), a[i].end());
    acc.push_back(r);
    if (rank(acc) == acc.size()) {
      basis.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  if (basis.size() < d) return std::nullopt;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector rhs(d, Rational(0));
    rhs[j] = 1;
    auto sol = solve(acc, rhs);
    Ray r{scaled(*sol), Bits(rows)};
    make_primitive(r.x);
    for (std::size_t t = 0; t < d; ++t)
      if (t != j) r.zero.set(basis[t]);
    rays.push_back(std::move(r));
  }
  Bits done(rows);
  for (auto b : basis) done.set(b);

  for (std::size_t i = 0; i < rows; ++i) {
    if (done.test(i)) continue;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a[i], rays[r].x);
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
      if (val[r] >= 0) {
        next.push_back(rays[r]);
        if (val[r] == 0) next.back().zero.set(i);
      }
    }
    for (auto p : pos)
      for (auto n : neg) {
        const Bits common = rays[p].zero & rays[n].zero;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && common.is_subset_of(rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray nr{IntegerVector(d), common};
        for (std::size_t t = 0; t < d; ++t) nr.x[t] = val[p] * rays[n].x[t] - val[n] * rays[p].x[t];
        make_primitive(nr.x);
        nr.zero.set(i);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
    done.set(i);
  }
  std::vector<IntegerVector> out;
  for (auto& r : rays) out.push_back(std::move(r.x));
  return out;
}

RationalVector to_rat(const IntegerVector& v) { return RationalVector(v.begin(), v.end()); }

std::vector<RationalVector> dedupe(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Facets of a full-dimensional point set.
std::vector<HalfSpace> facets_of(const std::vector<RationalVector>& pts, std::size_t dim) {
  std::vector<IntegerVector> rows;
  for (const auto& p : pts) {
    RationalVector r = p;
    r.push_back(1);
    rows.push_back(scaled(r));
  }
  auto rays = extreme_rays(rows, dim + 1);
  if (!rays) throw DegeneratePolytopeError("points are not full dimensional");
  std::vector<HalfSpace> out;
  for (const auto& r : *rays) {
    HalfSpace h{RationalVector(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim)), Rational(r[dim])};
    bool zero = true;
    for (const auto& x : h.normal) zero &= x == 0;
    if (zero) continue;  // the trivial inequality 1 >= 0
    out.push_back(primitive(h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RationalMatrix normals_of(const std::vector<HalfSpace>& fs, const std::vector<std::size_t>& idx) {
  RationalMatrix m;
  for (auto i : idx) m.push_back(fs[i].normal);
  return m;
}

}  // namespace

Rational HalfSpace::eval(const RationalVector& u) const {
  if (u.size() != normal.size()) throw std::invalid_argument("dimension mismatch in half-space evaluation");
  return dot(u, normal) + offset;
}

HalfSpace primitive(const HalfSpace& h) {
  const auto dir = primitive_direction(h.normal);
  std::size_t nz = 0;
  while (nz < dir.size() && dir[nz] == 0) ++nz;
  if (nz == dir.size()) throw std::invalid_argument("half-space normal must be nonzero");
  // positive factor c with dir = c * normal
  const Rational c = Rational(dir[nz]) / h.normal[nz];
  return {RationalVector(dir.begin(), dir.end()), h.offset * c};
}

RationalPolytope RationalPolytope::hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw DegeneratePolytopeError("empty point set");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("points have mixed dimensions");
  if (dim == 0) throw DegeneratePolytopeError("zero-dimensional ambient space");
  const auto pts = dedupe(points);
  if (affine_dimension(pts) != static_cast<int>(dim))
    throw DegeneratePolytopeError("points span affine dimension " + std::to_string(affine_dimension(pts)) +
                                  " < " + std::to_string(dim));
  RationalPolytope p;
  p.dim_ = dim;
  p.facets_ = facets_of(pts, dim);
  for (const auto& v : pts) {
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < p.facets_.size(); ++f)
      if (p.facets_[f].eval(v) == 0) tight.push_back(f);
    if (rank(normals_of(p.facets_, tight)) == dim) p.vertices_.push_back(v);
  }
  return p;
}

std::vector<RationalVector> halfspace_vertices(std::size_t dim, const std::vector<HalfSpace>& hs) {
  std::vector<IntegerVector> rows;
  for (const auto& h : hs) {
    if (h.normal.size() != dim) throw std::invalid_argument("half-space dimension mismatch");
    RationalVector r = h.normal;
    r.push_back(h.offset);
    rows.push_back(scaled(r));
  }
  IntegerVector t(dim + 1, 0);
  t[dim] = 1;
  rows.push_back(t);
  auto rays = extreme_rays(rows, dim + 1);
  if (!rays) throw DegeneratePolytopeError("half-space intersection is unbounded");
  std::vector<RationalVector> out;
  for (const auto& r : *rays) {
    if (r[dim] == 0) throw DegeneratePolytopeError("half-space intersection is unbounded");
    RationalVector v;
    for (std::size_t i = 0; i < dim; ++i) v.push_back(Rational(r[i], r[dim]));
    out.push_back(std::move(v));
  }
  return dedupe(std::move(out));
}

RationalPolytope RationalPolytope::from_halfspaces(std::size_t dim, const std::vector<HalfSpace>& hs) {
  return hull(halfspace_vertices(dim, hs));
}

std::vector<RationalVector> extreme_points(const std::vector<RationalVector>& points) {
  auto pts = dedupe(points);
  const int k = affine_dimension(pts);
  if (k <= 0) return pts;
  // coordinates on which the affine hull projects bijectively
  const std::size_t dim = pts.front().size();
  std::vector<std::size_t> coords;
  RationalMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(d);
  }
  for (std::size_t c = 0; c < dim && static_cast<int>(coords.size()) < k; ++c) {
    auto trial = coords;
    trial.push_back(c);
    RationalMatrix cols;
    for (const auto& d : diffs) {
      RationalVector r;
      for (auto t : trial) r.push_back(d[t]);
      cols.push_back(r);
    }
    if (rank(cols) == trial.size()) coords = trial;
  }
  std::vector<RationalVector> proj;
  for (const auto& p : pts) {
    RationalVector r;
    for (auto c : coords) r.push_back(p[c]);
    proj.push_back(r);
  }
  const auto hull = RationalPolytope::hull(proj);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (std::binary_search(hull.vertices().begin(), hull.vertices().end(), proj[i])) out.push_back(pts[i]);
  return out;
}

bool RationalPolytope::contains(const RationalVector& u) const {
  for (const auto& f : facets_)
    if (f.eval(u) < 0) return false;
  return true;
}

bool RationalPolytope::contains_in_interior(const RationalVector& u) const {
  for (const auto& f : facets_)
    if (f.eval(u) <= 0) return false;
  return true;
}

std::vector<std::size_t> RationalPolytope::tight_facets(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (facets_[f].eval(vertices_[i]) == 0) out.push_back(f);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> RationalPolytope::edges() const {
  std::vector<std::set<std::size_t>> tight;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto t = tight_facets(i);
    tight.emplace_back(t.begin(), t.end());
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(), tight[j].end(),
                            std::back_inserter(common));
      if (rank(normals_of(facets_, common)) + 1 != dim_) continue;
      bool edge = true;
      for (std::size_t k = 0; k < vertices_.size() && edge; ++k)
        if (k != i && k != j && std::includes(tight[k].begin(), tight[k].end(), common.begin(), common.end()))
          edge = false;
      if (edge) out.emplace_back(i, j);
    }
  return out;
}

RationalPolytope polar_dual(const RationalPolytope& p) {
  std::vector<RationalVector> pts;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) throw std::invalid_argument("polar dual needs 0 in the interior");
    RationalVector v;
    for (const auto& x : f.normal) v.push_back(x / f.offset);
    pts.push_back(std::move(v));
  }
  return RationalPolytope::hull(pts);
}

bool is_supporting(const HalfSpace& h, const RationalPolytope& p) {
  bool touches = false;
  for (const auto& v : p.vertices()) {
    const Rational e = h.eval(v);
    if (e < 0) return false;
    touches |= e == 0;
  }
  return touches;
}

namespace {

// Simplices (as vertex index lists) triangulating the face with vertex set g
// of dimension k, by pulling from its smallest vertex.
void triangulate(const RationalPolytope& p, const std::vector<std::vector<std::size_t>>& facet_vertices,
                 const std::vector<std::size_t>& g, int k, std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back({g.front()});
    return;
  }
  const std::size_t apex = g.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& fv : facet_vertices) {
    std::vector<std::size_t> s;
    std::set_intersection(g.begin(), g.end(), fv.begin(), fv.end(), std::back_inserter(s));
    if (s.empty() || std::binary_search(s.begin(), s.end(), apex)) continue;
    std::vector<RationalVector> pts;
    for (auto i : s) pts.push_back(p.vertices()[i]);
    if (affine_dimension(pts) == k - 1) subfaces.insert(s);
  }
  for (const auto& s : subfaces) {
    std::vector<std::vector<std::size_t>> sub;
    triangulate(p, facet_vertices, s, k - 1, sub);
    for (auto& simplex : sub) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace

Rational volume(const RationalPolytope& p) {
  const std::size_t m = p.dimension();
  std::vector<std::vector<std::size_t>> facet_vertices(p.facets().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    for (auto f : p.tight_facets(i)) facet_vertices[f].push_back(i);
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(p, facet_vertices, all, static_cast<int>(m), simplices);
  Rational total = 0;
  Integer fact = 1;
  for (std::size_t i = 2; i <= m; ++i) fact *= i;
  for (const auto& s : simplices) {
    RationalMatrix rows;
    for (std::size_t i = 1; i < s.size(); ++i) {
      RationalVector r(m);
      for (std::size_t j = 0; j < m; ++j) r[j] = p.vertices()[s[i]][j] - p.vertices()[s[0]][j];
      rows.push_back(r);
    }
    total += abs(determinant(rows));
  }
  return total / Rational(fact);
}

PolytopePiece make_piece(std::size_t ambient, std::vector<RationalVector> vertices) {
  PolytopePiece piece;
  piece.vertices = extreme_points(vertices);
  piece.dimension = affine_dimension(piece.vertices);
  if (piece.dimension == static_cast<int>(ambient) && ambient > 0)
    piece.polytope = RationalPolytope::hull(piece.vertices);
  return piece;
}

Slice slice(const RationalPolytope& p, const HalfSpace& h) {
  std::vector<RationalVector> plus, minus, section;
  std::vector<Rational> val;
  for (const auto& v : p.vertices()) {
    val.push_back(h.eval(v));
    if (val.back() >= 0) plus.push_back(v);
    if (val.back() <= 0) minus.push_back(v);
    if (val.back() == 0) section.push_back(v);
  }
  for (const auto& [i, j] : p.edges()) {
    if ((val[i] > 0 && val[j] < 0) || (val[i] < 0 && val[j] > 0)) {
      const Rational t = val[i] / (val[i] - val[j]);
      RationalVector x(p.dimension());
      for (std::size_t c = 0; c < x.size(); ++c) x[c] = p.vertices()[i][c] + t * (p.vertices()[j][c] - p.vertices()[i][c]);
      plus.push_back(x);
      minus.push_back(x);
      section.push_back(x);
    }
  }
  return {make_piece(p.dimension(), plus), make_piece(p.dimension(), minus), make_piece(p.dimension(), section)};
}

std::optional<QGFCertificate> qgf_certificate(const RationalPolytope& p, std::string* why) {
  const auto fail = [&](std::string msg) -> std::optional<QGFCertificate> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  if (p.facets().empty()) throw DegeneratePolytopeError("polytope has no facets");
  const std::size_t m = p.dimension();
  // unknowns (u0, nu): <u0, n_F> - nu = beta_F = -a_F
  RationalMatrix a;
  RationalVector b;
  for (const auto& f : p.facets()) {
    RationalVector row = f.normal;
    row.push_back(-1);
    a.push_back(row);
    b.push_back(-f.offset);
  }
  bool unique = false;
  const auto sol = solve(a, b, &unique);
  if (!sol) return fail("no point has equal lattice distance to every facet");
  if (!unique) return fail("the center is not unique");
  const Rational nu = (*sol)[m];
  if (nu <= 0) return fail("common facet distance " + to_string(nu) + " is not positive");
  if (!is_integer(nu)) return fail("common facet distance " + to_string(nu) + " is not an integer");
  QGFCertificate c;
  c.center.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(m));
  c.nu = numerator(nu);
  std::vector<RationalVector> pts;
  for (const auto& f : p.facets()) {
    std::vector<Integer> n;
    for (const auto& x : f.normal) n.push_back(numerator(x));
    c.primitive.push_back(gcd_of(n) == 1);
    c.normals.push_back(n);
    pts.push_back(f.normal);
  }
  c.dual = RationalPolytope::hull(pts);
  if (why) why->clear();
  return c;
}

RationalPolytope combinatorial_dual(const RationalPolytope& p, const RationalVector& u0, const Integer& nu) {
  std::vector<RationalVector> pts;
  for (const auto& f : p.facets()) {
    const Rational denom = f.eval(u0);
    if (denom <= 0) throw std::invalid_argument("center must be an interior point");
    RationalVector v;
    for (const auto& x : f.normal) v.push_back(Rational(nu) * x / denom);
    pts.push_back(std::move(v));
  }
  return RationalPolytope::hull(pts);
}

}  // namespace clustertrop
