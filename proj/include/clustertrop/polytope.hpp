#pragma once

// Exact rational polytopes. Half-spaces follow H+_{v,a} = {u : <u,v> + a >= 0};
// facet normals are stored as primitive integer vectors with the offset
// carrying the scale.

#include "clustertrop/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clustertrop {

class DegeneratePolytopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HalfSpace {
  RationalVector normal;
  Rational offset;

  /// <u, normal> + offset
  Rational eval(const RationalVector& u) const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  }
};

/// Same half-space with a primitive integer normal. Throws on a zero normal.
HalfSpace primitive(const HalfSpace& h);

class RationalPolytope {
 public:
  RationalPolytope() = default;

  /// Convex hull of a full-dimensional point set. Lower-dimensional or empty
  /// input throws DegeneratePolytopeError.
  static RationalPolytope hull(const std::vector<RationalVector>& points);

  /// Bounded full-dimensional intersection of half-spaces; throws
  /// DegeneratePolytopeError otherwise.
  static RationalPolytope from_halfspaces(std::size_t dim, const std::vector<HalfSpace>& hs);

  std::size_t dimension() const { return dim_; }
  /// Minimal V-representation, sorted lexicographically.
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  /// One primitive half-space per facet, sorted.
  const std::vector<HalfSpace>& facets() const { return facets_; }

  bool contains(const RationalVector& u) const;
  bool contains_in_interior(const RationalVector& u) const;

  /// Pairs of vertex indices spanning an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Indices of facets tight at vertex i.
  std::vector<std::size_t> tight_facets(std::size_t i) const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<HalfSpace> facets_;
};

/// Vertices of a bounded intersection of half-spaces in any dimension
/// (possibly empty or lower dimensional). Throws DegeneratePolytopeError when
/// the region is unbounded.
std::vector<RationalVector> halfspace_vertices(std::size_t dim, const std::vector<HalfSpace>& hs);

/// Extreme points of a finite set (duplicates collapsed, sorted). Works in any
/// affine dimension.
std::vector<RationalVector> extreme_points(const std::vector<RationalVector>& points);

/// conv{v_i} for the presentation Delta = cap H+_{v_i,1}. Throws
/// std::invalid_argument unless 0 is an interior point.
RationalPolytope polar_dual(const RationalPolytope& p);

/// Delta inside H+ and touching H.
bool is_supporting(const HalfSpace& h, const RationalPolytope& p);

/// Exact volume (triangulation by pulling).
Rational volume(const RationalPolytope& p);

struct PolytopePiece {
  int dimension = -1;  // -1 for empty
  std::vector<RationalVector> vertices;
  std::optional<RationalPolytope> polytope;  // present when full dimensional
};

struct Slice {
  PolytopePiece plus;     // Delta cap H+
  PolytopePiece minus;    // Delta cap H-
  PolytopePiece section;  // Delta cap H
};

PolytopePiece make_piece(std::size_t ambient, std::vector<RationalVector> vertices);

Slice slice(const RationalPolytope& p, const HalfSpace& h);

struct QGFCertificate {
  RationalVector center;
  Integer nu;
  /// Primitive inward facet normals n_F, one per facet, in facet order.
  std::vector<std::vector<Integer>> normals;
  std::vector<bool> primitive;
  /// conv{n_F}
  RationalPolytope dual;
};

/// Solves <u0, n_F> - beta_F = nu over all facets written <u, n_F> >= beta_F.
/// Returns nullopt (with a reason in `why`) when there is no solution or nu is
/// not a positive integer.
std::optional<QGFCertificate> qgf_certificate(const RationalPolytope& p, std::string* why = nullptr);

/// nu * (Delta - u0)^polar = conv{nu n_F / (<u0, n_F> + a_F)}. Requires u0 interior.
RationalPolytope combinatorial_dual(const RationalPolytope& p, const RationalVector& u0, const Integer& nu);

}  // namespace clustertrop
