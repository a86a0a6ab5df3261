#include "clustertrop/lattice.hpp"
#include "clustertrop/linalg.hpp"
#include "clustertrop/polytope.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace clustertrop;

namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

RationalPolytope square(int a, int b) { return RationalPolytope::hull({rv({a, b}), rv({-a, b}), rv({a, -b}), rv({-a, -b})}); }

// Sign of the 2D cross product (b - a) x (c - a).
int orient(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

// p lies in the closed triangle abc (possibly degenerate).
bool in_triangle(const RationalVector& p, const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  const int s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
  const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  if (has_neg && has_pos) return false;
  if (orient(a, b, c) != 0) return true;
  // degenerate triangle: p must lie within the bounding box of the segment
  for (int i = 0; i < 2; ++i) {
    const auto lo = std::min({a[i], b[i], c[i]}), hi = std::max({a[i], b[i], c[i]});
    if (p[i] < lo || p[i] > hi) return false;
  }
  return true;
}

// A planar point is redundant iff it lies in a triangle of the others.
std::vector<RationalVector> brute_force_vertices(const std::vector<RationalVector>& pts) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool redundant = false;
    for (std::size_t a = 0; a < pts.size() && !redundant; ++a)
      for (std::size_t b = a + 1; b < pts.size() && !redundant; ++b)
        for (std::size_t c = b + 1; c < pts.size() && !redundant; ++c)
          if (a != i && b != i && c != i && in_triangle(pts[i], pts[a], pts[b], pts[c])) redundant = true;
    if (!redundant) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Points of (1/q) Z^m in a box, tested against the facet list directly.
std::size_t brute_force_count(const RationalPolytope& p, int q, int r) {
  const std::size_t m = p.dimension();
  std::vector<int> k(m, -r);
  std::size_t count = 0;
  while (true) {
    RationalVector u;
    for (auto x : k) u.emplace_back(x, q);
    bool in = true;
    for (const auto& f : p.facets()) in &= f.eval(u) >= 0;
    count += in;
    std::size_t c = 0;
    while (c < m && k[c] == r) k[c++] = -r;
    if (c == m) return count;
    ++k[c];
  }
}

}  // namespace

TEST_CASE("hull of the square") {
  const auto p = square(1, 1);
  CHECK(p.vertices().size() == 4);
  REQUIRE(p.facets().size() == 4);
  // facets +-x <= 1, +-y <= 1 as <u,n> + 1 >= 0
  const std::vector<HalfSpace> expected{{rv({-1, 0}), 1}, {rv({0, -1}), 1}, {rv({0, 1}), 1}, {rv({1, 0}), 1}};
  CHECK(p.facets() == expected);
  CHECK(p.edges().size() == 4);
  CHECK(volume(p) == 4);
}

TEST_CASE("pentagon keeps five vertices") {
  const std::vector<RationalVector> pts{rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1}), rv({Rational(1, 2), 2})};
  const auto p = RationalPolytope::hull(pts);
  CHECK(p.vertices().size() == 5);
  CHECK(p.vertices() == brute_force_vertices(pts));
  CHECK(p.facets().size() == 5);
}

TEST_CASE("hull vertices agree with a planar redundancy oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < 9; ++i) pts.push_back(testgen::random_point(rng, 2, 5, 2));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (affine_dimension(pts) < 2) continue;
    const auto p = RationalPolytope::hull(pts);
    REQUIRE(p.vertices() == brute_force_vertices(pts));
    for (const auto& v : pts) CHECK(p.contains(v));
    // every facet is tight at >= 2 affinely independent vertices
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      std::vector<RationalVector> tight;
      for (const auto& v : p.vertices())
        if (p.facets()[f].eval(v) == 0) tight.push_back(v);
      CHECK(affine_dimension(tight) == 1);
    }
  }
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(RationalPolytope::hull({rv({0, 0}), rv({1, 1}), rv({2, 2})}), DegeneratePolytopeError);
  CHECK_THROWS_AS(RationalPolytope::hull({}), DegeneratePolytopeError);
  CHECK_THROWS_AS(RationalPolytope::from_halfspaces(2, {{rv({1, 0}), 0}}), DegeneratePolytopeError);
  CHECK_THROWS_AS(primitive(HalfSpace{rv({0, 0}), 1}), std::invalid_argument);
}

TEST_CASE("H and V representations round trip") {
  std::mt19937_64 rng(5);
  for (std::size_t m = 2; m <= 4; ++m)
    for (int t = 0; t < 40; ++t) {
      const auto p = testgen::random_polytope(rng, m, 3, 2);
      const auto back = RationalPolytope::from_halfspaces(m, p.facets());
      CHECK(back == p);
      CHECK(RationalPolytope::hull(p.vertices()) == p);
    }
}

TEST_CASE("polar duals") {
  const auto d = polar_dual(square(1, 1));
  CHECK(d.vertices() == std::vector<RationalVector>{rv({-1, 0}), rv({0, -1}), rv({0, 1}), rv({1, 0})});
  // definition of the polar: <u,v> >= -1 for all u in the square
  const auto sq = square(1, 1);
  for (const auto& v : d.vertices())
    for (const auto& u : sq.vertices()) CHECK(dot(u, v) >= -1);
  const Rational h(1, 2);
  CHECK(polar_dual(square(2, 2)).vertices() == std::vector<RationalVector>{rv({-h, 0}), rv({0, -h}), rv({0, h}), rv({h, 0})});
  CHECK_THROWS_AS(polar_dual(RationalPolytope::hull({rv({0, 0}), rv({1, 0}), rv({0, 1})})), std::invalid_argument);
}

TEST_CASE("double dual identity") {
  std::mt19937_64 rng(7);
  for (std::size_t m = 2; m <= 3; ++m)
    for (int t = 0; t < 60; ++t) {
      const auto p = testgen::random_polytope(rng, m, 4, 3);
      CHECK(polar_dual(polar_dual(p)) == p);
    }
}

TEST_CASE("supporting half-spaces") {
  const auto sq = square(1, 1);
  for (const auto& f : sq.facets()) CHECK(is_supporting(f, sq));
  // x + y <= 2 touches only at (1,1)
  CHECK(is_supporting({rv({-1, -1}), 2}, sq));
  CHECK_FALSE(is_supporting({rv({-1, -1}), 3}, sq));
  CHECK_FALSE(is_supporting({rv({1, 0}), -2}, sq));
}

TEST_CASE("supporting hyperplanes match the polar boundary") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 2 + t % 2;
    const auto p = testgen::random_polytope(rng, m, 3, 1);
    const auto dual = polar_dual(p);
    std::vector<RationalVector> samples = dual.vertices();
    for (const auto& [i, j] : dual.edges()) {
      RationalVector mid(m);
      for (std::size_t c = 0; c < m; ++c) mid[c] = (dual.vertices()[i][c] + dual.vertices()[j][c]) / 2;
      samples.push_back(mid);
    }
    for (std::size_t i = 0, n = samples.size(); i < n; ++i) {
      RationalVector in = samples[i], out = samples[i];
      for (auto& x : in) x *= Rational(1, 2);
      for (auto& x : out) x *= 2;
      samples.push_back(in);
      samples.push_back(out);
    }
    for (int k = 0; k < 5; ++k) samples.push_back(testgen::random_point(rng, m, 3, 4));
    for (const auto& v : samples) {
      bool zero = true;
      for (const auto& x : v) zero &= x == 0;
      if (zero) continue;
      const bool boundary = dual.contains(v) && !dual.contains_in_interior(v);
      CHECK(is_supporting({v, 1}, p) == boundary);
    }
  }
}

TEST_CASE("lattice point counts") {
  CHECK(lattice_point_count(square(1, 1), 1) == 9);
  CHECK(lattice_points(square(1, 1), 1).size() == 9);
  const Rational h(1, 2);
  const auto diamond = RationalPolytope::hull({rv({h, 0}), rv({-h, 0}), rv({0, h}), rv({0, -h})});
  CHECK(lattice_point_count(diamond, 2) == 5);
  CHECK(lattice_point_count(diamond, 1) == 1);
  const Rational a(2, 5), b(3, 5);
  const auto tiny = RationalPolytope::hull({rv({-a, -a}), rv({b, -a}), rv({-a, b}), rv({b, b})});
  CHECK(lattice_points(tiny, 1) == std::vector<RationalVector>{rv({0, 0})});
  CHECK_THROWS_AS(lattice_point_count(square(1, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(lattice_point_count(square(1000, 1000), 1000, Exec::Serial, 1000), EnumerationTooLarge);
}

TEST_CASE("lattice enumeration agrees with a brute-force box scan") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 2 + t % 2;
    const auto p = testgen::random_polytope(rng, m, 3, 2);
    const int q = 1 + t % 3;
    const auto serial = lattice_points(p, q, Exec::Serial);
    CHECK(serial == lattice_points(p, q, Exec::Parallel));
    CHECK(std::is_sorted(serial.begin(), serial.end()));
    CHECK(serial.size() == brute_force_count(p, q, 2 * q));
    CHECK(lattice_point_count(p, q) == serial.size());
  }
}

TEST_CASE("QGF certificates") {
  std::string why;
  const auto c1 = qgf_certificate(square(2, 2), &why);
  REQUIRE(c1);
  CHECK(c1->center == rv({0, 0}));
  CHECK(c1->nu == 2);
  const auto c2 = qgf_certificate(square(1, 2), &why);
  CHECK_FALSE(c2);
  CHECK_FALSE(why.empty());
  const auto c3 = qgf_certificate(square(1, 1));
  REQUIRE(c3);
  CHECK(c3->nu == 1);
  CHECK(c3->dual.vertices() == std::vector<RationalVector>{rv({-1, 0}), rv({0, -1}), rv({0, 1}), rv({1, 0})});
  // translated: center moves, size does not
  const auto shifted = RationalPolytope::hull({rv({3, 1}), rv({-1, 1}), rv({3, 5}), rv({-1, 5})});
  const auto c4 = qgf_certificate(shifted);
  REQUIRE(c4);
  CHECK(c4->center == rv({1, 3}));
  CHECK(c4->nu == 2);
  // offsets 1/2 give a rational common distance
  const Rational h(1, 2);
  CHECK_FALSE(qgf_certificate(RationalPolytope::hull({rv({h, h}), rv({-h, h}), rv({h, -h}), rv({-h, -h})}), &why));
}

TEST_CASE("QGF certificate invariants") {
  std::mt19937_64 rng(19);
  int found = 0;
  for (int t = 0; t < 300; ++t) {
    const auto p = testgen::random_polytope(rng, 2 + t % 2, 3, 1);
    const auto c = qgf_certificate(p);
    if (!c) continue;
    ++found;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      const auto& h = p.facets()[f];
      CHECK(h.eval(c->center) == Rational(c->nu));
      CHECK(c->primitive[f]);
    }
    const auto dual = combinatorial_dual(p, c->center, c->nu);
    CHECK(dual == c->dual);
    for (const auto& v : dual.vertices()) {
      std::vector<Integer> n;
      for (const auto& x : v) {
        REQUIRE(is_integer(x));
        n.push_back(numerator(x));
      }
      CHECK(gcd_of(n) == 1);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("slices") {
  const auto sq = square(1, 1);
  const auto s = slice(sq, {rv({1, 0}), 0});
  CHECK(s.plus.dimension == 2);
  CHECK(s.plus.vertices == std::vector<RationalVector>{rv({0, -1}), rv({0, 1}), rv({1, -1}), rv({1, 1})});
  CHECK(s.minus.vertices == std::vector<RationalVector>{rv({-1, -1}), rv({-1, 1}), rv({0, -1}), rv({0, 1})});
  CHECK(s.section.dimension == 1);
  CHECK(s.section.vertices == std::vector<RationalVector>{rv({0, -1}), rv({0, 1})});

  const auto tri = RationalPolytope::hull({rv({0, 0}), rv({2, 0}), rv({0, 2})});
  const auto t = slice(tri, {rv({1, 0}), -1});
  CHECK(t.plus.vertices == std::vector<RationalVector>{rv({1, 0}), rv({1, 1}), rv({2, 0})});
  CHECK(t.section.vertices == std::vector<RationalVector>{rv({1, 0}), rv({1, 1})});

  const auto far = slice(sq, {rv({1, 0}), 5});
  CHECK(far.plus.polytope == sq);
  CHECK(far.minus.dimension == -1);
  CHECK(far.minus.vertices.empty());
}

TEST_CASE("volume is additive under slicing") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 80; ++t) {
    const std::size_t m = 2 + t % 2;
    const auto p = testgen::random_polytope(rng, m, 3, 2);
    HalfSpace h{testgen::random_point(rng, m, 2), Rational(static_cast<int>(rng() % 3)) - 1};
    bool zero = true;
    for (const auto& x : h.normal) zero &= x == 0;
    if (zero) continue;
    const auto s = slice(p, h);
    Rational total = 0;
    if (s.plus.polytope) total += volume(*s.plus.polytope);
    if (s.minus.polytope) total += volume(*s.minus.polytope);
    CHECK(total == volume(p));
  }
  // unit cube
  std::vector<RationalVector> cube;
  for (int i = 0; i < 8; ++i) cube.push_back(rv({i & 1, (i >> 1) & 1, (i >> 2) & 1}));
  CHECK(volume(RationalPolytope::hull(cube)) == 1);
}
