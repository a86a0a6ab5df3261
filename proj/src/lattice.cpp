#include "clustertrop/lattice.hpp"


#include <algorithm>

namespace clustertrop {

namespace {

using i128 = __int128;

struct IntegerForm {
  std::vector<std::int64_t> n;  // c * normal
  i128 rhs;                     // q * b, where offset = b / c
};

struct Setup {
  std::size_t m = 0;
  std::vector<IntegerForm> forms;
  std::vector<std::int64_t> lo, hi;
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Setup prepare(const RationalPolytope& p, std::int64_t q, std::uint64_t box_limit) {
  if (q <= 0) throw std::invalid_argument("denominator q must be positive");
  Setup s;
  s.m = p.dimension();
  for (const auto& f : p.facets()) {
    const Integer c = denominator(f.offset);
    IntegerForm form;
    for (const auto& x : f.normal) form.n.push_back(to_int64(numerator(x) * c));
    form.rhs = static_cast<i128>(to_int64(numerator(f.offset) * q));
    s.forms.push_back(std::move(form));
  }
  long double box = 1;
  for (std::size_t c = 0; c < s.m; ++c) {
    Rational mn = p.vertices().front()[c], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    const Rational a = mn * q, b = mx * q;
    // ceil(a) = -floor(-a)
    s.lo.push_back(to_int64(-floor_div(-numerator(a), denominator(a))));
    s.hi.push_back(to_int64(floor_div(numerator(b), denominator(b))));
    box *= static_cast<long double>(s.hi.back() - s.lo.back() + 1);
  }
  if (box > static_cast<long double>(box_limit))
    throw EnumerationTooLarge("bounding box has about " + std::to_string(static_cast<double>(box)) +
                              " points, limit " + std::to_string(box_limit));
  return s;
}

bool inside(const Setup& s, const std::vector<std::int64_t>& k) {
  for (const auto& f : s.forms) {
    i128 v = f.rhs;
    for (std::size_t c = 0; c < s.m; ++c) v += static_cast<i128>(f.n[c]) * k[c];
    if (v < 0) return false;
  }
  return true;
}

// Visits every box point with first coordinate fixed to k0, in lexicographic order.
template <class F>
void sweep(const Setup& s, std::int64_t k0, F&& visit) {
  std::vector<std::int64_t> k(s.lo);
  k[0] = k0;
  if (s.m == 1) {
    if (inside(s, k)) visit(k);
    return;
  }
  while (true) {
    if (inside(s, k)) visit(k);
    std::size_t c = s.m - 1;
    while (c > 0 && k[c] == s.hi[c]) {
      k[c] = s.lo[c];
      --c;
    }
    if (c == 0) return;
    ++k[c];
  }
}

RationalVector point(const std::vector<std::int64_t>& k, std::int64_t q) {
  RationalVector v;
  v.reserve(k.size());
  for (auto x : k) v.emplace_back(x, q);
  return v;
}

}  // namespace

std::vector<RationalVector> lattice_points(const RationalPolytope& p, std::int64_t q, Exec exec,
                                           std::uint64_t box_limit) {
  const Setup s = prepare(p, q, box_limit);
  const std::int64_t span = s.hi[0] - s.lo[0] + 1;
  std::vector<std::vector<RationalVector>> slabs(static_cast<std::size_t>(std::max<std::int64_t>(span, 0)));
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < span; ++i)
      sweep(s, s.lo[0] + i, [&](const auto& k) { slabs[i].push_back(point(k, q)); });
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < span; ++i)
      sweep(s, s.lo[0] + i, [&](const auto& k) { slabs[i].push_back(point(k, q)); });
  }
  std::vector<RationalVector> out;
  for (auto& slab : slabs)
    for (auto& v : slab) out.push_back(std::move(v));
  return out;
}

std::uint64_t lattice_point_count(const RationalPolytope& p, std::int64_t q, Exec exec, std::uint64_t box_limit) {
  const Setup s = prepare(p, q, box_limit);
  const std::int64_t span = s.hi[0] - s.lo[0] + 1;
  std::uint64_t total = 0;
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < span; ++i) sweep(s, s.lo[0] + i, [&](const auto&) { ++total; });
  } else {
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::int64_t i = 0; i < span; ++i) sweep(s, s.lo[0] + i, [&](const auto&) { ++total; });
  }
  return total;
}

}  // namespace clustertrop
