#include "clustertrop/rational.hpp"

#include <charconv>
#include <limits>

namespace clustertrop {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer_literal(num))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!valid_integer_literal(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& a) {
  if (is_integer(a)) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

std::int64_t to_int64(const Integer& a) {
  if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("integer does not fit in int64: " + a.str());
  return a.convert_to<std::int64_t>();
}

Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

std::vector<Integer> primitive_direction(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (l / denominator(x)));
  const Integer g = gcd_of(out);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace clustertrop
