#pragma once

// Exact scalar types shared by every module. Nothing in this library touches
// floating point.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clustertrop {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Thrown when an exchange-matrix entry leaves the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline std::int64_t positive_part(std::int64_t a) { return a > 0 ? a : 0; }

inline int sign(std::int64_t a) { return (a > 0) - (a < 0); }

inline int sign(const Rational& a) { return a.sign(); }

inline Rational positive_part(const Rational& a) { return a.sign() > 0 ? a : Rational(0); }

inline Integer numerator(const Rational& a) { return boost::multiprecision::numerator(a); }
inline Integer denominator(const Rational& a) { return boost::multiprecision::denominator(a); }

inline bool is_integer(const Rational& a) { return denominator(a) == 1; }

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& a);

std::int64_t to_int64(const Integer& a);

/// Scales a rational vector by the lcm of its denominators and divides by the
/// gcd of the result, giving the primitive integer vector on the same ray.
/// The zero vector maps to itself.
std::vector<Integer> primitive_direction(const RationalVector& v);

Integer gcd_of(const std::vector<Integer>& v);

RationalVector to_rational(const IntVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace clustertrop
