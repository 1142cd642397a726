#pragma once

// Exact arithmetic used throughout: overflow-checked int64 helpers, a
// rational type that lives in int64 and promotes itself to arbitrary
// precision when a result does not fit, and the big integer used for
// dimensions.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "rhotensor/errors.hpp"

namespace rhotensor {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

/// Converts a big integer to int64, throwing OverflowError when it does not fit.
std::int64_t narrow_int64(const BigInt& v);

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in int64 are stored
/// inline; anything larger is held as a shared immutable BigRational. Every
/// operation first tries the inline path with 128-bit intermediates and
/// falls back to the big representation instead of wrapping. Results are
/// always demoted back to the inline form when they fit, so equality is a
/// plain field comparison in the common case.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const BigInt& n);
  explicit Rational(const BigRational& q);

  bool is_big() const { return static_cast<bool>(big_); }
  bool is_integer() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  BigInt numerator() const;
  BigInt denominator() const;
  BigRational to_big() const;

  /// Integer value; throws PreconditionViolated if not integral and
  /// OverflowError if it does not fit in int64.
  std::int64_t to_int64() const;

  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_i128(__int128 n, __int128 d);
  void assign_big(BigRational q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace rhotensor
