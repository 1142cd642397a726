#include "rhotensor/arith.hpp"

#include <limits>
#include <ostream>

namespace rhotensor {

namespace {

using i128 = __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt i128_to_big(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt r = (hi << 64) + static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

}  // namespace

std::int64_t narrow_int64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
    throw OverflowError("value does not fit in int64: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw PreconditionViolated("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const BigInt& n) { assign_big(BigRational(n)); }

Rational::Rational(const BigRational& q) { assign_big(q); }

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.big_ = std::make_shared<const BigRational>(i128_to_big(n), i128_to_big(d));
  }
  return r;
}

void Rational::assign_big(BigRational q) {
  const BigInt& n = boost::multiprecision::numerator(q);
  const BigInt& d = boost::multiprecision::denominator(q);
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max() &&
      d <= std::numeric_limits<std::int64_t>::max()) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const BigRational>(std::move(q));
  }
}

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

BigInt Rational::numerator() const { return big_ ? boost::multiprecision::numerator(*big_) : BigInt(num_); }

BigInt Rational::denominator() const { return big_ ? boost::multiprecision::denominator(*big_) : BigInt(den_); }

BigRational Rational::to_big() const { return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_)); }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw PreconditionViolated("rational " + to_string() + " is not an integer");
  return big_ ? narrow_int64(boost::multiprecision::numerator(*big_)) : num_;
}

std::string Rational::to_string() const {
  if (big_) {
    const auto& d = boost::multiprecision::denominator(*big_);
    const auto& n = boost::multiprecision::numerator(*big_);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
  }
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (!big_) return from_i128(-static_cast<i128>(num_), den_);
  Rational r;
  r.assign_big(-*big_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_) return *this = from_i128(static_cast<i128>(num_) + o.num_, den_);
    i128 a = static_cast<i128>(num_) * o.den_;
    i128 b = static_cast<i128>(o.num_) * den_;
    i128 s;
    if (!__builtin_add_overflow(a, b, &s)) return *this = from_i128(s, static_cast<i128>(den_) * o.den_);
  }
  assign_big(to_big() + o.to_big());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    return *this = from_i128(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  }
  assign_big(to_big() * o.to_big());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionViolated("rational division by zero");
  if (!big_ && !o.big_) {
    return *this = from_i128(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  }
  assign_big(to_big() / o.to_big());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  // Both sides are kept canonical, so a big value never equals a small one.
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  BigRational l = a.to_big(), r = b.to_big();
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace rhotensor
