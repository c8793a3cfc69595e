#pragma once

// Exact rational arithmetic on 128-bit integers. The recursion constants
// have denominators near 10^24, past the reach of int64 but comfortably
// inside int128; weights and thresholds built from them stay exact, and
// every operation that could overflow throws instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ehk {

using int128 = __int128;

namespace detail {

inline int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_mul128(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: product exceeds 128 bits");
  return r;
}

inline int128 checked_add128(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: sum exceeds 128 bits");
  return r;
}

inline std::string int128_str(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int d = int(neg ? -(v % 10) : v % 10);
    s.push_back(char('0' + d));
    v /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

}  // namespace detail

// Always normalized: den > 0 and gcd(|num|, den) == 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) { assign(n, d); }

  static Rational from128(int128 n, int128 d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  Rational operator+(const Rational& o) const {
    int128 g = detail::gcd128(den_, o.den_);
    int128 dl = den_ / g;
    int128 dr = o.den_ / g;
    int128 n = detail::checked_add128(detail::checked_mul128(num_, dr),
                                      detail::checked_mul128(o.num_, dl));
    int128 d = detail::checked_mul128(dl, o.den_);
    return from128(n, d);
  }
  Rational operator-() const { return from128(-num_, den_); }
  Rational operator-(const Rational& o) const { return *this + (-o); }

  Rational operator*(const Rational& o) const {
    int128 g1 = detail::gcd128(num_ < 0 ? -num_ : num_, o.den_);
    int128 g2 = detail::gcd128(o.num_ < 0 ? -o.num_ : o.num_, den_);
    int128 n = detail::checked_mul128(num_ / g1, o.num_ / g2);
    int128 d = detail::checked_mul128(den_ / g2, o.den_ / g1);
    return from128(n, d);
  }

  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return *this * from128(o.den_, o.num_);
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return detail::checked_mul128(num_, o.den_) < detail::checked_mul128(o.num_, den_);
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return detail::int128_str(num_);
    return detail::int128_str(num_) + "/" + detail::int128_str(den_);
  }

 private:
  void assign(int128 n, int128 d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  int128 num_ = 0;
  int128 den_ = 1;
};

}  // namespace ehk
