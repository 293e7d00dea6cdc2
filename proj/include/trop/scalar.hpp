#pragma once

#include <compare>
#include <string>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

/// Ordered two-level value a + b*eps where eps is a positive infinitesimal.
/// Comparison is lexicographic on (a, b).  The set is a Q-module: values add,
/// negate, and scale by rationals; a general product of two such values is
/// undefined (it would need eps^2) and is only allowed when one side has b == 0.
struct Two {
  Rat a;
  Rat b;

  Two() : a(0), b(0) {}
  Two(Rat main) : a(std::move(main)), b(0) {}
  Two(Rat main, Rat eps) : a(std::move(main)), b(std::move(eps)) {}

  static Two eps(Rat coeff = Rat(1)) { return Two(Rat(0), std::move(coeff)); }

  Two operator-() const { return Two(-a, -b); }
  Two& operator+=(const Two& o) { a += o.a; b += o.b; return *this; }
  Two& operator-=(const Two& o) { a -= o.a; b -= o.b; return *this; }

  friend Two operator+(Two x, const Two& y) { x += y; return x; }
  friend Two operator-(Two x, const Two& y) { x -= y; return x; }

  friend Two operator*(const Rat& c, const Two& x) { return Two(c * x.a, c * x.b); }
  friend Two operator*(const Two& x, const Rat& c) { return c * x; }
  Two& operator*=(const Rat& c) { a *= c; b *= c; return *this; }
  friend Two operator/(const Two& x, const Rat& c) { return Two(x.a / c, x.b / c); }

  friend bool operator==(const Two& x, const Two& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Two& x, const Two& y) { return !(x == y); }
  friend bool operator<(const Two& x, const Two& y) {
    int c = cmp(x.a, y.a);
    if (c != 0) return c < 0;
    return x.b < y.b;
  }
  friend bool operator>(const Two& x, const Two& y) { return y < x; }
  friend bool operator<=(const Two& x, const Two& y) { return !(y < x); }
  friend bool operator>=(const Two& x, const Two& y) { return !(x < y); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  int sign() const {
    int s = sgn(a);
    return s != 0 ? s : sgn(b);
  }

  std::string str() const;
};

/// Product defined only when at least one operand is a plain rational.
Two mul_checked(const Two& x, const Two& y);

/// Element of the tropical semiring with values in Two, plus the absorbing
/// Bottom element (the zero of tropical addition).
struct TropScalar {
  bool finite = false;
  Two v;

  TropScalar() = default;
  TropScalar(Two value) : finite(true), v(std::move(value)) {}
  TropScalar(Rat value) : finite(true), v(Two(std::move(value))) {}

  static TropScalar bottom() { return TropScalar(); }
  static TropScalar one() { return TropScalar(Two(Rat(0))); }

  bool is_bottom() const { return !finite; }

  friend bool operator==(const TropScalar& x, const TropScalar& y) {
    if (x.finite != y.finite) return false;
    return !x.finite || x.v == y.v;
  }
  friend bool operator!=(const TropScalar& x, const TropScalar& y) { return !(x == y); }

  // Bottom is below every finite value.
  friend bool operator<(const TropScalar& x, const TropScalar& y) {
    if (!x.finite) return y.finite;
    if (!y.finite) return false;
    return x.v < y.v;
  }
  friend bool operator>(const TropScalar& x, const TropScalar& y) { return y < x; }
  friend bool operator<=(const TropScalar& x, const TropScalar& y) { return !(y < x); }
  friend bool operator>=(const TropScalar& x, const TropScalar& y) { return !(x < y); }

  std::string str() const;
};

/// Tropical addition: max.
TropScalar tadd(const TropScalar& x, const TropScalar& y);

/// Tropical multiplication: +, with Bottom absorbing.
TropScalar tmul(const TropScalar& x, const TropScalar& y);

/// Tropical power with integer exponent (k may be negative for finite x).
TropScalar tpow(const TropScalar& x, long k);

}  // namespace trop
