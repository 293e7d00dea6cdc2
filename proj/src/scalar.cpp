#include "trop/scalar.hpp"

#include "trop/errors.hpp"

namespace trop {

std::string Two::str() const {
  if (b == 0) return rat_to_string(a);
  return "(" + rat_to_string(a) + " + " + rat_to_string(b) + "*eps)";
}

Two mul_checked(const Two& x, const Two& y) {
  require(x.is_rational() || y.is_rational(), "mul_checked: eps^2 term would arise");
  if (x.is_rational()) return x.a * y;
  return y.a * x;
}

std::string TropScalar::str() const {
  if (!finite) return "bot";
  return v.str();
}

TropScalar tadd(const TropScalar& x, const TropScalar& y) { return x < y ? y : x; }

TropScalar tmul(const TropScalar& x, const TropScalar& y) {
  if (!x.finite || !y.finite) return TropScalar::bottom();
  return TropScalar(x.v + y.v);
}

TropScalar tpow(const TropScalar& x, long k) {
  if (!x.finite) {
    require(k > 0, "tpow: nonpositive power of bottom");
    return TropScalar::bottom();
  }
  return TropScalar(Rat(k) * x.v);
}

}  // namespace trop
