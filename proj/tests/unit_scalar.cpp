#include <doctest.h>

#include <random>
#include <stdexcept>

#include "trop/scalar.hpp"

using namespace trop;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-7/2") == Rat(-7, 2));
  CHECK(parse_rational("4/6") == Rat(2, 3));
  CHECK(parse_rational("-3.25") == Rat(-13, 4));
  CHECK(parse_rational("0.1") == Rat(1, 10));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("a"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1.2.3"));
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(Rat(-9, 10)) == "-9/10");
  CHECK(rat_to_string(parse_rational("6/3")) == "2");
}

TEST_CASE("rational floor and ceil") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(4)) == 4);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_ceil(Rat(-4)) == -4);
}

TEST_CASE("two-level ordering is lexicographic") {
  const Two a(Rat(1), Rat(5));
  const Two b(Rat(2), Rat(-100));
  CHECK(a < b);  // main part decides
  CHECK(Two(Rat(1)) < Two(Rat(1), Rat(1)));
  CHECK(Two(Rat(1), Rat(-1)) < Two(Rat(1)));
  CHECK(Two::eps() > Two());
  CHECK(Two::eps(Rat(-1)) < Two());
  CHECK(Two(Rat(0), Rat(3)).sign() == 1);
  CHECK(Two(Rat(0), Rat(-3)).sign() == -1);
  CHECK(Two().sign() == 0);
  CHECK(Two(Rat(-1), Rat(99)).sign() == -1);
}

TEST_CASE("two-level module arithmetic") {
  const Two u(Rat(3), Rat(1, 2));
  const Two v(Rat(-1), Rat(2));
  CHECK(u + v == Two(Rat(2), Rat(5, 2)));
  CHECK(u - v == Two(Rat(4), Rat(-3, 2)));
  CHECK(-u == Two(Rat(-3), Rat(-1, 2)));
  CHECK(Rat(2) * u == Two(Rat(6), Rat(1)));
  CHECK(u / Rat(2) == Two(Rat(3, 2), Rat(1, 4)));
  CHECK((u - u).is_zero());
  CHECK(u.is_rational() == false);
  CHECK(Two(Rat(7)).is_rational());
}

TEST_CASE("mul_checked needs a rational side") {
  CHECK(mul_checked(Two(Rat(2)), Two(Rat(3), Rat(1))) == Two(Rat(6), Rat(2)));
  CHECK(mul_checked(Two(Rat(3), Rat(1)), Two(Rat(2))) == Two(Rat(6), Rat(2)));
  CHECK_THROWS_AS(mul_checked(Two::eps(), Two::eps()), std::logic_error);
}

TEST_CASE("two-level printing") {
  CHECK(Two(Rat(3)).str() == "3");
  CHECK(Two(Rat(-9, 10)).str() == "-9/10");
  CHECK(Two(Rat(1), Rat(1)).str() == "(1 + 1*eps)");
  CHECK(Two(Rat(0), Rat(-1, 2)).str() == "(0 + -1/2*eps)");
  CHECK(TropScalar::bottom().str() == "bot");
  CHECK(TropScalar(Rat(4)).str() == "4");
}

TEST_CASE("tropical operations on scalars") {
  const TropScalar bot = TropScalar::bottom();
  const TropScalar one = TropScalar::one();
  const TropScalar x(Rat(3));
  const TropScalar y(Two(Rat(3), Rat(1)));

  CHECK(tadd(x, bot) == x);
  CHECK(tadd(bot, bot) == bot);
  CHECK(tadd(x, y) == y);  // eps breaks the tie upward
  CHECK(tmul(x, bot) == bot);
  CHECK(tmul(bot, x) == bot);
  CHECK(tmul(x, one) == x);
  CHECK(tmul(x, y) == TropScalar(Two(Rat(6), Rat(1))));
  CHECK(bot < x);
  CHECK_FALSE(x < bot);
  CHECK(bot <= bot);
}

TEST_CASE("tropical powers") {
  CHECK(tpow(TropScalar(Rat(2)), 3) == TropScalar(Rat(6)));
  CHECK(tpow(TropScalar(Rat(2)), 0) == TropScalar::one());
  CHECK(tpow(TropScalar(Rat(2)), -2) == TropScalar(Rat(-4)));
  CHECK(tpow(TropScalar(Two(Rat(1), Rat(1))), 2) == TropScalar(Two(Rat(2), Rat(2))));
  CHECK(tpow(TropScalar::bottom(), 3) == TropScalar::bottom());
}

namespace {

Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

TropScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  if (kind(rng) == 0) return TropScalar::bottom();
  Two v(random_rat(rng));
  if (kind(rng) == 1) v.b = random_rat(rng);
  return TropScalar(v);
}

}  // namespace

TEST_CASE("semiring laws on random triples") {
  std::mt19937 rng(7);
  for (int it = 0; it < 1000; ++it) {
    const TropScalar a = random_scalar(rng);
    const TropScalar b = random_scalar(rng);
    const TropScalar c = random_scalar(rng);
    CHECK(tadd(a, b) == tadd(b, a));
    CHECK(tadd(tadd(a, b), c) == tadd(a, tadd(b, c)));
    CHECK(tadd(a, a) == a);  // idempotent
    CHECK(tmul(a, b) == tmul(b, a));
    CHECK(tmul(tmul(a, b), c) == tmul(a, tmul(b, c)));
    CHECK(tmul(a, tadd(b, c)) == tadd(tmul(a, b), tmul(a, c)));
    CHECK(tadd(a, TropScalar::bottom()) == a);
    CHECK(tmul(a, TropScalar::one()) == a);
    CHECK(tmul(a, TropScalar::bottom()) == TropScalar::bottom());
  }
}
