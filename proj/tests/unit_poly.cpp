#include <doctest.h>

#include "trop/linalg.hpp"
#include "trop/parser.hpp"
#include "trop/poly.hpp"

using namespace trop;

TEST_CASE("graded order in two variables") {
  const std::vector<Expo> want = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i + 1 < want.size(); ++i) {
    CHECK(grlex_less(want[i], want[i + 1]));
    CHECK_FALSE(grlex_less(want[i + 1], want[i]));
  }
  CHECK_FALSE(grlex_less(Expo{1, 1}, Expo{1, 1}));
  CHECK(total_degree(Expo{2, 0, 3}) == 5);
  CHECK(total_degree(Expo{1, -2}) == -1);
  // total degree splits before the lex tiebreak
  CHECK(grlex_less(Expo{0, 2}, Expo{3, 0}));
}

TEST_CASE("monomial printing") {
  const auto vars = default_vars(2);
  CHECK(vars == std::vector<std::string>{"x1", "x2"});
  CHECK(expo_to_string({0, 0}, vars) == "1");
  CHECK(expo_to_string({1, 0}, vars) == "x1");
  CHECK(expo_to_string({2, 0}, vars) == "x1^2");
  CHECK(expo_to_string({1, 1}, vars) == "x1*x2");
  CHECK(expo_to_string({-1, 2}, vars) == "x1^-1*x2^2");
}

TEST_CASE("polynomial evaluation and argmax") {
  // 1 + 2*x1 + 1*x2 + 1*x1*x2 over max-plus, first root system's f1
  const auto vars = default_vars(2);
  TPoly f = parse_poly("1 + 2*x1 + 1*x2 + 1*x1*x2", vars);
  CHECK(f.n == 2);
  CHECK(f.support() == std::vector<Expo>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(f.coeff({1, 0}) == TropScalar(Rat(2)));
  CHECK(f.coeff({5, 5}).is_bottom());

  const TVec origin{Two(), Two()};
  CHECK(f.evaluate(origin) == TropScalar(Rat(2)));
  CHECK(f.argmax_set(origin) == std::vector<Expo>{{1, 0}});
  CHECK_FALSE(f.is_root(origin));

  // ties at x = (-1, 0): constant, x1 term and x2 term all reach 1
  const TVec tie{Two(Rat(-1)), Two()};
  CHECK(f.evaluate(tie) == TropScalar(Rat(1)));
  CHECK(f.argmax_set(tie) == std::vector<Expo>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(f.is_root(tie));

  TPoly empty;
  empty.n = 2;
  CHECK(empty.evaluate(origin).is_bottom());
  CHECK(empty.argmax_set(origin).empty());
}

TEST_CASE("tadd_term keeps the larger coefficient") {
  TPoly f;
  f.n = 1;
  f.tadd_term({2}, Two(Rat(1)));
  f.tadd_term({2}, Two(Rat(3)));
  f.tadd_term({2}, Two(Rat(2)));
  CHECK(f.terms.size() == 1);
  CHECK(f.coeff({2}) == TropScalar(Rat(3)));
  f.tadd_term({2}, Two(Rat(3), Rat(1)));  // eps part wins the tie
  CHECK(f.coeff({2}) == TropScalar(Two(Rat(3), Rat(1))));
}

TEST_CASE("relations of every kind") {
  const auto vars = default_vars(1);
  Relation root;
  root.kind = RelKind::Nabla;
  root.plus = parse_poly("0 + 0*x1", vars);
  CHECK(root.holds({Two()}));            // both terms reach 0
  CHECK_FALSE(root.holds({Two(Rat(1))}));

  Relation geq;
  geq.kind = RelKind::Geq;
  geq.plus = parse_poly("0*x1", vars);
  geq.minus = parse_poly("1", vars);
  CHECK(geq.holds({Two(Rat(1))}));
  CHECK(geq.holds({Two(Rat(2))}));
  CHECK_FALSE(geq.holds({Two()}));

  Relation eq;
  eq.kind = RelKind::Eq;
  eq.plus = geq.plus;
  eq.minus = geq.minus;
  CHECK(eq.holds({Two(Rat(1))}));
  CHECK_FALSE(eq.holds({Two(Rat(2))}));

  Relation gt;
  gt.kind = RelKind::Gt;
  gt.plus = geq.plus;
  gt.minus = geq.minus;
  CHECK_FALSE(gt.holds({Two(Rat(1))}));
  CHECK(gt.holds({Two(Rat(1), Rat(1))}));  // eps above the boundary
  CHECK(gt.holds({Two(Rat(2))}));

  CHECK(relkind_name(RelKind::Nabla) == "nabla");
  CHECK(relkind_name(RelKind::Gt) == ">");
  CHECK(geq.support_union() == std::vector<Expo>{{0}, {1}});
}

TEST_CASE("system predicates") {
  PolySystem sys = parse_system(
      "vars x1 x2\n"
      "f1: 1 + 2*x1 + 1*x2 + 1*x1*x2 ~ 0\n"
      "f2: 0 + 0*x1 + 1*x2 ~ 0\n"
      "f3: 2*x1 + 0*x2 ~ 0\n");
  CHECK(sys.n == 2);
  CHECK(sys.rels.size() == 3);
  CHECK(sys.is_ordinary());
  CHECK(sys.has_natural_supports());

  // the second root system's unique solution
  PolySystem sys2 = parse_system(
      "vars x1 x2\n"
      "f1: 1 + 4*x1 + 1*x2 + 3*x1*x2 ~ 0\n"
      "f2: 0 + 0*x1 + 1*x2 ~ 0\n"
      "f3: 2*x1 + 0*x2 ~ 0\n");
  const TVec root{Two(Rat(-3)), Two(Rat(-1))};
  CHECK(sys2.is_solution(root));
  CHECK_FALSE(sys2.is_solution({Two(), Two()}));
  CHECK_FALSE(sys.is_solution(root));

  PolySystem mixed = parse_system(
      "vars x1\n"
      "g: 0*x1^-1 >= 1\n");
  CHECK_FALSE(mixed.is_ordinary());
  CHECK_FALSE(mixed.has_natural_supports());
  CHECK(mixed.is_solution({Two(Rat(-1))}));
}
