#include <doctest.h>

#include "trop/lifted.hpp"
#include "trop/parser.hpp"

using namespace trop;

namespace {

const std::vector<std::string> kVars = {"x1", "x2"};

LiftedHull demo_hull() {
  // the three root polynomials of the running infeasible pair of curves
  return sup_convolution({
      {build_factor_hull(parse_poly("1 + 2*x1 + 1*x2 + 1*x1*x2", kVars)), 1},
      {build_factor_hull(parse_poly("0 + 0*x1 + 1*x2", kVars)), 1},
      {build_factor_hull(parse_poly("2*x1 + 0*x2", kVars)), 1},
  });
}

}  // namespace

TEST_CASE("factor hull of a bilinear polynomial") {
  const FactorHull h = build_factor_hull(parse_poly("1 + 2*x1 + 1*x2 + 1*x1*x2", kVars));
  CHECK(h.n == 2);
  CHECK(h.newton.vertices.size() == 4);
  // every lifted support point touches the envelope here
  CHECK(h.essential == std::vector<Expo>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  REQUIRE(h.pieces.size() == 2);

  // pieces 1 + q1 and 2 - q2, recorded through their dual points
  bool low = false, high = false;
  for (const auto& p : h.pieces) {
    if (p.s == Two(Rat(1))) {
      low = true;
      CHECK(p.x == TVec{Two(Rat(-1)), Two()});
      CHECK(p.cell == std::vector<Expo>{{0, 0}, {1, 0}, {0, 1}});
    } else {
      high = true;
      CHECK(p.s == Two(Rat(2)));
      CHECK(p.x == TVec{Two(), Two(Rat(1))});
      CHECK(p.cell == std::vector<Expo>{{1, 0}, {0, 1}, {1, 1}});
    }
  }
  CHECK(low);
  CHECK(high);

  CHECK(h.eval({Rat(1, 2), Rat(0)}) == TropScalar(Rat(3, 2)));
  CHECK(h.eval({Rat(1), Rat(1)}) == TropScalar(Rat(1)));
  CHECK(h.eval({Rat(2), Rat(0)}).is_bottom());
}

TEST_CASE("essential points can drop") {
  // interior coefficient too small to touch the envelope
  const FactorHull h = build_factor_hull(
      parse_poly("0 + 0*x1^2 + 0*x2^2 + 0*x1^2*x2^2 + (-5)*x1*x2", kVars));
  CHECK(h.essential == std::vector<Expo>{{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  CHECK(h.eval({Rat(1), Rat(1)}) == TropScalar(Rat(0)));  // envelope, not the coefficient
}

TEST_CASE("sup-convolution evaluation") {
  const LiftedHull h = demo_hull();
  CHECK(h.n == 2);
  CHECK(h.support.adim == 2);
  // support = square + triangle + diagonal segment, so x1 + x2 >= 1 on it
  CHECK_FALSE(h.support.contains({Rat(0), Rat(0)}));
  CHECK(h.support.contains({Rat(9, 10), Rat(9, 10)}));

  CHECK(eval_concave(h, {Rat(9, 10), Rat(9, 10)}) == TropScalar(Rat(18, 5)));
  CHECK(eval_concave(h, {Rat(0), Rat(0)}).is_bottom());

  CHECK(eval_concave(h, {Rat(3), Rat(3)}).is_bottom());
  // at a vertex of the support the decomposition is unique:
  // (3,1) = (1,1) + (1,0) + (1,0) lifts to 1 + 0 + 2
  CHECK(eval_concave(h, {Rat(3), Rat(1)}) == TropScalar(Rat(3)));
}

TEST_CASE("cell queries") {
  const LiftedHull h = demo_hull();
  const RVec q{Rat(9, 10), Rat(9, 10)};

  const LiftCell interior = cell_of(h, q);
  CHECK_FALSE(interior.wall);
  CHECK(interior.value == Two(Rat(18, 5)));
  REQUIRE(interior.argmax.size() == 3);

  // the tight sets are the factor argmax sets at the evaluation point, and
  // the envelope value is the conjugate value there
  Two conj = -dot(q, interior.x);
  for (std::size_t i = 0; i < h.factors.size(); ++i) {
    const TPoly& f = h.factors[i].first.poly;
    CHECK(interior.argmax[i] == f.argmax_set(interior.x));
    const TropScalar fx = f.evaluate(interior.x);
    REQUIRE_FALSE(fx.is_bottom());
    conj += Rat(h.factors[i].second) * fx.v;
  }
  CHECK(conj == interior.value);

  // outside the support
  CHECK(cell_of(h, {Rat(5), Rat(5)}).wall);
  // on the relative boundary
  CHECK(cell_of(h, {Rat(1, 2), Rat(1, 2)}).wall);
  // interior but above a wall of the induced subdivision
  CHECK(cell_of(h, {Rat(1), Rat(1)}).wall);
}

TEST_CASE("explicit pieces agree with the conjugate evaluation") {
  const LiftedHull h = demo_hull();
  const auto pieces = envelope_pieces(h);
  CHECK_FALSE(pieces.empty());
  for (const auto& p : pieces) {
    REQUIRE_FALSE(p.cell.empty());
    RVec center = rvec_zero(h.n);
    for (const auto& c : p.cell) {
      const RVec q = expo_to_rvec(c);
      // the envelope is tight at every cell point
      const TropScalar v = eval_concave(h, q);
      REQUIRE_FALSE(v.is_bottom());
      CHECK(v.v == p.s - dot_checked(p.x, TVec{Two(q[0]), Two(q[1])}));
      for (int i = 0; i < h.n; ++i) center[i] += q[i];
    }
    // strictly inside its cell the piece still matches
    for (auto& x : center) x /= Rat(static_cast<long>(p.cell.size()));
    const TropScalar v = eval_concave(h, center);
    REQUIRE_FALSE(v.is_bottom());
    CHECK(v.v == p.s - dot_checked(p.x, TVec{Two(center[0]), Two(center[1])}));
  }
}

TEST_CASE("generic shift avoids boundary lattice points") {
  const LiftedHull h = demo_hull();
  const ShiftResult sh = generic_shift(h, 1);
  CHECK(sh.attempts == 1);
  CHECK(sh.delta == RVec{Rat(-9, 10), Rat(-9, 10)});
  const std::vector<Expo> want = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(sh.points == want);
  for (const auto& p : sh.points) {
    const RVec q = sub(expo_to_rvec(p), sh.delta);
    CHECK(h.support.contains_relint(q));
    CHECK_FALSE(cell_of(h, q).wall);
  }
}
