#include <doctest.h>

#include "trop/polytope.hpp"

using namespace trop;

namespace {

RVec rv(std::initializer_list<long> xs) {
  RVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("hull of the unit square") {
  RMat pts{rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
  pts.push_back({Rat(1, 2), Rat(1, 2)});  // interior, must drop out
  const QPolytope q = convex_hull_points(pts);
  CHECK(q.dim == 2);
  CHECK(q.adim == 2);
  CHECK(q.vertices == RMat{rv({0, 0}), rv({0, 1}), rv({1, 0}), rv({1, 1})});
  CHECK(q.facet_normals.size() == 4);
  CHECK(q.eq_normals.empty());
  CHECK(q.contains(rv({0, 0})));
  CHECK(q.contains({Rat(1, 2), Rat(1, 2)}));
  CHECK_FALSE(q.contains({Rat(1, 2), Rat(3, 2)}));
  CHECK(q.contains_relint({Rat(1, 2), Rat(1, 2)}));
  CHECK_FALSE(q.contains_relint(rv({1, 1})));
  CHECK(q.on_rel_boundary(rv({1, 1})));
  CHECK(q.on_rel_boundary({Rat(1, 2), Rat(0)}));
  CHECK_FALSE(q.on_rel_boundary({Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("lower-dimensional hulls keep their affine hull") {
  // segment from (0,0) to (2,2), midpoint included
  const QPolytope seg = convex_hull_points({rv({0, 0}), rv({1, 1}), rv({2, 2})});
  CHECK(seg.adim == 1);
  CHECK(seg.vertices == RMat{rv({0, 0}), rv({2, 2})});
  CHECK(seg.eq_normals.size() == 1);
  CHECK(seg.contains(rv({1, 1})));
  CHECK(seg.contains_relint(rv({1, 1})));
  CHECK_FALSE(seg.contains_relint(rv({0, 0})));
  CHECK(seg.on_rel_boundary(rv({2, 2})));
  CHECK_FALSE(seg.contains(rv({1, 0})));

  // a point has affine dimension zero and is its own relative interior
  const QPolytope pt = convex_hull_points({rv({3, 4})});
  CHECK(pt.adim == 0);
  CHECK(pt.contains_relint(rv({3, 4})));
  CHECK_FALSE(pt.contains(rv({3, 3})));
}

TEST_CASE("reduced chart round trip") {
  const QPolytope seg = convex_hull_points({rv({0, 0}), rv({2, 2})});
  const RVec p{Rat(3, 2), Rat(3, 2)};
  const RVec u = seg.reduce(p);
  REQUIRE(u.size() == 1);
  // lifting a reduced functional reproduces its values up to the base offset
  const RVec g = seg.lift_functional({Rat(1)});
  CHECK(dot(g, p) - dot(g, seg.base_point) == u[0]);
}

TEST_CASE("newton polytope and dilation") {
  const QPolytope sq = newton_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
  CHECK(sq.vertices.size() == 4);
  CHECK(lattice_points(sq) == std::vector<Expo>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});

  const QPolytope big = dilate(sq, 3);
  CHECK(big.vertices == RMat{rv({0, 0}), rv({0, 3}), rv({3, 0}), rv({3, 3})});
  CHECK(lattice_points(big).size() == 16);
  CHECK(dilate(sq, 0).vertices == RMat{rv({0, 0})});
}

TEST_CASE("minkowski sums") {
  const QPolytope sq = newton_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
  const QPolytope seg = convex_hull_points({rv({0, 0}), rv({1, 1})});
  const QPolytope sum = minkowski_sum({{&sq, 1}, {&seg, 2}});
  // square plus twice the diagonal segment: a hexagon
  CHECK(sum.adim == 2);
  CHECK(sum.vertices.size() == 6);
  CHECK(sum.contains(rv({3, 3})));
  CHECK(sum.contains(rv({1, 0})));
  CHECK_FALSE(sum.contains(rv({3, 0})));

  // zero weight drops a factor entirely
  const QPolytope only = minkowski_sum({{&sq, 1}, {&seg, 0}});
  CHECK(only.vertices == sq.vertices);
}

TEST_CASE("shifted lattice points come out in graded order") {
  const QPolytope sq = newton_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
  const QPolytope big = dilate(sq, 3);
  const RVec delta{Rat(-9, 10), Rat(-9, 10)};
  const auto pts = lattice_points_shifted(big, delta);
  // p - delta in [0,3]^2 means p in [-9/10, 21/10]^2
  const std::vector<Expo> want = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1},
                                  {0, 2}, {2, 1}, {1, 2}, {2, 2}};
  CHECK(pts == want);

  // a shift pushing the square past every lattice point
  const QPolytope tiny = convex_hull_points({{Rat(1, 4), Rat(1, 4)}, {Rat(3, 4), Rat(1, 4)},
                                             {Rat(1, 4), Rat(3, 4)}});
  CHECK(lattice_points_shifted(tiny, {Rat(1, 10), Rat(1, 10)}).empty());
}

TEST_CASE("exponent conversion") {
  CHECK(expo_to_rvec({2, -1, 0}) == RVec{Rat(2), Rat(-1), Rat(0)});
}
