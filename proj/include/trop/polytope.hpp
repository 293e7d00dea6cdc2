#pragma once

#include <utility>
#include <vector>

#include "trop/linalg.hpp"
#include "trop/poly.hpp"

namespace trop {

/// Rational polytope with both representations.  Facet inequalities are valid
/// within the affine hull; the affine hull itself is cut out by the equations.
struct QPolytope {
  int dim = 0;   // ambient dimension
  int adim = 0;  // affine dimension
  RMat vertices;            // extreme points, lex-sorted rows
  RMat facet_normals;       // <a, x> <= c rows
  RVec facet_offsets;
  RMat eq_normals;          // <a, x> == c rows (affine hull)
  RVec eq_offsets;
  RVec base_point;          // a vertex used as origin of the reduction
  RMat dir_basis;           // rref basis of the direction space, adim x dim

  /// Coordinates of p in the reduced (full-dimensional) chart.
  RVec reduce(const RVec& p) const;

  /// Pulls a reduced-chart linear functional back to ambient coordinates.
  RVec lift_functional(const RVec& g_reduced) const;

  bool contains(const RVec& p) const;
  bool contains_relint(const RVec& p) const;
  bool on_rel_boundary(const RVec& p) const;
};

/// Exact convex hull (incremental beneath-beyond after affine reduction).
QPolytope convex_hull_points(RMat pts);

/// Hull of the exponent set of a polynomial support.
QPolytope newton_polytope(const std::vector<Expo>& support, int n);

/// k-fold dilation, k >= 0.
QPolytope dilate(const QPolytope& p, long k);

/// Minkowski sum of weight * polytope terms (weights >= 0 integers).
QPolytope minkowski_sum(const std::vector<std::pair<const QPolytope*, long>>& parts);

/// Integer points p with p - shift in q, graded order.
std::vector<Expo> lattice_points_shifted(const QPolytope& q, const RVec& shift);

std::vector<Expo> lattice_points(const QPolytope& q);

RVec expo_to_rvec(const Expo& e);

}  // namespace trop
