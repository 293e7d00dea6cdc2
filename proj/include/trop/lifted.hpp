#pragma once

#include <utility>
#include <vector>

#include "trop/polytope.hpp"
#include "trop/simplex.hpp"

namespace trop {

/// One affine piece of a concave envelope: the function q -> s - <x, q>,
/// valid on the cell spanned by `cell`.  x is the evaluation point whose
/// argmax set is the cell.
struct EnvPiece {
  TVec x;
  Two s;
  std::vector<Expo> cell;
};

/// Upper envelope data of one lifted support (exponents lifted to their
/// coefficients).  Pieces are enumerated explicitly; supports stay small.
struct FactorHull {
  int n = 0;
  TPoly poly;
  QPolytope newton;
  std::vector<EnvPiece> pieces;
  std::vector<Expo> essential;  // support points lying on the envelope

  /// Envelope value at q; Bottom outside the Newton polytope.
  TropScalar eval(const RVec& q) const;
};

FactorHull build_factor_hull(const TPoly& f);

/// Formal sup-convolution of factor envelopes with integer multiplicities.
/// Queries go through an exact LP in conjugate form, so the (potentially
/// huge) explicit Minkowski cell structure is never materialized.
struct LiftedHull {
  int n = 0;
  std::vector<std::pair<FactorHull, long>> factors;
  QPolytope support;  // Minkowski sum of multiplicity * newton
};

LiftedHull upper_hull(const TPoly& f);

LiftedHull sup_convolution(std::vector<std::pair<FactorHull, long>> factors);

/// Envelope value at q; Bottom outside the support polytope.
TropScalar eval_concave(const LiftedHull& h, const RVec& q);

struct LiftCell {
  bool wall = true;
  TVec x;       // unique evaluation point, ambient coordinates
  Two value;    // envelope value at q
  std::vector<std::vector<Expo>> argmax;  // tight support points per factor
};

/// Cell query at q.  Wall when q is outside the relative interior of the
/// support or the optimal evaluation point is not unique.
LiftCell cell_of(const LiftedHull& h, const RVec& q);

/// Explicit envelope pieces from candidate vertex sums; intended for small
/// inputs (tests and dumps), the LP path above is the production route.
std::vector<EnvPiece> envelope_pieces(const LiftedHull& h);

struct ShiftResult {
  RVec delta;
  int attempts = 0;
  std::vector<Expo> points;  // lattice points of support + delta
};

/// Shift making the translated support hit no lattice point on its relative
/// boundary while every interior lattice point sits in a proper cell.
/// The first attempt perturbs by 1/10 along each canonical direction;
/// retries draw random perturbations with growing denominators.
ShiftResult generic_shift(const LiftedHull& h, unsigned long seed);

}  // namespace trop
