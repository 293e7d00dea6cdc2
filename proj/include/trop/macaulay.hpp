#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/lifted.hpp"
#include "trop/poly.hpp"

namespace trop {

/// Relation prepared for linearization: the two coefficient layers (the minus
/// layer of a strict row is bumped by +eps, realizing "for every positive
/// margin" in one exact solve) and the merged polynomial driving hulls.
struct RelView {
  RelKind kind = RelKind::Nabla;
  std::map<Expo, Two, GrlexLess> plus;   // absent exponent = Bottom
  std::map<Expo, Two, GrlexLess> minus;  // bumped for Gt
  TPoly merged;                          // union support, larger layer wins
  std::vector<Expo> union_support;
  long dilation = 1;  // r_i
  FactorHull hull;    // envelope of merged
};

struct MacaulayView {
  int n = 0;
  PolySystem system;
  std::vector<RelView> rels;
  LiftedHull lifted;  // sup-convolution of the relation hulls with dilations
};

/// Multiplicity r_i per relation: 1 for root rows; affine dimension of the
/// dominated side plus one for inequalities (both sides for equalities).
std::vector<long> dilation_profile(const PolySystem& sys);

MacaulayView make_view(const PolySystem& sys);

struct CEData {
  RVec delta;
  std::vector<Expo> points;  // lattice points of the shifted support, graded
  int attempts = 0;
};

/// Generic shift + its interior lattice points.  The point list may be empty;
/// downstream users decide whether that is an error or an inconclusive state.
CEData ce_set(const MacaulayView& view, unsigned long seed);

/// Sparse two-layer linearization over an explicit column set.
struct LinearSystem {
  struct Row {
    int rel = 0;
    Expo shift;
    RelKind kind = RelKind::Nabla;
    std::vector<std::pair<int, Two>> plus;   // (column index, coefficient)
    std::vector<std::pair<int, Two>> minus;
  };
  int n = 0;
  std::vector<Expo> cols;  // graded order
  std::vector<Row> rows;   // ordered by relation, then graded shift

  std::string row_label(const Row& r, const std::vector<std::string>& vars) const;
};

/// Rows are all shifts whose full union support lands inside the column set.
LinearSystem macaulay_view(const MacaulayView& view, const std::vector<Expo>& cols);

/// Degree-truncated system: columns are all monomials of total degree <= N;
/// row admission uses the dense degree-d_j simplex, entries stay sparse.
/// Requires nonnegative exponents.
LinearSystem truncated_view(const MacaulayView& view, long N);

/// Tropical Veronese embedding of x over the given columns.
TVec veronese(const std::vector<Expo>& cols, const TVec& x);

}  // namespace trop
