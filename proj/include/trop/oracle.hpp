#pragma once

#include <vector>

#include "trop/linalg.hpp"
#include "trop/poly.hpp"

namespace trop {

/// coef . x <= rhs, strictly when `strict`.
struct LinCon {
  RVec coef;
  Two rhs;
  bool strict = false;
};

/// Exact Fourier-Motzkin elimination with native strict inequalities.
/// On success and when `sample` is non-null, back-substitution fills a
/// point in the (relative) interior of the feasible set.
bool fm_feasible(int nvars, std::vector<LinCon> cons, TVec* sample);

struct OracleResult {
  bool feasible = false;
  TVec witness;
};

/// Reference decision procedure: enumerates, per relation, every candidate
/// argmax pattern (the pair of leading terms for a root, the dominating term
/// or pair for the two-sided kinds) and solves each combination exactly.
/// The pattern product is guarded; intended for small systems.
OracleResult brute_feasibility(const PolySystem& sys);

struct NontoricResult {
  bool found = false;
  std::vector<TropScalar> witness;  // Bottom coordinates are -infinity
};

/// Searches strata by decreasing support: coordinates outside the stratum
/// are pinned to Bottom, the restricted system goes through the oracle.
NontoricResult nontoric_search(const PolySystem& sys);

}  // namespace trop
