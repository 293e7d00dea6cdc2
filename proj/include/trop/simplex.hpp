#pragma once

#include <vector>

#include "trop/linalg.hpp"

namespace trop {

enum class LpRel { Le, Ge, Eq };

/// coef . x  (rel)  rhs.  Coefficients are rational; the right-hand side may
/// carry an eps part, which is how strict margins and shifted heights enter.
struct LpConstraint {
  RVec coef;
  LpRel rel = LpRel::Le;
  Two rhs;
};

struct LinProg {
  int nvars = 0;
  std::vector<bool> free_var;  // per variable; false means x_j >= 0
  RVec objective;              // rational objective row
  std::vector<LpConstraint> rows;

  explicit LinProg(int nv = 0)
      : nvars(nv), free_var(nv, false), objective(rvec_zero(nv)) {}

  void add_row(RVec coef, LpRel rel, Two rhs) {
    rows.push_back(LpConstraint{std::move(coef), rel, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Two value;  // objective at optimum
  TVec x;     // structural solution (two-level since rhs is)
};

/// Exact two-phase dense simplex with Bland's rule; minimizes objective.
LpResult lp_min(const LinProg& p);

/// Maximizes objective (negated minimization).
LpResult lp_max(const LinProg& p);

/// Convenience: feasibility only (phase 1).
bool lp_feasible_system(const LinProg& p);

}  // namespace trop
