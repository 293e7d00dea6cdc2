#pragma once

#include <optional>
#include <vector>

#include "trop/linalg.hpp"
#include "trop/macaulay.hpp"
#include "trop/scalar.hpp"

namespace trop {

/// Rewrites every row into weak two-sided form:
///   - a root row with m >= 2 entries becomes m rows, each singling out one
///     entry on the minus side against the rest;
///   - a root row with a single entry keeps an empty plus side (no witness
///     can satisfy it);
///   - an equality row splits into the two opposite weak rows.
/// Strict rows keep their bumped minus coefficients and their kind.
LinearSystem nabla_to_two_sided(const LinearSystem& sys);

enum class Verdict { Feasible, Infeasible };

struct FeasResult {
  Verdict verdict = Verdict::Infeasible;
  TVec witness;           // two-level column values, minimum entry 0
  RVec witness_rational;  // witness instantiated at eps = eps_value
  Rat eps_value;
};

/// Decides the two-sided system exactly through its mean-payoff game: a
/// negative value at a column node refutes feasibility, and otherwise the
/// bias vector of the game with zero self-loops anchored at the columns is
/// a witness.  Feasible instances come with a verified witness.
FeasResult feasibility(const LinearSystem& two_sided);

/// Weak two-level row checks (strict rows rely on their bump).
bool check_rows(const LinearSystem& two_sided, const TVec& y);

/// Row checks after instantiating every coefficient and witness entry at
/// eps = t.
bool check_rows_rational(const LinearSystem& two_sided, const RVec& y, const Rat& t);

/// Largest safe instantiation threshold for a set of two-level comparisons
/// u >= v that must survive as u.a + t*u.b >= v.a + t*v.b; returns half of
/// the binding threshold, or 1/2 when nothing binds.  Requires u >= v
/// lexicographically for every pair.
Rat eps_threshold(const std::vector<std::pair<Two, Two>>& pairs);

/// Instantiates a two-level vector at eps = t.
RVec instantiate(const TVec& y, const Rat& t);

/// Extracts a coordinate point from a column witness when the column set
/// contains the constant monomial and every coordinate monomial; the result
/// satisfies nothing by itself and must be checked by the caller.
std::optional<TVec> extract_point(const LinearSystem& sys, const TVec& y);

/// Exact rational point from a two-level solution: verifies the solution,
/// instantiates eps below every binding comparison (lexicographically strict
/// relations stay strict), and re-verifies.  Nullopt when x does not solve
/// the system.
std::optional<RVec> rational_point(const PolySystem& sys, const TVec& x);

}  // namespace trop
