#pragma once

#include <optional>
#include <vector>

#include "trop/scalar.hpp"

namespace trop {

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;  // row major
using TVec = std::vector<Two>;

RVec rvec_zero(int n);
Rat dot(const RVec& x, const RVec& y);
Two dot(const RVec& x, const TVec& y);

/// Inner product of two-level vectors; defined because at most one factor per
/// component carries an eps part in all call sites (checked).
Two dot_checked(const TVec& x, const TVec& y);

RVec sub(const RVec& x, const RVec& y);
TVec sub(const TVec& x, const TVec& y);

int rank(RMat m);

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RMat& m);

/// Exact determinant by fraction-free-ish Gaussian elimination.
Rat det(RMat m);

/// Determinant of the square matrix [cols | two_col] whose last column is
/// two-level: expands along that column, so the result needs no eps^2.
/// `cols` is k x (k-1), `two_col` has length k.
Two det_with_two_col(const RMat& cols, const TVec& two_col);

/// Solves m * x = rhs exactly.  Returns nullopt when inconsistent; when the
/// solution space is positive-dimensional, returns one solution.
std::optional<RVec> solve_linear(RMat m, RVec rhs);

/// Whether rhs lies in the column span of m.
bool in_column_span(const RMat& m, const RVec& rhs);

/// Rank of a matrix over the ordered extension by an infinitesimal, where the
/// last column holds two-level entries and all other columns are rational:
/// equals max(rank with the main parts, rank with the eps parts).
int rank_with_two_col(const RMat& cols, const TVec& two_col);

/// Basis of the row space of m, as the nonzero rows of the rref (canonical).
RMat row_space_basis(RMat m);

}  // namespace trop
