#include "trop/linalg.hpp"

#include "trop/errors.hpp"

namespace trop {

RVec rvec_zero(int n) { return RVec(n, Rat(0)); }

Rat dot(const RVec& x, const RVec& y) {
  require(x.size() == y.size(), "dot: size mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Two dot(const RVec& x, const TVec& y) {
  require(x.size() == y.size(), "dot: size mismatch");
  Two s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Two dot_checked(const TVec& x, const TVec& y) {
  require(x.size() == y.size(), "dot_checked: size mismatch");
  Two s;
  for (std::size_t i = 0; i < x.size(); ++i) s += mul_checked(x[i], y[i]);
  return s;
}

RVec sub(const RVec& x, const RVec& y) {
  require(x.size() == y.size(), "sub: size mismatch");
  RVec d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return d;
}

TVec sub(const TVec& x, const TVec& y) {
  require(x.size() == y.size(), "sub: size mismatch");
  TVec d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return d;
}

std::vector<int> rref(RMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RMat m) { return static_cast<int>(rref(m).size()); }

Rat det(RMat m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) require(static_cast<int>(row.size()) == n, "det: not square");
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) { std::swap(m[p], m[c]); d = -d; }
    d *= m[c][c];
    Rat inv = 1 / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

Two det_with_two_col(const RMat& cols, const TVec& two_col) {
  const int k = static_cast<int>(two_col.size());
  require(static_cast<int>(cols.size()) == k, "det_with_two_col: row count");
  for (const auto& row : cols)
    require(static_cast<int>(row.size()) == k - 1, "det_with_two_col: col count");
  // det [cols | a + eps b] = det [cols | a] + eps det [cols | b]; both terms
  // are computed in one pass per part via Laplace expansion on the last column.
  Two out;
  for (int i = 0; i < k; ++i) {
    if (two_col[i].is_zero()) continue;
    RMat minor;
    minor.reserve(k - 1);
    for (int r = 0; r < k; ++r)
      if (r != i) minor.push_back(cols[r]);
    Rat cof = det(std::move(minor));
    if (((i + k - 1) % 2) != 0) cof = -cof;  // sign (-1)^{i + (k-1)}
    out += cof * two_col[i];
  }
  return out;
}

std::optional<RVec> solve_linear(RMat m, RVec rhs) {
  const int rows = static_cast<int>(m.size());
  require(static_cast<int>(rhs.size()) == rows, "solve_linear: rhs size");
  if (rows == 0) return RVec{};
  const int cols = static_cast<int>(m[0].size());
  for (int i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
  std::vector<int> pivots = rref(m);
  for (int i = 0; i < rows; ++i) {
    bool zero_row = true;
    for (int j = 0; j < cols; ++j)
      if (m[i][j] != 0) { zero_row = false; break; }
    if (zero_row && m[i][cols] != 0) return std::nullopt;
  }
  RVec x = rvec_zero(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

bool in_column_span(const RMat& m, const RVec& rhs) {
  return solve_linear(m, rhs).has_value();
}

int rank_with_two_col(const RMat& cols, const TVec& two_col) {
  const int k = static_cast<int>(cols.size());
  require(static_cast<int>(two_col.size()) == k, "rank_with_two_col: sizes");
  RMat ma = cols, mb = cols;
  for (int i = 0; i < k; ++i) {
    ma[i].push_back(two_col[i].a);
    mb[i].push_back(two_col[i].b);
  }
  return std::max(rank(std::move(ma)), rank(std::move(mb)));
}

RMat row_space_basis(RMat m) {
  std::vector<int> pivots = rref(m);
  m.resize(pivots.size());
  return m;
}

}  // namespace trop
