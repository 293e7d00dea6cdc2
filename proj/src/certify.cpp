#include "trop/certify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "trop/errors.hpp"
#include "trop/par.hpp"
#include "trop/simplex.hpp"

namespace trop {

std::string cert_row_kind_name(CertRowKind k) {
  switch (k) {
    case CertRowKind::SingleArgmax:
      return "single_argmax";
    case CertRowKind::MinusExceeds:
      return "minus_exceeds";
    case CertRowKind::PlusExceeds:
      return "plus_exceeds";
  }
  return {};
}

std::optional<CertRowKind> cert_row_kind_from_name(const std::string& s) {
  if (s == "single_argmax") return CertRowKind::SingleArgmax;
  if (s == "minus_exceeds") return CertRowKind::MinusExceeds;
  if (s == "plus_exceeds") return CertRowKind::PlusExceeds;
  return std::nullopt;
}

namespace {

Two term_value(const Expo& e, const Two& c, const TVec& x) {
  Two v = c;
  for (std::size_t d = 0; d < e.size(); ++d) v += x[d] * Rat(e[d]);
  return v;
}

TropScalar layer_value(const std::map<Expo, Two, GrlexLess>& layer, const TVec& x) {
  TropScalar best = TropScalar::bottom();
  for (const auto& [e, c] : layer) best = tadd(best, TropScalar(term_value(e, c, x)));
  return best;
}

// Membership of target in (r_j - 1) conv(T_j) + sum_{i != j} r_i conv(T_i),
// as a pure feasibility LP over convex multipliers.
bool decomposes_without(const MacaulayView& view, int j,
                        const std::vector<std::vector<Expo>>& argmax, const RVec& target) {
  std::vector<std::pair<const std::vector<Expo>*, long>> parts;
  for (std::size_t i = 0; i < view.rels.size(); ++i) {
    const long w = view.rels[i].dilation - (static_cast<int>(i) == j ? 1 : 0);
    require(w >= 0, "certificate: negative dilation weight");
    if (w > 0) parts.push_back({&argmax[i], w});
  }
  int nv = 0;
  for (const auto& [pts, w] : parts) nv += static_cast<int>(pts->size());
  if (nv == 0) {
    for (const Rat& t : target)
      if (t != 0) return false;
    return true;
  }
  LinProg lp(nv);
  int base = 0;
  for (const auto& [pts, w] : parts) {
    RVec row = rvec_zero(nv);
    for (std::size_t k = 0; k < pts->size(); ++k) row[base + k] = 1;
    lp.add_row(std::move(row), LpRel::Eq, Two(Rat(1)));
    base += static_cast<int>(pts->size());
  }
  for (int d = 0; d < view.n; ++d) {
    RVec row = rvec_zero(nv);
    base = 0;
    for (const auto& [pts, w] : parts) {
      for (std::size_t k = 0; k < pts->size(); ++k) row[base + k] = Rat(w) * Rat((*pts)[k][d]);
      base += static_cast<int>(pts->size());
    }
    lp.add_row(std::move(row), LpRel::Eq, Two(target[d]));
  }
  return lp_feasible_system(lp);
}

// Grlex-first vertex v of conv(pts) such that q - v still decomposes over
// the remaining multiset; existence is a Shapley-Folkman consequence.
Expo select_support_point(const MacaulayView& view, int j,
                          const std::vector<std::vector<Expo>>& argmax, const RVec& q) {
  const std::vector<Expo>& pts = argmax[j];
  require(!pts.empty(), "certificate: empty argmax for the selected relation");
  if (pts.size() == 1) return pts[0];
  RMat rows;
  for (const Expo& e : pts) rows.push_back(expo_to_rvec(e));
  const QPolytope hull = convex_hull_points(rows);
  std::vector<Expo> verts;
  for (const RVec& v : hull.vertices) {
    Expo e(v.size());
    for (std::size_t d = 0; d < v.size(); ++d) {
      require(v[d].get_den() == 1, "certificate: non-integer hull vertex");
      e[d] = static_cast<long>(v[d].get_num().get_si());
    }
    verts.push_back(std::move(e));
  }
  std::sort(verts.begin(), verts.end(), GrlexLess());
  for (const Expo& v : verts) {
    if (decomposes_without(view, j, argmax, sub(q, expo_to_rvec(v)))) return v;
  }
  require(false, "certificate: no support point admits the decomposition");
  return {};
}

struct PerPoint {
  bool solution = false;
  TVec x;
  Two value;
  int rel = -1;
  CertRowKind kind = CertRowKind::SingleArgmax;
  Expo a;
};

PerPoint analyze_point(const MacaulayView& view, const RVec& delta, const Expo& p) {
  RVec q = expo_to_rvec(p);
  for (std::size_t d = 0; d < q.size(); ++d) q[d] -= delta[d];
  const LiftCell cell = cell_of(view.lifted, q);
  require(!cell.wall, "certificate: shifted column landed on a wall");

  PerPoint out;
  out.x = cell.x;
  out.value = cell.value;
  for (std::size_t j = 0; j < view.rels.size(); ++j) {
    const RelView& rel = view.rels[j];
    std::optional<CertRowKind> kind;
    if (rel.kind == RelKind::Nabla) {
      if (cell.argmax[j].size() == 1) kind = CertRowKind::SingleArgmax;
    } else {
      const TropScalar vp = layer_value(rel.plus, cell.x);
      const TropScalar vm = layer_value(rel.minus, cell.x);
      if (rel.kind == RelKind::Eq && vp > vm) kind = CertRowKind::PlusExceeds;
      if (vm > vp) kind = CertRowKind::MinusExceeds;
    }
    if (kind) {
      out.rel = static_cast<int>(j);
      out.kind = *kind;
    }
  }
  if (out.rel < 0) {
    out.solution = true;
    return out;
  }

  // Sanity: the merged argmax lies in the layer the dominance will cite.
  const RelView& rel = view.rels[out.rel];
  const auto& side = (out.kind == CertRowKind::MinusExceeds) ? rel.minus
                     : (out.kind == CertRowKind::PlusExceeds) ? rel.plus
                                                              : rel.plus;
  for (const Expo& e : cell.argmax[out.rel])
    require(side.count(e) > 0, "certificate: argmax escapes the dominating layer");

  out.a = select_support_point(view, out.rel, cell.argmax, q);
  return out;
}

}  // namespace

CertifyOutcome build_certificate(const MacaulayView& view, const CEData& ce) {
  if (ce.points.empty()) throw EmptyCESetError("certificate: empty column set");
  const std::size_t npts = ce.points.size();

  std::vector<PerPoint> per(npts);
  parallel_for(npts, [&](std::size_t i) { per[i] = analyze_point(view, ce.delta, ce.points[i]); });

  CertifyOutcome out;
  for (std::size_t i = 0; i < npts; ++i) {
    if (!per[i].solution) continue;
    out.found_solution = true;
    out.solution = per[i].x;
    const auto xr = rational_point(view.system, out.solution);
    require(xr.has_value(), "certificate: cell point is not a solution");
    out.solution_rational = *xr;
    return out;
  }

  Certificate& cert = out.cert;
  cert.n = view.n;
  cert.delta = ce.delta;
  cert.points = ce.points;
  for (const RelView& rel : view.rels) cert.dilation.push_back(rel.dilation);
  cert.scaling.resize(npts);
  cert.rows.resize(npts);
  cert.plus_m.assign(npts, std::vector<TropScalar>(npts));
  cert.minus_m.assign(npts, std::vector<TropScalar>(npts));
  for (std::size_t i = 0; i < npts; ++i) {
    cert.scaling[i] = per[i].value;
    CertRow& row = cert.rows[i];
    row.p = ce.points[i];
    row.rel = per[i].rel;
    row.a = per[i].a;
    row.kind = per[i].kind;
    row.x = per[i].x;
    const RelView& rel = view.rels[row.rel];
    Expo beta(view.n);
    for (int d = 0; d < view.n; ++d) beta[d] = row.p[d] - row.a[d];
    for (std::size_t c = 0; c < npts; ++c) {
      Expo e(view.n);
      for (int d = 0; d < view.n; ++d) e[d] = ce.points[c][d] - beta[d];
      if (auto it = rel.plus.find(e); it != rel.plus.end()) cert.plus_m[i][c] = TropScalar(it->second);
      if (auto it = rel.minus.find(e); it != rel.minus.end())
        cert.minus_m[i][c] = TropScalar(it->second);
    }
  }

  std::string why;
  require(verify_certificate(view.system, cert, &why), "certificate failed self-check");
  return out;
}

bool verify_certificate(const PolySystem& sys, const Certificate& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t npts = cert.points.size();
  if (cert.n != sys.n) return fail("dimension mismatch");
  if (npts == 0) return fail("empty point set");
  if (cert.rows.size() != npts || cert.scaling.size() != npts) return fail("ragged certificate");
  if (cert.plus_m.size() != npts || cert.minus_m.size() != npts) return fail("ragged matrices");
  for (std::size_t i = 0; i < npts; ++i)
    if (cert.plus_m[i].size() != npts || cert.minus_m[i].size() != npts)
      return fail("matrices not square");
  if (static_cast<int>(cert.delta.size()) != cert.n) return fail("bad shift length");

  if (cert.dilation != dilation_profile(sys)) return fail("dilation profile mismatch");

  // Coefficient layers, with the strict-row bump reapplied from scratch.
  struct Layers {
    std::map<Expo, Two, GrlexLess> plus, minus;
    std::vector<Expo> unions;
  };
  std::vector<Layers> layers(sys.rels.size());
  for (std::size_t j = 0; j < sys.rels.size(); ++j) {
    const Relation& rel = sys.rels[j];
    layers[j].plus = rel.plus.terms;
    for (const auto& [e, c] : rel.minus.terms)
      layers[j].minus[e] = (rel.kind == RelKind::Gt) ? c + Two::eps() : c;
    layers[j].unions = rel.support_union();
  }

  // The point set must be exactly the lattice of the shifted dilated sum.
  {
    std::vector<QPolytope> newtons;
    newtons.reserve(sys.rels.size());
    for (std::size_t j = 0; j < sys.rels.size(); ++j)
      newtons.push_back(newton_polytope(layers[j].unions, sys.n));
    std::vector<std::pair<const QPolytope*, long>> parts;
    for (std::size_t j = 0; j < sys.rels.size(); ++j)
      parts.push_back({&newtons[j], cert.dilation[j]});
    const QPolytope support = minkowski_sum(parts);
    if (lattice_points_shifted(support, cert.delta) != cert.points)
      return fail("point set is not the shifted lattice");
  }

  std::map<Expo, std::size_t, GrlexLess> col_of;
  for (std::size_t c = 0; c < npts; ++c) col_of[cert.points[c]] = c;

  for (std::size_t i = 0; i < npts; ++i) {
    const CertRow& row = cert.rows[i];
    if (row.p != cert.points[i]) return fail("row/point misalignment");
    if (row.rel < 0 || row.rel >= static_cast<int>(sys.rels.size())) return fail("row relation out of range");
    const Layers& lay = layers[row.rel];
    const RelKind kind = sys.rels[row.rel].kind;
    switch (row.kind) {
      case CertRowKind::SingleArgmax:
        if (kind != RelKind::Nabla) return fail("single-argmax row on a two-sided relation");
        if (lay.plus.count(row.a) == 0) return fail("selected point outside the support");
        break;
      case CertRowKind::MinusExceeds:
        if (kind == RelKind::Nabla) return fail("two-sided row on a root relation");
        if (lay.minus.count(row.a) == 0) return fail("selected point outside the minus support");
        break;
      case CertRowKind::PlusExceeds:
        if (kind != RelKind::Eq) return fail("plus-exceeds row on a non-equality");
        if (lay.plus.count(row.a) == 0) return fail("selected point outside the plus support");
        break;
    }
    if (row.a.size() != static_cast<std::size_t>(cert.n)) return fail("bad support point length");

    Expo beta(cert.n);
    for (int d = 0; d < cert.n; ++d) beta[d] = row.p[d] - row.a[d];
    for (const Expo& u : lay.unions) {
      Expo e(cert.n);
      for (int d = 0; d < cert.n; ++d) e[d] = beta[d] + u[d];
      if (col_of.find(e) == col_of.end()) return fail("inadmissible row shift");
    }

    for (std::size_t c = 0; c < npts; ++c) {
      Expo e(cert.n);
      for (int d = 0; d < cert.n; ++d) e[d] = cert.points[c][d] - beta[d];
      TropScalar expect_p = TropScalar::bottom(), expect_m = TropScalar::bottom();
      if (auto it = lay.plus.find(e); it != lay.plus.end()) expect_p = TropScalar(it->second);
      if (auto it = lay.minus.find(e); it != lay.minus.end()) expect_m = TropScalar(it->second);
      if (cert.plus_m[i][c] != expect_p || cert.minus_m[i][c] != expect_m)
        return fail("matrix entry mismatch");
    }

    // Scaled dominance.  z_c subtracts the column scaling; the selected
    // diagonal must strictly beat every cited competitor.
    auto scaled = [&](const TropScalar& t, std::size_t c) {
      return t.finite ? TropScalar(t.v - cert.scaling[c]) : TropScalar::bottom();
    };
    const TropScalar diag_p = scaled(cert.plus_m[i][i], i);
    const TropScalar diag_m = scaled(cert.minus_m[i][i], i);
    switch (row.kind) {
      case CertRowKind::SingleArgmax: {
        const TropScalar diag = tadd(diag_p, diag_m);
        if (!diag.finite) return fail("bottom diagonal");
        for (std::size_t c = 0; c < npts; ++c) {
          if (c == i) continue;
          const TropScalar off = tadd(scaled(cert.plus_m[i][c], c), scaled(cert.minus_m[i][c], c));
          if (!(diag > off)) return fail("diagonal not dominant");
        }
        break;
      }
      case CertRowKind::MinusExceeds:
        if (!diag_m.finite) return fail("bottom diagonal");
        for (std::size_t c = 0; c < npts; ++c)
          if (!(diag_m > scaled(cert.plus_m[i][c], c))) return fail("minus side not dominant");
        break;
      case CertRowKind::PlusExceeds:
        if (!diag_p.finite) return fail("bottom diagonal");
        for (std::size_t c = 0; c < npts; ++c)
          if (!(diag_p > scaled(cert.minus_m[i][c], c))) return fail("plus side not dominant");
        break;
    }
  }
  return true;
}

TropDetResult is_trop_nonsingular(const std::vector<std::vector<TropScalar>>& m) {
  const int n = static_cast<int>(m.size());
  require(n >= 1, "is_trop_nonsingular: empty matrix");
  for (const auto& row : m)
    require(static_cast<int>(row.size()) == n, "is_trop_nonsingular: not square");

  // Exact assignment on negated values (minimization with potentials);
  // Bottom entries are forbidden.
  const std::optional<Two> none;
  std::vector<Two> u(n + 1), v(n + 1);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);  // match[j]: row occupying column j
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<std::optional<Two>> minv(n + 1, none);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      int j1 = -1;
      std::optional<Two> delta;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const TropScalar& entry = m[i0 - 1][j - 1];
        if (entry.finite) {
          const Two cur = -entry.v - u[i0] - v[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = *minv[j];
          j1 = j;
        }
      }
      if (!delta) return {TropSingularity::Inconclusive, TropScalar::bottom()};
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  Two value;
  for (int j = 1; j <= n; ++j) value += m[match[j] - 1][j - 1].v;

  // Uniqueness: another optimal permutation exists exactly when the tight
  // subgraph (reduced cost zero) has an alternating cycle.  Arcs: row -> its
  // matched column, column -> rows tight on it but not matched.
  std::vector<int> col_of_row(n + 1, 0);
  for (int j = 1; j <= n; ++j) col_of_row[match[j]] = j;
  // Nodes 0..n-1 rows, n..2n-1 cols.
  std::vector<std::vector<int>> adj(2 * n);
  for (int i = 1; i <= n; ++i) adj[i - 1].push_back(n + col_of_row[i] - 1);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      if (match[j] == i) continue;
      const TropScalar& entry = m[i - 1][j - 1];
      if (entry.finite && -entry.v - u[i] - v[j] == Two()) adj[n + j - 1].push_back(i - 1);
    }
  std::vector<int> color(2 * n, 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < 2 * n; ++s) {
    if (color[s] != 0) continue;
    stack.push_back({s, 0});
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v0, k] = stack.back();
      if (k == adj[v0].size()) {
        color[v0] = 2;
        stack.pop_back();
        continue;
      }
      const int w = adj[v0][k++];
      if (color[w] == 1) return {TropSingularity::Inconclusive, TropScalar(value)};
      if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return {TropSingularity::NonsingularUnique, TropScalar(value)};
}

}  // namespace trop
