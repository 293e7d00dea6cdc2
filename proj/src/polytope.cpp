#include "trop/polytope.hpp"

#include <algorithm>
#include <map>

#include "trop/errors.hpp"

namespace trop {

namespace {

bool lex_less(const RVec& x, const RVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// Cofactor normal of the hyperplane spanned by k-1 edge rows in k-space.
RVec cofactor_normal(const RMat& edges, int k) {
  RVec g(k);
  for (int j = 0; j < k; ++j) {
    RMat minor;
    minor.reserve(edges.size());
    for (const auto& e : edges) {
      RVec r;
      r.reserve(k - 1);
      for (int c = 0; c < k; ++c)
        if (c != j) r.push_back(e[c]);
      minor.push_back(std::move(r));
    }
    Rat d = det(std::move(minor));
    g[j] = (j % 2 == 0) ? d : -d;
  }
  return g;
}

struct SimpFacet {
  std::vector<int> vs;  // vertex indices into the reduced point list
  RVec g;
  Rat c;
};

SimpFacet make_facet(const RMat& pts, std::vector<int> vs, const RVec& interior, int k) {
  RMat edges;
  edges.reserve(vs.size() - 1);
  for (std::size_t i = 1; i < vs.size(); ++i) edges.push_back(sub(pts[vs[i]], pts[vs[0]]));
  RVec g = cofactor_normal(edges, k);
  Rat c = dot(g, pts[vs[0]]);
  Rat side = dot(g, interior);
  require(side != c, "hull: degenerate facet");
  if (side > c) {
    for (auto& x : g) x = -x;
    c = -c;
  }
  return SimpFacet{std::move(vs), std::move(g), std::move(c)};
}

// Beneath-beyond over full-dimensional reduced points.  Returns simplicial
// facets; merging coplanar ones happens in the caller.
std::vector<SimpFacet> hull_full_dim(const RMat& pts, int k) {
  const int np = static_cast<int>(pts.size());
  require(k >= 1, "hull: bad dimension");

  // Greedy affinely independent start.
  std::vector<int> simplex{0};
  RMat edges;
  for (int i = 1; i < np && static_cast<int>(simplex.size()) < k + 1; ++i) {
    RMat trial = edges;
    trial.push_back(sub(pts[i], pts[0]));
    if (rank(trial) > static_cast<int>(edges.size())) {
      edges.push_back(sub(pts[i], pts[0]));
      simplex.push_back(i);
    }
  }
  require(static_cast<int>(simplex.size()) == k + 1, "hull: points not full-dimensional");

  RVec interior = rvec_zero(k);
  for (int v : simplex)
    for (int j = 0; j < k; ++j) interior[j] += pts[v][j];
  for (int j = 0; j < k; ++j) interior[j] /= Rat(k + 1);

  std::vector<SimpFacet> facets;
  for (int drop = 0; drop <= k; ++drop) {
    std::vector<int> vs;
    for (int i = 0; i <= k; ++i)
      if (i != drop) vs.push_back(simplex[i]);
    facets.push_back(make_facet(pts, std::move(vs), interior, k));
  }

  std::vector<bool> used(np, false);
  for (int v : simplex) used[v] = true;

  for (int p = 0; p < np; ++p) {
    if (used[p]) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(facets.size()); ++f)
      if (dot(facets[f].g, pts[p]) > facets[f].c) visible.push_back(f);
    if (visible.empty()) continue;

    // Horizon ridges appear in exactly one visible facet.
    std::map<std::vector<int>, int> ridge_count;
    for (int f : visible) {
      const auto& vs = facets[f].vs;
      for (std::size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (i != drop) ridge.push_back(vs[i]);
        std::sort(ridge.begin(), ridge.end());
        ridge_count[ridge] += 1;
      }
    }
    std::vector<SimpFacet> next;
    std::vector<bool> is_visible(facets.size(), false);
    for (int f : visible) is_visible[f] = true;
    for (int f = 0; f < static_cast<int>(facets.size()); ++f)
      if (!is_visible[f]) next.push_back(std::move(facets[f]));
    for (const auto& [ridge, cnt] : ridge_count) {
      require(cnt == 1 || cnt == 2, "hull: broken ridge incidence");
      if (cnt != 1) continue;
      std::vector<int> vs = ridge;
      vs.push_back(p);
      next.push_back(make_facet(pts, std::move(vs), interior, k));
    }
    facets = std::move(next);
  }
  return facets;
}

RVec normalize_halfspace(RVec g, Rat& c) {
  for (const auto& x : g) {
    if (x != 0) {
      Rat s = abs(x);
      for (auto& y : g) y /= s;
      c /= s;
      break;
    }
  }
  return g;
}

}  // namespace

RVec QPolytope::reduce(const RVec& p) const {
  RVec d = sub(p, base_point);
  RVec u(adim);
  for (int i = 0; i < adim; ++i) u[i] = dot(dir_basis[i], d);
  return u;
}

RVec QPolytope::lift_functional(const RVec& g_reduced) const {
  RVec g = rvec_zero(dim);
  for (int i = 0; i < adim; ++i)
    for (int j = 0; j < dim; ++j) g[j] += g_reduced[i] * dir_basis[i][j];
  return g;
}

bool QPolytope::contains(const RVec& p) const {
  for (std::size_t i = 0; i < eq_normals.size(); ++i)
    if (dot(eq_normals[i], p) != eq_offsets[i]) return false;
  for (std::size_t i = 0; i < facet_normals.size(); ++i)
    if (dot(facet_normals[i], p) > facet_offsets[i]) return false;
  return true;
}

bool QPolytope::contains_relint(const RVec& p) const {
  for (std::size_t i = 0; i < eq_normals.size(); ++i)
    if (dot(eq_normals[i], p) != eq_offsets[i]) return false;
  for (std::size_t i = 0; i < facet_normals.size(); ++i)
    if (dot(facet_normals[i], p) >= facet_offsets[i]) return false;
  return true;
}

bool QPolytope::on_rel_boundary(const RVec& p) const {
  return contains(p) && !contains_relint(p);
}

QPolytope convex_hull_points(RMat pts) {
  require(!pts.empty(), "hull: no points");
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  QPolytope q;
  q.dim = static_cast<int>(pts[0].size());
  q.base_point = pts[0];

  RMat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
  q.dir_basis = row_space_basis(std::move(dirs));
  q.adim = static_cast<int>(q.dir_basis.size());

  // Affine hull equations from the nullspace of the direction basis.
  {
    RMat m = q.dir_basis;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(q.dim, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int f = 0; f < q.dim; ++f) {
      if (is_pivot[f]) continue;
      RVec v = rvec_zero(q.dim);
      v[f] = Rat(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
      q.eq_normals.push_back(v);
      q.eq_offsets.push_back(dot(q.eq_normals.back(), q.base_point));
    }
  }

  if (q.adim == 0) {
    q.vertices = {pts[0]};
    return q;
  }

  RMat red(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) red[i] = q.reduce(pts[i]);

  std::vector<SimpFacet> simp = hull_full_dim(red, q.adim);

  // Merge coplanar simplicial facets by canonical halfspace (positive scaling).
  std::map<std::pair<RVec, Rat>, bool> merged;
  for (auto& f : simp) {
    Rat c = f.c;
    RVec g = normalize_halfspace(f.g, c);
    merged[{std::move(g), std::move(c)}] = true;
  }

  // <g, u> <= c in the chart means <lift(g), p> <= c + <lift(g), q0> ambient.
  for (const auto& [gc, unused] : merged) {
    (void)unused;
    RVec amb = q.lift_functional(gc.first);
    Rat off = gc.second + dot(amb, q.base_point);
    q.facet_normals.push_back(std::move(amb));
    q.facet_offsets.push_back(std::move(off));
  }

  // Vertices: points whose tight facet normals span the chart.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    RMat tight;
    for (const auto& [gc, unused] : merged) {
      (void)unused;
      if (dot(gc.first, red[i]) == gc.second) tight.push_back(gc.first);
    }
    if (rank(std::move(tight)) == q.adim) q.vertices.push_back(pts[i]);
  }
  return q;
}

QPolytope newton_polytope(const std::vector<Expo>& support, int n) {
  RMat pts;
  pts.reserve(support.size());
  for (const auto& e : support) pts.push_back(expo_to_rvec(e));
  if (pts.empty()) pts.push_back(rvec_zero(n));
  return convex_hull_points(std::move(pts));
}

QPolytope dilate(const QPolytope& p, long k) {
  require(k >= 0, "dilate: negative factor");
  if (k == 0) return convex_hull_points({rvec_zero(p.dim)});
  RMat pts = p.vertices;
  for (auto& v : pts)
    for (auto& x : v) x *= Rat(k);
  return convex_hull_points(std::move(pts));
}

QPolytope minkowski_sum(const std::vector<std::pair<const QPolytope*, long>>& parts) {
  require(!parts.empty(), "minkowski_sum: empty");
  int dim = parts[0].first->dim;
  RMat sums{rvec_zero(dim)};
  std::size_t guard = 1;
  for (const auto& [poly, w] : parts) {
    require(poly->dim == dim, "minkowski_sum: mixed dimensions");
    require(w >= 0, "minkowski_sum: negative weight");
    if (w == 0) continue;
    guard *= poly->vertices.size();
    require(guard <= 500000, "minkowski_sum: too many vertex combinations");
    RMat next;
    next.reserve(sums.size() * poly->vertices.size());
    for (const auto& s : sums)
      for (const auto& v : poly->vertices) {
        RVec t = s;
        for (int j = 0; j < dim; ++j) t[j] += Rat(w) * v[j];
        next.push_back(std::move(t));
      }
    sums = std::move(next);
  }
  return convex_hull_points(std::move(sums));
}

std::vector<Expo> lattice_points_shifted(const QPolytope& q, const RVec& shift) {
  require(static_cast<int>(shift.size()) == q.dim, "lattice: shift size");
  std::vector<long> lo(q.dim), hi(q.dim);
  for (int j = 0; j < q.dim; ++j) {
    Rat mn = q.vertices[0][j], mx = q.vertices[0][j];
    for (const auto& v : q.vertices) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = rat_ceil(mn + shift[j]).get_si();
    hi[j] = rat_floor(mx + shift[j]).get_si();
  }
  std::vector<Expo> out;
  if (q.dim == 0) return {Expo{}};
  for (int j = 0; j < q.dim; ++j)
    if (lo[j] > hi[j]) return out;
  // Box scan with exact membership of p - shift.
  std::vector<long> idx(lo);
  for (;;) {
    RVec p(q.dim);
    for (int j = 0; j < q.dim; ++j) p[j] = Rat(idx[j]) - shift[j];
    if (q.contains(p)) out.push_back(Expo(idx.begin(), idx.end()));
    int j = q.dim - 1;
    while (j >= 0 && ++idx[j] > hi[j]) {
      idx[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

std::vector<Expo> lattice_points(const QPolytope& q) {
  return lattice_points_shifted(q, rvec_zero(q.dim));
}

RVec expo_to_rvec(const Expo& e) {
  RVec v(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) v[i] = Rat(e[i]);
  return v;
}

}  // namespace trop
