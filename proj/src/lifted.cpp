#include "trop/lifted.hpp"

#include <algorithm>
#include <random>

#include "trop/errors.hpp"

namespace trop {

namespace {

// Solves a square rational system with a two-level rhs by splitting into the
// main and eps parts.  Returns nullopt when singular or inconsistent.
std::optional<TVec> solve_square_two(const RMat& m, const TVec& rhs) {
  const int k = static_cast<int>(m.size());
  RMat aug = m;
  for (int i = 0; i < k; ++i) {
    aug[i].push_back(rhs[i].a);
    aug[i].push_back(rhs[i].b);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != k) return std::nullopt;  // singular
  TVec x(k);
  for (int r = 0; r < k; ++r) {
    // A pivot in an rhs column means the coefficient rows are dependent and
    // the system inconsistent; the caller skips such subsets.
    if (pivots[r] != r) return std::nullopt;
    x[r] = Two(aug[r][k], aug[r][k + 1]);
  }
  return x;
}

// Enumerates the vertices of {(w, s) : s >= height_p + <base_p, w>} and reads
// them off as envelope pieces.  Bases are chart coordinates (full-dim).
std::vector<EnvPiece> pieces_from_lifted_points(const RMat& bases, const TVec& heights,
                                                const std::vector<Expo>& labels,
                                                const QPolytope& chart) {
  const int np = static_cast<int>(bases.size());
  const int d = chart.adim;
  std::vector<EnvPiece> out;

  if (d == 0) {
    int best = 0;
    for (int i = 1; i < np; ++i)
      if (heights[i] > heights[best]) best = i;
    EnvPiece piece;
    piece.x = TVec(chart.dim, Two());
    piece.s = heights[best];
    for (int i = 0; i < np; ++i)
      if (heights[i] == heights[best]) piece.cell.push_back(labels[i]);
    out.push_back(std::move(piece));
    return out;
  }

  // Subset enumeration; inputs are small by contract.
  require(np <= 64, "envelope: too many lifted points for explicit enumeration");
  std::vector<int> pick(d + 1);
  std::vector<TVec> seen;

  auto process = [&](const std::vector<int>& sel) {
    RMat m;
    TVec rhs;
    for (int idx : sel) {
      // s - <base, w> = height  row: coefficients (-base | 1)
      RVec row(d + 1);
      for (int j = 0; j < d; ++j) row[j] = -bases[idx][j];
      row[d] = Rat(1);
      m.push_back(std::move(row));
      rhs.push_back(heights[idx]);
    }
    auto sol = solve_square_two(m, rhs);
    if (!sol) return;
    const TVec& ws = *sol;
    // Feasibility: s >= height + <base, w> for every lifted point.
    std::vector<int> tight;
    for (int i = 0; i < np; ++i) {
      Two lhs = ws[d];
      for (int j = 0; j < d; ++j) lhs -= mul_checked(Two(bases[i][j]), ws[j]);
      if (lhs < heights[i]) return;
      if (lhs == heights[i]) tight.push_back(i);
    }
    for (const auto& prev : seen)
      if (prev == ws) return;
    seen.push_back(ws);
    EnvPiece piece;
    // Ambient x from chart coordinates.
    TVec w(ws.begin(), ws.begin() + d);
    piece.x = TVec(chart.dim, Two());
    for (int r = 0; r < d; ++r)
      for (int j = 0; j < chart.dim; ++j) piece.x[j] += chart.dir_basis[r][j] * w[r];
    piece.s = ws[d];
    // Chart origin correction: constraints used chart bases u = M(p - q0),
    // so s_chart - <w, u> matches s_amb - <x, p> with s_amb = s_chart + <x, q0>.
    piece.s += dot(chart.base_point, piece.x);
    for (int i : tight) piece.cell.push_back(labels[i]);
    std::sort(piece.cell.begin(), piece.cell.end(), grlex_less);
    out.push_back(std::move(piece));
  };

  // Iterate over all (d+1)-subsets.
  std::vector<int> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  if (np < d + 1) return out;
  for (;;) {
    process(idx);
    int i = d;
    while (i >= 0 && idx[i] == np - (d + 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

TropScalar FactorHull::eval(const RVec& q) const {
  if (!newton.contains(q)) return TropScalar::bottom();
  require(!pieces.empty(), "factor hull: no pieces");
  bool first = true;
  Two best;
  for (const auto& piece : pieces) {
    Two v = piece.s - dot(q, piece.x);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return TropScalar(best);
}

FactorHull build_factor_hull(const TPoly& f) {
  require(!f.terms.empty(), "factor hull: empty polynomial");
  FactorHull h;
  h.n = f.n;
  h.poly = f;
  h.newton = newton_polytope(f.support(), f.n);

  RMat bases;
  TVec heights;
  std::vector<Expo> labels;
  for (const auto& [e, c] : f.terms) {
    bases.push_back(h.newton.reduce(expo_to_rvec(e)));
    heights.push_back(c);
    labels.push_back(e);
  }
  h.pieces = pieces_from_lifted_points(bases, heights, labels, h.newton);

  for (const auto& [e, c] : f.terms)
    if (h.eval(expo_to_rvec(e)) == TropScalar(c)) h.essential.push_back(e);
  return h;
}

LiftedHull upper_hull(const TPoly& f) {
  return sup_convolution({{build_factor_hull(f), 1}});
}

LiftedHull sup_convolution(std::vector<std::pair<FactorHull, long>> factors) {
  require(!factors.empty(), "sup_convolution: no factors");
  LiftedHull h;
  h.n = factors[0].first.n;
  h.factors = std::move(factors);
  std::vector<std::pair<const QPolytope*, long>> parts;
  for (const auto& [f, w] : h.factors) {
    require(f.n == h.n, "sup_convolution: mixed arities");
    require(w >= 0, "sup_convolution: negative multiplicity");
    parts.push_back({&f.newton, w});
  }
  h.support = minkowski_sum(parts);
  return h;
}

namespace {

// Conjugate-form LP behind eval/cell queries:
//   minimize sum_i mult_i s_i - <q, x>   over x in the direction space V,
//   s.t.     s_i >= coeff + <alpha, x>   per term of factor i.
// x is parametrized linearly as x = B^T w with B the direction basis, so
// <alpha, x> = <B alpha, w>; no affine offsets enter anywhere.
struct ConjugateLP {
  LinProg prog;
  int d = 0;                     // direction space dimension
  std::vector<int> svar;         // LP index of s_i, -1 for multiplicity 0
  const LiftedHull* hull = nullptr;

  RVec dir_image(const RVec& v) const {
    const auto& sup = hull->support;
    RVec u(d);
    for (int r = 0; r < d; ++r) u[r] = dot(sup.dir_basis[r], v);
    return u;
  }

  explicit ConjugateLP(const LiftedHull& h) : hull(&h) {
    d = h.support.adim;
    int nactive = 0;
    for (const auto& [f, w] : h.factors)
      if (w > 0) ++nactive;
    prog = LinProg(d + nactive);
    for (int j = 0; j < d + nactive; ++j) prog.free_var[j] = true;
    int at = d;
    for (const auto& [f, w] : h.factors) {
      svar.push_back(w > 0 ? at : -1);
      if (w > 0) ++at;
    }
    for (std::size_t i = 0; i < h.factors.size(); ++i) {
      if (svar[i] < 0) continue;
      const auto& f = h.factors[i].first;
      for (const auto& [e, c] : f.poly.terms) {
        RVec img = dir_image(expo_to_rvec(e));
        RVec row = rvec_zero(prog.nvars);
        for (int r = 0; r < d; ++r) row[r] = -img[r];
        row[svar[i]] = Rat(1);
        prog.add_row(std::move(row), LpRel::Ge, c);
      }
    }
  }

  void set_objective(const RVec& q) {
    RVec img = dir_image(q);
    RVec obj = rvec_zero(prog.nvars);
    for (int r = 0; r < d; ++r) obj[r] = -img[r];
    for (std::size_t i = 0; i < hull->factors.size(); ++i)
      if (svar[i] >= 0) obj[svar[i]] = Rat(hull->factors[i].second);
    prog.objective = std::move(obj);
  }

  TVec ambient_x(const TVec& sol) const {
    const auto& sup = hull->support;
    TVec x(sup.dim, Two());
    for (int r = 0; r < d; ++r)
      for (int j = 0; j < sup.dim; ++j) x[j] += sup.dir_basis[r][j] * sol[r];
    return x;
  }
};

}  // namespace

TropScalar eval_concave(const LiftedHull& h, const RVec& q) {
  if (!h.support.contains(q)) return TropScalar::bottom();
  long total = 0;
  for (const auto& [f, w] : h.factors) total += w;
  if (total == 0) {
    // Neutral element: indicator of the origin.
    for (const auto& x : q)
      if (x != 0) return TropScalar::bottom();
    return TropScalar(Two());
  }
  ConjugateLP lp(h);
  lp.set_objective(q);
  LpResult r = lp_min(lp.prog);
  require(r.status == LpStatus::Optimal, "eval_concave: conjugate LP not optimal");
  return TropScalar(r.value);
}

LiftCell cell_of(const LiftedHull& h, const RVec& q) {
  LiftCell cell;
  cell.argmax.resize(h.factors.size());
  if (!h.support.contains_relint(q)) return cell;  // wall
  long total = 0;
  for (const auto& [f, w] : h.factors) total += w;
  if (total == 0) {
    cell.wall = false;
    cell.x = TVec(h.n, Two());
    cell.value = Two();
    return cell;
  }

  ConjugateLP lp(h);
  lp.set_objective(q);
  LpResult base = lp_min(lp.prog);
  require(base.status == LpStatus::Optimal, "cell_of: conjugate LP not optimal");

  // Pin the objective and probe each chart coordinate for uniqueness.
  LinProg probe = lp.prog;
  probe.add_row(probe.objective, LpRel::Eq, base.value);
  for (int r = 0; r < lp.d; ++r) {
    LinProg dir = probe;
    dir.objective = rvec_zero(dir.nvars);
    dir.objective[r] = Rat(1);
    LpResult lo = lp_min(dir);
    LpResult hi = lp_max(dir);
    require(lo.status == LpStatus::Optimal && hi.status == LpStatus::Optimal,
            "cell_of: probe LP failed");
    if (lo.value != hi.value) return cell;  // wall: evaluation point not unique
  }

  cell.wall = false;
  cell.x = lp.ambient_x(base.x);
  cell.value = base.value;
  for (std::size_t i = 0; i < h.factors.size(); ++i) {
    if (lp.svar[i] < 0) continue;
    const auto& f = h.factors[i].first;
    Two si = base.x[lp.svar[i]];
    for (const auto& [e, c] : f.poly.terms) {
      RVec img = lp.dir_image(expo_to_rvec(e));
      Two rhs = c;
      for (int r = 0; r < lp.d; ++r) rhs += img[r] * base.x[r];
      if (si == rhs) cell.argmax[i].push_back(e);
    }
  }
  return cell;
}

std::vector<EnvPiece> envelope_pieces(const LiftedHull& h) {
  // Candidate lifted points: per factor, multiplicity * (essential point).
  RMat bases{rvec_zero(h.support.dim)};
  TVec heights{Two()};
  for (const auto& [f, w] : h.factors) {
    if (w == 0) continue;
    RMat nb;
    TVec nh;
    for (const auto& e : f.essential) {
      RVec base = expo_to_rvec(e);
      TropScalar hv = f.eval(base);
      require(!hv.is_bottom(), "envelope_pieces: essential point off support");
      for (std::size_t k = 0; k < bases.size(); ++k) {
        RVec b = bases[k];
        for (int j = 0; j < h.support.dim; ++j) b[j] += Rat(w) * base[j];
        nb.push_back(std::move(b));
        nh.push_back(heights[k] + Rat(w) * hv.v);
      }
    }
    bases = std::move(nb);
    heights = std::move(nh);
  }
  // Keep the best height per base and reduce to the support chart.
  RMat red;
  TVec hts;
  std::vector<Expo> labels;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    Expo e(h.support.dim);
    for (int j = 0; j < h.support.dim; ++j) {
      Rat x = bases[k][j];
      require(x.get_den() == 1, "envelope_pieces: non-integer candidate base");
      e[j] = static_cast<long>(x.get_num().get_si());
    }
    bool merged = false;
    for (std::size_t t = 0; t < labels.size(); ++t) {
      if (labels[t] == e) {
        if (heights[k] > hts[t]) hts[t] = heights[k];
        merged = true;
        break;
      }
    }
    if (!merged) {
      labels.push_back(e);
      red.push_back(h.support.reduce(bases[k]));
      hts.push_back(heights[k]);
    }
  }
  return pieces_from_lifted_points(red, hts, labels, h.support);
}

ShiftResult generic_shift(const LiftedHull& h, unsigned long seed) {
  const QPolytope& sup = h.support;
  RVec z(sup.dim);
  for (int j = 0; j < sup.dim; ++j) {
    Rat mn = sup.vertices[0][j];
    for (const auto& v : sup.vertices)
      if (v[j] < mn) mn = v[j];
    z[j] = -mn - 1;
  }

  const int kmax = 64;
  for (int attempt = 0; attempt < kmax; ++attempt) {
    RVec delta = z;
    if (sup.adim > 0) {
      std::vector<Rat> eps(sup.adim);
      if (attempt == 0) {
        for (auto& e : eps) e = Rat(1, 10);
      } else {
        std::mt19937_64 rng(seed + 1000003ULL * static_cast<unsigned long>(attempt));
        long den = 10L << std::min(attempt, 20);
        for (auto& e : eps) {
          long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den - 1));
          e = Rat(num, den);
        }
      }
      for (int r = 0; r < sup.adim; ++r)
        for (int j = 0; j < sup.dim; ++j) delta[j] += eps[r] * sup.dir_basis[r][j];
    }

    std::vector<Expo> pts = lattice_points_shifted(sup, delta);
    bool ok = true;
    for (const auto& p : pts) {
      RVec q = sub(expo_to_rvec(p), delta);
      if (sup.on_rel_boundary(q)) { ok = false; break; }
    }
    if (!ok) continue;
    for (const auto& p : pts) {
      RVec q = sub(expo_to_rvec(p), delta);
      if (cell_of(h, q).wall) { ok = false; break; }
    }
    if (!ok) continue;
    return ShiftResult{std::move(delta), attempt + 1, std::move(pts)};
  }
  throw InternalError("generic_shift: no generic shift found");
}

}  // namespace trop
