#include "trop/tropsolve.hpp"

#include <algorithm>
#include <utility>

#include "trop/errors.hpp"
#include "trop/game.hpp"

namespace trop {

LinearSystem nabla_to_two_sided(const LinearSystem& sys) {
  LinearSystem out;
  out.n = sys.n;
  out.cols = sys.cols;
  for (const auto& row : sys.rows) {
    switch (row.kind) {
      case RelKind::Nabla: {
        require(!row.plus.empty(), "nabla_to_two_sided: root row without entries");
        if (row.plus.size() == 1) {
          LinearSystem::Row r{row.rel, row.shift, RelKind::Geq, {}, {row.plus[0]}};
          out.rows.push_back(std::move(r));
          break;
        }
        for (std::size_t k = 0; k < row.plus.size(); ++k) {
          LinearSystem::Row r{row.rel, row.shift, RelKind::Geq, {}, {row.plus[k]}};
          for (std::size_t j = 0; j < row.plus.size(); ++j)
            if (j != k) r.plus.push_back(row.plus[j]);
          out.rows.push_back(std::move(r));
        }
        break;
      }
      case RelKind::Eq: {
        out.rows.push_back({row.rel, row.shift, RelKind::Geq, row.plus, row.minus});
        out.rows.push_back({row.rel, row.shift, RelKind::Geq, row.minus, row.plus});
        break;
      }
      case RelKind::Geq:
      case RelKind::Gt:
        out.rows.push_back(row);
        break;
    }
  }
  return out;
}

FeasResult feasibility(const LinearSystem& two_sided) {
  FeasResult res;
  const int ncols = static_cast<int>(two_sided.cols.size());

  LinearSystem live;
  live.n = two_sided.n;
  live.cols = two_sided.cols;
  for (const auto& row : two_sided.rows) {
    require(row.kind != RelKind::Nabla, "feasibility: row not two-sided");
    if (row.plus.empty()) {
      if (row.minus.empty()) continue;
      return res;  // a finite side must dominate an absent one
    }
    live.rows.push_back(row);
  }
  if (ncols == 0) {
    res.verdict = Verdict::Feasible;
    res.eps_value = eps_threshold({});
    return res;
  }

  // A witness makes every cycle nonnegative under the row argmax strategy,
  // so a negative value at a column node refutes feasibility exactly.
  GameInstance game = to_game(live);
  const GameSolution decide = solve_game(game);
  for (int c = 0; c < ncols; ++c)
    if (decide.value[c].sign() < 0) return res;

  // Zero self-loops pin every column value at zero without creating new
  // negative plays, so in the anchored game the bias inequalities hold on
  // all arcs and the column biases form a witness.
  std::vector<bool> looped(ncols, false);
  for (const auto& a : game.arcs)
    if (a.from == a.to && a.from < ncols) looped[a.from] = true;
  for (int c = 0; c < ncols; ++c)
    if (!looped[c]) game.arcs.push_back({c, c, Two()});
  const GameSolution anchored = solve_game(game);

  res.verdict = Verdict::Feasible;
  res.witness.resize(ncols);
  for (int c = 0; c < ncols; ++c) {
    require(anchored.value[c].sign() == 0, "feasibility: anchored column value nonzero");
    res.witness[c] = anchored.bias[c];
  }
  Two mn = res.witness[0];
  for (const Two& y : res.witness) mn = std::min(mn, y);
  for (Two& y : res.witness) y = y - mn;
  require(check_rows(two_sided, res.witness), "feasibility: witness failed row checks");

  // Exact instantiation threshold from the binding comparisons.
  std::vector<std::pair<Two, Two>> pairs;
  for (const auto& row : two_sided.rows) {
    if (row.plus.empty() || row.minus.empty()) continue;
    Two u = row.plus[0].second + res.witness[row.plus[0].first];
    for (const auto& [c, a] : row.plus) u = std::max(u, a + res.witness[c]);
    for (const auto& [c, b] : row.minus) pairs.push_back({u, b + res.witness[c]});
  }
  res.eps_value = eps_threshold(pairs);
  res.witness_rational = instantiate(res.witness, res.eps_value);
  require(check_rows_rational(two_sided, res.witness_rational, res.eps_value),
          "feasibility: instantiated witness failed row checks");
  return res;
}

bool check_rows(const LinearSystem& two_sided, const TVec& y) {
  for (const auto& row : two_sided.rows) {
    TropScalar vp = TropScalar::bottom(), vm = TropScalar::bottom();
    for (const auto& [c, a] : row.plus) vp = tadd(vp, TropScalar(a + y[c]));
    for (const auto& [c, b] : row.minus) vm = tadd(vm, TropScalar(b + y[c]));
    if (!vm.finite) continue;
    if (!vp.finite || vp < vm) return false;
  }
  return true;
}

bool check_rows_rational(const LinearSystem& two_sided, const RVec& y, const Rat& t) {
  for (const auto& row : two_sided.rows) {
    bool pany = false, many = false;
    Rat vp, vm;
    for (const auto& [c, a] : row.plus) {
      const Rat v = a.a + t * a.b + y[c];
      if (!pany || v > vp) vp = v;
      pany = true;
    }
    for (const auto& [c, b] : row.minus) {
      const Rat v = b.a + t * b.b + y[c];
      if (!many || v > vm) vm = v;
      many = true;
    }
    if (!many) continue;
    if (!pany || vp < vm) return false;
  }
  return true;
}

Rat eps_threshold(const std::vector<std::pair<Two, Two>>& pairs) {
  bool bound = false;
  Rat t;
  for (const auto& [u, v] : pairs) {
    require(!(u < v), "eps_threshold: pair not ordered");
    if (u.a > v.a && u.b < v.b) {
      const Rat cand = (u.a - v.a) / (v.b - u.b);
      if (!bound || cand < t) t = cand;
      bound = true;
    }
  }
  if (!bound) t = 1;
  return t / 2;
}

RVec instantiate(const TVec& y, const Rat& t) {
  RVec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i].a + t * y[i].b;
  return out;
}

std::optional<TVec> extract_point(const LinearSystem& sys, const TVec& y) {
  require(y.size() == sys.cols.size(), "extract_point: witness size mismatch");
  const Expo zero(sys.n, 0);
  auto find = [&](const Expo& e) -> int {
    for (std::size_t c = 0; c < sys.cols.size(); ++c)
      if (sys.cols[c] == e) return static_cast<int>(c);
    return -1;
  };
  const int c0 = find(zero);
  if (c0 < 0) return std::nullopt;
  TVec x(sys.n);
  for (int i = 0; i < sys.n; ++i) {
    Expo e(sys.n, 0);
    e[i] = 1;
    const int ci = find(e);
    if (ci < 0) return std::nullopt;
    x[i] = y[ci] - y[c0];
  }
  return x;
}

std::optional<RVec> rational_point(const PolySystem& sys, const TVec& x) {
  if (static_cast<int>(x.size()) != sys.n || !sys.is_solution(x)) return std::nullopt;
  auto side_values = [&](const TPoly& p) {
    std::vector<Two> vals;
    vals.reserve(p.terms.size());
    for (const auto& [e, c] : p.terms) {
      Two v = c;
      for (int i = 0; i < sys.n; ++i) v += Rat(e[i]) * x[i];
      vals.push_back(v);
    }
    return vals;
  };
  // Instantiating strictly below every binding threshold keeps each strict
  // lexicographic comparison strict, so strict rows need no special pairs.
  std::vector<std::pair<Two, Two>> pairs;
  auto dominate = [&](const std::vector<Two>& top, const std::vector<Two>& rest) {
    Two u = top.front();
    for (const Two& v : top)
      if (v > u) u = v;
    for (const Two& v : rest) pairs.emplace_back(u, v);
  };
  for (const Relation& rel : sys.rels) {
    const std::vector<Two> vp = side_values(rel.plus);
    const std::vector<Two> vm = side_values(rel.minus);
    switch (rel.kind) {
      case RelKind::Nabla:
        dominate(vp, vp);
        break;
      case RelKind::Geq:
      case RelKind::Gt:
        // plus is nonempty whenever minus is: the relation holds at x.
        if (!vm.empty()) dominate(vp, vm);
        break;
      case RelKind::Eq:
        if (!vp.empty()) {
          dominate(vp, vp);
          dominate(vm, vm);
        }
        break;
    }
  }
  const Rat t = eps_threshold(pairs);
  RVec out = instantiate(x, t);
  TVec back(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) back[i] = Two(out[i]);
  require(sys.is_solution(back), "rational_point: instantiation failed");
  return out;
}

}  // namespace trop
