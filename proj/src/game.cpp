#include "trop/game.hpp"

#include <utility>

#include "trop/errors.hpp"

namespace trop {

GameInstance to_game(const LinearSystem& two_sided) {
  GameInstance g;
  const int ncols = static_cast<int>(two_sided.cols.size());
  const int nrows = static_cast<int>(two_sided.rows.size());
  g.is_max.assign(ncols + nrows, false);
  g.labels.resize(ncols + nrows);
  for (int c = 0; c < ncols; ++c) g.labels[c] = expo_to_string(two_sided.cols[c], default_vars(two_sided.n));
  for (int r = 0; r < nrows; ++r) {
    g.is_max[ncols + r] = true;
    g.labels[ncols + r] = "row" + std::to_string(r);
  }
  std::vector<bool> col_has_arc(ncols, false);
  for (int r = 0; r < nrows; ++r) {
    const auto& row = two_sided.rows[r];
    require(row.kind != RelKind::Nabla, "to_game: row not two-sided");
    require(!row.plus.empty(), "to_game: row without plus entries has no game form");
    for (const auto& [c, a] : row.plus) g.arcs.push_back({ncols + r, c, a});
    for (const auto& [c, b] : row.minus) {
      g.arcs.push_back({c, ncols + r, -b});
      col_has_arc[c] = true;
    }
  }
  for (int c = 0; c < ncols; ++c)
    if (!col_has_arc[c]) g.arcs.push_back({c, c, Two()});
  return g;
}

namespace {

struct Eval {
  std::vector<Two> chi;  // cycle mean reached under the profile
  std::vector<Two> pi;   // bias, anchored at the least-index node per cycle
};

Eval evaluate_profile(const GameInstance& g, const std::vector<int>& pol) {
  const int n = g.nodes();
  Eval ev{std::vector<Two>(n), std::vector<Two>(n)};
  std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  for (int start = 0; start < n; ++start) {
    if (state[start] == 2) continue;
    std::vector<int> stack;
    int v = start;
    while (state[v] == 0) {
      state[v] = 1;
      stack.push_back(v);
      v = g.arcs[pol[v]].to;
    }
    std::size_t tail_end = stack.size();
    if (state[v] == 1) {
      std::size_t k = stack.size() - 1;
      while (stack[k] != v) --k;
      tail_end = k;
      Two sum;
      int anchor = v;
      for (std::size_t i = k; i < stack.size(); ++i) {
        sum = sum + g.arcs[pol[stack[i]]].w;
        if (stack[i] < anchor) anchor = stack[i];
      }
      const Two chi = sum / Rat(static_cast<long>(stack.size() - k));
      int cur = anchor;
      ev.chi[cur] = chi;
      ev.pi[cur] = Two();
      for (std::size_t step = 1; step < stack.size() - k; ++step) {
        const int nxt = g.arcs[pol[cur]].to;
        ev.chi[nxt] = chi;
        ev.pi[nxt] = ev.pi[cur] - g.arcs[pol[cur]].w + chi;
        state[cur] = 2;
        cur = nxt;
      }
      state[cur] = 2;
    }
    for (std::size_t i = tail_end; i-- > 0;) {
      const int u = stack[i];
      const int s = g.arcs[pol[u]].to;
      ev.chi[u] = ev.chi[s];
      ev.pi[u] = g.arcs[pol[u]].w - ev.chi[u] + ev.pi[s];
      state[u] = 2;
    }
  }
  return ev;
}

// Lexicographic appraisal of an arc against the current evaluation; for
// equal chi the second component orders biases through the arc.
std::pair<Two, Two> appraise(const GameInstance& g, const Eval& ev, int arc) {
  const auto& a = g.arcs[arc];
  return {ev.chi[a.to], a.w + ev.pi[a.to]};
}

bool lex_less(const std::pair<Two, Two>& p, const std::pair<Two, Two>& q) {
  if (p.first != q.first) return p.first < q.first;
  return p.second < q.second;
}

// One-player improvement sweep for the given side; returns true if any
// strategy entry changed.
bool improve_side(const GameInstance& g, const std::vector<std::vector<int>>& outs, const Eval& ev,
                  bool for_max, std::vector<int>& pol) {
  bool changed = false;
  for (int v = 0; v < g.nodes(); ++v) {
    if (g.is_max[v] != for_max) continue;
    auto best = appraise(g, ev, pol[v]);
    int best_arc = pol[v];
    for (int e : outs[v]) {
      const auto val = appraise(g, ev, e);
      const bool better = for_max ? lex_less(best, val) : lex_less(val, best);
      if (better) {
        best = val;
        best_arc = e;
      }
    }
    if (best_arc != pol[v]) {
      pol[v] = best_arc;
      changed = true;
    }
  }
  return changed;
}

void assert_local_optimality(const GameInstance& g, const std::vector<std::vector<int>>& outs,
                             const Eval& ev) {
  for (int v = 0; v < g.nodes(); ++v) {
    for (int e : outs[v]) {
      const auto& a = g.arcs[e];
      const Two through = a.w - ev.chi[v] + ev.pi[a.to];
      if (g.is_max[v]) {
        require(ev.chi[a.to] < ev.chi[v] || (ev.chi[a.to] == ev.chi[v] && !(ev.pi[v] < through)),
                "solve_game: optimality equations violated at a Max node");
      } else {
        require(ev.chi[v] < ev.chi[a.to] || (ev.chi[a.to] == ev.chi[v] && !(through < ev.pi[v])),
                "solve_game: optimality equations violated at a Min node");
      }
    }
  }
}

}  // namespace

GameSolution solve_game(const GameInstance& g) {
  const int n = g.nodes();
  require(n > 0, "solve_game: empty game");
  std::vector<std::vector<int>> outs(n);
  for (int e = 0; e < static_cast<int>(g.arcs.size()); ++e) {
    const auto& a = g.arcs[e];
    require(a.from >= 0 && a.from < n && a.to >= 0 && a.to < n, "solve_game: arc out of range");
    outs[a.from].push_back(e);
  }
  for (int v = 0; v < n; ++v) require(!outs[v].empty(), "solve_game: node without outgoing arcs");

  std::vector<int> pol(n);
  for (int v = 0; v < n; ++v) pol[v] = outs[v][0];

  const long cap = 1000 + 20L * n * static_cast<long>(g.arcs.size());
  Eval ev = evaluate_profile(g, pol);
  for (long round = 0;; ++round) {
    require(round <= cap, "solve_game: policy iteration exceeded its bound");
    // Optimize Max against the fixed Min strategy.
    for (long inner = 0;; ++inner) {
      require(inner <= cap, "solve_game: Max improvement exceeded its bound");
      if (!improve_side(g, outs, ev, true, pol)) break;
      ev = evaluate_profile(g, pol);
    }
    if (!improve_side(g, outs, ev, false, pol)) break;
    ev = evaluate_profile(g, pol);
  }
  assert_local_optimality(g, outs, ev);
  return {ev.chi, ev.pi, pol};
}

std::vector<Two> solve_game_brute(const GameInstance& g) {
  const int n = g.nodes();
  std::vector<std::vector<int>> outs(n);
  for (int e = 0; e < static_cast<int>(g.arcs.size()); ++e) outs[g.arcs[e].from].push_back(e);
  std::vector<int> min_nodes, max_nodes;
  for (int v = 0; v < n; ++v) {
    require(!outs[v].empty(), "solve_game_brute: node without outgoing arcs");
    (g.is_max[v] ? max_nodes : min_nodes).push_back(v);
  }

  // Odometer over strategy choices of the listed nodes.
  auto advance = [&](std::vector<std::size_t>& idx, const std::vector<int>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (++idx[i] < outs[nodes[i]].size()) return true;
      idx[i] = 0;
    }
    return false;
  };

  std::vector<Two> value(n);
  std::vector<int> pol(n);
  std::vector<std::size_t> tau(min_nodes.size(), 0);
  bool first_tau = true;
  do {
    std::vector<Two> best_for_tau(n);
    std::vector<std::size_t> sigma(max_nodes.size(), 0);
    bool first_sigma = true;
    do {
      for (std::size_t i = 0; i < min_nodes.size(); ++i) pol[min_nodes[i]] = outs[min_nodes[i]][tau[i]];
      for (std::size_t i = 0; i < max_nodes.size(); ++i) pol[max_nodes[i]] = outs[max_nodes[i]][sigma[i]];
      const Eval ev = evaluate_profile(g, pol);
      for (int v = 0; v < n; ++v)
        if (first_sigma || best_for_tau[v] < ev.chi[v]) best_for_tau[v] = ev.chi[v];
      first_sigma = false;
    } while (advance(sigma, max_nodes));
    for (int v = 0; v < n; ++v)
      if (first_tau || best_for_tau[v] < value[v]) value[v] = best_for_tau[v];
    first_tau = false;
  } while (advance(tau, min_nodes));
  return value;
}

}  // namespace trop
