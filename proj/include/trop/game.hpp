#pragma once

#include <string>
#include <vector>

#include "trop/macaulay.hpp"
#include "trop/scalar.hpp"

namespace trop {

/// Mean-payoff game: Max nodes pick arcs maximizing the long-run average
/// weight, Min nodes minimize it.  Every node needs at least one arc.
struct GameInstance {
  struct Arc {
    int from = 0;
    int to = 0;
    Two w;
  };
  std::vector<bool> is_max;
  std::vector<std::string> labels;
  std::vector<Arc> arcs;

  int nodes() const { return static_cast<int>(is_max.size()); }
};

/// Column nodes belong to Min with an arc to each row holding a finite
/// minus-layer entry there (weight: minus the entry); row nodes belong to Max
/// with an arc per plus-layer entry (weight: the entry).  The linearized
/// system is feasible exactly when every column node has value >= 0.
/// Requires a two-sided system whose rows all have plus entries; columns
/// without minus atoms get a zero self-loop.
GameInstance to_game(const LinearSystem& two_sided);

struct GameSolution {
  std::vector<Two> value;     // exact mean payoff per node
  std::vector<Two> bias;      // potential certifying the value, per node
  std::vector<int> strategy;  // chosen arc index per node
};

/// Exact two-player policy iteration (cycle means and biases over two-level
/// scalars, strict lexicographic improvements only).
GameSolution solve_game(const GameInstance& g);

/// Exhaustive positional-strategy evaluation; exponential, tests only.
std::vector<Two> solve_game_brute(const GameInstance& g);

}  // namespace trop
