#ifndef SGSR_SEARCH_ENGINE_HPP
#define SGSR_SEARCH_ENGINE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sgsr/signed_graph.hpp"

namespace sgsr::engine {

// Pairwise targets for the entries of the squared sign matrix: a on positive
// edges, b on negative edges, c on non-adjacent pairs (absent for complete
// targets, where non-adjacent pairs are rejected outright).
struct PairTarget {
  int a = 0;
  int b = 0;
  std::optional<int> c;
};

struct Limits {
  long long max_nodes = 0;  // 0 = unlimited
  std::chrono::steady_clock::time_point deadline{};  // epoch = unlimited
};

struct Stats {
  long long nodes = 0;
  long long emitted = 0;
  bool budget_exceeded = false;
};

// Emitted graphs arrive in their canonical labeling; return false to stop.
using EmitFn = std::function<bool(const SignedGraph&)>;

// Exhaustive, isomorph-free construction of connected graphs on n vertices
// that are r-regular with every vertex incident to exactly k_neg negative
// edges (k_neg = 0 generates unsigned regular graphs). Vertices are added one
// at a time; a partial labeling survives only while it is the lexicographic
// maximum of its isomorphism class under the column-major pair-code string,
// which makes every isomorphism class appear exactly once. The optional pair
// target prunes as soon as a decided pair can no longer reach its target
// value.
Stats run(int n, int r, int k_neg, const std::optional<PairTarget>& target,
          const Limits& limits, const EmitFn& emit);

}  // namespace sgsr::engine

#endif  // SGSR_SEARCH_ENGINE_HPP
