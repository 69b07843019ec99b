#include "search_engine.hpp"

#include <array>
#include <bit>
#include <cassert>

namespace sgsr::engine {

namespace {

// pair codes inside the engine: 0 = non-edge, 1 = negative, 2 = positive
struct Search {
  int n = 0, r = 0, kneg = 0;
  std::optional<PairTarget> target;
  Limits limits;
  const EmitFn* emit = nullptr;
  Stats stats;
  bool stop = false;

  std::array<std::uint64_t, SignedGraph::kMaxOrder> adj{}, neg{};
  std::array<int, SignedGraph::kMaxOrder> deg{}, negdeg{};
  using Column = std::array<std::int8_t, SignedGraph::kMaxOrder>;

  int code(int i, int j) const {
    if (!(adj[i] >> j & 1u)) return 0;
    return (neg[i] >> j & 1u) ? 1 : 2;
  }

  void tick() {
    if (++stats.nodes % 1024 == 0 &&
        limits.deadline.time_since_epoch().count() != 0 &&
        std::chrono::steady_clock::now() > limits.deadline) {
      stats.budget_exceeded = true;
      stop = true;
    }
    if (limits.max_nodes > 0 && stats.nodes > limits.max_nodes) {
      stats.budget_exceeded = true;
      stop = true;
    }
  }

  // ---- canonicity: is the current labeling the lex-max pair-code string? --

  bool auto_fixes(const std::vector<int>& perm, const std::vector<int>& gamma,
                  int upto) const {
    for (int i = 0; i < upto; ++i)
      if (gamma[perm[i]] != perm[i]) return false;
    return true;
  }

  // Searches for a relabeling with a strictly larger code string; equal
  // completions are automorphisms of the prefix and prune their siblings.
  bool canon_dfs(int k, std::vector<int>& perm, std::uint64_t used,
                 std::vector<std::vector<int>>& autos) const {
    int t = static_cast<int>(perm.size());
    if (t == k) {
      std::vector<int> gamma(k);
      for (int i = 0; i < k; ++i) gamma[perm[i]] = i;
      autos.push_back(std::move(gamma));
      return true;
    }
    std::vector<int> tried;
    for (int u = 0; u < k; ++u) {
      if (used >> u & 1u) continue;
      int verdict = 0;  // 0 = tie, -1 = smaller (dead branch)
      for (int i = 0; i < t; ++i) {
        int cu = code(perm[i], u), cr = code(i, t);
        if (cu != cr) {
          if (cu > cr) return false;  // larger string exists
          verdict = -1;
          break;
        }
      }
      if (verdict < 0) continue;
      bool skip = false;
      for (const auto& gamma : autos) {
        if (!auto_fixes(perm, gamma, t)) continue;
        for (int w : tried)
          if (gamma[w] == u) {
            skip = true;
            break;
          }
        if (skip) break;
      }
      if (skip) continue;
      tried.push_back(u);
      perm.push_back(u);
      bool ok = canon_dfs(k, perm, used | (1ull << u), autos);
      perm.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool canonical(int k) const {
    if (k <= 1) return true;
    std::vector<int> perm;
    perm.reserve(k);
    std::vector<std::vector<int>> autos;
    return canon_dfs(k, perm, 0, autos);
  }

  // ---- feasibility ----

  // Necessary conditions for completing the first `placed` vertices to an
  // r-regular graph with exact negative degree kneg on n vertices.
  bool degrees_feasible(int placed) const {
    int m = n - placed;
    long long need_sum = 0, negneed_sum = 0;
    for (int j = 0; j < placed; ++j) {
      int need = r - deg[j];
      int negneed = kneg - negdeg[j];
      if (need < 0 || need > m) return false;
      if (negneed < 0 || negneed > m || negneed > need) return false;
      need_sum += need;
      negneed_sum += negneed;
    }
    long long fut = static_cast<long long>(m) * r - need_sum;
    if (fut < 0 || fut % 2 != 0 || fut > static_cast<long long>(m) * (m - 1))
      return false;
    long long fut_neg = static_cast<long long>(m) * kneg - negneed_sum;
    if (fut_neg < 0 || fut_neg % 2 != 0) return false;
    if (fut - fut_neg < 0) return false;
    return true;
  }

  // Bounds every decided pair's squared-matrix entry against its target.
  bool pairs_feasible(int placed) const {
    const PairTarget& t = *target;
    for (int i = 0; i < placed; ++i)
      for (int j = i + 1; j < placed; ++j) {
        int want;
        switch (code(i, j)) {
          case 2: want = t.a; break;
          case 1: want = t.b; break;
          default:
            if (!t.c) return false;  // complete target: every pair adjacent
            want = *t.c;
        }
        std::uint64_t common = adj[i] & adj[j];
        int walks = std::popcount(common);
        int negwalks = std::popcount(common & (neg[i] ^ neg[j]));
        int e = walks - 2 * negwalks;
        int f = std::min(r - deg[i], r - deg[j]);
        int mc = (kneg - negdeg[i]) + (kneg - negdeg[j]);
        if (want > e + f || want < e - std::min(f, mc)) return false;
      }
    return true;
  }

  bool connected(int placed) const {
    std::uint64_t seen = 1, frontier = 1;
    std::uint64_t all = placed >= 64 ? ~0ull : (1ull << placed) - 1;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj[v];
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == all;
  }

  // ---- construction ----

  void leaf() {
    if (!connected(n)) return;
    std::vector<std::uint64_t> a(adj.begin(), adj.begin() + n);
    std::vector<std::uint64_t> g(neg.begin(), neg.begin() + n);
    ++stats.emitted;
    if (!(*emit)(SignedGraph::from_rows(n, std::move(a), std::move(g))))
      stop = true;
  }

  void apply_column(int k, const Column& column) {
    for (int j = 0; j < k; ++j) {
      if (column[j] == 0) continue;
      adj[j] |= 1ull << k;
      adj[k] |= 1ull << j;
      ++deg[j];
      ++deg[k];
      if (column[j] == 1) {
        neg[j] |= 1ull << k;
        neg[k] |= 1ull << j;
        ++negdeg[j];
        ++negdeg[k];
      }
    }
  }

  void undo_column(int k, const Column& column) {
    for (int j = 0; j < k; ++j) {
      if (column[j] == 0) continue;
      adj[j] &= ~(1ull << k);
      --deg[j];
      --deg[k];
      if (column[j] == 1) {
        neg[j] &= ~(1ull << k);
        --negdeg[j];
        --negdeg[k];
      }
    }
    adj[k] = neg[k] = 0;
  }

  void extend(int k) {
    if (stop) return;
    tick();
    if (stop) return;
    if (k == n) {
      leaf();
      return;
    }
    Column column{};
    choose(k, 0, 0, 0, /*tie=*/k >= 2, column);
  }

  // Builds vertex k's column row by row. While `tie` holds the column equals
  // the previous vertex's column so far; the lex-max labeling never lets a
  // later column exceed its predecessor on the shared rows.
  void choose(int k, int j, int edges_in_col, int neg_in_col, bool tie,
              Column& column) {
    if (stop) return;
    if (j == k) {
      apply_column(k, column);
      if (degrees_feasible(k + 1) && (!target || pairs_feasible(k + 1)) &&
          canonical(k + 1))
        extend(k + 1);
      undo_column(k, column);
      return;
    }
    int prev = (tie && j <= k - 2) ? code(j, k - 1) : 2;
    for (int c = 2; c >= 0; --c) {
      if (c > prev) continue;
      if (c > 0) {
        if (deg[j] >= r || edges_in_col >= r) continue;
        if (c == 1 && (negdeg[j] >= kneg || neg_in_col >= kneg)) continue;
      }
      column[j] = static_cast<std::int8_t>(c);
      choose(k, j + 1, edges_in_col + (c > 0), neg_in_col + (c == 1),
             tie && j <= k - 2 && c == prev, column);
    }
    column[j] = 0;
  }
};

}  // namespace

Stats run(int n, int r, int k_neg, const std::optional<PairTarget>& target,
          const Limits& limits, const EmitFn& emit) {
  assert(n >= 1 && n <= SignedGraph::kMaxOrder);
  assert(r >= 0 && r < n && k_neg >= 0 && k_neg <= r);
  Search search;
  search.n = n;
  search.r = r;
  search.kneg = k_neg;
  search.target = target;
  search.limits = limits;
  search.emit = &emit;
  if (search.degrees_feasible(0)) search.extend(0);
  return search.stats;
}

}  // namespace sgsr::engine
