#include "sgsr/factors.hpp"

#include <algorithm>

#include "sgsr/canonical.hpp"

namespace sgsr {

int negative_regularity(int r, int rho) {
  if (rho < 0 || r < rho)
    throw ParityError("need r >= rho >= 0, got r=" + std::to_string(r) +
                      " rho=" + std::to_string(rho));
  if ((r - rho) % 2 != 0)
    throw ParityError("r and rho must have equal parity, got r=" +
                      std::to_string(r) + " rho=" + std::to_string(rho));
  return (r - rho) / 2;
}

namespace {

struct FactorSearch {
  int n, k;
  EdgeList edges;                 // edges of the host graph, sorted
  std::vector<int> chosen_deg;    // degree inside the factor so far
  std::vector<int> remaining;     // undecided edges incident to each vertex
  std::vector<int> picked;        // indices into edges
  std::vector<EdgeList> out;

  void dfs(size_t idx) {
    if (idx == edges.size()) {
      EdgeList f;
      f.reserve(picked.size());
      for (int i : picked) f.push_back(edges[i]);
      out.push_back(std::move(f));
      return;
    }
    auto [u, v] = edges[idx];
    --remaining[u];
    --remaining[v];
    // include the edge
    if (chosen_deg[u] < k && chosen_deg[v] < k) {
      ++chosen_deg[u];
      ++chosen_deg[v];
      if (feasible(u) && feasible(v)) {
        picked.push_back(static_cast<int>(idx));
        dfs(idx + 1);
        picked.pop_back();
      }
      --chosen_deg[u];
      --chosen_deg[v];
    }
    // exclude the edge
    if (feasible(u) && feasible(v)) dfs(idx + 1);
    ++remaining[u];
    ++remaining[v];
  }

  bool feasible(int v) const { return chosen_deg[v] + remaining[v] >= k; }
};

}  // namespace

std::vector<EdgeList> k_factors(const SignedGraph& g, int k) {
  int n = g.order();
  if (k == 0) return {EdgeList{}};
  for (int v = 0; v < n; ++v)
    if (g.degree(v).total < k) return {};
  FactorSearch search;
  search.n = n;
  search.k = k;
  for (const auto& e : g.edges()) search.edges.emplace_back(e.u, e.v);
  search.chosen_deg.assign(n, 0);
  search.remaining.assign(n, 0);
  for (auto [u, v] : search.edges) {
    ++search.remaining[u];
    ++search.remaining[v];
  }
  bool ok = true;
  for (int v = 0; v < n && ok; ++v) ok = search.feasible(v);
  if (ok) search.dfs(0);
  return search.out;
}

EdgeList apply_permutation(const EdgeList& edges, const std::vector<int>& perm) {
  EdgeList out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeList> enumerate_negative_subgraphs(const SignedGraph& g, int k) {
  auto factors = k_factors(g, k);
  if (factors.size() <= 1) return factors;
  auto group = automorphisms(underlying(g));
  if (group.size() == 1) return factors;
  std::vector<EdgeList> reps;
  for (const auto& f : factors) {
    bool minimal = true;
    for (const auto& perm : group) {
      if (apply_permutation(f, perm) < f) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(f);
  }
  return reps;
}

SignedGraph sign_with_negative(const SignedGraph& g, const EdgeList& factor) {
  int n = g.order();
  std::vector<std::uint64_t> adj(n), neg(n, 0);
  for (int v = 0; v < n; ++v) adj[v] = g.adj_bits(v);
  for (auto [u, v] : factor) {
    neg[u] |= 1ull << v;
    neg[v] |= 1ull << u;
  }
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

}  // namespace sgsr
