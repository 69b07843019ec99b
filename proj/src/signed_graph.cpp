#include "sgsr/signed_graph.hpp"

#include <bit>
#include <cassert>

namespace sgsr {

std::uint64_t bitmask_all(int n) {
  return n >= 64 ? ~0ull : ((1ull << n) - 1ull);
}

SignedGraph::SignedGraph(int n) : n_(n), adj_(n, 0), neg_(n, 0) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("order must be in [1," +
                                std::to_string(kMaxOrder) + "]");
}

SignedGraph SignedGraph::from_edge_list(int n,
                                        const std::vector<SignedEdge>& edges) {
  SignedGraph g(n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n) throw VertexRangeError(e.u, n);
    if (e.v < 0 || e.v >= n) throw VertexRangeError(e.v, n);
    if (e.u == e.v) throw SelfLoopError(e.u);
    if (e.sign != 1 && e.sign != -1) throw BadSignError(e.sign);
    if (g.has_edge(e.u, e.v)) throw DuplicateEdgeError(e.u, e.v);
    g.adj_[e.u] |= 1ull << e.v;
    g.adj_[e.v] |= 1ull << e.u;
    if (e.sign < 0) {
      g.neg_[e.u] |= 1ull << e.v;
      g.neg_[e.v] |= 1ull << e.u;
    }
  }
  return g;
}

SignedGraph SignedGraph::from_rows(int n, std::vector<std::uint64_t> adj,
                                   std::vector<std::uint64_t> neg) {
  SignedGraph g(n);
  assert(static_cast<int>(adj.size()) == n && static_cast<int>(neg.size()) == n);
  for (int v = 0; v < n; ++v) {
    assert((adj[v] & ~bitmask_all(n)) == 0);
    assert((adj[v] >> v & 1u) == 0);
    assert((neg[v] & ~adj[v]) == 0);
  }
#ifndef NDEBUG
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      assert(((adj[u] >> v) & 1u) == ((adj[v] >> u) & 1u));
      assert(((neg[u] >> v) & 1u) == ((neg[v] >> u) & 1u));
    }
#endif
  g.adj_ = std::move(adj);
  g.neg_ = std::move(neg);
  return g;
}

int SignedGraph::edge_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += std::popcount(adj_[v]);
  return m / 2;
}

int SignedGraph::negative_edge_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += std::popcount(neg_[v]);
  return m / 2;
}

int SignedGraph::positive_edge_count() const {
  return edge_count() - negative_edge_count();
}

int SignedGraph::sign(int u, int v) const {
  if (!has_edge(u, v)) return 0;
  return (neg_[u] >> v & 1u) ? -1 : 1;
}

DegreeTriple SignedGraph::degree(int v) const {
  DegreeTriple t;
  t.total = std::popcount(adj_[v]);
  t.neg = std::popcount(neg_[v]);
  t.pos = t.total - t.neg;
  t.net = t.pos - t.neg;
  return t;
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.push_back({u, v, sign(u, v)});
  return out;
}

DegreeReport degrees(const SignedGraph& g) {
  DegreeReport rep;
  rep.per_vertex.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) rep.per_vertex.push_back(g.degree(v));
  rep.regular = rep.per_vertex[0].total;
  rep.net_regular = rep.per_vertex[0].net;
  for (const auto& t : rep.per_vertex) {
    if (rep.regular && t.total != *rep.regular) rep.regular.reset();
    if (rep.net_regular && t.net != *rep.net_regular) rep.net_regular.reset();
  }
  return rep;
}

SignedGraph negate(const SignedGraph& g) {
  int n = g.order();
  std::vector<std::uint64_t> adj(n), neg(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.adj_bits(v);
    neg[v] = g.adj_bits(v) & ~g.neg_bits(v);
  }
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

SignedGraph switched(const SignedGraph& g, std::uint64_t subset) {
  int n = g.order();
  subset &= bitmask_all(n);
  std::vector<std::uint64_t> adj(n), neg(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.adj_bits(v);
    std::uint64_t cross =
        (subset >> v & 1u) ? (adj[v] & ~subset) : (adj[v] & subset);
    neg[v] = g.neg_bits(v) ^ cross;
  }
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

SignedGraph switched(const SignedGraph& g, const std::vector<int>& subset) {
  std::uint64_t mask = 0;
  for (int v : subset) {
    if (v < 0 || v >= g.order()) throw VertexRangeError(v, g.order());
    mask |= 1ull << v;
  }
  return switched(g, mask);
}

SignedGraph underlying(const SignedGraph& g) {
  int n = g.order();
  std::vector<std::uint64_t> adj(n), neg(n, 0);
  for (int v = 0; v < n; ++v) adj[v] = g.adj_bits(v);
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

SignedGraph subgraph_pos(const SignedGraph& g) {
  int n = g.order();
  std::vector<std::uint64_t> adj(n), neg(n, 0);
  for (int v = 0; v < n; ++v) adj[v] = g.pos_bits(v);
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

SignedGraph subgraph_neg(const SignedGraph& g) {
  int n = g.order();
  std::vector<std::uint64_t> adj(n), neg(n);
  for (int v = 0; v < n; ++v) adj[v] = neg[v] = g.neg_bits(v);
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

WalkCounts2 two_walk_counts(const SignedGraph& g, int u, int v) {
  WalkCounts2 w;
  if (u == v) {
    w.pos = std::popcount(g.adj_bits(u));  // every closed 2-walk has sign +1
    w.neg = 0;
    return w;
  }
  std::uint64_t common = g.adj_bits(u) & g.adj_bits(v);
  // A 2-walk u-w-v is negative iff exactly one of uw, wv is negative.
  w.neg = std::popcount(common & (g.neg_bits(u) ^ g.neg_bits(v)));
  w.pos = std::popcount(common) - w.neg;
  return w;
}

bool is_balanced(const SignedGraph& g) {
  int n = g.order();
  std::vector<int> mark(n, 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (mark[s] != 0) continue;
    mark[s] = 1;
    queue.assign(1, s);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      std::uint64_t nb = g.adj_bits(u);
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        int want = mark[u] * g.sign(u, v);
        if (mark[v] == 0) {
          mark[v] = want;
          queue.push_back(v);
        } else if (mark[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::array<int, 3>> unbalanced_triangles(const SignedGraph& g) {
  std::vector<std::array<int, 3>> out;
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      std::uint64_t common = g.adj_bits(u) & g.adj_bits(v) & ~bitmask_all(v + 1);
      while (common) {
        int w = std::countr_zero(common);
        common &= common - 1;
        if (g.sign(u, v) * g.sign(u, w) * g.sign(v, w) < 0)
          out.push_back({u, v, w});
      }
    }
  return out;
}

bool is_connected(const SignedGraph& g) {
  int n = g.order();
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.adj_bits(v);
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == bitmask_all(n);
}

}  // namespace sgsr
