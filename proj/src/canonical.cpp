#include "sgsr/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace sgsr {

namespace {

// pair code used throughout the canonical machinery
inline std::uint8_t pair_code(const SignedGraph& g, int u, int v) {
  int s = g.sign(u, v);
  return s == 0 ? 0 : (s > 0 ? 1 : 2);
}

std::vector<int> refine(const SignedGraph& g, std::vector<int> colors) {
  int n = g.order();
  for (;;) {
    // signature: old color followed by the sorted (neighbour color, sign) list
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      std::vector<int> nb;
      std::uint64_t bits = g.adj_bits(v);
      while (bits) {
        int u = std::countr_zero(bits);
        bits &= bits - 1;
        nb.push_back(colors[u] * 2 + (g.sign(v, u) < 0 ? 1 : 0));
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

std::vector<int> initial_colors(const SignedGraph& g) {
  int n = g.order();
  std::vector<std::array<int, 3>> key(n);
  for (int v = 0; v < n; ++v) {
    auto t = g.degree(v);
    key[v] = {t.total, t.pos, t.neg};
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return key[x] < key[y]; });
  std::vector<int> colors(n);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && key[order[i]] != key[order[i - 1]]) ++c;
    colors[order[i]] = c;
  }
  return colors;
}

struct CanonSearch {
  const SignedGraph& g;
  int n;
  bool have_best = false;
  std::vector<std::uint8_t> best;
  std::vector<int> best_order;
  std::vector<std::vector<int>> autos;  // vertex -> vertex maps found so far
  std::vector<int> path;                // individualized vertices on the DFS path

  explicit CanonSearch(const SignedGraph& graph) : g(graph), n(graph.order()) {}

  std::vector<std::uint8_t> serialize(const std::vector<int>& order) const {
    std::vector<std::uint8_t> code;
    code.reserve(n * (n - 1) / 2);
    for (int col = 1; col < n; ++col)
      for (int row = 0; row < col; ++row)
        code.push_back(pair_code(g, order[row], order[col]));
    return code;
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[colors[v]] = v;
    auto code = serialize(order);
    if (!have_best || code < best) {
      have_best = true;
      best = std::move(code);
      best_order = order;
    } else if (code == best) {
      // equal codes give an automorphism: order[i] -> best_order[i]
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[order[i]] = best_order[i];
      autos.push_back(std::move(perm));
    }
  }

  // skip v if an automorphism fixing the current path maps a tried vertex to v
  bool pruned(const std::vector<int>& tried, int v) const {
    for (const auto& perm : autos) {
      bool fixes = true;
      for (int w : path)
        if (perm[w] != w) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int u : tried)
        if (perm[u] == v) return true;
    }
    return false;
  }

  void dfs(std::vector<int> colors) {
    colors = refine(g, colors);
    int cell_color = -1;
    for (int c = 0;; ++c) {
      int count = 0;
      for (int v = 0; v < n; ++v) count += colors[v] == c;
      if (count == 0) {
        leaf(colors);  // discrete partition
        return;
      }
      if (count > 1) {
        cell_color = c;
        break;
      }
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != cell_color) continue;
      if (pruned(tried, v)) continue;
      tried.push_back(v);
      std::vector<int> child(colors);
      for (int u = 0; u < n; ++u)
        if (child[u] > cell_color) ++child[u];
      child[v] = cell_color;
      for (int u = 0; u < n; ++u)
        if (u != v && colors[u] == cell_color) child[u] = cell_color + 1;
      path.push_back(v);
      dfs(std::move(child));
      path.pop_back();
    }
  }

  void run() { dfs(initial_colors(g)); }
};

}  // namespace

std::string CanonicalForm::to_string() const {
  static const char* digits = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  int acc = 0, bits = 0;
  for (std::uint8_t c : code) {
    acc = acc * 3 + c;
    if (++bits == 2) {  // two trits per nibble (max 8 < 16)
      out.push_back(digits[acc]);
      acc = bits = 0;
    }
  }
  if (bits) out.push_back(digits[acc]);
  return out;
}

CanonicalForm canonical_form(const SignedGraph& g) {
  CanonSearch search(g);
  search.run();
  return CanonicalForm{g.order(), std::move(search.best)};
}

std::vector<int> canonical_labeling(const SignedGraph& g) {
  CanonSearch search(g);
  search.run();
  return search.best_order;
}

bool signed_isomorphic(const SignedGraph& g, const SignedGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      g.negative_edge_count() != h.negative_edge_count())
    return false;
  auto key = [](const SignedGraph& x) {
    std::vector<std::array<int, 3>> ks;
    for (int v = 0; v < x.order(); ++v) {
      auto t = x.degree(v);
      ks.push_back({t.total, t.pos, t.neg});
    }
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  if (key(g) != key(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<std::vector<int>> automorphisms(const SignedGraph& g) {
  int n = g.order();
  std::vector<int> colors = refine(g, initial_colors(g));
  std::vector<std::vector<int>> group;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](int v, int x) {
    if (colors[x] != colors[v]) return false;
    for (int u = 0; u < v; ++u)
      if (g.sign(v, u) != g.sign(x, image[u])) return false;
    return true;
  };
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      group.push_back(image);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x] || !consistent(v, x)) continue;
      used[x] = true;
      image[v] = x;
      self(self, v + 1);
      used[x] = false;
    }
  };
  dfs(dfs, 0);
  assert(!group.empty());
  return group;
}

std::vector<int> refined_colors(const SignedGraph& g) {
  return refine(g, initial_colors(g));
}

SignedGraph relabeled(const SignedGraph& g, const std::vector<int>& order) {
  // order[i] = original vertex placed at position i
  int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges()) {
    int u = pos[e.u], v = pos[e.v];
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, e.sign});
  }
  return SignedGraph::from_edge_list(n, edges);
}

}  // namespace sgsr
