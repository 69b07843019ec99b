#ifndef SGSR_SIGNED_GRAPH_HPP
#define SGSR_SIGNED_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgsr {

// Construction errors, one type per failure mode.
struct SelfLoopError : std::invalid_argument {
  explicit SelfLoopError(int v)
      : std::invalid_argument("self-loop at vertex " + std::to_string(v)) {}
};
struct VertexRangeError : std::invalid_argument {
  VertexRangeError(int v, int n)
      : std::invalid_argument("vertex " + std::to_string(v) +
                              " out of range [0," + std::to_string(n) + ")") {}
};
struct DuplicateEdgeError : std::invalid_argument {
  DuplicateEdgeError(int u, int v)
      : std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "}") {}
};
struct BadSignError : std::invalid_argument {
  explicit BadSignError(int s)
      : std::invalid_argument("edge sign must be +1 or -1, got " +
                              std::to_string(s)) {}
};

struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 0;  // +1 or -1
  bool operator==(const SignedEdge&) const = default;
};

struct DegreeTriple {
  int total = 0;
  int pos = 0;
  int neg = 0;
  int net = 0;  // pos - neg
  bool operator==(const DegreeTriple&) const = default;
};

struct WalkCounts2 {
  int pos = 0;
  int neg = 0;
  int a2() const { return pos - neg; }  // entry of the squared sign matrix
  bool operator==(const WalkCounts2&) const = default;
};

// Per-vertex degree triples plus the derived regularity flags.
struct DegreeReport {
  std::vector<DegreeTriple> per_vertex;
  std::optional<int> regular;      // r if every total degree equals r
  std::optional<int> net_regular;  // rho if every net-degree equals rho
};

// Symmetric sign pattern over {-1,0,+1} with zero diagonal.
// Two bitset rows per vertex: edge-present and edge-negative.
// Immutable after construction; all operations return new values.
class SignedGraph {
 public:
  static constexpr int kMaxOrder = 64;

  SignedGraph() = default;
  explicit SignedGraph(int n);  // edgeless on n vertices

  static SignedGraph from_edge_list(int n, const std::vector<SignedEdge>& edges);
  // Trusted constructor from bitset rows; validates invariants with asserts only.
  static SignedGraph from_rows(int n, std::vector<std::uint64_t> adj,
                               std::vector<std::uint64_t> neg);

  int order() const { return n_; }
  int edge_count() const;
  int positive_edge_count() const;
  int negative_edge_count() const;
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  int sign(int u, int v) const;

  std::uint64_t adj_bits(int v) const { return adj_[v]; }
  std::uint64_t neg_bits(int v) const { return neg_[v]; }
  std::uint64_t pos_bits(int v) const { return adj_[v] & ~neg_[v]; }

  DegreeTriple degree(int v) const;
  std::vector<SignedEdge> edges() const;  // sorted lexicographically

  bool operator==(const SignedGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> neg_;
};

DegreeReport degrees(const SignedGraph& g);

SignedGraph negate(const SignedGraph& g);
// Flips the sign of every edge with exactly one endpoint in the subset.
SignedGraph switched(const SignedGraph& g, std::uint64_t subset);
SignedGraph switched(const SignedGraph& g, const std::vector<int>& subset);
SignedGraph underlying(const SignedGraph& g);
SignedGraph subgraph_pos(const SignedGraph& g);
SignedGraph subgraph_neg(const SignedGraph& g);

// pos/neg 2-walk counts between u and v; the diagonal counts closed 2-walks,
// so two_walk_counts(g,u,u) = (d(u), 0).
WalkCounts2 two_walk_counts(const SignedGraph& g, int u, int v);

// Balance via two-coloring BFS: balanced iff vertex marks s(v) in {+1,-1}
// exist with s(u)s(v) = sign(uv) on every edge.
bool is_balanced(const SignedGraph& g);
std::vector<std::array<int, 3>> unbalanced_triangles(const SignedGraph& g);

bool is_connected(const SignedGraph& g);

std::uint64_t bitmask_all(int n);

}  // namespace sgsr

#endif  // SGSR_SIGNED_GRAPH_HPP
