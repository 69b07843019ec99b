#ifndef SGSR_FACTORS_HPP
#define SGSR_FACTORS_HPP

#include <utility>
#include <vector>

#include "sgsr/signed_graph.hpp"

namespace sgsr {

struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Negative degree forced by r-regularity and rho net-regularity: (r - rho)/2.
int negative_regularity(int r, int rho);

using EdgeList = std::vector<std::pair<int, int>>;  // sorted, u < v

// All k-regular spanning subgraphs of the underlying graph of g, as sorted
// edge lists. k = 0 yields the single empty subgraph.
std::vector<EdgeList> k_factors(const SignedGraph& g, int k);

// One representative per orbit of Aut(underlying(g)) acting on the k-regular
// spanning subgraphs; the representative is the lexicographically smallest
// edge list of its orbit. Exhaustive: expanding the representatives by the
// automorphism group recovers every factor.
std::vector<EdgeList> enumerate_negative_subgraphs(const SignedGraph& g, int k);

// The signing of g's underlying graph that is negative exactly on the factor.
SignedGraph sign_with_negative(const SignedGraph& g, const EdgeList& factor);

// Applies a vertex permutation (vertex -> vertex) to an edge list and
// restores sorted order.
EdgeList apply_permutation(const EdgeList& edges, const std::vector<int>& perm);

}  // namespace sgsr

#endif  // SGSR_FACTORS_HPP
