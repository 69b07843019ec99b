#ifndef SGSR_CANONICAL_HPP
#define SGSR_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sgsr/signed_graph.hpp"

namespace sgsr {

// Total-order key for signed graphs: order plus the sign-matrix serialization
// (column-major pair codes 0 = non-edge, 1 = positive, 2 = negative) under
// the canonical vertex ordering. Equal keys iff sign-preserving isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> code;
  auto operator<=>(const CanonicalForm&) const = default;
  std::string to_string() const;  // compact digest for reports
};

CanonicalForm canonical_form(const SignedGraph& g);
// The vertex ordering realizing the canonical form (position -> vertex).
std::vector<int> canonical_labeling(const SignedGraph& g);

bool signed_isomorphic(const SignedGraph& g, const SignedGraph& h);

// The full automorphism group (sign-preserving), one permutation per element,
// vertex -> vertex. Identity always included.
std::vector<std::vector<int>> automorphisms(const SignedGraph& g);

// Stable equitable coloring refined from the (d, d+, d-) triples by signed
// neighbourhood multisets; color ids are canonical ranks.
std::vector<int> refined_colors(const SignedGraph& g);

SignedGraph relabeled(const SignedGraph& g, const std::vector<int>& order);

}  // namespace sgsr

#endif  // SGSR_CANONICAL_HPP
