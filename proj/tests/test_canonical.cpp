#include <doctest.h>

#include <random>
#include <set>

#include "sgsr/canonical.hpp"
#include "test_util.hpp"

using namespace sgsr;
using namespace sgsr_test;

TEST_CASE("canonical form is relabeling-invariant and sign-exact") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 3 + static_cast<int>(rng() % 7);
    auto g = random_signed(n, 0.5, 0.4, rng);
    auto perm = random_permutation(n, rng);
    auto h = relabeled(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(signed_isomorphic(g, h));
  }

  // params (a,b) vs (b,a) are isomorphism invariants: G2 vs its negation
  CHECK_FALSE(signed_isomorphic(g2(), negate(g2())));
  // different orders
  CHECK_FALSE(signed_isomorphic(complete(5), complete(6)));
  // same underlying graph, different signature
  auto one_neg = cycle(4, {0});
  CHECK_FALSE(signed_isomorphic(one_neg, cycle(4)));
  // sign-iso classes of a triangle with k negative edges are distinct
  auto t0 = complete(3);
  auto t1 = cycle(3, {0});
  auto t2 = cycle(3, {0, 1});
  CHECK_FALSE(signed_isomorphic(t0, t1));
  CHECK_FALSE(signed_isomorphic(t1, t2));
  // but relabeling which edge is negative does not matter
  CHECK(signed_isomorphic(cycle(3, {0}), cycle(3, {2})));
}

TEST_CASE("canonical labeling realizes the canonical form") {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);
    auto g = random_signed(n, 0.5, 0.3, rng);
    auto order = canonical_labeling(g);
    auto canon = relabeled(g, order);
    // serializing the relabeled graph in identity order gives the form
    std::vector<std::uint8_t> code;
    for (int col = 1; col < n; ++col)
      for (int row = 0; row < col; ++row) {
        int s = canon.sign(row, col);
        code.push_back(s == 0 ? 0 : (s > 0 ? 1 : 2));
      }
    CHECK(code == canonical_form(g).code);
  }
}

TEST_CASE("automorphism groups of the classics") {
  CHECK(automorphisms(complete(6)).size() == 720);
  CHECK(automorphisms(cycle(6)).size() == 12);
  CHECK(automorphisms(path(4)).size() == 2);
  CHECK(automorphisms(underlying(s10_2())).size() == 28800);  // K5,5
  // G1 = K6 with a negative perfect matching: wreath-type group 2^3 * 3!
  CHECK(automorphisms(g1()).size() == 48);
  // every reported permutation preserves signs
  for (const auto& perm : automorphisms(g2())) {
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v)
        CHECK(g2().sign(u, v) == g2().sign(perm[u], perm[v]));
  }
  CHECK(automorphisms(g2()).size() == 72);  // 2 blocks x (3!)^2 x swap
}

TEST_CASE("refined colors separate degree classes") {
  auto g = cycle(5, {0});  // net degrees 0,0,2,2,2
  auto colors = refined_colors(g);
  CHECK(colors[0] == colors[1]);
  CHECK(colors[2] == colors[4]);  // symmetric positions
  CHECK(colors[0] != colors[2]);
}
