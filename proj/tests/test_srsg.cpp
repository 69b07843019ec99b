#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "sgsr/feasibility.hpp"
#include "sgsr/srsg_check.hpp"
#include "test_util.hpp"

using namespace sgsr;
using namespace sgsr_test;

namespace {

SrsgParams expect_params(const CheckResult& res) {
  REQUIRE(std::holds_alternative<SrsgParams>(res));
  return std::get<SrsgParams>(res);
}

CheckFailure expect_failure(const CheckResult& res) {
  REQUIRE(std::holds_alternative<CheckFailure>(res));
  return std::get<CheckFailure>(res);
}

bool results_equal(const CheckResult& x, const CheckResult& y) {
  if (std::holds_alternative<SrsgParams>(x) !=
      std::holds_alternative<SrsgParams>(y))
    return false;
  if (std::holds_alternative<SrsgParams>(x))
    return std::get<SrsgParams>(x) == std::get<SrsgParams>(y);
  const auto& fx = std::get<CheckFailure>(x);
  const auto& fy = std::get<CheckFailure>(y);
  return fx.kind == fy.kind && fx.witness == fy.witness;
}

}  // namespace

TEST_CASE("check_srsg on the named graphs") {
  CHECK(expect_params(check_srsg(cycle(5))) ==
        SrsgParams{5, 2, 0, std::nullopt, 1});
  CHECK(expect_params(check_srsg(g1())) == SrsgParams{6, 5, 0, 4, std::nullopt});
  CHECK(expect_params(check_srsg(g2())) ==
        SrsgParams{6, 5, -4, 4, std::nullopt});
  CHECK(expect_params(check_srsg(s10_2())) == SrsgParams{10, 5, 0, 0, 1});
  CHECK(expect_params(check_srsg(s10_3())) == SrsgParams{10, 5, 3, 0, -2});
  CHECK(expect_params(check_srsg(s12_1())) == SrsgParams{12, 5, 2, 1, -2});

  auto fail = expect_failure(check_srsg(path(3)));
  CHECK(fail.kind == CheckFailureKind::NotRegularDiagonal);
  REQUIRE(fail.witness);
  CHECK(fail.witness->u == 0);
  CHECK(fail.witness->v == 1);
  CHECK(fail.witness->expected == 1);
  CHECK(fail.witness->actual == 2);
}

TEST_CASE("exclusion clause") {
  CHECK(expect_failure(check_srsg(SignedGraph(3))).kind ==
        CheckFailureKind::ExcludedHomogeneousCompleteOrEdgeless);
  CHECK(expect_failure(check_srsg(complete(4))).kind ==
        CheckFailureKind::ExcludedHomogeneousCompleteOrEdgeless);
  CHECK(expect_failure(check_srsg(negate(complete(4)))).kind ==
        CheckFailureKind::ExcludedHomogeneousCompleteOrEdgeless);
  // homogeneous non-complete graphs are fine: all-positive K5,5 is a
  // classical strongly regular graph
  auto k55 = underlying(s10_2());
  CHECK(expect_params(check_srsg(k55)) ==
        SrsgParams{10, 5, 0, std::nullopt, 5});
  CHECK(classify_class(expect_params(check_srsg(k55))) ==
        ClassLabel::Homogeneous);
  // inhomogeneous complete graphs are fine (G1, G2 above)
}

TEST_CASE("classify_class partition") {
  CHECK(classify_class({6, 5, 0, 4, std::nullopt}) == ClassLabel::C3);
  CHECK(classify_class({6, 5, -4, 4, std::nullopt}) == ClassLabel::C1);
  CHECK(classify_class({10, 5, 3, 0, -2}) == ClassLabel::C5);
  CHECK(classify_class({8, 3, 1, -1, 0}) == ClassLabel::C2);
  CHECK(classify_class({10, 5, 0, 0, 1}) == ClassLabel::C1);  // a = -b = 0
  CHECK(classify_class({12, 5, 2, 1, -2}) == ClassLabel::C5);
  CHECK(classify_class({8, 5, -2, 4, 4}) == ClassLabel::C5);
  CHECK(classify_class({12, 4, 2, 2, 2}) == ClassLabel::C3);  // c = (a+b)/2
  CHECK(classify_class({12, 4, 2, 1, 0}) == ClassLabel::C4);
  CHECK(classify_class({12, 4, 2, std::nullopt, 0}) == ClassLabel::Homogeneous);
}

TEST_CASE("the G1 construction is forced to (6,5,0,4) by the oracle too") {
  auto res = check_srsg_oracle(g1());
  CHECK(expect_params(res) == SrsgParams{6, 5, 0, 4, std::nullopt});
}

TEST_CASE("params and class are invariant under vertex relabeling") {
  std::mt19937 rng(37);
  std::vector<SignedGraph> graphs{g1(), g2(), s10_2(), s10_3(), s12_1(),
                                  cycle(5)};
  for (const auto& g : graphs)
    for (int iter = 0; iter < 5; ++iter) {
      std::vector<int> perm(g.order());
      for (int i = 0; i < g.order(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<SignedEdge> edges;
      for (const auto& e : g.edges()) {
        int u = perm[e.u], v = perm[e.v];
        edges.push_back({std::min(u, v), std::max(u, v), e.sign});
      }
      auto h = SignedGraph::from_edge_list(g.order(), edges);
      auto pg = expect_params(check_srsg(g));
      auto ph = expect_params(check_srsg(h));
      CHECK(pg == ph);
      CHECK(classify_class(pg) == classify_class(ph));
    }
}

TEST_CASE("walk-count check equals matrix-square oracle on all small graphs") {
  // every signing of every connected labeled graph on up to 5 vertices
  for (int n = 2; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      auto skeleton = from_masks(n, mask, 0);
      if (!is_connected(skeleton)) continue;
      int m = skeleton.edge_count();
      for (unsigned signs = 0; signs < (1u << m); ++signs) {
        auto g = from_masks(n, mask, signs);
        CHECK(results_equal(check_srsg(g), check_srsg_oracle(g)));
      }
    }
  }
}

TEST_CASE("defining identity holds entrywise for accepted parameters") {
  for (const auto& g : {s10_2(), s10_3(), s12_1()}) {
    auto p = expect_params(check_srsg(g));
    CHECK(defining_identity_holds(g, p));
  }
  // and across the exhaustive small sweep whenever a, b, c are all defined
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    auto skeleton = from_masks(5, mask, 0);
    if (!is_connected(skeleton)) continue;
    int m = skeleton.edge_count();
    for (unsigned signs = 0; signs < (1u << m); ++signs) {
      auto g = from_masks(5, mask, signs);
      auto res = check_srsg(g);
      if (!std::holds_alternative<SrsgParams>(res)) continue;
      const auto& p = std::get<SrsgParams>(res);
      if (p.a && p.b && p.c) CHECK(defining_identity_holds(g, p));
      // net-regular acceptances satisfy the doubled net constraint exactly
      auto rep = degrees(g);
      if (rep.net_regular && p.a && p.b)
        CHECK(net_constraint_residual(p.n, p.r, *rep.net_regular, *p.a, *p.b,
                                      p.c.value_or(0)) == 0);
    }
  }
}

TEST_CASE("lemma2 on S10_2 and falsification") {
  auto ok = lemma2_check(s10_2());
  CHECK(ok.status == Lemma2Result::Status::Holds);

  // every non-adjacent pair: two negative 2-walks split one against one
  auto g = s10_2();
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      auto w = two_walk_counts(g, u, v);
      CHECK(w.neg % 2 == 0);
      if (g.sign(u, v) == 0) CHECK(w.neg == 2);
    }

  // flip one edge: the parity/split property breaks with a witness
  auto edges = g.edges();
  for (auto& e : edges)
    if (e.u == 0 && e.v == 5) e.sign = 1;
  auto corrupted = SignedGraph::from_edge_list(10, edges);
  auto bad = lemma2_check(corrupted);
  CHECK_FALSE(bad.holds());
  CHECK(bad.witness);

  // precondition violations are reported distinctly
  CHECK(lemma2_check(g1()).status == Lemma2Result::Status::PreconditionFailed);
  CHECK(lemma2_check(g2()).status == Lemma2Result::Status::PreconditionFailed);
  CHECK(lemma2_check(path(4)).status ==
        Lemma2Result::Status::PreconditionFailed);
}

TEST_CASE("negation swaps the parameter roles") {
  CHECK(negation_param_swap(g2()));
  CHECK(negation_param_swap(g1()));
  CHECK(negation_param_swap(s10_2()));
  CHECK(negation_param_swap(s10_3()));
  CHECK(negation_param_swap(s12_1()));
  CHECK(negation_param_swap(cycle(5)));  // homogeneous: absent values swap

  auto p = expect_params(check_srsg(negate(g2())));
  CHECK(p == SrsgParams{6, 5, 4, -4, std::nullopt});
  CHECK(classify_class(p) == ClassLabel::C1);
  auto q = expect_params(check_srsg(negate(s12_1())));
  CHECK(q == SrsgParams{12, 5, 1, 2, -2});
}

TEST_CASE("spectrum diagnostics") {
  auto ev = spectrum(complete(6));
  REQUIRE(ev.size() == 6);
  for (int i = 0; i < 5; ++i) CHECK(ev[i] == doctest::Approx(-1).epsilon(1e-9));
  CHECK(ev[5] == doctest::Approx(5).epsilon(1e-9));

  // net-regular graphs carry their net-degree as an eigenvalue
  std::vector<std::pair<SignedGraph, int>> cases{
      {g1(), 3}, {g2(), 1}, {s10_2(), 3}, {s12_1(), 1}};
  for (const auto& [g, rho] : cases) {
    bool found = false;
    for (double x : spectrum(g)) found = found || std::abs(x - rho) < 1e-9;
    CHECK(found);
  }

  // a C2 candidate with r=5, rho=3 would need b = (r - rho^2)/rho = -4/3:
  // the doubled net constraint has no integer solution at any order
  for (int n = 8; n <= 14; n += 2)
    for (int b = -4; b <= 4; ++b)
      CHECK(net_constraint_residual(n, 5, 3, -b, b, 0) != 0);
}
