#include <doctest.h>

#include <random>
#include <string>

#include "sgsr/formats.hpp"
#include "test_util.hpp"

using namespace sgsr;
using namespace sgsr_test;

namespace {

// Independent graph6 encoder: builds the bit string explicitly and chunks it.
std::string graph6_oracle(const SignedGraph& g) {
  int n = g.order();
  std::string bits;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      bits.push_back(g.has_edge(row, col) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + (bits[i + b] - '0');
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 K5 round-trip against the known encoding") {
  auto k5 = complete(5);
  CHECK(write_graph6(k5) == "D~{");
  CHECK(parse_graph6("D~{") == k5);
  CHECK(write_graph6(parse_graph6("D~{")) == "D~{");
}

TEST_CASE("graph6 round-trips on random graphs vs independent encoder") {
  std::mt19937 rng(21);
  for (int n = 1; n <= 12; ++n)
    for (int iter = 0; iter < 20; ++iter) {
      auto g = underlying(random_signed(n, 0.4, 0.0, rng));
      std::string enc = write_graph6(g);
      CHECK(enc == graph6_oracle(g));
      CHECK(parse_graph6(enc) == g);
    }
}

TEST_CASE("graph6 error paths") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6HeaderError);
  CHECK_THROWS_AS(parse_graph6(":Fa@x^"), Graph6HeaderError);  // sparse6
  CHECK_THROWS_AS(parse_graph6("~??~?????"), Graph6HeaderError);  // long form
  CHECK_THROWS_AS(parse_graph6("\x1f"), Graph6HeaderError);
  CHECK_THROWS_AS(parse_graph6("D~"), Graph6TruncatedError);  // n=5, too few
  CHECK_THROWS_AS(parse_graph6("D~{{"), Graph6TruncatedError);  // trailing
  CHECK_THROWS_AS(parse_graph6("D~\x07"), Graph6TruncatedError);
  CHECK(parse_graph6(">>graph6<<D~{") == complete(5));  // optional prefix ok
}

TEST_CASE(".sg basics") {
  auto k2 = parse_sg("2 1\n0 1 +\n");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.sign(0, 1) == 1);

  const char* text =
      "# a comment\n"
      "\n"
      "3 2\n"
      "  # another comment\n"
      "0 1 +\n"
      "1 2 -\n";
  auto g = parse_sg(text);
  CHECK(g.sign(0, 1) == 1);
  CHECK(g.sign(1, 2) == -1);
  CHECK(write_sg(g) == "3 2\n0 1 +\n1 2 -\n");
}

TEST_CASE(".sg canonical round-trip and sorting") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 25; ++iter) {
    auto g = random_signed(9, 0.5, 0.4, rng);
    CHECK(parse_sg(write_sg(g)) == g);
    CHECK(write_sg(parse_sg(write_sg(g))) == write_sg(g));
  }
  // unsorted input normalizes on output
  auto g = parse_sg("3 3\n1 2 -\n0 2 +\n0 1 +\n");
  CHECK(write_sg(g) == "3 3\n0 1 +\n0 2 +\n1 2 -\n");
}

TEST_CASE(".sg error paths") {
  CHECK_THROWS_AS(parse_sg(""), SgParseError);
  CHECK_THROWS_AS(parse_sg("x y\n"), SgParseError);
  CHECK_THROWS_AS(parse_sg("2 1\n0 1 x\n"), SgSignTokenError);
  CHECK_THROWS_AS(parse_sg("2 1\n0 1 *\n"), SgSignTokenError);
  CHECK_THROWS_AS(parse_sg("2 2\n0 1 +\n"), SgParseError);     // too few edges
  CHECK_THROWS_AS(parse_sg("2 1\n0 1 +\n1 0 -\n"), SgParseError);  // too many
  CHECK_THROWS_AS(parse_sg("2 1\n0 0 +\n"), SelfLoopError);
  CHECK_THROWS_AS(parse_sg("2 1\n0 5 +\n"), VertexRangeError);
  CHECK_THROWS_AS(parse_sg("3 2\n0 1 +\n1 0 -\n"), DuplicateEdgeError);
}
