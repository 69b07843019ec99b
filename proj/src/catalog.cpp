#include "sgsr/catalog.hpp"

#include <fstream>
#include <sstream>

#include "sgsr/canonical.hpp"
#include "sgsr/factors.hpp"
#include "sgsr/feasibility.hpp"
#include "sgsr/formats.hpp"

namespace sgsr {

namespace {

SignedGraph complete_with_negative(int n, const EdgeList& negative) {
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  SignedGraph g = SignedGraph::from_edge_list(n, edges);
  std::vector<std::uint64_t> adj(n), neg(n, 0);
  for (int v = 0; v < n; ++v) adj[v] = g.adj_bits(v);
  for (auto [u, v] : negative) {
    neg[u] |= 1ull << v;
    neg[v] |= 1ull << u;
  }
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

// K6 with a negative perfect matching.
SignedGraph build_g1() {
  return complete_with_negative(6, {{0, 1}, {2, 3}, {4, 5}});
}

// K6 with two negative disjoint triangles.
SignedGraph build_g2() {
  return complete_with_negative(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

// K5,5 (parts {0..4}, {5..9}) with the negative perfect matching i -- i+5.
SignedGraph build_s10_2() {
  std::vector<SignedEdge> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = 5; v < 10; ++v) edges.push_back({u, v, v == u + 5 ? -1 : 1});
  return SignedGraph::from_edge_list(10, edges);
}

// Two positive K5 blocks {0..4}, {5..9} joined by the negative perfect
// matching i -- i+5.
SignedGraph build_s10_3() {
  std::vector<SignedEdge> edges;
  for (int b = 0; b < 10; b += 5)
    for (int u = b; u < b + 5; ++u)
      for (int v = u + 1; v < b + 5; ++v) edges.push_back({u, v, 1});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5, -1});
  return SignedGraph::from_edge_list(10, edges);
}

// Three positive K4 blocks {0..3}, {4..7}, {8..11} plus the four negative
// triangles {i, 4+i, 8+i}.
SignedGraph build_s12_1() {
  std::vector<SignedEdge> edges;
  for (int b = 0; b < 12; b += 4)
    for (int u = b; u < b + 4; ++u)
      for (int v = u + 1; v < b + 4; ++v) edges.push_back({u, v, 1});
  for (int i = 0; i < 4; ++i) {
    edges.push_back({i, 4 + i, -1});
    edges.push_back({i, 8 + i, -1});
    edges.push_back({4 + i, 8 + i, -1});
  }
  return SignedGraph::from_edge_list(12, edges);
}

SignedGraph load_fixture(const std::filesystem::path& dir,
                         const std::string& name) {
  auto path = dir / (name + ".sg");
  std::ifstream in(path);
  if (!in)
    throw CatalogFixtureMissing(
        "missing fixture " + path.string() +
        "; recover it with `sgsr classify --r 5 --net 3 --nmax 10` and "
        "`sgsr catalog --export`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sg(buf.str());
}

}  // namespace

std::vector<CatalogEntry> build_catalog(const std::filesystem::path& dir) {
  std::vector<CatalogEntry> out;
  out.push_back({"G1", build_g1(), {6, 5, 0, 4, std::nullopt}, ClassLabel::C3,
                 Provenance::Constructed});
  out.push_back({"G2", build_g2(), {6, 5, -4, 4, std::nullopt}, ClassLabel::C1,
                 Provenance::Constructed});
  out.push_back({"S8_1", load_fixture(dir, "S8_1"), {8, 5, -2, 4, 4},
                 ClassLabel::C5, Provenance::SearchDerived});
  out.push_back({"S10_1", load_fixture(dir, "S10_1"), {10, 5, -2, 4, 2},
                 ClassLabel::C5, Provenance::SearchDerived});
  out.push_back({"S10_2", build_s10_2(), {10, 5, 0, 0, 1}, ClassLabel::C1,
                 Provenance::Constructed});
  out.push_back({"S10_3", build_s10_3(), {10, 5, 3, 0, -2}, ClassLabel::C5,
                 Provenance::Constructed});
  out.push_back({"S12_1", build_s12_1(), {12, 5, 2, 1, -2}, ClassLabel::C5,
                 Provenance::Constructed});
  return out;
}

std::vector<EntryVerdict> verify_catalog(const std::vector<CatalogEntry>& entries) {
  std::vector<EntryVerdict> verdicts;
  for (const auto& entry : entries) {
    EntryVerdict v;
    v.name = entry.name;
    auto flag = [&v](const std::string& what) {
      v.ok = false;
      v.problems.push_back(what);
    };

    if (!is_connected(entry.graph)) flag("not connected");

    auto res = check_srsg(entry.graph);
    if (std::holds_alternative<CheckFailure>(res)) {
      const auto& f = std::get<CheckFailure>(res);
      std::string what = "check_srsg failed: " + to_string(f.kind);
      if (f.witness)
        what += " at (" + std::to_string(f.witness->u) + "," +
                std::to_string(f.witness->v) + "): " +
                std::to_string(f.witness->expected) + " vs " +
                std::to_string(f.witness->actual);
      flag(what);
    } else {
      const auto& p = std::get<SrsgParams>(res);
      if (!(p == entry.expected)) flag("parameters differ from expected");
      if (classify_class(p) != entry.expected_class) flag("class differs");

      auto rep = degrees(entry.graph);
      if (!rep.net_regular) {
        flag("not net-regular");
      } else if (p.a && p.b) {
        long long res3 = net_constraint_residual(p.n, p.r, *rep.net_regular,
                                                 *p.a, *p.b, p.c.value_or(0));
        if (res3 != 0) flag("net constraint residual " + std::to_string(res3));
      }

      if (!negation_param_swap(entry.graph)) flag("negation parameter swap");

      ClassLabel label = classify_class(p);
      bool complete =
          entry.graph.edge_count() == p.n * (p.n - 1) / 2;
      if (!complete && (label == ClassLabel::C1 || label == ClassLabel::C4 ||
                        label == ClassLabel::C5)) {
        auto l2 = lemma2_check(entry.graph);
        if (!l2.holds()) flag("negative 2-walk parity: " + l2.note);
      }
    }

    // entry-specific structure
    if (entry.name == "S10_2") {
      // a = 0: positively adjacent vertices share no common neighbour
      for (const auto& e : entry.graph.edges())
        if (e.sign > 0 &&
            (entry.graph.adj_bits(e.u) & entry.graph.adj_bits(e.v)) != 0)
          flag("positive edge with common neighbours");
    }
    if (entry.name == "S12_1") {
      // b > 0 here, so no balanced triangle may carry two negative edges
      int n = entry.graph.order();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          for (int w = v + 1; w < n; ++w) {
            int su = entry.graph.sign(u, v), sv = entry.graph.sign(u, w),
                sw = entry.graph.sign(v, w);
            if (su == 0 || sv == 0 || sw == 0) continue;
            int negs = (su < 0) + (sv < 0) + (sw < 0);
            if (negs == 2) flag("triangle with exactly two negative edges");
          }
    }
    verdicts.push_back(std::move(v));
  }

  // catalog members are pairwise non-isomorphic
  std::vector<CanonicalForm> forms;
  for (const auto& entry : entries) forms.push_back(canonical_form(entry.graph));
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (forms[i] == forms[j]) {
        verdicts[i].ok = false;
        verdicts[i].problems.push_back("isomorphic to " + entries[j].name);
      }
  return verdicts;
}

}  // namespace sgsr
