#include "sgsr/formats.hpp"

#include <charconv>
#include <sstream>

namespace sgsr {

namespace {

constexpr int kG6Bias = 63;
constexpr std::string_view kG6Prefix = ">>graph6<<";

std::string_view strip_eol(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

SignedGraph parse_graph6(std::string_view line) {
  line = strip_eol(line);
  if (line.substr(0, kG6Prefix.size()) == kG6Prefix)
    line.remove_prefix(kG6Prefix.size());
  if (line.empty()) throw Graph6HeaderError("empty line");

  unsigned char h = static_cast<unsigned char>(line[0]);
  if (h == ':' || h == ';' || h == '&')
    throw Graph6HeaderError("sparse6/digraph6 not supported");
  if (h == 126) throw Graph6HeaderError("long form (n > 62) not supported");
  if (h < kG6Bias || h > 125)
    throw Graph6HeaderError("byte out of printable range");
  int n = h - kG6Bias;
  if (n < 1) throw Graph6HeaderError("order must be at least 1");

  int nbits = n * (n - 1) / 2;
  int nchars = (nbits + 5) / 6;
  if (static_cast<int>(line.size()) - 1 < nchars)
    throw Graph6TruncatedError("expected " + std::to_string(nchars) +
                               " data bytes, got " +
                               std::to_string(line.size() - 1));
  if (static_cast<int>(line.size()) - 1 > nchars)
    throw Graph6TruncatedError("trailing bytes after bit stream");

  std::vector<std::uint64_t> adj(n, 0), neg(n, 0);
  int bit = 0;
  for (int i = 0; i < nchars; ++i) {
    unsigned char c = static_cast<unsigned char>(line[1 + i]);
    if (c < kG6Bias || c > 126) throw Graph6TruncatedError("non-printable data byte");
    int chunk = c - kG6Bias;
    for (int b = 5; b >= 0 && bit < nbits; --b, ++bit) {
      if (chunk >> b & 1) {
        // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
        int col = 1, acc = bit;
        while (acc >= col) acc -= col, ++col;
        int row = acc;
        adj[row] |= 1ull << col;
        adj[col] |= 1ull << row;
      }
    }
  }
  return SignedGraph::from_rows(n, std::move(adj), std::move(neg));
}

std::string write_graph6(const SignedGraph& g) {
  int n = g.order();
  if (n > 62) throw Graph6HeaderError("short form limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + kG6Bias));
  int chunk = 0, filled = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      chunk = chunk << 1 | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kG6Bias));
        chunk = filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kG6Bias));
  return out;
}

SignedGraph parse_sg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1, m = -1;
  std::vector<SignedEdge> edges;
  int edges_seen = 0;
  while (std::getline(in, line)) {
    std::string_view s = strip_eol(line);
    size_t pos = s.find_first_not_of(" \t");
    if (pos == std::string_view::npos || s[pos] == '#') continue;
    std::istringstream fields{std::string(s)};
    if (n < 0) {
      if (!(fields >> n >> m) || n < 1 || m < 0)
        throw SgParseError("bad header line '" + std::string(s) + "'");
      continue;
    }
    if (edges_seen == m)
      throw SgParseError("more than " + std::to_string(m) + " edge lines");
    int u, v;
    std::string tok;
    if (!(fields >> u >> v >> tok))
      throw SgParseError("bad edge line '" + std::string(s) + "'");
    if (tok != "+" && tok != "-") throw SgSignTokenError(tok);
    edges.push_back({u, v, tok == "+" ? 1 : -1});
    ++edges_seen;
  }
  if (n < 0) throw SgParseError("missing header line");
  if (edges_seen < m)
    throw SgParseError("expected " + std::to_string(m) + " edges, got " +
                       std::to_string(edges_seen));
  return SignedGraph::from_edge_list(n, edges);
}

std::string write_sg(const SignedGraph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (const auto& e : es)
    out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  return out.str();
}

}  // namespace sgsr
