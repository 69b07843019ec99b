#include "sgsr/regular_gen.hpp"

#include <fstream>

#include "sgsr/formats.hpp"
#include "search_engine.hpp"

namespace sgsr {

void gen_regular(int n, int r,
                 const std::function<bool(const SignedGraph&)>& visit) {
  if (n < 1 || n > SignedGraph::kMaxOrder)
    throw std::invalid_argument("order out of range");
  if (r < 0 || r >= n) throw std::invalid_argument("need 0 <= r < n");
  if ((n * r) % 2 != 0)
    throw ParityError("n*r must be even, got n=" + std::to_string(n) +
                      " r=" + std::to_string(r));
  engine::run(n, r, 0, std::nullopt, engine::Limits{}, visit);
}

std::vector<SignedGraph> gen_regular(int n, int r) {
  std::vector<SignedGraph> out;
  gen_regular(n, r, [&out](const SignedGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

CensusResult ingest_census(const std::filesystem::path& path, int n, int r) {
  std::ifstream in(path);
  if (!in) throw CensusError("cannot open census file " + path.string());
  CensusResult res;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    SignedGraph g;
    try {
      g = parse_graph6(line);
    } catch (const std::invalid_argument& e) {
      throw CensusError(path.string() + ":" + std::to_string(lineno) + ": " +
                        e.what());
    }
    bool ok = g.order() == n;
    if (ok) {
      auto rep = degrees(g);
      ok = rep.regular && *rep.regular == r && is_connected(g);
    }
    if (ok)
      res.graphs.push_back(std::move(g));
    else
      ++res.skipped;
  }
  return res;
}

}  // namespace sgsr
