#ifndef SGSR_REGULAR_GEN_HPP
#define SGSR_REGULAR_GEN_HPP

#include <filesystem>
#include <functional>
#include <vector>

#include "sgsr/factors.hpp"
#include "sgsr/signed_graph.hpp"

namespace sgsr {

// Exhaustive, duplicate-free stream of connected r-regular graphs on n
// vertices, one per isomorphism class, in a deterministic order. The visitor
// returns false to stop early. Throws ParityError when n*r is odd.
void gen_regular(int n, int r, const std::function<bool(const SignedGraph&)>& visit);
std::vector<SignedGraph> gen_regular(int n, int r);

struct CensusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusResult {
  std::vector<SignedGraph> graphs;  // connected r-regular on n vertices
  int skipped = 0;                  // wrong order/degree or disconnected
};

// Reads graph6 lines (blank lines and '#' comments ignored); malformed lines
// raise CensusError with the line number, graphs with the wrong order or
// degree are counted and skipped.
CensusResult ingest_census(const std::filesystem::path& path, int n, int r);

}  // namespace sgsr

#endif  // SGSR_REGULAR_GEN_HPP
