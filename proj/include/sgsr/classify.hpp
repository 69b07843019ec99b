#ifndef SGSR_CLASSIFY_HPP
#define SGSR_CLASSIFY_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "sgsr/canonical.hpp"
#include "sgsr/feasibility.hpp"
#include "sgsr/signed_graph.hpp"
#include "sgsr/srsg_check.hpp"

namespace sgsr {

enum class SearchSource { Generated, Census };
enum class SearchMode { Full, Constrained };

struct ClassifyQuery {
  int r = 5;
  int rho = 3;  // positive net-degree; negations are covered by negation
  int n_min = 0;  // 0 defaults to r+1
  int n_max = 12;
  SearchSource source = SearchSource::Generated;
  SearchMode mode = SearchMode::Full;
  std::filesystem::path census_dir;
  int jobs = 1;  // 0 = available parallelism
  bool paper_filters = false;
  long long max_nodes = 0;   // 0 = unlimited (generation + search tree nodes)
  double time_limit_s = 0;   // 0 = unlimited
};

struct Survivor {
  SignedGraph graph;
  SrsgParams params;
  ClassLabel label = ClassLabel::C1;
  CanonicalForm form;
};

struct RunStats {
  int n = 0;
  long long underlying_count = 0;  // connected r-regular graphs examined
  long long signing_count = 0;     // signings after symmetry reduction
  long long candidate_tuples = 0;  // constrained mode
  long long engine_nodes = 0;      // generation/search tree nodes
};

// Classification result for one (r, rho, n-range) query. Survivors are
// pairwise non-isomorphic as signed graphs, connected, r-regular, rho
// net-regular, pass check_srsg and are inhomogeneous; homogeneous signings
// (classical strongly regular graphs) are excluded from the classification.
struct SearchReport {
  ClassifyQuery query;
  std::vector<RunStats> runs;
  std::vector<Survivor> survivors;  // sorted by (n, canonical form)
  std::vector<std::string> notes;
  bool complete = true;
};

SearchReport classify(const ClassifyQuery& query);

}  // namespace sgsr

#endif  // SGSR_CLASSIFY_HPP
