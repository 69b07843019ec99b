#ifndef SGSR_FEASIBILITY_HPP
#define SGSR_FEASIBILITY_HPP

#include <optional>
#include <string>
#include <vector>

namespace sgsr {

// Classical strongly-regular parameter identity r(r-e-1) = (n-r-1)f.
bool srg_feasible(long long n, long long r, long long e, long long f);

// Net-regularity constraint on (n, r, rho, a, b, c), evaluated in integers
// after multiplying both sides by 2; zero iff the constraint holds. The
// c-term vanishes for complete candidates (n = r+1), so c is ignored there.
long long net_constraint_residual(long long n, long long r, long long rho,
                                  long long a, long long b, long long c);

// The seven numeric (a,b) constraints for degree-5, net-degree-1 candidates:
// a < 3; a = -1 => b <= 0; a = -2 => b >= -1; a > -3; -2 <= b < 3;
// b in {2,-1} => a <= 0; b = -2 => a >= 1.
bool prop33_filter(int a, int b);

struct ParamQuery {
  int r = 5;
  int rho = 3;  // positive by convention
  int a_min = -4, a_max = 4;
  int b_min = -4, b_max = 4;
  int n_min = 0, n_max = 14;  // even orders; n_min defaults to r+1
  bool require_noncomplete = false;
  bool structural_filters = false;  // opt-in divisibility filters
};

// One parameter tuple. n is absent for the n-parametric c = 0 stratum
// (any even order > r+1 in range); c is absent for complete candidates
// (n = r+1, where the constraint has no c-term).
struct Candidate {
  int r = 0;
  int rho = 0;
  int a = 0;
  int b = 0;
  std::optional<int> c;
  std::optional<int> n;
  bool complete() const { return !c.has_value(); }
  bool stratum() const { return !n.has_value(); }
  bool operator==(const Candidate&) const = default;
};

std::string to_string(const Candidate& cand);

// All tuples with even n in range satisfying the net constraint, bounded by
// |a| <= r-1 and |b| <= r-1, with prop33_filter applied to non-complete
// candidates when r = 5 and rho = 1. c is solved for exactly rather than
// enumerated; pairs whose constraint is order-free are reported once as a
// symbolic stratum. Output is sorted lexicographically on (a, b, n) with the
// stratum entry first within its (a, b).
std::vector<Candidate> enumerate_candidates(const ParamQuery& q);

// Materializes a stratum entry at each admissible order of the query range;
// fixed-order candidates pass through unchanged.
std::vector<Candidate> materialize(const Candidate& cand, const ParamQuery& q);

}  // namespace sgsr

#endif  // SGSR_FEASIBILITY_HPP
