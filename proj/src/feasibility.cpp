#include "sgsr/feasibility.hpp"

#include <algorithm>

namespace sgsr {

bool srg_feasible(long long n, long long r, long long e, long long f) {
  return r * (r - e - 1) == (n - r - 1) * f;
}

namespace {

// Order-free part of the doubled net constraint; the full residual is
// K - 2c(n-r-1).
long long order_free_part(long long r, long long rho, long long a, long long b) {
  return 2 * rho * rho + (b - a) * rho - (a + b) * r - 2 * r;
}

// Degree parity: an r-regular graph on n vertices needs n*r even.
bool admissible_order(int n, const ParamQuery& q) {
  return n >= q.n_min && n <= q.n_max && (n % 2 == 0 || q.r % 2 == 0);
}

// Opt-in divisibility filters derived from the forced block structure of the
// positive/negative subgraphs at specific (a, b) pairs.
bool structural_pass(int r, int rho, int a, int b, int n) {
  if (r != 5) return true;
  if (rho == 3) {
    // a=3, b=0: the positive subgraph is a disjoint union of K5 blocks.
    if (a == 3 && b == 0 && n % 5 != 0) return false;
  } else if (rho == 1) {
    // (2,1): positive K4 blocks and negative K3 blocks force 12 | n.
    if (a == 2 && b == 1 && n % 12 != 0) return false;
    // (2,0): positive K4 blocks force 4 | n.
    if (a == 2 && b == 0 && n % 4 != 0) return false;
    // (0,1): negative K3 blocks force 3 | n, with disjoint positive
    // neighbourhoods pushing the order to at least 12.
    if (a == 0 && b == 1 && (n % 3 != 0 || n < 12)) return false;
  }
  return true;
}

}  // namespace

long long net_constraint_residual(long long n, long long r, long long rho,
                                  long long a, long long b, long long c) {
  return order_free_part(r, rho, a, b) - 2 * c * (n - r - 1);
}

bool prop33_filter(int a, int b) {
  if (a >= 3 || a <= -3) return false;
  if (b < -2 || b >= 3) return false;
  if (a == -1 && b > 0) return false;
  if (a == -2 && b < -1) return false;
  if ((b == 2 || b == -1) && a > 0) return false;
  if (b == -2 && a < 1) return false;
  return true;
}

std::string to_string(const Candidate& cand) {
  std::string out = "(";
  out += cand.n ? std::to_string(*cand.n) : "n";
  out += "," + std::to_string(cand.r) + "," + std::to_string(cand.a) + "," +
         std::to_string(cand.b) + ",";
  out += cand.c ? std::to_string(*cand.c) : std::string("\xc2\xb7");
  return out + ")";
}

std::vector<Candidate> enumerate_candidates(const ParamQuery& q) {
  std::vector<Candidate> out;
  if (q.n_min > q.n_max || q.a_min > q.a_max || q.b_min > q.b_max)
    throw std::invalid_argument("empty parameter range");
  int a_lo = std::max(q.a_min, -(q.r - 1)), a_hi = std::min(q.a_max, q.r - 1);
  int b_lo = std::max(q.b_min, -(q.r - 1)), b_hi = std::min(q.b_max, q.r - 1);
  for (int a = a_lo; a <= a_hi; ++a)
    for (int b = b_lo; b <= b_hi; ++b) {
      long long k = order_free_part(q.r, q.rho, a, b);
      int n_complete = q.r + 1;
      if (!q.require_noncomplete && k == 0 && admissible_order(n_complete, q))
        out.push_back({q.r, q.rho, a, b, std::nullopt, n_complete});

      // Non-complete candidates; the proposition filter assumes a
      // non-complete graph, so complete candidates bypass it.
      if (q.r == 5 && q.rho == 1 && !prop33_filter(a, b)) continue;
      if (k == 0) {
        bool any = false;
        for (int n = n_complete + 1; n <= q.n_max && !any; ++n)
          any = admissible_order(n, q);
        if (any) out.push_back({q.r, q.rho, a, b, 0, std::nullopt});
        continue;
      }
      for (int n = n_complete + 1; n <= q.n_max; ++n) {
        if (!admissible_order(n, q)) continue;
        long long den = 2 * (n - q.r - 1);
        if (k % den != 0) continue;
        int c = static_cast<int>(k / den);
        if (q.structural_filters && !structural_pass(q.r, q.rho, a, b, n))
          continue;
        out.push_back({q.r, q.rho, a, b, c, n});
      }
    }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.n.value_or(-1) < y.n.value_or(-1);  // stratum first
  });
  return out;
}

std::vector<Candidate> materialize(const Candidate& cand, const ParamQuery& q) {
  if (!cand.stratum()) return {cand};
  std::vector<Candidate> out;
  for (int n = q.r + 2; n <= q.n_max; ++n) {
    if (!admissible_order(n, q)) continue;
    if (q.structural_filters && !structural_pass(cand.r, cand.rho, cand.a, cand.b, n))
      continue;
    Candidate c = cand;
    c.n = n;
    out.push_back(c);
  }
  return out;
}

}  // namespace sgsr
