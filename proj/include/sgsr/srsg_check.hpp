#ifndef SGSR_SRSG_CHECK_HPP
#define SGSR_SRSG_CHECK_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgsr/signed_graph.hpp"

namespace sgsr {

// (n, r, a, b, c) of a strongly regular signed graph. a is absent iff the
// graph has no positive edges, b iff no negative edges, c iff the underlying
// graph is complete; an absent value never compares equal to an integer.
struct SrsgParams {
  int n = 0;
  int r = 0;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<int> c;
  bool operator==(const SrsgParams&) const = default;
};

enum class ClassLabel { C1, C2, C3, C4, C5, Homogeneous };

std::string to_string(ClassLabel label);

enum class CheckFailureKind {
  NotRegularDiagonal,
  PositivePairMismatch,
  NegativePairMismatch,
  NonAdjacentMismatch,
  ExcludedHomogeneousCompleteOrEdgeless,
};

std::string to_string(CheckFailureKind kind);

struct PairWitness {
  int u = 0;
  int v = 0;
  int expected = 0;  // value fixed by the first pair of the same kind
  int actual = 0;
  bool operator==(const PairWitness&) const = default;
};

struct CheckFailure {
  CheckFailureKind kind{};
  std::optional<PairWitness> witness;  // absent for the exclusion clause
};

using CheckResult = std::variant<SrsgParams, CheckFailure>;

// The strong-regularity predicate: diagonal of the squared sign matrix is a
// constant r and each off-diagonal pair class (positive edge, negative edge,
// non-adjacent) carries one constant value. Homogeneous complete and
// edgeless inputs are rejected here. Connectivity is not required.
// On failure the witness is the lexicographically first conflicting pair.
CheckResult check_srsg(const SignedGraph& g);

// The five-way partition of inhomogeneous SRSGs; graphs with a single edge
// sign map to Homogeneous.
ClassLabel classify_class(const SrsgParams& p);

struct Lemma2Result {
  enum class Status { Holds, Violated, PreconditionFailed };
  Status status = Status::Holds;
  std::optional<std::pair<int, int>> witness;
  std::string note;
  bool holds() const { return status == Status::Holds; }
};

// Even negative-2-walk parity with the k/k split by edge-sign pattern at the
// endpoints. Precondition: connected, non-complete, net-regular, and the
// class is one of C1, C4, C5; violations are reported as PreconditionFailed.
Lemma2Result lemma2_check(const SignedGraph& g);

// True iff the negation's parameters are (n, r, b, a, c) and the class label
// is preserved.
bool negation_param_swap(const SignedGraph& g);

// Numeric eigenvalues of the sign matrix, ascending. Diagnostic only.
std::vector<double> spectrum(const SignedGraph& g);

}  // namespace sgsr

#endif  // SGSR_SRSG_CHECK_HPP
