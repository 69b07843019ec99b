#include "sgsr/srsg_check.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>

namespace sgsr {

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::C1: return "C1";
    case ClassLabel::C2: return "C2";
    case ClassLabel::C3: return "C3";
    case ClassLabel::C4: return "C4";
    case ClassLabel::C5: return "C5";
    case ClassLabel::Homogeneous: return "Homogeneous";
  }
  return "?";
}

std::string to_string(CheckFailureKind kind) {
  switch (kind) {
    case CheckFailureKind::NotRegularDiagonal: return "NotRegularDiagonal";
    case CheckFailureKind::PositivePairMismatch: return "PositivePairMismatch";
    case CheckFailureKind::NegativePairMismatch: return "NegativePairMismatch";
    case CheckFailureKind::NonAdjacentMismatch: return "NonAdjacentMismatch";
    case CheckFailureKind::ExcludedHomogeneousCompleteOrEdgeless:
      return "ExcludedHomogeneousCompleteOrEdgeless";
  }
  return "?";
}

CheckResult check_srsg(const SignedGraph& g) {
  int n = g.order();
  int m = g.edge_count();
  bool complete = m == n * (n - 1) / 2;
  bool homogeneous = g.negative_edge_count() == 0 || g.negative_edge_count() == m;
  if (m == 0 || (complete && homogeneous))
    return CheckFailure{CheckFailureKind::ExcludedHomogeneousCompleteOrEdgeless,
                        std::nullopt};

  int r = g.degree(0).total;
  for (int v = 1; v < n; ++v) {
    int d = g.degree(v).total;
    if (d != r)
      return CheckFailure{CheckFailureKind::NotRegularDiagonal,
                          PairWitness{0, v, r, d}};
  }

  std::optional<int> a, b, c;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int e = two_walk_counts(g, u, v).a2();
      std::optional<int>* slot;
      CheckFailureKind kind;
      switch (g.sign(u, v)) {
        case 1:
          slot = &a;
          kind = CheckFailureKind::PositivePairMismatch;
          break;
        case -1:
          slot = &b;
          kind = CheckFailureKind::NegativePairMismatch;
          break;
        default:
          slot = &c;
          kind = CheckFailureKind::NonAdjacentMismatch;
          break;
      }
      if (!*slot)
        *slot = e;
      else if (**slot != e)
        return CheckFailure{kind, PairWitness{u, v, **slot, e}};
    }
  return SrsgParams{n, r, a, b, c};
}

ClassLabel classify_class(const SrsgParams& p) {
  if (!p.a || !p.b) return ClassLabel::Homogeneous;
  int a = *p.a, b = *p.b;
  if (!p.c) {  // complete underlying graph
    return a == -b ? ClassLabel::C1 : ClassLabel::C3;
  }
  int c = *p.c;
  if (a == -b) return c == 0 ? ClassLabel::C2 : ClassLabel::C1;
  if (2 * c == a + b) return ClassLabel::C3;
  return c == 0 ? ClassLabel::C4 : ClassLabel::C5;
}

Lemma2Result lemma2_check(const SignedGraph& g) {
  Lemma2Result res;
  int n = g.order();
  // scan first so that a falsifying pair is reported even when the input
  // also breaks a precondition
  for (int u = 0; u < n && !res.witness; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t common = g.adj_bits(u) & g.adj_bits(v);
      // split by the edge-sign pattern at the endpoints
      int pos_neg = std::popcount(common & ~g.neg_bits(u) & g.neg_bits(v));
      int neg_pos = std::popcount(common & g.neg_bits(u) & ~g.neg_bits(v));
      if (pos_neg != neg_pos) {
        res.status = Lemma2Result::Status::Violated;
        res.witness = {u, v};
        res.note = "negative 2-walk split " + std::to_string(pos_neg) + "/" +
                   std::to_string(neg_pos);
        break;
      }
    }

  auto precondition = [&g, n]() -> std::string {
    if (!is_connected(g)) return "graph is not connected";
    if (g.edge_count() == n * (n - 1) / 2) return "graph is complete";
    if (!degrees(g).net_regular) return "graph is not net-regular";
    auto check = check_srsg(g);
    if (std::holds_alternative<CheckFailure>(check))
      return "not strongly regular";
    ClassLabel label = classify_class(std::get<SrsgParams>(check));
    if (label != ClassLabel::C1 && label != ClassLabel::C4 &&
        label != ClassLabel::C5)
      return "class " + to_string(label) + " not in C1/C4/C5";
    return {};
  }();
  if (!precondition.empty()) {
    res.status = Lemma2Result::Status::PreconditionFailed;
    res.note = res.note.empty() ? precondition
                                : precondition + "; " + res.note;
  }
  return res;
}

bool negation_param_swap(const SignedGraph& g) {
  auto before = check_srsg(g);
  if (!std::holds_alternative<SrsgParams>(before)) return false;
  auto after = check_srsg(negate(g));
  if (!std::holds_alternative<SrsgParams>(after)) return false;
  SrsgParams p = std::get<SrsgParams>(before);
  SrsgParams q = std::get<SrsgParams>(after);
  std::swap(p.a, p.b);
  return p == q && classify_class(std::get<SrsgParams>(before)) ==
                       classify_class(q);
}

std::vector<double> spectrum(const SignedGraph& g) {
  int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m(u, v) = g.sign(u, v);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                        Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace sgsr
