#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hermsig/hermitian.hpp"

namespace hermsig {

/// orientation * C_P(M^mu_P(A, sigma)) for a non-nil ordering P.
class PositiveConeHandle {
 public:
  /// Throws Error("NilOrdering") or Error("InvalidOrientation").
  PositiveConeHandle(AlgebraWithInvolution algebra, OrderingHandle ordering, int orientation);

  const AlgebraWithInvolution& algebra() const { return alg_; }
  const OrderingHandle& ordering() const { return ordering_; }
  int orientation() const { return orientation_; }

  friend bool operator==(const PositiveConeHandle& a, const PositiveConeHandle& b) {
    return a.orientation_ == b.orientation_ && a.ordering_ == b.ordering_;
  }

 private:
  AlgebraWithInvolution alg_;
  OrderingHandle ordering_;
  int orientation_;
};

/// theta(G)^t B G == diag(diagonal) with every diagonal entry >=_P 0.
struct ConeWitness {
  DMatrix transform;
  std::vector<FieldElement> diagonal;
};

struct Membership {
  bool member;
  std::optional<ConeWitness> witness;
};

/// Throws Error("NotHermitian").
Membership psd_membership(const DMatrix& b, const OrderingHandle& p);
/// orientation * Phi^{-1} b PSD at P. Throws Error("NotSymmetric").
Membership cone_membership(const AlgebraElement& b, const PositiveConeHandle& cone);
/// theta(G)^{-t} diag G^{-1}, i.e. the matrix the witness certifies.
DMatrix witness_matrix(const ConeWitness& w);
/// orientation * Phi * witness_matrix(w).
AlgebraElement witness_element(const ConeWitness& w, const PositiveConeHandle& cone);

/// Non-nil orderings in order, +1 before -1 for each.
std::vector<PositiveConeHandle> list_positive_cones(const AlgebraWithInvolution& algebra);

using MembershipPredicate = std::function<bool(const AlgebraElement&)>;

struct AxiomCheck {
  bool passed = true;
  std::size_t tests = 0;
  std::vector<std::string> violations;
};

struct ConeAxiomReport {
  AxiomCheck p1, p2, p3, p4, p5;
  /// Scalars found to satisfy u * cone subset of cone on the samples.
  std::vector<FieldElement> scalar_cone;
  bool passed() const { return p1.passed && p2.passed && p3.passed && p4.passed && p5.passed; }
};

/// Sample-based check of (P1)-(P5). `multipliers` are the a in sigma(a) x a;
/// `predicate` defaults to cone_membership for this cone.
ConeAxiomReport cone_axioms_check(const PositiveConeHandle& cone, const std::vector<AlgebraElement>& samples,
                                  const std::vector<FieldElement>& scalars,
                                  const std::vector<AlgebraElement>& multipliers,
                                  MembershipPredicate predicate = nullptr);

/// Cones containing every element of `as`. Throws Error("NotSymmetric").
std::vector<PositiveConeHandle> harrison_sigma(const AlgebraWithInvolution& algebra,
                                               const std::vector<AlgebraElement>& as);

inline OrderingHandle project_pi(const PositiveConeHandle& cone) { return cone.ordering(); }

struct ConeExtension {
  PositiveConeHandle cone;
  std::size_t checked;
  std::size_t contained;
  bool degree_preserved;
  bool ok() const { return degree_preserved && checked == contained; }
};

/// The cone over q on A (x)_F L with the same orientation; checks that the
/// pushforward of every sample is a member. Throws
/// Error("OrderingDoesNotRestrict").
ConeExtension extend_cone(const FieldEmbedding& embedding, const PositiveConeHandle& cone, const OrderingHandle& q,
                          const std::vector<AlgebraElement>& samples);

}  // namespace hermsig
