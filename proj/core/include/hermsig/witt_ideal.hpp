#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hermsig/cones.hpp"

namespace hermsig {

/// Necessary conditions for q (x) h ~ <a_1, ...> _|_ <-b_1, ...>: equal
/// ranks and equal signatures at every ordering. Evidence, not a proof.
struct IsometryEvidence {
  std::size_t lhs_rank;
  std::size_t rhs_rank;
  std::vector<long> lhs_signatures;
  std::vector<long> rhs_signatures;
  bool holds() const { return lhs_rank == rhs_rank && lhs_signatures == rhs_signatures; }
};

bool in_IP(const QuadraticForm& q, const OrderingHandle& p);
bool in_NP(const HermitianForm& h, const PositiveConeHandle& cone);

struct SylvesterReduction {
  QuadraticForm q;
  AlgebraElement a;
  std::vector<FieldElement> u;
  std::vector<FieldElement> v;
  /// For q (x) phi against (<u> _|_ <-v>) (x) <a>.
  IsometryEvidence evidence;
};

/// q from <a> * <a>, u and v from the P-signs of the diagonal of phi * <a>.
/// Throws Error("SingularForm") or Error("NotInvertible").
SylvesterReduction sylvester_reduction(const HermitianForm& phi, const AlgebraElement& a,
                                       const PositiveConeHandle& cone);

struct ZWitness {
  QuadraticForm q;
  std::vector<AlgebraElement> a_list;
  std::vector<AlgebraElement> b_list;
  IsometryEvidence evidence;
};

struct ZSearch {
  std::optional<ZWitness> witness;
  std::size_t bound;
  std::size_t tried;
};

IsometryEvidence z_evidence(const HermitianForm& h, const QuadraticForm& q, const std::vector<AlgebraElement>& a_list,
                            const std::vector<AlgebraElement>& b_list);

/// Pool: orientation * Phi first, then `pool` in order. Throws
/// Error("ExpectedNPMember") when the signature at P is nonzero and
/// Error("SingularForm") for singular h.
ZSearch find_Z_witness(const HermitianForm& h, const PositiveConeHandle& cone, std::size_t bound,
                       const std::vector<AlgebraElement>& pool = {});

struct ZWitnessCheck {
  bool members;
  bool q_nonzero;
  bool balanced;
  bool evidence;
  bool ok() const { return members && q_nonzero && balanced && evidence; }
};
ZWitnessCheck verify_Z_witness(const HermitianForm& h, const PositiveConeHandle& cone, const ZWitness& w);

/// Signature-like value deciding N membership (value == 0).
using FormValue = std::function<long(const HermitianForm&)>;

struct MIdealReport {
  AxiomCheck sum_closed;
  AxiomCheck scalar_closed;
  AxiomCheck ideal_product;
  AxiomCheck proper;
  AxiomCheck prime;
  AxiomCheck torsion_free;
  bool passed() const {
    return sum_closed.passed && scalar_closed.passed && ideal_product.passed && proper.passed && prime.passed &&
           torsion_free.passed;
  }
};

/// Checks the m-ideal properties of (I_P, N_P) on sampled forms and
/// quadratic forms. `value` defaults to the signature at the cone's ordering.
MIdealReport mideal_check(const PositiveConeHandle& cone, const std::vector<HermitianForm>& forms,
                          const std::vector<QuadraticForm>& qforms, std::size_t max_multiple = 8,
                          FormValue value = nullptr);

}  // namespace hermsig
