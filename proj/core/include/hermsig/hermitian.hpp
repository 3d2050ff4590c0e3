#pragma once

#include <cstddef>
#include <vector>

#include "hermsig/algebra.hpp"
#include "hermsig/quadratic_form.hpp"

namespace hermsig {

using DMatrix = Matrix<DElement>;
using FormMatrix = Matrix<AlgebraElement>;

/// theta(G)^t * B * G == diag(diagonal), with diagonal in Sym(D, theta) = F.
struct HermitianDiagonalization {
  DMatrix transform;
  std::vector<FieldElement> diagonal;
};

/// Throws Error("NotHermitian") unless theta(B)^t == B.
HermitianDiagonalization diagonalize_hermitian(const DMatrix& b);

/// A hermitian form over (A, sigma) given by its Gram matrix g, with
/// sigma(g_ji) == g_ij.
class HermitianForm {
 public:
  /// Throws Error("NotHermitian") or Error("ShapeMismatch").
  HermitianForm(AlgebraWithInvolution algebra, FormMatrix gram);
  /// <a_1, ..., a_k>_sigma; throws Error("NotSymmetric") unless every a_i is.
  static HermitianForm diagonal(const AlgebraWithInvolution& algebra, const std::vector<AlgebraElement>& entries);

  const AlgebraWithInvolution& algebra() const { return alg_; }
  const FormMatrix& gram() const { return gram_; }
  std::size_t dimension() const { return gram_.rows(); }
  bool is_diagonal() const;
  std::vector<AlgebraElement> diagonal_entries() const;

 private:
  AlgebraWithInvolution alg_;
  FormMatrix gram_;
};

HermitianForm orthogonal_sum(const HermitianForm& a, const HermitianForm& b);
/// <u> (x) h.
HermitianForm scaled(const HermitianForm& h, const FieldElement& u);
/// q (x) h = <u_1> h  _|_ ... _|_ <u_m> h.
HermitianForm tensor(const QuadraticForm& q, const HermitianForm& h);
HermitianForm negated(const HermitianForm& h);
/// l copies of h.
HermitianForm multiple(const HermitianForm& h, std::size_t l);
/// sigma(G)^t * gram * G for a k x k matrix G over A.
HermitianForm congruent(const HermitianForm& h, const FormMatrix& g);

/// Phi^{-1} * gram, flattened from k x k over M_n(D) to kn x kn over D.
DMatrix morita_matrix(const HermitianForm& h);
/// Diagonal of the diagonalized Morita matrix; the zeros span the radical.
std::vector<FieldElement> morita_diagonal(const HermitianForm& h);
std::size_t form_rank(const HermitianForm& h);

std::vector<OrderingHandle> nil_orderings(const AlgebraWithInvolution& algebra);
bool is_nil(const AlgebraWithInvolution& algebra, const OrderingHandle& p);

struct LocalDegree {
  std::size_t value;
  bool nil;
};
LocalDegree local_degree_nP(const AlgebraWithInvolution& algebra, const OrderingHandle& p);

/// sign^mu_P h with mu = <Phi>_sigma; 0 at nil orderings.
long signature(const HermitianForm& h, const OrderingHandle& p);
/// One entry per ordering of the base field, in ordering order.
std::vector<long> signature_vector(const HermitianForm& h);

/// b_h(x) = h(x, x) for a theta^t-hermitian matrix over D, as the Gram
/// matrix over F of (x, y) -> component 0 of theta(x)^t B y on a D-basis of
/// each slot. Diagonal input <a_1, ...> gives <a_i> (x) <1,-d> or
/// <a_i> (x) <1,-a,-b,ab> entry by entry.
QuadraticForm trace_transfer(const DMatrix& b);
FieldMatrix trace_transfer_gram(const DMatrix& b);

/// Gram matrix over Z(A) of phi_{a,b}(x, y) = Trd(sigma(x) a y b) on
/// basis_over_center(). Entries lie in center(); iota-hermitian.
DMatrix star_pairing_gram(const AlgebraWithInvolution& algebra, const AlgebraElement& a, const AlgebraElement& b);
/// <a>_sigma * <b>_sigma, diagonalized. Throws Error("NotSymmetric") or
/// Error("NotInvertible").
QuadraticForm star_pairing(const AlgebraWithInvolution& algebra, const AlgebraElement& a, const AlgebraElement& b);
/// h * <a>_sigma on A^k: (X, Y) -> Trd(sum_ij sigma(x_i) g_ij y_j a), diagonalized.
QuadraticForm star_pairing_form(const HermitianForm& h, const AlgebraElement& a);

struct MaxSignature {
  long value;
  AlgebraElement witness;
  /// Largest signature seen over the supplied trials.
  long max_sampled;
};
/// m_P with the maximizer Phi; `trials` are symmetric units to compare
/// against. Throws Error("NilOrdering").
MaxSignature max_signature_mP(const AlgebraWithInvolution& algebra, const OrderingHandle& p,
                              const std::vector<AlgebraElement>& trials);

}  // namespace hermsig
