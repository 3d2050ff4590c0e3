#pragma once

#include <cstdint>
#include <random>

#include "hermsig/hermitian.hpp"

namespace hermsig {

/// Seeded generator for random exact objects. Heights bound numerators and
/// denominators of every rational coordinate.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }
  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long height);
  Rational nonzero_rational(long height);
  FieldElement field_element(const NumberField& field, long height);
  FieldElement nonzero_field_element(const NumberField& field, long height);
  /// Strictly positive at p.
  FieldElement positive_at(const OrderingHandle& p, long height);

  DElement d_element(const DivisionAlgebra& d, long height);
  /// Nonzero norm.
  DElement d_unit(const DivisionAlgebra& d, long height);

  AlgebraElement element(const AlgebraWithInvolution& a, long height);
  /// Product of a unit lower-triangular, an invertible diagonal and a unit
  /// upper-triangular matrix.
  AlgebraElement unit(const AlgebraWithInvolution& a, long height);
  /// Phi * S with S theta^t-hermitian.
  AlgebraElement symmetric(const AlgebraWithInvolution& a, long height);
  AlgebraElement symmetric_unit(const AlgebraWithInvolution& a, long height);
  /// orientation * Phi * theta(G)^t diag(delta) G with delta_i >=_P 0;
  /// invertible when `invertible` is set.
  AlgebraElement cone_member(const AlgebraWithInvolution& a, const OrderingHandle& p, int orientation, long height,
                             bool invertible);

  /// k x k invertible matrix over A.
  FormMatrix congruence(const AlgebraWithInvolution& a, std::size_t k, long height);
  /// Diagonal form with symmetric unit entries.
  HermitianForm diagonal_form(const AlgebraWithInvolution& a, std::size_t k, long height);
  /// A congruent image of a diagonal form.
  HermitianForm form(const AlgebraWithInvolution& a, std::size_t k, long height);
  /// Theta^t-hermitian k x k matrix over D.
  DMatrix hermitian_matrix(const DivisionAlgebra& d, std::size_t k, long height);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hermsig
