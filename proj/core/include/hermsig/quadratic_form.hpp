#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hermsig/congruence.hpp"
#include "hermsig/number_field.hpp"

namespace hermsig {

using FieldMatrix = Matrix<FieldElement>;

/// Diagonal quadratic form <d_1, ..., d_k> over a number field. Gram input
/// is diagonalized on construction; zero entries (the radical) are kept.
class QuadraticForm {
 public:
  /// Throws Error("FieldMismatch") on mixed fields.
  QuadraticForm(NumberField field, std::vector<FieldElement> diagonal);
  /// Throws Error("NotSymmetric").
  static QuadraticForm from_gram(const FieldMatrix& gram);

  const NumberField& field() const { return field_; }
  const std::vector<FieldElement>& diagonal() const { return diag_; }
  std::size_t dimension() const { return diag_.size(); }
  std::size_t rank() const;
  bool nonsingular() const { return rank() == dimension(); }

 private:
  NumberField field_;
  std::vector<FieldElement> diag_;
};

/// Congruence diagonalization of a symmetric matrix: G^t M G == diag(d).
/// Throws Error("NotSymmetric").
Congruence<FieldElement> diagonalize_symmetric(const FieldMatrix& m);

/// Sylvester signature: #positive - #negative diagonal entries at P.
/// Zero entries contribute nothing.
long signature_qf(const QuadraticForm& q, const OrderingHandle& ordering);

/// <<u_1, ..., u_k>> = <1, u_1> (x) ... (x) <1, u_k>.
/// Throws Error("ZeroElement").
QuadraticForm pfister(const NumberField& field, std::span<const FieldElement> us);

QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b);
QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b);
/// u * q, entrywise.
QuadraticForm scaled(const QuadraticForm& q, const FieldElement& u);

}  // namespace hermsig
