#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermsig/division_algebra.hpp"
#include "hermsig/matrix.hpp"

namespace hermsig {

/// Element of M_n(D).
using AlgebraElement = Matrix<DElement>;

/// (A, sigma) in the normal form A = M_n(D), sigma = Int(phi) o theta^t with
/// phi invertible and theta^t-symmetric (phi_ji = theta(phi_ij)).
class AlgebraWithInvolution {
 public:
  /// Throws Error("PhiNotSymmetric"), Error("PhiSingular"),
  /// Error("ShapeMismatch"). An algebra whose every ordering is nil is
  /// accepted with the warning "DNotDivisionAtAnyOrdering".
  static AlgebraWithInvolution make(const DivisionAlgebra& division, std::size_t n, const AlgebraElement& phi);

  const DivisionAlgebra& division() const { return division_; }
  const NumberField& field() const { return division_.field(); }
  std::size_t n() const { return n_; }
  const AlgebraElement& phi() const { return phi_; }
  const AlgebraElement& phi_inverse() const { return phi_inv_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// First kind: sigma is F-linear on Z(A) = F (base and quaternion kinds).
  bool first_kind() const { return division_.kind() != DivisionKind::quadratic; }
  /// Z(A) as an algebra with involution iota: F for the first kind, D itself
  /// (F(sqrt d), conjugation) for the quadratic kind.
  DivisionAlgebra center() const;

  AlgebraElement zero() const;
  AlgebraElement identity() const;
  AlgebraElement scalar(const FieldElement& u) const;
  /// Throws Error("ShapeMismatch") unless x is n x n over this D.
  void check_element(const AlgebraElement& x) const;

  AlgebraElement involution(const AlgebraElement& x) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  bool is_symmetric(const AlgebraElement& x) const;
  /// Throws Error("NotInvertible").
  AlgebraElement invert(const AlgebraElement& x) const;
  bool is_invertible(const AlgebraElement& x) const;

  /// Trd_A(x) as an element of Z(A): matrix trace for the base kind,
  /// 2 * sum of identity components for quaternions, and the Z(A)-valued
  /// sum of diagonal entries for the quadratic kind.
  DElement reduced_trace(const AlgebraElement& x) const;

  /// E_rs * e_t over all (r, s, t): an F-basis of A.
  std::vector<AlgebraElement> basis_over_field() const;
  /// A basis of A as a Z(A)-space (E_rs * e_t with t ranging over a Z(A)-basis of D).
  std::vector<AlgebraElement> basis_over_center() const;
  /// F-coordinates of x relative to basis_over_field().
  std::vector<FieldElement> coordinates(const AlgebraElement& x) const;
  AlgebraElement from_coordinates(const std::vector<FieldElement>& coords) const;

  /// dim_F Sym(A, sigma), from the kernel of x -> sigma(x) - x.
  std::size_t symmetric_dimension() const;

  /// The algebra with all constants (D's parameters, phi) pushed along an
  /// embedding of the base field.
  AlgebraWithInvolution extend(const FieldEmbedding& embedding) const;
  /// Called on an extended algebra: carries an element of the source
  /// algebra into this one, entry by entry.
  AlgebraElement push(const FieldEmbedding& embedding, const AlgebraElement& x) const;

 private:
  AlgebraWithInvolution(DivisionAlgebra division, std::size_t n, AlgebraElement phi, AlgebraElement phi_inv)
      : division_(std::move(division)), n_(n), phi_(std::move(phi)), phi_inv_(std::move(phi_inv)) {}

  DivisionAlgebra division_;
  std::size_t n_;
  AlgebraElement phi_;
  AlgebraElement phi_inv_;
  std::vector<std::string> warnings_;
};

inline AlgebraWithInvolution make_algebra(const DivisionAlgebra& division, std::size_t n, const AlgebraElement& phi) {
  return AlgebraWithInvolution::make(division, n, phi);
}

/// (theta(x_ji))_ij.
AlgebraElement theta_transpose(const AlgebraElement& x);

/// Inverse of a square matrix over D: Gauss-Jordan with invertible pivots,
/// falling back to F-linear solving when D has zero divisors.
/// Throws Error("NotInvertible").
AlgebraElement invert_matrix(const AlgebraElement& x);

/// Rank over F of a list of coordinate vectors (Gaussian elimination).
std::size_t field_rank(std::vector<std::vector<FieldElement>> rows);

}  // namespace hermsig
