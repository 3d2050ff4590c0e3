#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hermsig/number_field.hpp"

namespace hermsig {

class DElement;

enum class DivisionKind { base, quadratic, quaternion };

/// D in {F, F(sqrt d), (a,b)_F} with its canonical involution theta
/// (identity, conjugation, quaternion conjugation). Basis {1}, {1, sqrt d}
/// or {1, i, j, k} with i^2 = a, j^2 = b, ij = k = -ji.
///
/// A quaternion descriptor only requires a, b != 0; whether (a,b)_F is
/// actually a division algebra is reported by quaternion_division_check.
class DivisionAlgebra {
 public:
  static DivisionAlgebra base(const NumberField& field);
  /// Throws Error("ZeroElement"), or Error("DIsSquare") when a square root
  /// of d in F is found (sign screen, rational check, bounded search).
  static DivisionAlgebra quadratic(const FieldElement& d);
  /// Throws Error("ZeroElement") or Error("FieldMismatch").
  static DivisionAlgebra quaternion(const FieldElement& a, const FieldElement& b);

  DivisionKind kind() const;
  const NumberField& field() const;
  /// 1, 2 or 4.
  std::size_t dimension() const;
  /// Throws Error("WrongKind") for the other kinds.
  const FieldElement& d() const;
  const FieldElement& a() const;
  const FieldElement& b() const;

  DElement zero() const;
  DElement one() const;
  DElement scalar(const FieldElement& x) const;
  DElement basis_element(std::size_t t) const;
  std::vector<DElement> basis() const;
  /// Throws Error("ShapeMismatch") on a wrong component count.
  DElement element(std::vector<FieldElement> components) const;

  /// The same presentation with constants pushed through an embedding.
  DivisionAlgebra extend(const FieldEmbedding& embedding) const;

  friend bool operator==(const DivisionAlgebra& x, const DivisionAlgebra& y);

 private:
  struct Data;
  explicit DivisionAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
  friend class DElement;
  friend DElement operator*(const DElement& x, const DElement& y);
};

class DElement {
 public:
  DElement(DivisionAlgebra algebra, std::vector<FieldElement> components);

  const DivisionAlgebra& algebra() const { return alg_; }
  const std::vector<FieldElement>& components() const { return c_; }
  const FieldElement& component(std::size_t t) const { return c_[t]; }

  bool is_zero() const;
  /// Only the identity component is nonzero.
  bool is_scalar() const;

  DElement& operator+=(const DElement& o);
  DElement& operator-=(const DElement& o);
  DElement& operator*=(const FieldElement& u);
  friend DElement operator+(DElement x, const DElement& y) { return x += y; }
  friend DElement operator-(DElement x, const DElement& y) { return x -= y; }
  friend DElement operator-(DElement x);
  friend DElement operator*(const DElement& x, const DElement& y);
  friend DElement operator*(DElement x, const FieldElement& u) { return x *= u; }
  friend DElement operator*(const FieldElement& u, DElement x) { return x *= u; }
  DElement& operator*=(const DElement& o) { return *this = *this * o; }
  friend bool operator==(const DElement& x, const DElement& y) { return x.c_ == y.c_; }

  /// x * theta(x), an element of F.
  FieldElement norm() const;
  /// x + theta(x) for quadratic and quaternion kinds, x for the base kind.
  FieldElement trace() const;
  /// theta(x) / norm(x); throws Error("NotInvertible") on zero norm.
  DElement inverse() const;

 private:
  DivisionAlgebra alg_;
  std::vector<FieldElement> c_;
};

/// The canonical involution theta.
DElement conj(const DElement& x);

enum class DivisionStatus { division, split, unknown };

struct DivisionCheck {
  DivisionStatus status;
  /// For split: a nonzero element of norm zero (a zero divisor).
  std::optional<DElement> witness;
  /// For division: an ordering at which the norm form is definite.
  std::optional<OrderingHandle> definite_at;
  /// Coefficient bound used by the isotropic-vector search.
  int bound;
};

/// Division if <1,-a,-b,ab> is definite at some ordering; Split if the
/// search over integer coordinates in [-bound, bound] finds an isotropic
/// vector; Unknown otherwise.
DivisionCheck quaternion_division_check(const FieldElement& a, const FieldElement& b, int bound = 4);

}  // namespace hermsig
