#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hermsig/polynomial.hpp"

namespace hermsig {

class FieldElement;
class OrderingHandle;

/// A number field Q[x]/(p) with p monic, squarefree and (by the caller's
/// contract) irreducible. Copies share one immutable record, so a
/// NumberField is cheap to pass by value.
class NumberField {
 public:
  /// Throws Error("ZeroPolynomial"), Error("NotSquarefree"), or
  /// Error("NotIrreducible") when the rational-root screen finds a linear
  /// factor of a polynomial of degree > 1.
  explicit NumberField(const Polynomial& min_poly);

  /// Q presented as Q[x]/(x).
  static NumberField rationals();

  const Polynomial& min_poly() const;
  int degree() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& c) const;
  /// Power-basis coordinates; throws Error("DegreeMismatch") on a length error.
  FieldElement element(std::vector<Rational> coords) const;

  /// All orderings (real roots of the minimal polynomial) in increasing
  /// root order. Throws Error("NotFormallyReal") when there are none.
  std::vector<OrderingHandle> orderings() const;
  bool formally_real() const;

  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Element of a NumberField, stored by coordinates in the power basis of
/// the generator.
class FieldElement {
 public:
  FieldElement(NumberField field, std::vector<Rational> coords);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  /// The coordinate polynomial a(x) with this == a(generator).
  Polynomial as_polynomial() const { return Polynomial(coords_); }

  bool is_zero() const;
  bool is_rational() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
  friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
  friend FieldElement operator-(FieldElement a) { return a *= Rational(-1); }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Throws Error("NotInvertible") for zero (or when the minimal polynomial
  /// is secretly reducible and this element is a zero divisor).
  FieldElement inverse() const;
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

 private:
  void require_same_field(const FieldElement& o) const;

  NumberField field_;
  std::vector<Rational> coords_;
};

/// Conjugation on a field is the identity; lets generic congruence code run
/// over F as well as over division algebras.
inline FieldElement conj(const FieldElement& x) { return x; }

/// An ordering of a number field: the real root with rank `root_index`
/// among the real roots of the minimal polynomial, isolated by `isolating`.
class OrderingHandle {
 public:
  OrderingHandle(NumberField field, std::size_t root_index, Interval isolating);

  const NumberField& field() const { return field_; }
  std::size_t root_index() const { return root_index_; }
  const Interval& isolating() const { return isolating_; }

  friend bool operator==(const OrderingHandle& a, const OrderingHandle& b) {
    return a.root_index_ == b.root_index_ && a.field_ == b.field_;
  }

 private:
  NumberField field_;
  std::size_t root_index_;
  Interval isolating_;
};

/// Same as field.orderings().
std::vector<OrderingHandle> list_orderings(const NumberField& field);

/// Exact sign of alpha at the ordering: decided by interval enclosures
/// over a refinement of the isolating interval, never by floating point.
/// Throws Error("FieldMismatch").
int sign_of(const FieldElement& alpha, const OrderingHandle& ordering);

/// Orderings at which every element of `us` is positive.
/// Throws Error("ZeroElement") if some element is zero.
std::vector<OrderingHandle> harrison_set(const NumberField& field, std::span<const FieldElement> us);

/// Field embedding F -> L determined by the image of F's generator.
class FieldEmbedding {
 public:
  FieldEmbedding(NumberField source, NumberField target, FieldElement image_of_generator);

  const NumberField& source() const { return source_; }
  const NumberField& target() const { return target_; }
  const FieldElement& image_of_generator() const { return image_; }

  FieldElement push(const FieldElement& alpha) const;
  /// The ordering of the source field induced by an ordering of the target.
  OrderingHandle restrict_ordering(const OrderingHandle& q) const;

 private:
  NumberField source_;
  NumberField target_;
  FieldElement image_;
};

/// Throws Error("NotAnEmbedding") unless source.min_poly vanishes at the
/// image, and Error("FieldMismatch") if the image is not an element of target.
FieldEmbedding embed_field(const NumberField& source, const NumberField& target,
                           const FieldElement& image_of_generator);

}  // namespace hermsig
