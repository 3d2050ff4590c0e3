#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "hermsig/algebra.hpp"
#include "hermsig/error.hpp"
#include "hermsig/number_field.hpp"

namespace test {

using namespace hermsig;

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

inline NumberField qq() { return NumberField::rationals(); }
inline NumberField sqrt2() { return NumberField(Polynomial{-2, 0, 1}); }
inline NumberField fourth_root2() { return NumberField(Polynomial{-2, 0, 0, 0, 1}); }

inline FieldElement num(const NumberField& f, long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return f.from_rational(r);
}

/// Ordering of Q(sqrt 2) at which the generator is positive.
inline OrderingHandle positive_root(const NumberField& f) {
  for (const auto& p : f.orderings())
    if (sign_of(f.generator(), p) > 0) return p;
  throw Error("InternalError");
}
inline OrderingHandle negative_root(const NumberField& f) {
  for (const auto& p : f.orderings())
    if (sign_of(f.generator(), p) < 0) return p;
  throw Error("InternalError");
}

inline DElement d_of(const DivisionAlgebra& d, std::vector<long> cs) {
  std::vector<FieldElement> comps;
  for (long c : cs) comps.push_back(num(d.field(), c));
  return d.element(std::move(comps));
}

/// n x n matrix over D from integer scalars.
inline AlgebraElement scalars(const DivisionAlgebra& d, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<DElement>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long c : r) out.back().push_back(d.scalar(num(d.field(), c)));
  }
  return AlgebraElement::from_rows(std::move(out));
}

inline AlgebraWithInvolution mat_q(std::size_t n) {
  const auto d = DivisionAlgebra::base(qq());
  return make_algebra(d, n, AlgebraElement::identity(n, d.zero(), d.one()));
}

inline AlgebraWithInvolution hamilton(std::size_t n = 1) {
  const auto d = DivisionAlgebra::quaternion(num(qq(), -1), num(qq(), -1));
  return make_algebra(d, n, AlgebraElement::identity(n, d.zero(), d.one()));
}

inline AlgebraWithInvolution gauss() {
  const auto d = DivisionAlgebra::quadratic(num(qq(), -1));
  return make_algebra(d, 1, AlgebraElement::identity(1, d.zero(), d.one()));
}

inline AlgebraElement one_by_one(const DElement& x) { return AlgebraElement::from_rows({{x}}); }

}  // namespace test
