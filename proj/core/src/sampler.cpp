#include "hermsig/sampler.hpp"

#include "hermsig/error.hpp"

namespace hermsig {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Rational Sampler::rational(long height) {
  Rational r(integer(-height, height), integer(1, height));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational(long height) {
  for (;;) {
    Rational r = rational(height);
    if (r != 0) return r;
  }
}

FieldElement Sampler::field_element(const NumberField& field, long height) {
  std::vector<Rational> c;
  for (int i = 0; i < field.degree(); ++i) c.push_back(rational(height));
  return field.element(std::move(c));
}

FieldElement Sampler::nonzero_field_element(const NumberField& field, long height) {
  for (;;) {
    FieldElement x = field_element(field, height);
    if (!x.is_zero()) return x;
  }
}

FieldElement Sampler::positive_at(const OrderingHandle& p, long height) {
  FieldElement x = nonzero_field_element(p.field(), height);
  return sign_of(x, p) > 0 ? x : -x;
}

DElement Sampler::d_element(const DivisionAlgebra& d, long height) {
  std::vector<FieldElement> c;
  for (std::size_t t = 0; t < d.dimension(); ++t) c.push_back(field_element(d.field(), height));
  return d.element(std::move(c));
}

DElement Sampler::d_unit(const DivisionAlgebra& d, long height) {
  for (;;) {
    DElement x = d_element(d, height);
    if (!x.norm().is_zero()) return x;
  }
}

AlgebraElement Sampler::element(const AlgebraWithInvolution& a, long height) {
  AlgebraElement x = a.zero();
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) x(i, j) = d_element(a.division(), height);
  return x;
}

AlgebraElement Sampler::unit(const AlgebraWithInvolution& a, long height) {
  const std::size_t n = a.n();
  const auto& d = a.division();
  AlgebraElement lower = a.identity();
  AlgebraElement diag = a.zero();
  AlgebraElement upper = a.identity();
  for (std::size_t i = 0; i < n; ++i) {
    diag(i, i) = d_unit(d, height);
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = d_element(d, height);
      upper(j, i) = d_element(d, height);
    }
  }
  return lower * diag * upper;
}

AlgebraElement Sampler::symmetric(const AlgebraWithInvolution& a, long height) {
  const std::size_t n = a.n();
  const auto& d = a.division();
  AlgebraElement s = a.zero();
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = d.scalar(field_element(d.field(), height));
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = d_element(d, height);
      s(j, i) = conj(s(i, j));
    }
  }
  return a.phi() * s;
}

AlgebraElement Sampler::symmetric_unit(const AlgebraWithInvolution& a, long height) {
  for (;;) {
    AlgebraElement x = symmetric(a, height);
    if (a.is_invertible(x)) return x;
  }
}

AlgebraElement Sampler::cone_member(const AlgebraWithInvolution& a, const OrderingHandle& p, int orientation,
                                    long height, bool invertible) {
  const AlgebraElement g = invertible ? unit(a, height) : element(a, height);
  AlgebraElement delta = a.zero();
  for (std::size_t i = 0; i < a.n(); ++i) {
    FieldElement u = (invertible || integer(0, 3) != 0) ? positive_at(p, height) : p.field().zero();
    delta(i, i) = a.division().scalar(u);
  }
  AlgebraElement x = a.phi() * theta_transpose(g) * delta * g;
  return orientation < 0 ? -x : x;
}

FormMatrix Sampler::congruence(const AlgebraWithInvolution& a, std::size_t k, long height) {
  FormMatrix lower(k, k, a.zero());
  FormMatrix upper(k, k, a.zero());
  for (std::size_t i = 0; i < k; ++i) {
    lower(i, i) = unit(a, height);
    upper(i, i) = a.identity();
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = element(a, height);
      upper(j, i) = element(a, height);
    }
  }
  return lower * upper;
}

HermitianForm Sampler::diagonal_form(const AlgebraWithInvolution& a, std::size_t k, long height) {
  std::vector<AlgebraElement> entries;
  for (std::size_t i = 0; i < k; ++i) entries.push_back(symmetric_unit(a, height));
  return HermitianForm::diagonal(a, entries);
}

HermitianForm Sampler::form(const AlgebraWithInvolution& a, std::size_t k, long height) {
  return congruent(diagonal_form(a, k, height), congruence(a, k, height));
}

DMatrix Sampler::hermitian_matrix(const DivisionAlgebra& d, std::size_t k, long height) {
  DMatrix m(k, k, d.zero());
  for (std::size_t i = 0; i < k; ++i) {
    m(i, i) = d.scalar(field_element(d.field(), height));
    for (std::size_t j = i + 1; j < k; ++j) {
      m(i, j) = d_element(d, height);
      m(j, i) = conj(m(i, j));
    }
  }
  return m;
}

}  // namespace hermsig
