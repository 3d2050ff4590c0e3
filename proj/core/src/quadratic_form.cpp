#include "hermsig/quadratic_form.hpp"

namespace hermsig {

QuadraticForm::QuadraticForm(NumberField field, std::vector<FieldElement> diagonal)
    : field_(std::move(field)), diag_(std::move(diagonal)) {
  for (const auto& d : diag_) {
    if (!(d.field() == field_)) throw Error("FieldMismatch");
  }
}

QuadraticForm QuadraticForm::from_gram(const FieldMatrix& gram) {
  auto c = diagonalize_symmetric(gram);
  return QuadraticForm(gram(0, 0).field(), std::move(c.diagonal));
}

std::size_t QuadraticForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diag_) r += d.is_zero() ? 0 : 1;
  return r;
}

Congruence<FieldElement> diagonalize_symmetric(const FieldMatrix& m) {
  if (!m.square()) throw Error("NotSymmetric", "matrix is not square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) throw Error("NotSymmetric");
  const NumberField& f = m(0, 0).field();
  const FieldElement one = f.one();
  return congruence_diagonalize<FieldElement>(m, f.zero(), one, std::span<const FieldElement>(&one, 1));
}

long signature_qf(const QuadraticForm& q, const OrderingHandle& ordering) {
  long s = 0;
  for (const auto& d : q.diagonal()) s += sign_of(d, ordering);
  return s;
}

QuadraticForm pfister(const NumberField& field, std::span<const FieldElement> us) {
  std::vector<FieldElement> diag{field.one()};
  for (const auto& u : us) {
    if (u.is_zero()) throw Error("ZeroElement");
    const std::size_t half = diag.size();
    for (std::size_t i = 0; i < half; ++i) diag.push_back(diag[i] * u);
  }
  return QuadraticForm(field, std::move(diag));
}

QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b) {
  if (!(a.field() == b.field())) throw Error("FieldMismatch");
  std::vector<FieldElement> diag;
  diag.reserve(a.dimension() * b.dimension());
  for (const auto& x : a.diagonal())
    for (const auto& y : b.diagonal()) diag.push_back(x * y);
  return QuadraticForm(a.field(), std::move(diag));
}

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b) {
  if (!(a.field() == b.field())) throw Error("FieldMismatch");
  std::vector<FieldElement> diag = a.diagonal();
  diag.insert(diag.end(), b.diagonal().begin(), b.diagonal().end());
  return QuadraticForm(a.field(), std::move(diag));
}

QuadraticForm scaled(const QuadraticForm& q, const FieldElement& u) {
  std::vector<FieldElement> diag;
  diag.reserve(q.dimension());
  for (const auto& x : q.diagonal()) diag.push_back(x * u);
  return QuadraticForm(q.field(), std::move(diag));
}

}  // namespace hermsig
