#include "hermsig/division_algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>

#include "hermsig/error.hpp"

namespace hermsig {

struct DivisionAlgebra::Data {
  DivisionKind kind;
  NumberField field;
  std::optional<FieldElement> d;  // quadratic
  std::optional<FieldElement> a;  // quaternion
  std::optional<FieldElement> b;
  std::optional<FieldElement> ab;
};

namespace {

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

// Looks for y with small integer coordinates such that d / y^2 is a rational
// square, which makes d a square in F.
bool find_square_root(const FieldElement& d) {
  const NumberField& f = d.field();
  if (d.is_rational() && is_rational_square(d.coords()[0])) return true;
  if (f.formally_real()) {
    for (const auto& p : f.orderings()) {
      if (sign_of(d, p) < 0) return false;
    }
  }
  if (f.degree() == 1) return false;
  constexpr int kBound = 3;
  const auto deg = static_cast<std::size_t>(f.degree());
  std::vector<Rational> coords(deg);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == deg) {
      FieldElement y(f, coords);
      if (y.is_zero() || y.is_rational()) return false;
      const FieldElement q = d / (y * y);
      return q.is_rational() && is_rational_square(q.coords()[0]);
    }
    for (int v = -kBound; v <= kBound; ++v) {
      coords[i] = v;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

DivisionAlgebra DivisionAlgebra::base(const NumberField& field) {
  return DivisionAlgebra(std::make_shared<Data>(Data{DivisionKind::base, field, {}, {}, {}, {}}));
}

DivisionAlgebra DivisionAlgebra::quadratic(const FieldElement& d) {
  if (d.is_zero()) throw Error("ZeroElement", "d must be nonzero");
  if (find_square_root(d)) throw Error("DIsSquare", "F(sqrt d) = F");
  return DivisionAlgebra(std::make_shared<Data>(Data{DivisionKind::quadratic, d.field(), d, {}, {}, {}}));
}

DivisionAlgebra DivisionAlgebra::quaternion(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error("FieldMismatch");
  if (a.is_zero() || b.is_zero()) throw Error("ZeroElement", "a and b must be nonzero");
  return DivisionAlgebra(std::make_shared<Data>(Data{DivisionKind::quaternion, a.field(), {}, a, b, a * b}));
}

DivisionKind DivisionAlgebra::kind() const { return data_->kind; }

const NumberField& DivisionAlgebra::field() const { return data_->field; }

std::size_t DivisionAlgebra::dimension() const {
  switch (data_->kind) {
    case DivisionKind::base: return 1;
    case DivisionKind::quadratic: return 2;
    case DivisionKind::quaternion: return 4;
  }
  return 1;
}

const FieldElement& DivisionAlgebra::d() const {
  if (!data_->d) throw Error("WrongKind", "d is only defined for the quadratic kind");
  return *data_->d;
}

const FieldElement& DivisionAlgebra::a() const {
  if (!data_->a) throw Error("WrongKind", "a is only defined for the quaternion kind");
  return *data_->a;
}

const FieldElement& DivisionAlgebra::b() const {
  if (!data_->b) throw Error("WrongKind", "b is only defined for the quaternion kind");
  return *data_->b;
}

DElement DivisionAlgebra::zero() const {
  return DElement(*this, std::vector<FieldElement>(dimension(), field().zero()));
}

DElement DivisionAlgebra::one() const { return scalar(field().one()); }

DElement DivisionAlgebra::scalar(const FieldElement& x) const {
  std::vector<FieldElement> c(dimension(), field().zero());
  c[0] = x;
  return DElement(*this, std::move(c));
}

DElement DivisionAlgebra::basis_element(std::size_t t) const {
  std::vector<FieldElement> c(dimension(), field().zero());
  c.at(t) = field().one();
  return DElement(*this, std::move(c));
}

std::vector<DElement> DivisionAlgebra::basis() const {
  std::vector<DElement> out;
  for (std::size_t t = 0; t < dimension(); ++t) out.push_back(basis_element(t));
  return out;
}

DElement DivisionAlgebra::element(std::vector<FieldElement> components) const {
  return DElement(*this, std::move(components));
}

DivisionAlgebra DivisionAlgebra::extend(const FieldEmbedding& embedding) const {
  if (!(embedding.source() == field())) throw Error("FieldMismatch");
  switch (data_->kind) {
    case DivisionKind::base: return base(embedding.target());
    case DivisionKind::quadratic: return quadratic(embedding.push(d()));
    case DivisionKind::quaternion: return quaternion(embedding.push(a()), embedding.push(b()));
  }
  throw Error("InternalError");
}

bool operator==(const DivisionAlgebra& x, const DivisionAlgebra& y) {
  if (x.data_ == y.data_) return true;
  const auto& p = *x.data_;
  const auto& q = *y.data_;
  return p.kind == q.kind && p.field == q.field && p.d == q.d && p.a == q.a && p.b == q.b;
}

DElement::DElement(DivisionAlgebra algebra, std::vector<FieldElement> components)
    : alg_(std::move(algebra)), c_(std::move(components)) {
  if (c_.size() != alg_.dimension()) throw Error("ShapeMismatch", "component count does not match the algebra");
  for (const auto& x : c_) {
    if (!(x.field() == alg_.field())) throw Error("FieldMismatch");
  }
}

bool DElement::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool DElement::is_scalar() const {
  for (std::size_t t = 1; t < c_.size(); ++t) {
    if (!c_[t].is_zero()) return false;
  }
  return true;
}

DElement& DElement::operator+=(const DElement& o) {
  if (c_.size() != o.c_.size()) throw Error("ShapeMismatch");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

DElement& DElement::operator-=(const DElement& o) {
  if (c_.size() != o.c_.size()) throw Error("ShapeMismatch");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

DElement& DElement::operator*=(const FieldElement& u) {
  for (auto& x : c_) x *= u;
  return *this;
}

DElement operator-(DElement x) {
  for (auto& c : x.c_) c = -c;
  return x;
}

namespace {

// e_i * e_j = sign * factor * e_k, with factor 1, a, b or ab (d for the
// quadratic kind, stored in the slot of a).
struct ProductRule {
  std::uint8_t k;
  std::int8_t sign;
  std::uint8_t factor;  // 0: 1, 1: a (or d), 2: b, 3: ab
};

constexpr ProductRule kQuadratic[2][2] = {{{0, 1, 0}, {1, 1, 0}}, {{1, 1, 0}, {0, 1, 1}}};
constexpr ProductRule kQuaternion[4][4] = {
    {{0, 1, 0}, {1, 1, 0}, {2, 1, 0}, {3, 1, 0}},
    {{1, 1, 0}, {0, 1, 1}, {3, 1, 0}, {2, 1, 1}},
    {{2, 1, 0}, {3, -1, 0}, {0, 1, 2}, {1, -1, 2}},
    {{3, 1, 0}, {2, -1, 1}, {1, 1, 2}, {0, -1, 3}},
};

}  // namespace

DElement operator*(const DElement& x, const DElement& y) {
  if (x.c_.size() != y.c_.size()) throw Error("ShapeMismatch");
  const auto& data = *x.alg_.data_;
  const auto& p = x.c_;
  const auto& q = y.c_;
  const std::size_t dim = p.size();
  if (dim == 1) return DElement(x.alg_, {p[0] * q[0]});
  const FieldElement* factors[4] = {nullptr, nullptr, nullptr, nullptr};
  if (data.kind == DivisionKind::quadratic) {
    factors[1] = &*data.d;
  } else {
    factors[1] = &*data.a;
    factors[2] = &*data.b;
    factors[3] = &*data.ab;
  }
  std::vector<FieldElement> r(dim, data.field.zero());
  for (std::size_t i = 0; i < dim; ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (q[j].is_zero()) continue;
      const ProductRule rule = dim == 2 ? kQuadratic[i][j] : kQuaternion[i][j];
      FieldElement term = p[i] * q[j];
      if (rule.factor != 0) term *= *factors[rule.factor];
      if (rule.sign < 0)
        r[rule.k] -= term;
      else
        r[rule.k] += term;
    }
  }
  return DElement(x.alg_, std::move(r));
}

DElement conj(const DElement& x) {
  std::vector<FieldElement> c = x.components();
  for (std::size_t t = 1; t < c.size(); ++t) c[t] = -c[t];
  return DElement(x.algebra(), std::move(c));
}

FieldElement DElement::norm() const {
  return (*this * conj(*this)).component(0);
}

FieldElement DElement::trace() const {
  if (alg_.kind() == DivisionKind::base) return c_[0];
  return c_[0] * Rational(2);
}

DElement DElement::inverse() const {
  const FieldElement n = norm();
  if (n.is_zero()) throw Error("NotInvertible", "element of norm zero");
  return conj(*this) * n.inverse();
}

DivisionCheck quaternion_division_check(const FieldElement& a, const FieldElement& b, int bound) {
  const DivisionAlgebra q = DivisionAlgebra::quaternion(a, b);
  const NumberField& f = a.field();
  if (f.formally_real()) {
    for (const auto& p : f.orderings()) {
      if (sign_of(a, p) < 0 && sign_of(b, p) < 0) return {DivisionStatus::division, std::nullopt, p, bound};
    }
  }
  // Increasing sup-norm shells so the first witness found is small.
  for (int h = 1; h <= bound; ++h) {
    for (int x0 = -h; x0 <= h; ++x0)
      for (int x1 = -h; x1 <= h; ++x1)
        for (int x2 = -h; x2 <= h; ++x2)
          for (int x3 = -h; x3 <= h; ++x3) {
            if (std::max({std::abs(x0), std::abs(x1), std::abs(x2), std::abs(x3)}) != h) continue;
            DElement x = q.element({f.from_rational(x0), f.from_rational(x1), f.from_rational(x2),
                                    f.from_rational(x3)});
            if (x.norm().is_zero()) return {DivisionStatus::split, x, std::nullopt, bound};
          }
  }
  return {DivisionStatus::unknown, std::nullopt, std::nullopt, bound};
}

}  // namespace hermsig
