#include "hermsig/number_field.hpp"

#include <utility>

#include "hermsig/error.hpp"
#include "hermsig/sturm.hpp"

namespace hermsig {

struct NumberField::Data {
  Polynomial min_poly;
  std::vector<Interval> roots;  // refined isolating intervals, increasing
};

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  std::vector<mpz_class> out;
  n = abs(n);
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// True if p (degree > 1) has a rational root. Coefficients larger than the
// screen limit skip the test; irreducibility is the caller's contract.
bool has_rational_root(const Polynomial& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) ints.push_back(mpz_class(c * lcm_den));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) return true;  // x divides p
  const mpz_class limit("1000000000000");
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) return false;
  for (const auto& num : positive_divisors(ints.front())) {
    for (const auto& den : positive_divisors(ints.back())) {
      for (int s : {1, -1}) {
        Rational x(s * num, den);
        x.canonicalize();
        if (p(x) == 0) return true;
      }
    }
  }
  return false;
}

const Rational kInitialWidth = Rational(1, 1 << 24);

}  // namespace

NumberField::NumberField(const Polynomial& min_poly) {
  if (min_poly.is_zero()) throw Error("ZeroPolynomial", "minimal polynomial is zero");
  if (min_poly.degree() < 1) throw Error("InvalidField", "minimal polynomial must have degree >= 1");
  if (!is_squarefree(min_poly)) throw Error("NotSquarefree", "minimal polynomial is not squarefree");
  Polynomial monic = min_poly.monic();
  if (monic.degree() > 1 && has_rational_root(monic)) {
    throw Error("NotIrreducible", "minimal polynomial has a rational root");
  }
  auto data = std::make_shared<Data>();
  data->min_poly = monic;
  for (const auto& iv : isolate_real_roots(monic)) {
    data->roots.push_back(iv.is_point() ? iv : refine_interval(monic, iv, kInitialWidth));
  }
  if (monic.degree() == 1) {
    // The unique root is rational; keep it exact.
    data->roots = {Interval::point(-monic.coefficient(0))};
  }
  data_ = std::move(data);
}

NumberField NumberField::rationals() { return NumberField(Polynomial::x()); }

const Polynomial& NumberField::min_poly() const { return data_->min_poly; }

int NumberField::degree() const { return data_->min_poly.degree(); }

FieldElement NumberField::zero() const { return from_rational(Rational(0)); }

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::generator() const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  if (degree() == 1) {
    c[0] = -data_->min_poly.coefficient(0);
  } else {
    c[1] = 1;
  }
  return FieldElement(*this, std::move(c));
}

FieldElement NumberField::from_rational(const Rational& c) const {
  std::vector<Rational> v(static_cast<std::size_t>(degree()));
  v[0] = c;
  return FieldElement(*this, std::move(v));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
  return FieldElement(*this, std::move(coords));
}

std::vector<OrderingHandle> NumberField::orderings() const {
  if (data_->roots.empty()) throw Error("NotFormallyReal");
  std::vector<OrderingHandle> out;
  out.reserve(data_->roots.size());
  for (std::size_t i = 0; i < data_->roots.size(); ++i) out.emplace_back(*this, i, data_->roots[i]);
  return out;
}

bool NumberField::formally_real() const { return !data_->roots.empty(); }

bool operator==(const NumberField& a, const NumberField& b) {
  return a.data_ == b.data_ || a.data_->min_poly == b.data_->min_poly;
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(field_.degree())) {
    throw Error("DegreeMismatch", "coordinate count does not match the field degree");
  }
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return false;
  }
  return true;
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw Error("FieldMismatch");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(o);
  const std::size_t d = coords_.size();
  if (d == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  const Polynomial prod = (as_polynomial() * o.as_polynomial()) % field_.min_poly();
  for (std::size_t i = 0; i < d; ++i) coords_[i] = prod.coefficient(static_cast<int>(i));
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.coords_ == b.coords_ && a.field_ == b.field_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("NotInvertible", "zero field element");
  if (coords_.size() == 1) return field_.from_rational(Rational(1) / coords_[0]);
  const ExtendedGcd eg = extended_gcd(as_polynomial(), field_.min_poly());
  if (eg.gcd.degree() != 0) throw Error("NotInvertible", "element shares a factor with the minimal polynomial");
  const Polynomial inv = eg.s % field_.min_poly();
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = inv.coefficient(static_cast<int>(i));
  return FieldElement(field_, std::move(c));
}

OrderingHandle::OrderingHandle(NumberField field, std::size_t root_index, Interval isolating)
    : field_(std::move(field)), root_index_(root_index), isolating_(std::move(isolating)) {}

std::vector<OrderingHandle> list_orderings(const NumberField& field) { return field.orderings(); }

namespace {

// Bisects an isolating interval of the squarefree polynomial m, keeping the
// root. Returns false if the midpoint is the (rational) root itself.
bool bisect_towards_root(const Polynomial& m, Interval& iv) {
  Rational mid = iv.midpoint();
  const int s_mid = m.sign_at(mid);
  if (s_mid == 0) {
    iv = Interval::point(mid);
    return false;
  }
  if (s_mid == m.sign_at(iv.lo)) {
    iv.lo = std::move(mid);
  } else {
    iv.hi = std::move(mid);
  }
  return true;
}

}  // namespace

int sign_of(const FieldElement& alpha, const OrderingHandle& ordering) {
  if (!(alpha.field() == ordering.field())) throw Error("FieldMismatch");
  if (alpha.is_zero()) return 0;
  const Polynomial a = alpha.as_polynomial();
  if (a.degree() == 0) return sign(a.coefficient(0));
  Interval iv = ordering.isolating();
  if (iv.is_point()) return a.sign_at(iv.lo);
  const Polynomial& m = alpha.field().min_poly();
  bool zero_ruled_out = false;
  for (;;) {
    const Interval e = enclose(a, iv);
    if (sgn(e.lo) > 0) return 1;
    if (sgn(e.hi) < 0) return -1;
    if (!zero_ruled_out) {
      const Polynomial g = gcd(a, m);
      if (g.degree() > 0 && count_real_roots(g, iv) > 0) return 0;
      zero_ruled_out = true;
    }
    if (!bisect_towards_root(m, iv)) return a.sign_at(iv.lo);
  }
}

std::vector<OrderingHandle> harrison_set(const NumberField& field, std::span<const FieldElement> us) {
  for (const auto& u : us) {
    if (u.is_zero()) throw Error("ZeroElement");
  }
  std::vector<OrderingHandle> out;
  for (const auto& p : field.orderings()) {
    bool all = true;
    for (const auto& u : us) {
      if (sign_of(u, p) != 1) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(p);
  }
  return out;
}

FieldEmbedding::FieldEmbedding(NumberField source, NumberField target, FieldElement image_of_generator)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image_of_generator)) {}

FieldElement FieldEmbedding::push(const FieldElement& alpha) const {
  if (!(alpha.field() == source_)) throw Error("FieldMismatch");
  // Source coordinates are in the power basis of the source generator,
  // except for Q[x]/(x - r) where the element is just coords[0].
  FieldElement acc = target_.zero();
  if (source_.degree() == 1) return target_.from_rational(alpha.coords()[0]);
  const auto& c = alpha.coords();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= image_;
    acc += target_.from_rational(c[i]);
  }
  return acc;
}

OrderingHandle FieldEmbedding::restrict_ordering(const OrderingHandle& q) const {
  if (!(q.field() == target_)) throw Error("FieldMismatch");
  const auto candidates = source_.orderings();
  if (candidates.size() == 1) return candidates.front();
  const Polynomial b = image_.as_polynomial();
  const Polynomial& m = target_.min_poly();
  Interval iv = q.isolating();
  for (;;) {
    const Interval e = enclose(b, iv);
    std::size_t hits = 0, last = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].isolating().intersects(e)) {
        ++hits;
        last = i;
      }
    }
    if (hits == 1) return candidates[last];
    if (hits == 0) throw Error("InternalError", "image of an ordering matches no source root");
    if (!bisect_towards_root(m, iv) && iv.is_point()) {
      const Rational value = b(iv.lo);
      for (const auto& c : candidates) {
        if (c.isolating().contains(value)) return c;
      }
      throw Error("InternalError", "rational image matches no source root");
    }
  }
}

FieldEmbedding embed_field(const NumberField& source, const NumberField& target,
                           const FieldElement& image_of_generator) {
  if (!(image_of_generator.field() == target)) throw Error("FieldMismatch");
  FieldEmbedding emb(source, target, image_of_generator);
  // Evaluate the source minimal polynomial at the image, in the target.
  const auto& mc = source.min_poly().coefficients();
  FieldElement acc = target.zero();
  for (std::size_t i = mc.size(); i-- > 0;) {
    acc *= image_of_generator;
    acc += target.from_rational(mc[i]);
  }
  if (!acc.is_zero()) throw Error("NotAnEmbedding");
  return emb;
}

}  // namespace hermsig
