#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hermsig/rational.hpp"

namespace hermsig {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial x() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;
  int sign_at(const Rational& at) const { return sign((*this)(at)); }
  /// Sign as x -> +inf / -inf, i.e. the leading-coefficient surrogate.
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;
  /// p(-x)
  Polynomial reflect() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws Error("ZeroPolynomial") when dividing by zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;    // s*a + t*b == gcd
  Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic. Zero stays zero.
Polynomial squarefree_part(const Polynomial& p);
bool is_squarefree(const Polynomial& p);

/// "x^2 - 2" style rendering, for text reports.
std::string to_display_string(const Polynomial& p, const std::string& var = "x");

/// Closed rational interval [lo, hi] with lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  /// Throws Error("InvalidInterval") when lo > hi.
  Interval(Rational lo_, Rational hi_);
  static Interval point(const Rational& x) { return Interval(x, x); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Interval extension of p over iv (Horner form): a rational enclosure of
/// {p(x) : x in iv}. Tight when iv is a point.
Interval enclose(const Polynomial& p, const Interval& iv);

}  // namespace hermsig
