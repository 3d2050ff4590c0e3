#include <algorithm>

#include "hermsig/error.hpp"
#include "hermsig/sturm.hpp"
#include "hermsig_verify/verify.hpp"

namespace hermsig::verify {

namespace {

// (1 + y)^d p((a + b y) / (1 + y)); its coefficient sign variations bound
// the number of roots of p in (a, b) and share their parity.
Polynomial moebius(const Polynomial& p, const Rational& a, const Rational& b) {
  const int d = p.degree();
  const Polynomial lin(std::vector<Rational>{a, b});
  const Polynomial one_y{1, 1};
  Polynomial out;
  for (int k = 0; k <= d; ++k) {
    const Rational c = p.coefficient(k);
    if (c == 0) continue;
    out += c * (lin.pow(static_cast<unsigned>(k)) * one_y.pow(static_cast<unsigned>(d - k)));
  }
  return out;
}

int variations(const Polynomial& q) {
  int v = 0;
  int last = 0;
  for (const auto& c : q.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int roots_parity(const Polynomial& p, const Rational& a, const Rational& b) { return variations(moebius(p, a, b)) % 2; }

void descartes(const Polynomial& p, const Rational& a, const Rational& b, std::vector<Interval>& out) {
  const int v = variations(moebius(p, a, b));
  if (v == 0) return;
  if (v == 1) {
    out.emplace_back(a, b);
    return;
  }
  const Rational m = (a + b) / 2;
  descartes(p, a, m, out);
  if (p(m) == 0) out.push_back(Interval::point(m));
  descartes(p, m, b, out);
}

struct Box {
  Rational lo, hi;
};

Box mul(const Box& x, const Box& y) {
  const Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Box horner(const Polynomial& g, const Box& x) {
  Box acc{0, 0};
  for (int k = g.degree(); k >= 0; --k) {
    acc = mul(acc, x);
    acc.lo += g.coefficient(k);
    acc.hi += g.coefficient(k);
  }
  return acc;
}

// Sign of g at the unique root of p in the open interval (or at the point).
int sign_at_root(const Polynomial& p, Interval iv, const Polynomial& g) {
  for (;;) {
    if (iv.is_point()) return sgn(g(iv.lo));
    const Box e = horner(g, {iv.lo, iv.hi});
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    const Rational m = iv.midpoint();
    if (p(m) == 0) {
      iv = Interval::point(m);
    } else if (roots_parity(p, iv.lo, m) == 1) {
      iv = Interval(iv.lo, m);
    } else {
      iv = Interval(m, iv.hi);
    }
  }
}

}  // namespace

std::vector<Interval> descartes_isolate(const Polynomial& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial");
  std::vector<Interval> out;
  if (p.degree() == 0) return out;
  Rational bound = 0;
  for (int k = 0; k < p.degree(); ++k) bound = std::max(bound, Rational(abs(p.coefficient(k) / p.leading())));
  bound += 1;
  descartes(p, -bound, bound, out);
  return out;
}

std::size_t brute_force_sign_count(const Polynomial& m, const std::vector<Polynomial>& gs) {
  std::size_t count = 0;
  for (const auto& iv : descartes_isolate(m)) {
    bool all = true;
    for (const auto& g : gs)
      if (sign_at_root(m, iv, g) <= 0) {
        all = false;
        break;
      }
    if (all) ++count;
  }
  return count;
}

}  // namespace hermsig::verify
