#include "hermsig/sturm.hpp"

#include <functional>

#include "hermsig/error.hpp"

namespace hermsig {

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void require_nonzero(const Polynomial& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial");
}

// Strict bound: every complex root z satisfies |z| < bound.
Rational cauchy_bound(const Polynomial& p) {
  Rational m(0);
  const Rational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficient(i) / lc);
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace

SturmSequence sturm_sequence(const Polynomial& p) {
  require_nonzero(p);
  return sturm_sequence(p, p.derivative());
}

SturmSequence sturm_sequence(const Polynomial& p, const Polynomial& q) {
  require_nonzero(p);
  SturmSequence seq;
  seq.polys.push_back(p);
  if (q.is_zero()) return seq;
  seq.polys.push_back(q);
  for (;;) {
    const auto n = seq.polys.size();
    Polynomial r = -(seq.polys[n - 2] % seq.polys[n - 1]);
    if (r.is_zero()) break;
    seq.polys.push_back(std::move(r));
  }
  return seq;
}

int sign_variations(const SturmSequence& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.polys.size());
  for (const auto& f : seq.polys) signs.push_back(f.sign_at(x));
  return count_changes(signs);
}

int sign_variations_at_infinity(const SturmSequence& seq, bool positive) {
  std::vector<int> signs;
  signs.reserve(seq.polys.size());
  for (const auto& f : seq.polys) signs.push_back(positive ? f.sign_at_pos_inf() : f.sign_at_neg_inf());
  return count_changes(signs);
}

std::size_t count_real_roots(const Polynomial& p) {
  require_nonzero(p);
  const SturmSequence seq = sturm_sequence(squarefree_part(p));
  return static_cast<std::size_t>(sign_variations_at_infinity(seq, false) -
                                  sign_variations_at_infinity(seq, true));
}

std::size_t count_real_roots(const Polynomial& p, const Interval& window) {
  require_nonzero(p);
  const Polynomial s = squarefree_part(p);
  const bool lo_root = s.sign_at(window.lo) == 0;
  if (window.is_point()) return lo_root ? 1 : 0;
  const SturmSequence seq = sturm_sequence(s);
  // With a squarefree seed, V(a) - V(b) counts the roots in (a, b] even when
  // a or b is itself a root.
  const int half_open = sign_variations(seq, window.lo) - sign_variations(seq, window.hi);
  return static_cast<std::size_t>(half_open + (lo_root ? 1 : 0));
}

std::vector<Interval> isolate_real_roots(const Polynomial& p) {
  require_nonzero(p);
  if (!is_squarefree(p)) throw Error("NotSquarefree");
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  const SturmSequence seq = sturm_sequence(p);
  const Rational bound = cauchy_bound(p);

  // Splits (lo, hi] where neither endpoint is a root.
  std::function<void(const Rational&, const Rational&, int, int)> split =
      [&](const Rational& lo, const Rational& hi, int v_lo, int v_hi) {
        const int count = v_lo - v_hi;
        if (count == 0) return;
        if (count == 1) {
          out.emplace_back(lo, hi);
          return;
        }
        Rational mid = (lo + hi) / 2;
        Rational step = (hi - lo) / 4;
        for (int k = 0; p.sign_at(mid) == 0; ++k) {
          mid = (lo + hi) / 2 + ((k % 2 == 0) ? step : -step);
          if (k % 2 == 1) step /= 2;
        }
        const int v_mid = sign_variations(seq, mid);
        split(lo, mid, v_lo, v_mid);
        split(mid, hi, v_mid, v_hi);
      };
  split(-bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound));
  for (auto& iv : out) {
    while (iv.width() > 1) {
      const Rational mid = iv.midpoint();
      if (p.sign_at(mid) == 0) {
        iv = Interval::point(mid);
      } else if (sign_variations(seq, mid) - sign_variations(seq, iv.hi) == 1) {
        iv.lo = mid;
      } else {
        iv.hi = mid;
      }
    }
  }
  // Neighbours may share a (non-root) endpoint; pull the left one off it.
  for (std::size_t i = 1; i < out.size(); ++i) {
    Interval& left = out[i - 1];
    while (left.hi == out[i].lo) {
      const Rational mid = left.midpoint();
      if (p.sign_at(mid) == 0) {
        left = Interval::point(mid);
      } else if (sign_variations(seq, mid) - sign_variations(seq, left.hi) == 1) {
        left.lo = mid;
      } else {
        left.hi = mid;
      }
    }
  }
  return out;
}

long tarski_query(const Polynomial& m, const Polynomial& g) {
  require_nonzero(m);
  const SturmSequence seq = sturm_sequence(m, m.derivative() * g);
  return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
}

std::size_t count_roots_with_signs(const Polynomial& m, std::span<const Polynomial> conditions) {
  require_nonzero(m);
  if (conditions.empty()) throw Error("EmptyConditions");
  if (!is_squarefree(m)) throw Error("NotSquarefree");
  for (const auto& g : conditions) {
    if (gcd(m, g).degree() > 0) throw Error("SignConditionDegenerate");
  }
  const std::size_t r = conditions.size();
  if (r >= 8 * sizeof(unsigned long) - 1) throw Error("TooManyConditions");
  // Squares g_i^2 are shared between exponent vectors; precompute both powers.
  std::vector<Polynomial> squares;
  squares.reserve(r);
  for (const auto& g : conditions) squares.push_back(g * g);

  long total = 0;
  const unsigned long combos = 1UL << r;
  for (unsigned long mask = 0; mask < combos; ++mask) {
    Polynomial ge = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < r; ++i) {
      ge *= ((mask >> i) & 1UL) ? squares[i] : conditions[i];
      ge = ge % m;  // only the values at roots of m matter
    }
    total += tarski_query(m, ge);
  }
  if (total < 0 || total % static_cast<long>(combos) != 0) {
    throw Error("InternalError", "Tarski query sum not divisible by 2^r");
  }
  return static_cast<std::size_t>(total / static_cast<long>(combos));
}

Interval refine_interval(const Polynomial& p, const Interval& iv, const Rational& width) {
  require_nonzero(p);
  if (sgn(width) <= 0) throw Error("InvalidWidth", "width must be positive");
  const Polynomial s = squarefree_part(p);
  if (count_real_roots(s, iv) != 1) throw Error("NotIsolating");
  Rational lo = iv.lo, hi = iv.hi;
  if (s.sign_at(lo) == 0) return Interval::point(lo);
  if (s.sign_at(hi) == 0) return Interval::point(hi);
  const int s_lo = s.sign_at(lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    const int s_mid = s.sign_at(mid);
    if (s_mid == 0) return Interval::point(mid);
    // The root is simple in s, so s changes sign across it.
    if (s_mid == s_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return Interval(lo, hi);
}

}  // namespace hermsig
