#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hermsig/polynomial.hpp"

namespace hermsig {

/// Signed remainder chain f0, f1, f2 = -rem(f0, f1), ... stopping before the
/// first zero remainder. The last entry is the gcd of the seeds up to a
/// constant factor.
struct SturmSequence {
  std::vector<Polynomial> polys;
};

/// Chain seeded with (p, p'). Throws Error("ZeroPolynomial") for p == 0.
SturmSequence sturm_sequence(const Polynomial& p);

/// Chain seeded with (p, q); q may be zero, giving the one-element chain.
SturmSequence sturm_sequence(const Polynomial& p, const Polynomial& q);

/// Sign changes of the chain evaluated at x, zero entries deleted.
int sign_variations(const SturmSequence& seq, const Rational& x);
/// Sign changes of the leading-coefficient signs at +inf or -inf.
int sign_variations_at_infinity(const SturmSequence& seq, bool positive);

/// Number of distinct real roots of p on the whole line.
std::size_t count_real_roots(const Polynomial& p);
/// Number of distinct real roots of p in the closed window [lo, hi].
std::size_t count_real_roots(const Polynomial& p, const Interval& window);

/// Disjoint isolating intervals, one per real root, in increasing order.
/// Endpoints are never roots unless the interval is a single point.
/// Throws Error("NotSquarefree") if p has a repeated factor.
std::vector<Interval> isolate_real_roots(const Polynomial& p);

/// Sum over real roots c of m of sgn(g(c)), via the chain of (m, m' g).
long tarski_query(const Polynomial& m, const Polynomial& g);

/// Number of real roots c of m with g_i(c) > 0 for every i, from the
/// averaged sum of Tarski queries over all exponent vectors e in {1,2}^r.
std::size_t count_roots_with_signs(const Polynomial& m, std::span<const Polynomial> conditions);

/// Shrinks an isolating interval of p by bisection until its width is at
/// most `width`. Throws Error("NotIsolating") unless iv holds exactly one root.
Interval refine_interval(const Polynomial& p, const Interval& iv, const Rational& width);

}  // namespace hermsig
