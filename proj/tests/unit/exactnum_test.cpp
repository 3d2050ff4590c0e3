#include <random>

#include "hermsig/sturm.hpp"
#include "support.hpp"

using namespace hermsig;
using test::error_code;

namespace {

Polynomial x() { return Polynomial::x(); }

}  // namespace

TEST_CASE("rationals print as p/q and parse back") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(-2)) == "-2/1");
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(error_code([] { parse_rational("1/0"); }) == "ParseError");
  CHECK(error_code([] { parse_rational("0.5"); }) == "ParseError");
  CHECK(error_code([] { parse_rational("1/-2"); }) == "ParseError");
}

TEST_CASE("polynomial gcd and squarefree part") {
  const Polynomial p = Polynomial{-1, 0, 1} * Polynomial{-1, 1};  // (x-1)^2 (x+1)
  CHECK(gcd(p, p.derivative()) == Polynomial{-1, 1});
  CHECK(squarefree_part(p) == Polynomial{-1, 0, 1});
  CHECK_FALSE(is_squarefree(p));
  CHECK(is_squarefree(Polynomial{-2, 0, 1}));
  const auto [q, r] = Polynomial::divmod(Polynomial{1, 0, 0, 1}, Polynomial{1, 1});
  CHECK(q == Polynomial{1, -1, 1});
  CHECK(r.is_zero());
}

TEST_CASE("sturm chains") {
  const auto s = sturm_sequence(Polynomial{-2, 0, 1});
  REQUIRE(s.polys.size() == 3);
  CHECK(s.polys[1] == Polynomial{0, 2});
  CHECK(s.polys[2] == Polynomial{2});

  const auto lin = sturm_sequence(Polynomial{-1, 1});
  REQUIRE(lin.polys.size() == 2);
  CHECK(lin.polys[1] == Polynomial{1});

  const auto sq = sturm_sequence(Polynomial{0, 0, 1});
  REQUIRE(sq.polys.size() == 2);
  CHECK(sq.polys.back() == Polynomial{0, 2});

  CHECK(error_code([] { sturm_sequence(Polynomial()); }) == "ZeroPolynomial");
}

TEST_CASE("counting real roots") {
  CHECK(count_real_roots(Polynomial{-2, 0, 1}) == 2);
  CHECK(count_real_roots(Polynomial{1, 0, 1}) == 0);
  CHECK(count_real_roots(Polynomial{-2, 0, 1}, Interval(Rational(0), Rational(2))) == 1);
  // windows are closed at both ends
  CHECK(count_real_roots(Polynomial{-1, 1}, Interval(Rational(0), Rational(1))) == 1);
  CHECK(count_real_roots(Polynomial{-1, 1}, Interval(Rational(1), Rational(2))) == 1);
  CHECK(count_real_roots(Polynomial{-1, 1}, Interval::point(Rational(1))) == 1);
  CHECK(count_real_roots(Polynomial{0, -1, 0, 1}, Interval(Rational(-1), Rational(1))) == 3);
  CHECK(error_code([] { count_real_roots(Polynomial()); }) == "ZeroPolynomial");
}

TEST_CASE("root isolation") {
  const Polynomial p{-2, 0, 1};
  const auto ivs = isolate_real_roots(p);
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].lo >= Rational(-2));
  CHECK(ivs[0].hi <= Rational(0));
  CHECK(ivs[1].lo >= Rational(0));
  CHECK(ivs[1].hi <= Rational(2));
  for (const auto& iv : ivs) CHECK(count_real_roots(p, iv) + (p.sign_at(iv.lo) == 0 ? 1 : 0) == 1);

  const auto zero = isolate_real_roots(x());
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].contains(Rational(0)));

  const auto three = isolate_real_roots(Polynomial{0, -2, 0, 1});
  REQUIRE(three.size() == 3);
  CHECK(three[0].hi < three[1].lo);
  CHECK(three[1].contains(Rational(0)));
  CHECK(three[1].hi < three[2].lo);

  CHECK(error_code([] { isolate_real_roots(Polynomial{0, 0, 1}); }) == "NotSquarefree");
}

TEST_CASE("tarski queries") {
  CHECK(tarski_query(Polynomial{-2, 0, 1}, x()) == 0);
  CHECK(tarski_query(Polynomial{-2, 0, 1}, Polynomial{0, 0, 1}) == 2);
  CHECK(tarski_query(Polynomial{1, 0, 1}, x()) == 0);
  CHECK(tarski_query(Polynomial{0, -1, 0, 1}, Polynomial{-1, 2}) == -1);  // roots -1,0,1 vs 2x-1
  CHECK(error_code([] { tarski_query(Polynomial(), x()); }) == "ZeroPolynomial");
}

TEST_CASE("counting roots under sign conditions") {
  const Polynomial m{-2, 0, 1};
  const std::vector<Polynomial> pos{x()};
  CHECK(count_roots_with_signs(m, pos) == 1);
  const std::vector<Polynomial> none{-x(), Polynomial{-10, 1}};
  CHECK(count_roots_with_signs(m, none) == 0);
  const std::vector<Polynomial> shared{x()};
  CHECK(error_code([&] { count_roots_with_signs(Polynomial{0, -1, 0, 1}, shared); }) == "SignConditionDegenerate");
  CHECK(error_code([&] { count_roots_with_signs(m, std::vector<Polynomial>{}); }) == "EmptyConditions");
  // roots of (x^2-1)(x^2-4): +-1, +-2; x > 0 and x^2 - 3 > 0 picks out 2
  const Polynomial quartic = Polynomial{-1, 0, 1} * Polynomial{-4, 0, 1};
  const std::vector<Polynomial> two{x(), Polynomial{-3, 0, 1}};
  CHECK(count_roots_with_signs(quartic, two) == 1);
}

TEST_CASE("interval refinement") {
  const Polynomial p{-2, 0, 1};
  const Interval r = refine_interval(p, Interval(Rational(1), Rational(2)), Rational(1, 100));
  CHECK(r.width() <= Rational(1, 100));
  CHECK(p.sign_at(r.lo) * p.sign_at(r.hi) <= 0);
  CHECK(r.lo * r.lo <= Rational(2));
  CHECK(r.hi * r.hi >= Rational(2));

  const Interval z = refine_interval(x(), Interval(Rational(-1), Rational(1)), Rational(1, 2));
  CHECK(z.width() <= Rational(1, 2));
  CHECK(z.contains(Rational(0)));

  CHECK(error_code([&] { refine_interval(p, Interval(Rational(-2), Rational(2)), Rational(1, 10)); }) ==
        "NotIsolating");
}

TEST_CASE("random squarefree polynomials: counts agree with isolation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<int> deg(1, 8);
  int tested = 0;
  while (tested < 300) {
    std::vector<Rational> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
    if (cs.back() == 0) continue;
    const Polynomial p(cs);
    if (!is_squarefree(p)) continue;
    ++tested;
    const auto ivs = isolate_real_roots(p);
    CHECK(ivs.size() == count_real_roots(p));
    CHECK(tarski_query(p, Polynomial{1}) == static_cast<long>(ivs.size()));
    for (std::size_t i = 1; i < ivs.size(); ++i) CHECK(ivs[i - 1].hi < ivs[i].lo);
  }
}
