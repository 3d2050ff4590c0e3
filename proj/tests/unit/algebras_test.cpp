#include "hermsig/hermitian.hpp"
#include "hermsig/sampler.hpp"
#include "support.hpp"

using namespace hermsig;
using namespace test;

TEST_CASE("quaternion multiplication table") {
  const auto d = DivisionAlgebra::quaternion(num(qq(), 2), num(qq(), 3));
  const DElement i = d.basis_element(1), j = d.basis_element(2), k = d.basis_element(3);
  CHECK(i * i == d.scalar(num(qq(), 2)));
  CHECK(j * j == d.scalar(num(qq(), 3)));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(k * k == d.scalar(num(qq(), -6)));
  CHECK(i * k == j * num(qq(), 2));
  CHECK(k * i == -(j * num(qq(), 2)));
  CHECK(j * k == -(i * num(qq(), 3)));
  CHECK(k * j == i * num(qq(), 3));
  CHECK(conj(i) == -i);
  CHECK(conj(i * j) == conj(j) * conj(i));
  CHECK(conj(i * j) == j * i);
  const DElement x = d_of(d, {1, 2, -1, 3});
  CHECK(x * x.inverse() == d.one());
  CHECK(x * conj(x) == d.scalar(x.norm()));
}

TEST_CASE("quadratic extension arithmetic") {
  const auto d = DivisionAlgebra::quadratic(num(qq(), -1));
  const DElement i = d.basis_element(1);
  CHECK(i * i == d.scalar(num(qq(), -1)));
  CHECK(conj(i) == -i);
  CHECK(error_code([] { DivisionAlgebra::quadratic(num(qq(), 4)); }) == "DIsSquare");
  CHECK(error_code([] { DivisionAlgebra::quadratic(num(qq(), 9, 4)); }) == "DIsSquare");
  const NumberField r = sqrt2();
  CHECK(error_code([&] { DivisionAlgebra::quadratic(num(r, 2)); }) == "DIsSquare");
  CHECK(error_code([] { DivisionAlgebra::quaternion(num(qq(), 0), num(qq(), 1)); }) == "ZeroElement");
}

TEST_CASE("making algebras") {
  const auto base = DivisionAlgebra::base(qq());
  const auto m2 = mat_q(2);
  CHECK(m2.n() == 2);
  CHECK(m2.warnings().empty());
  CHECK(hamilton().warnings().empty());

  CHECK(error_code([&] { make_algebra(base, 2, scalars(base, {{0, 1}, {-1, 0}})); }) == "PhiNotSymmetric");
  CHECK(error_code([&] { make_algebra(base, 2, scalars(base, {{1, 1}, {1, 1}})); }) == "PhiSingular");
  CHECK(error_code([&] { make_algebra(base, 2, scalars(base, {{1}})); }) == "ShapeMismatch");

  const auto split = DivisionAlgebra::quaternion(num(qq(), 1), num(qq(), 1));
  const auto s = make_algebra(split, 1, one_by_one(split.one()));
  REQUIRE(s.warnings().size() == 1);
  CHECK(s.warnings()[0] == "DNotDivisionAtAnyOrdering");
}

TEST_CASE("involution basics") {
  const auto h = hamilton();
  const auto& d = h.division();
  CHECK(h.involution(h.identity()) == h.identity());
  CHECK(h.involution(one_by_one(d.basis_element(1))) == one_by_one(-d.basis_element(1)));
  CHECK(error_code([&] { h.invert(h.zero()); }) == "NotInvertible");
  CHECK_FALSE(h.is_invertible(mat_q(2).zero()));

  const auto base = DivisionAlgebra::base(qq());
  const auto twisted = make_algebra(base, 2, scalars(base, {{1, 0}, {0, -1}}));
  CHECK(twisted.is_symmetric(twisted.phi()));
  CHECK(twisted.is_symmetric(scalars(base, {{2, 5}, {-5, 1}})));
  CHECK_FALSE(twisted.is_symmetric(scalars(base, {{2, 5}, {5, 1}})));
}

TEST_CASE("reduced trace") {
  const auto h = hamilton();
  const auto& d = h.division();
  const auto z = h.center();
  CHECK(h.reduced_trace(h.identity()) == z.scalar(num(qq(), 2)));
  CHECK(h.reduced_trace(one_by_one(d.basis_element(1))) == z.zero());
  // Trd(theta(i) i) = -2a with a = -1
  const auto i = one_by_one(d.basis_element(1));
  CHECK(h.reduced_trace(h.multiply(h.involution(i), i)) == z.scalar(num(qq(), 2)));
  CHECK(mat_q(3).reduced_trace(mat_q(3).identity()) == DivisionAlgebra::base(qq()).scalar(num(qq(), 3)));
  const auto g = gauss();
  const auto gi = one_by_one(g.division().basis_element(1));
  CHECK(g.reduced_trace(gi) == g.division().basis_element(1));
}

TEST_CASE("quaternion division check") {
  CHECK(quaternion_division_check(num(qq(), -1), num(qq(), -1)).status == DivisionStatus::division);
  const auto split = quaternion_division_check(num(qq(), 1), num(qq(), 5));
  REQUIRE(split.status == DivisionStatus::split);
  REQUIRE(split.witness.has_value());
  CHECK(split.witness->norm().is_zero());
  CHECK_FALSE(split.witness->is_zero());
  const auto unknown = quaternion_division_check(num(qq(), 2), num(qq(), 3), 0);
  CHECK(unknown.status != DivisionStatus::division);
  if (unknown.status == DivisionStatus::unknown) CHECK(unknown.bound == 0);
}

TEST_CASE("involution axioms on random elements") {
  Sampler s(3);
  const auto r = sqrt2();
  const auto qd = DivisionAlgebra::quadratic(num(r, -1));
  const std::vector<AlgebraWithInvolution> algebras{
      mat_q(2), hamilton(2), gauss(),
      make_algebra(qd, 2,
                   AlgebraElement::from_rows({{qd.one(), qd.basis_element(1)},
                                              {-qd.basis_element(1), qd.scalar(num(r, 2))}}))};
  for (const auto& a : algebras) {
    for (int t = 0; t < 30; ++t) {
      const auto x = s.element(a, 3);
      const auto y = s.element(a, 3);
      CHECK(a.involution(a.involution(x)) == x);
      CHECK(a.involution(a.multiply(x, y)) == a.multiply(a.involution(y), a.involution(x)));
      if (a.is_invertible(x)) CHECK(a.multiply(x, a.invert(x)) == a.identity());
      const auto sym = s.symmetric(a, 3);
      CHECK(a.is_symmetric(sym));
    }
  }
}

TEST_CASE("dimension of the symmetric elements") {
  CHECK(mat_q(2).symmetric_dimension() == 3);
  CHECK(mat_q(3).symmetric_dimension() == 6);
  CHECK(hamilton(1).symmetric_dimension() == 1);
  CHECK(hamilton(2).symmetric_dimension() == 6);
  CHECK(gauss().symmetric_dimension() == 1);
  const auto base = DivisionAlgebra::base(qq());
  const auto twisted = make_algebra(base, 2, scalars(base, {{1, 0}, {0, -1}}));
  CHECK(twisted.symmetric_dimension() == 3);
  const auto qd = DivisionAlgebra::quadratic(num(qq(), -1));
  const auto u2 = make_algebra(qd, 2, AlgebraElement::identity(2, qd.zero(), qd.one()));
  CHECK(u2.symmetric_dimension() == 4);
}
