#include "hermsig/cones.hpp"
#include "hermsig/hermitian.hpp"
#include "hermsig/sampler.hpp"
#include "support.hpp"

using namespace hermsig;
using namespace test;

namespace {

OrderingHandle only(const NumberField& f) { return f.orderings().front(); }

DMatrix base_matrix(const std::vector<std::vector<long>>& rows) {
  return scalars(DivisionAlgebra::base(qq()), rows);
}

AlgebraWithInvolution twisted_m2() {
  const auto base = DivisionAlgebra::base(qq());
  return make_algebra(base, 2, scalars(base, {{1, 0}, {0, -1}}));
}

}  // namespace

TEST_CASE("psd membership over a division algebra") {
  const auto p = only(qq());
  const auto semi = psd_membership(base_matrix({{1, 0}, {0, 0}}), p);
  CHECK(semi.member);
  REQUIRE(semi.witness.has_value());
  CHECK(witness_matrix(*semi.witness) == base_matrix({{1, 0}, {0, 0}}));
  CHECK_FALSE(psd_membership(base_matrix({{0, 1}, {1, 0}}), p).member);

  const auto h = DivisionAlgebra::quaternion(num(qq(), -1), num(qq(), -1));
  const DElement i = h.basis_element(1);
  const DMatrix b = DMatrix::from_rows({{h.one(), i}, {-i, h.one()}});
  const auto m = psd_membership(b, p);
  CHECK(m.member);
  REQUIRE(m.witness.has_value());
  int zeros = 0;
  for (const auto& d : m.witness->diagonal) zeros += d.is_zero();
  CHECK(zeros == 1);
  CHECK(witness_matrix(*m.witness) == b);

  CHECK(error_code([&] { psd_membership(DMatrix::from_rows({{h.one(), i}, {i, h.one()}}), p); }) == "NotHermitian");
}

TEST_CASE("cone membership") {
  const auto m2 = mat_q(2);
  const auto p = only(qq());
  const PositiveConeHandle pos(m2, p, 1), neg(m2, p, -1);
  CHECK(cone_membership(m2.phi(), pos).member);
  CHECK_FALSE(cone_membership(m2.phi(), neg).member);
  const auto indefinite = base_matrix({{1, 0}, {0, -1}});
  CHECK_FALSE(cone_membership(indefinite, pos).member);
  CHECK_FALSE(cone_membership(indefinite, neg).member);

  const auto tw = twisted_m2();
  const auto w = cone_membership(tw.phi(), PositiveConeHandle(tw, p, 1));
  CHECK(w.member);
  REQUIRE(w.witness.has_value());
  CHECK(witness_element(*w.witness, PositiveConeHandle(tw, p, 1)) == tw.phi());

  CHECK(error_code([&] { cone_membership(base_matrix({{1, 2}, {3, 4}}), pos); }) == "NotSymmetric");
  CHECK(error_code([&] { PositiveConeHandle(m2, p, 0); }) == "InvalidOrientation");
  const NumberField r = sqrt2();
  const auto qd = DivisionAlgebra::quaternion(num(r, -1), r.generator());
  const auto nil = make_algebra(qd, 1, one_by_one(qd.one()));
  CHECK(error_code([&] { PositiveConeHandle(nil, positive_root(r), 1); }) == "NilOrdering");
}

TEST_CASE("listing cones") {
  const auto cs = list_positive_cones(mat_q(2));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].orientation() == 1);
  CHECK(cs[1].orientation() == -1);
  CHECK(project_pi(cs[0]) == project_pi(cs[1]));

  const NumberField r = sqrt2();
  const auto qd = DivisionAlgebra::quaternion(num(r, -1), r.generator());
  const auto nil = make_algebra(qd, 1, one_by_one(qd.one()));
  const auto ns = list_positive_cones(nil);
  REQUIRE(ns.size() == 2);
  for (const auto& c : ns) CHECK_FALSE(is_nil(nil, project_pi(c)));

  const auto split = DivisionAlgebra::quaternion(num(qq(), 1), num(qq(), 1));
  CHECK(list_positive_cones(make_algebra(split, 1, one_by_one(split.one()))).empty());
}

TEST_CASE("cone axioms") {
  Sampler s(8);
  const auto m2 = mat_q(2);
  const auto p = only(qq());
  const PositiveConeHandle cone(m2, p, 1);
  std::vector<AlgebraElement> samples, mult;
  for (int i = 0; i < 40; ++i) {
    samples.push_back(s.cone_member(m2, p, 1, 3, i % 3 != 0));
    mult.push_back(s.element(m2, 3));
  }
  const std::vector<FieldElement> scalars_{num(qq(), 2), num(qq(), 1, 3), qq().zero()};
  const auto good = cone_axioms_check(cone, samples, scalars_, mult);
  CHECK(good.passed());

  int calls = 0;
  const MembershipPredicate flipped = [&](const AlgebraElement& x) {
    const int o = (calls++ % 2 == 0) ? 1 : -1;
    return cone_membership(x, PositiveConeHandle(m2, p, o)).member;
  };
  CHECK_FALSE(cone_axioms_check(cone, samples, scalars_, mult, flipped).p5.passed);

  const std::vector<FieldElement> with_minus{num(qq(), 2), num(qq(), -1)};
  const auto r = cone_axioms_check(cone, samples, with_minus, mult);
  CHECK(r.p4.passed);
  CHECK(r.scalar_cone.size() == 1);
}

TEST_CASE("harrison sets of cones") {
  const auto m2 = mat_q(2);
  const auto all = list_positive_cones(m2);
  const auto pos = harrison_sigma(m2, {m2.phi()});
  REQUIRE(pos.size() == 1);
  CHECK(pos[0].orientation() == 1);
  CHECK(harrison_sigma(m2, {m2.zero()}).size() == all.size());
  CHECK(harrison_sigma(m2, {m2.phi(), -m2.phi()}).empty());
  CHECK(error_code([&] { harrison_sigma(m2, {base_matrix({{0, 1}, {2, 0}})}); }) == "NotSymmetric");
}

TEST_CASE("membership agrees with the signature for invertible elements") {
  Sampler s(12);
  for (const auto& a : {mat_q(2), twisted_m2(), hamilton(2), gauss()}) {
    for (const auto& cone : list_positive_cones(a)) {
      const auto n = static_cast<long>(local_degree_nP(a, cone.ordering()).value);
      for (int t = 0; t < 30; ++t) {
        const auto x = s.symmetric(a, 3);
        if (!a.is_invertible(x)) continue;
        const long sg = signature(HermitianForm::diagonal(a, {x}), cone.ordering());
        CHECK(cone_membership(x, cone).member == (sg == cone.orientation() * n));
      }
    }
  }
}

TEST_CASE("extending cones") {
  Sampler s(13);
  const NumberField r = sqrt2();
  const auto e = embed_field(qq(), r, r.zero());
  const auto m2 = mat_q(2);
  const PositiveConeHandle cone(m2, only(qq()), 1);
  std::vector<AlgebraElement> samples;
  for (int i = 0; i < 20; ++i) samples.push_back(s.cone_member(m2, only(qq()), 1, 3, true));
  for (const auto& q : r.orderings()) {
    const auto x = extend_cone(e, cone, q, samples);
    CHECK(x.ok());
    CHECK(x.checked == samples.size());
    CHECK(x.cone.orientation() == 1);
  }

  const NumberField l = fourth_root2();
  const auto e2 = embed_field(r, l, l.generator() * l.generator());
  const auto rd = DivisionAlgebra::base(r);
  const auto a = make_algebra(rd, 1, one_by_one(rd.one()));
  // every ordering of Q(2^(1/4)) lies over the positive root of Q(sqrt 2)
  const PositiveConeHandle wrong(a, negative_root(r), 1);
  CHECK(error_code([&] { extend_cone(e2, wrong, l.orderings()[0], {}); }) == "OrderingDoesNotRestrict");
  const PositiveConeHandle right(a, positive_root(r), -1);
  CHECK(extend_cone(e2, right, l.orderings()[1], {-a.identity()}).ok());
}
