#include "hermsig/cones.hpp"
#include "hermsig/hermitian.hpp"
#include "hermsig/sampler.hpp"
#include "hermsig/witt_ideal.hpp"
#include "support.hpp"

using namespace hermsig;
using namespace test;

namespace {

OrderingHandle only(const NumberField& f) { return f.orderings().front(); }

AlgebraWithInvolution rationals_id() {
  const auto base = DivisionAlgebra::base(qq());
  return make_algebra(base, 1, one_by_one(base.one()));
}

AlgebraElement q_elt(const AlgebraWithInvolution& a, long c) { return a.scalar(num(a.field(), c)); }

}  // namespace

TEST_CASE("membership in I_P") {
  const NumberField r = sqrt2();
  const auto p = positive_root(r);
  CHECK(in_IP(QuadraticForm(r, {r.one(), -r.generator()}), p));
  CHECK_FALSE(in_IP(QuadraticForm(r, {r.one()}), p));
  CHECK(in_IP(QuadraticForm(r, {r.one(), r.one(), num(r, -1), num(r, -1)}), p));
}

TEST_CASE("membership in N_P") {
  const auto m2 = mat_q(2);
  const PositiveConeHandle cone(m2, only(qq()), 1);
  const auto a = scalars(m2.division(), {{2, 1}, {1, 5}});
  CHECK(in_NP(HermitianForm::diagonal(m2, {a, -a}), cone));
  CHECK_FALSE(in_NP(HermitianForm::diagonal(m2, {m2.phi()}), cone));
  Sampler s(2);
  for (int i = 0; i < 20; ++i) {
    const auto phi = s.form(m2, 2, 3);
    const QuadraticForm q(qq(), {qq().one(), num(qq(), -3)});
    CHECK(in_NP(tensor(q, phi), cone));
  }
}

TEST_CASE("sylvester reduction") {
  const auto q1 = rationals_id();
  const PositiveConeHandle c1(q1, only(qq()), 1);
  const auto r1 = sylvester_reduction(HermitianForm::diagonal(q1, {q_elt(q1, 1), q_elt(q1, -1)}), q1.identity(), c1);
  CHECK(r1.q.dimension() == 1);
  CHECK(signature_qf(r1.q, only(qq())) == 1);
  CHECK(r1.u.size() == 1);
  CHECK(r1.v.size() == 1);
  CHECK(r1.evidence.holds());

  const auto h = hamilton();
  const PositiveConeHandle ch(h, only(qq()), 1);
  const auto rh = sylvester_reduction(HermitianForm::diagonal(h, {h.identity()}), h.identity(), ch);
  CHECK(rh.q.diagonal() == std::vector<FieldElement>(4, num(qq(), 2)));
  CHECK(signature_qf(rh.q, only(qq())) == 4);
  CHECK(rh.evidence.holds());

  const auto m2 = mat_q(2);
  const PositiveConeHandle cm(m2, only(qq()), 1);
  const auto rm = sylvester_reduction(HermitianForm::diagonal(m2, {m2.identity()}), m2.identity(), cm);
  CHECK(signature_qf(rm.q, only(qq())) == 4);
  CHECK(rm.evidence.holds());
  CHECK(rm.evidence.lhs_signatures == std::vector<long>{8});

  const auto singular = scalars(m2.division(), {{1, 0}, {0, 0}});
  CHECK(error_code([&] { sylvester_reduction(HermitianForm::diagonal(m2, {m2.identity()}), singular, cm); }) ==
        "NotInvertible");
  CHECK(error_code([&] { sylvester_reduction(HermitianForm::diagonal(m2, {singular}), m2.identity(), cm); }) ==
        "SingularForm");
}

TEST_CASE("Z witnesses") {
  const auto m2 = mat_q(2);
  const PositiveConeHandle cone(m2, only(qq()), 1);
  const auto hyp = HermitianForm::diagonal(m2, {m2.phi(), -m2.phi()});
  const auto z = find_Z_witness(hyp, cone, 8);
  REQUIRE(z.witness.has_value());
  CHECK(z.witness->a_list == std::vector<AlgebraElement>{m2.phi()});
  CHECK(z.witness->b_list == std::vector<AlgebraElement>{m2.phi()});
  CHECK(z.witness->q.dimension() == 1);
  CHECK(verify_Z_witness(hyp, cone, *z.witness).ok());

  CHECK(error_code([&] { find_Z_witness(HermitianForm::diagonal(m2, {m2.phi()}), cone, 8); }) ==
        "ExpectedNPMember");

  const auto q1 = rationals_id();
  const PositiveConeHandle c1(q1, only(qq()), 1);
  const auto h = HermitianForm::diagonal(q1, {q_elt(q1, 2), q_elt(q1, -3)});
  const auto w = find_Z_witness(h, c1, 8);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->a_list == std::vector<AlgebraElement>{q_elt(q1, 2)});
  CHECK(w.witness->b_list == std::vector<AlgebraElement>{q_elt(q1, 3)});

  // a tampered witness fails re-verification
  ZWitness bad = *w.witness;
  bad.b_list = {q_elt(q1, 3), q_elt(q1, 3)};
  CHECK_FALSE(verify_Z_witness(h, c1, bad).balanced);
  CHECK_FALSE(verify_Z_witness(h, c1, bad).evidence);
  bad = *w.witness;
  bad.a_list = {q_elt(q1, -2)};
  CHECK_FALSE(verify_Z_witness(h, c1, bad).members);
}

TEST_CASE("Z witnesses survive adding hyperbolic planes") {
  Sampler s(31);
  for (const auto& a : {mat_q(2), hamilton()}) {
    const PositiveConeHandle cone(a, only(qq()), 1);
    const auto hyp = HermitianForm::diagonal(a, {a.phi(), -a.phi()});
    int found = 0;
    for (int t = 0; t < 10; ++t) {
      const auto x = s.symmetric_unit(a, 3);
      const auto h = HermitianForm::diagonal(a, {x, -x});
      const auto z = find_Z_witness(h, cone, 16);
      if (!z.witness) continue;
      ++found;
      CHECK(verify_Z_witness(h, cone, *z.witness).ok());
      const auto bigger = orthogonal_sum(h, hyp);
      const auto zb = find_Z_witness(bigger, cone, 16);
      REQUIRE(zb.witness.has_value());
      CHECK(verify_Z_witness(bigger, cone, *zb.witness).ok());
    }
    CHECK(found == 10);
  }
}

TEST_CASE("m-ideal checks") {
  Sampler s(17);
  const auto m2 = mat_q(2);
  const PositiveConeHandle cone(m2, only(qq()), 1);
  std::vector<HermitianForm> forms;
  std::vector<QuadraticForm> qforms;
  for (int i = 0; i < 12; ++i) {
    forms.push_back(s.diagonal_form(m2, 1 + i % 2, 3));
    qforms.push_back(QuadraticForm(qq(), {s.nonzero_field_element(qq(), 3), s.nonzero_field_element(qq(), 3)}));
  }
  qforms.push_back(QuadraticForm(qq(), {qq().one(), qq().one()}));
  const auto r = mideal_check(cone, forms, qforms);
  CHECK(r.passed());

  const FormValue rank_parity = [](const HermitianForm& h) { return static_cast<long>(form_rank(h) % 2); };
  CHECK_FALSE(mideal_check(cone, forms, qforms, 8, rank_parity).proper.passed);
}
