#include <benchmark/benchmark.h>

#include "hermsig/cones.hpp"
#include "hermsig/hermitian.hpp"
#include "hermsig/sampler.hpp"
#include "hermsig/sturm.hpp"
#include "hermsig/witt_ideal.hpp"

using namespace hermsig;

namespace {

FieldElement q(long c) { return NumberField::rationals().from_rational(Rational(c)); }

AlgebraWithInvolution quaternions(std::size_t n) {
  const auto d = DivisionAlgebra::quaternion(q(-1), q(-1));
  return make_algebra(d, n, AlgebraElement::identity(n, d.zero(), d.one()));
}

AlgebraWithInvolution matrices(std::size_t n) {
  const auto d = DivisionAlgebra::base(NumberField::rationals());
  return make_algebra(d, n, AlgebraElement::identity(n, d.zero(), d.one()));
}

void BM_RootCountWithSigns(benchmark::State& state) {
  Sampler s(1);
  const int degree = static_cast<int>(state.range(0));
  std::vector<Rational> cs;
  for (int i = 0; i < degree; ++i) cs.emplace_back(s.integer(-20, 20));
  cs.emplace_back(1);
  const Polynomial m = squarefree_part(Polynomial(cs));
  const std::vector<Polynomial> gs{Polynomial{-1, 1}, Polynomial{1, 0, -1}, Polynomial{0, 3, 0, -1}};
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(count_roots_with_signs(m, gs));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_RootCountWithSigns)->Arg(4)->Arg(8);

void BM_OrderingsSqrt2(benchmark::State& state) {
  const NumberField f(Polynomial{-2, 0, 0, 0, 1});
  Sampler s(2);
  const FieldElement x = s.field_element(f, 50);
  const auto os = f.orderings();
  for (auto _ : state)
    for (const auto& p : os) benchmark::DoNotOptimize(sign_of(x, p));
}
BENCHMARK(BM_OrderingsSqrt2);

void BM_SignatureQuaternion(benchmark::State& state) {
  const auto a = quaternions(static_cast<std::size_t>(state.range(0)));
  Sampler s(3);
  const HermitianForm h = s.form(a, 2, 3);
  const OrderingHandle p = a.field().orderings().front();
  for (auto _ : state) benchmark::DoNotOptimize(signature(h, p));
}
BENCHMARK(BM_SignatureQuaternion)->Arg(1)->Arg(2)->Arg(3);

void BM_ConeMembership(benchmark::State& state) {
  const auto a = matrices(static_cast<std::size_t>(state.range(0)));
  Sampler s(4);
  const PositiveConeHandle cone(a, a.field().orderings().front(), 1);
  const AlgebraElement b = s.cone_member(a, cone.ordering(), 1, 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(cone_membership(b, cone).member);
}
BENCHMARK(BM_ConeMembership)->Arg(2)->Arg(4);

void BM_FindZWitness(benchmark::State& state) {
  const auto a = quaternions(1);
  const PositiveConeHandle cone(a, a.field().orderings().front(), 1);
  const HermitianForm h = HermitianForm::diagonal(a, {a.scalar(q(2)), a.scalar(q(-3))});
  for (auto _ : state) benchmark::DoNotOptimize(find_Z_witness(h, cone, 8).witness.has_value());
}
BENCHMARK(BM_FindZWitness);

void BM_SylvesterReduction(benchmark::State& state) {
  const auto a = matrices(2);
  const PositiveConeHandle cone(a, a.field().orderings().front(), 1);
  Sampler s(5);
  const HermitianForm h = s.diagonal_form(a, 2, 3);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(sylvester_reduction(h, a.phi(), cone).q.dimension());
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_SylvesterReduction);

}  // namespace
BENCHMARK_MAIN();
