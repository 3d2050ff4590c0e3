#include "hermsig/quadratic_form.hpp"
#include "hermsig/sampler.hpp"
#include "support.hpp"

using namespace hermsig;
using namespace test;

namespace {

FieldMatrix gram(const NumberField& f, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long c : r) out.back().push_back(num(f, c));
  }
  return FieldMatrix::from_rows(std::move(out));
}

QuadraticForm diag(const NumberField& f, const std::vector<long>& d) {
  std::vector<FieldElement> out;
  for (long c : d) out.push_back(num(f, c));
  return QuadraticForm(f, out);
}

FieldMatrix congruence_of(const FieldMatrix& g, const FieldMatrix& m) { return g.transposed() * m * g; }

}  // namespace

TEST_CASE("diagonalizing symmetric matrices") {
  const NumberField f = qq();
  const auto d1 = diagonalize_symmetric(gram(f, {{1, 0}, {0, -3}}));
  CHECK(d1.diagonal == std::vector<FieldElement>{num(f, 1), num(f, -3)});

  const FieldMatrix h = gram(f, {{0, 1}, {1, 0}});
  const auto d2 = diagonalize_symmetric(h);
  const FieldMatrix back = congruence_of(d2.transform, h);
  CHECK(back(0, 1).is_zero());
  CHECK(back(0, 0) == d2.diagonal[0]);
  CHECK(back(1, 1) == d2.diagonal[1]);
  CHECK(sign_of(d2.diagonal[0] * d2.diagonal[1], f.orderings()[0]) == -1);

  const auto d3 = diagonalize_symmetric(gram(f, {{1, 1}, {1, 1}}));
  int zeros = 0;
  for (const auto& x : d3.diagonal) zeros += x.is_zero();
  CHECK(zeros == 1);
  CHECK(QuadraticForm::from_gram(gram(f, {{1, 1}, {1, 1}})).rank() == 1);

  CHECK(error_code([&] { diagonalize_symmetric(gram(f, {{1, 2}, {3, 1}})); }) == "NotSymmetric");
}

TEST_CASE("sylvester signatures") {
  const NumberField f = qq();
  const auto p = f.orderings()[0];
  CHECK(signature_qf(diag(f, {1, -1}), p) == 0);
  CHECK(signature_qf(diag(f, {1, 1, 1}), p) == 3);
  CHECK(signature_qf(diag(f, {2, 0, -5, -1}), p) == -1);

  const NumberField r = sqrt2();
  const QuadraticForm root(r, {r.generator()});
  CHECK(signature_qf(root, positive_root(r)) == 1);
  CHECK(signature_qf(root, negative_root(r)) == -1);
}

TEST_CASE("pfister forms") {
  const NumberField f = sqrt2();
  const std::vector<FieldElement> u{f.generator()};
  const QuadraticForm p1 = pfister(f, u);
  CHECK(p1.diagonal() == std::vector<FieldElement>{f.one(), f.generator()});
  const std::vector<FieldElement> ones{f.one(), f.one()};
  CHECK(pfister(f, ones).diagonal() == std::vector<FieldElement>(4, f.one()));
  const std::vector<FieldElement> minus{num(f, -1)};
  for (const auto& p : f.orderings()) CHECK(signature_qf(pfister(f, minus), p) == 0);
  const std::vector<FieldElement> zero{f.zero()};
  CHECK(error_code([&] { pfister(f, zero); }) == "ZeroElement");
}

TEST_CASE("tensor and sum") {
  const NumberField f = sqrt2();
  const FieldElement u = f.generator();
  const QuadraticForm a(f, {f.one(), u});
  const QuadraticForm b(f, {f.one(), -u});
  for (const auto& p : f.orderings()) CHECK(signature_qf(tensor(a, b), p) == 0);
  CHECK(orthogonal_sum(diag(f, {1}), diag(f, {-1})).diagonal() == diag(f, {1, -1}).diagonal());
  CHECK(tensor(diag(f, {1, -1}), diag(f, {2, 3, 5})).dimension() == 6);
}

TEST_CASE("signature properties on random forms") {
  Sampler s(5);
  for (const NumberField& f : {qq(), sqrt2()}) {
    for (int i = 0; i < 60; ++i) {
      const std::size_t k = 1 + static_cast<std::size_t>(s.integer(0, 3));
      std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(k, f.zero()));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = r; c < k; ++c) rows[r][c] = rows[c][r] = s.field_element(f, 4);
      const FieldMatrix m = FieldMatrix::from_rows(rows);
      std::vector<std::vector<FieldElement>> grows(k, std::vector<FieldElement>(k, f.zero()));
      for (auto& r : grows)
        for (auto& x : r) x = s.field_element(f, 3);
      const FieldMatrix g = FieldMatrix::from_rows(grows);
      const QuadraticForm q = QuadraticForm::from_gram(m);
      const QuadraticForm qa(f, {s.nonzero_field_element(f, 4), s.nonzero_field_element(f, 4)});
      for (const auto& p : f.orderings()) {
        if (field_rank(grows) == k)
          CHECK(signature_qf(QuadraticForm::from_gram(congruence_of(g, m)), p) == signature_qf(q, p));
        CHECK(signature_qf(tensor(q, qa), p) == signature_qf(q, p) * signature_qf(qa, p));
        CHECK(signature_qf(orthogonal_sum(q, qa), p) == signature_qf(q, p) + signature_qf(qa, p));
      }
    }
  }
}

TEST_CASE("quaternion norm form signature") {
  Sampler s(9);
  for (const NumberField& f : {qq(), sqrt2()}) {
    for (int i = 0; i < 100; ++i) {
      const FieldElement a = s.nonzero_field_element(f, 5);
      const FieldElement b = s.nonzero_field_element(f, 5);
      const QuadraticForm n(f, {f.one(), -a, -b, a * b});
      for (const auto& p : f.orderings()) {
        const bool definite = sign_of(a, p) < 0 && sign_of(b, p) < 0;
        CHECK(signature_qf(n, p) == (definite ? 4 : 0));
      }
    }
  }
}
