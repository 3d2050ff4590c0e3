#include <map>
#include <sstream>

#include "hermsig/error.hpp"
#include "hermsig/sampler.hpp"
#include "hermsig/sturm.hpp"
#include "hermsig_verify/verify.hpp"

namespace hermsig::verify {

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) first_failure = what();
    ++failures;
  }
};

CriterionResult finish(int id, const std::string& name, const Tally& t, const std::string& extra = {}) {
  std::ostringstream s;
  s << t.checks << " checks";
  if (!extra.empty()) s << ", " << extra;
  if (t.failures > 0) s << "; " << t.failures << " failed, first: " << t.first_failure;
  return {id, name, t.failures == 0 && t.checks > 0, s.str()};
}

std::vector<PositiveConeHandle> cones_of(const AlgebraWithInvolution& a) { return list_positive_cones(a); }

AlgebraWithInvolution n1_algebra(const DivisionAlgebra& d) {
  return make_algebra(d, 1, AlgebraElement(1, 1, d.one()));
}

std::string where(const std::string& alg, std::size_t i) { return alg + " sample " + std::to_string(i); }

Polynomial random_poly(Sampler& s, int degree, long height) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(Rational(s.integer(-height, height)));
  while (c.back() == 0) c.back() = Rational(s.integer(-height, height));
  return Polynomial(std::move(c));
}

}  // namespace

CriterionResult sturm_counting(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x1);
  Tally t;
  std::size_t total_roots = 0;
  std::size_t instances = 0;
  while (instances < 1000) {
    const Polynomial m = random_poly(s, static_cast<int>(s.integer(1, 8)), 20);
    if (!is_squarefree(m)) continue;
    const std::size_t r = static_cast<std::size_t>(s.integer(1, 3));
    std::vector<Polynomial> gs;
    while (gs.size() < r) {
      Polynomial g = random_poly(s, static_cast<int>(s.integer(0, 3)), 20);
      if (gcd(m, g).degree() > 0) continue;
      gs.push_back(std::move(g));
    }
    ++instances;
    const std::size_t oracle = brute_force_sign_count(m, gs);
    const std::size_t count = count_roots_with_signs(m, gs);
    total_roots += descartes_isolate(m).size();
    t.expect(count == oracle, [&] {
      return "instance " + std::to_string(instances) + ": " + to_display_string(m) + " counted " +
             std::to_string(count) + ", oracle " + std::to_string(oracle);
    });
    // The averaged Tarski-query sum itself, recomputed term by term.
    long sum = 0;
    for (std::size_t e = 0; e < (std::size_t{1} << r); ++e) {
      Polynomial g = Polynomial::constant(1);
      for (std::size_t i = 0; i < r; ++i) g = g * gs[i].pow(((e >> i) & 1) ? 2 : 1);
      sum += tarski_query(m, g % m);
    }
    t.expect(sum == static_cast<long>(oracle << r), "2^r average differs from the oracle");
    t.expect(count_real_roots(m) == descartes_isolate(m).size(), "root count differs from Descartes isolation");
  }
  return finish(1, "Sturm counting oracle", t,
                std::to_string(instances) + " instances, " + std::to_string(total_roots) + " real roots");
}

CriterionResult signature_consistency(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x2);
  Tally t;
  const NumberField qq = rationals();
  const NumberField r2 = sqrt2_field();
  struct Case {
    std::string name;
    DivisionAlgebra d;
    long factor;
  };
  const std::vector<Case> cases = {
      {"(Q(i), conj)", DivisionAlgebra::quadratic(qq.from_rational(-1)), 2},
      {"((-1,-1)_Q, conj)", DivisionAlgebra::quaternion(qq.from_rational(-1), qq.from_rational(-1)), 4},
      {"(Q, id)", DivisionAlgebra::base(qq), 1},
      {"(Q(sqrt2)(i), conj)", DivisionAlgebra::quadratic(r2.from_rational(-1)), 2},
      {"((-1,sqrt2), conj)", DivisionAlgebra::quaternion(r2.from_rational(-1), r2.generator()), 4},
  };
  for (const auto& c : cases) {
    const AlgebraWithInvolution a = n1_algebra(c.d);
    const auto orderings = a.field().orderings();
    for (std::size_t i = 0; i < 500; ++i) {
      const std::size_t k = static_cast<std::size_t>(s.integer(1, 4));
      std::vector<AlgebraElement> entries;
      DMatrix gram(k, k, c.d.zero());
      for (std::size_t j = 0; j < k; ++j) {
        const DElement e = c.d.scalar(s.nonzero_field_element(a.field(), 6));
        entries.push_back(AlgebraElement(1, 1, e));
        gram(j, j) = e;
      }
      const auto sv = signature_vector(HermitianForm::diagonal(a, entries));
      const QuadraticForm b = trace_transfer(gram);
      for (std::size_t p = 0; p < orderings.size(); ++p)
        t.expect(c.factor * sv[p] == signature_qf(b, orderings[p]), where(c.name, i));
    }
  }
  return finish(2, "Signature consistency with the trace form", t);
}

CriterionResult congruence_invariance(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x3);
  Tally t;
  for (const auto& [name, a] : catalog()) {
    for (std::size_t i = 0; i < 500; ++i) {
      const std::size_t k = 1 + i % 2;
      const HermitianForm h = s.form(a, k, 3);
      const FormMatrix g = s.congruence(a, k, 3);
      t.expect(signature_vector(h) == signature_vector(congruent(h, g)), where(name, i));
    }
  }
  return finish(3, "Congruence invariance", t);
}

CriterionResult nil_vanishing(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x4);
  Tally t;
  std::size_t algebras = 0;
  for (const auto& [name, a] : catalog()) {
    const auto nil = nil_orderings(a);
    if (nil.empty()) continue;
    ++algebras;
    for (std::size_t i = 0; i < 200; ++i) {
      const HermitianForm h = s.form(a, 1 + i % 3, 4);
      const QuadraticForm b = trace_transfer(morita_matrix(h));
      for (const auto& p : nil) {
        t.expect(signature(h, p) == 0, where(name, i));
        t.expect(signature_qf(b, p) == 0, where(name, i) + " (trace form)");
      }
    }
  }
  return finish(4, "Nil vanishing", t, std::to_string(algebras) + " algebras with nil orderings");
}

CriterionResult max_signature(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x5);
  Tally t;
  std::ostringstream seen;
  for (const std::string name : {"base_Q_M2", "quat_Q_M2", "quad_sqrt2_M2", "base_Q_M2_phi", "base_sqrt2_phi"}) {
    const AlgebraWithInvolution a = catalog_entry(name).algebra;
    std::vector<AlgebraElement> trials;
    for (std::size_t i = 0; i < 500; ++i) trials.push_back(s.symmetric_unit(a, 4));
    for (const auto& p : a.field().orderings()) {
      if (is_nil(a, p)) continue;
      const auto n_p = local_degree_nP(a, p).value;
      const MaxSignature m = max_signature_mP(a, p, trials);
      t.expect(m.value == static_cast<long>(n_p), name + ": witness misses n_P");
      t.expect(m.max_sampled <= static_cast<long>(n_p), name + ": sampled unit exceeds n_P");
      t.expect(cone_membership(m.witness, PositiveConeHandle(a, p, 1)).member, name + ": witness not in cone");
      seen << name << "@" << p.root_index() << " m_P=" << m.value << " max_sampled=" << m.max_sampled << "; ";
    }
  }
  return finish(5, "m_P = n_P", t, seen.str());
}

CriterionResult cone_equality(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x6);
  Tally t;
  std::size_t in = 0;
  std::size_t out = 0;
  for (const auto& [name, a] : catalog()) {
    const auto cones = cones_of(a);
    if (cones.empty()) continue;
    const auto orderings = a.field().orderings();
    const bool phi_identity = a.phi() == a.identity();
    for (std::size_t i = 0; i < 500; ++i) {
      AlgebraElement b = a.zero();
      const auto& c0 = cones[static_cast<std::size_t>(s.integer(0, static_cast<long>(cones.size()) - 1))];
      switch (i % 3) {
        case 0:
          b = s.cone_member(a, c0.ordering(), c0.orientation(), 3, s.coin());
          break;
        case 1:
          b = s.symmetric_unit(a, 3);
          break;
        default:
          b = s.symmetric(a, 2);
      }
      const bool invertible = a.is_invertible(b);
      std::vector<long> sv;
      if (invertible) sv = signature_vector(HermitianForm::diagonal(a, {b}));
      for (const auto& c : cones) {
        const bool member = cone_membership(b, c).member;
        (member ? in : out) += 1;
        if (invertible) {
          const long n_p = static_cast<long>(local_degree_nP(a, c.ordering()).value);
          t.expect(member == (sv[c.ordering().root_index()] == c.orientation() * n_p), where(name, i));
        }
        if (phi_identity && c.orientation() > 0)
          t.expect(psd_membership(b, c.ordering()).member == member, where(name, i) + " (PSD path)");
      }
    }
  }
  return finish(6, "Cone equality", t, std::to_string(in) + " member and " + std::to_string(out) + " non-member verdicts");
}

namespace {

std::vector<AlgebraElement> axiom_samples(Sampler& s, const PositiveConeHandle& c, std::size_t count) {
  const auto& a = c.algebra();
  std::vector<AlgebraElement> out{a.zero()};
  while (out.size() < count) {
    switch (out.size() % 4) {
      case 0:
      case 1:
        out.push_back(s.cone_member(a, c.ordering(), c.orientation(), 3, s.coin()));
        break;
      case 2:
        out.push_back(s.cone_member(a, c.ordering(), -c.orientation(), 3, s.coin()));
        break;
      default:
        out.push_back(s.symmetric(a, 3));
    }
  }
  return out;
}

std::vector<FieldElement> axiom_scalars(Sampler& s, const NumberField& f) {
  std::vector<FieldElement> out{f.from_rational(-1), f.zero(), f.one(), f.from_rational(Rational(1, 2))};
  if (f.degree() > 1) out.push_back(f.generator());
  while (out.size() < 24) out.push_back(s.field_element(f, 5));
  return out;
}

}  // namespace

CriterionResult cone_axioms(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x7);
  Tally t;
  std::size_t cones = 0;
  std::size_t controls_failing = 0;
  for (const auto& [name, a] : catalog()) {
    for (const auto& c : cones_of(a)) {
      ++cones;
      const auto samples = axiom_samples(s, c, 200);
      const auto scalars = axiom_scalars(s, a.field());
      std::vector<AlgebraElement> multipliers;
      for (std::size_t i = 0; i < 20; ++i) multipliers.push_back(s.element(a, 3));
      const std::string id = name + " cone(" + std::to_string(c.ordering().root_index()) + "," +
                             std::to_string(c.orientation()) + ")";
      const ConeAxiomReport r = cone_axioms_check(c, samples, scalars, multipliers);
      t.expect(r.p1.passed, id + " P1");
      t.expect(r.p2.passed, id + " P2");
      t.expect(r.p3.passed, id + " P3");
      t.expect(r.p4.passed, id + " P4");
      t.expect(r.p5.passed, id + " P5");

      const PositiveConeHandle flipped(a, c.ordering(), -c.orientation());
      std::size_t calls = 0;
      MembershipPredicate corrupt = [&](const AlgebraElement& x) {
        return cone_membership(x, (calls++ % 2 == 0) ? c : flipped).member;
      };
      const ConeAxiomReport bad = cone_axioms_check(c, samples, scalars, multipliers, corrupt);
      t.expect(!bad.p5.passed, id + " negative control passed P5");
      if (!bad.p5.passed) ++controls_failing;
    }
  }
  return finish(7, "Cone axioms (P1)-(P5)", t,
                std::to_string(cones) + " cones, " + std::to_string(controls_failing) + " negative controls rejected");
}

CriterionResult same_signature(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x8);
  Tally t;
  for (const auto& [name, a] : catalog()) {
    for (const auto& c : cones_of(a)) {
      const long expected = c.orientation() * static_cast<long>(local_degree_nP(a, c.ordering()).value);
      for (std::size_t i = 0; i < 200; ++i) {
        const AlgebraElement b = s.cone_member(a, c.ordering(), c.orientation(), 3, true);
        t.expect(signature(HermitianForm::diagonal(a, {b}), c.ordering()) == expected, where(name, i));
      }
    }
  }
  return finish(8, "Same signature on a cone", t);
}

namespace {

std::vector<HermitianForm> mideal_forms(Sampler& s, const PositiveConeHandle& c, std::size_t count) {
  const auto& a = c.algebra();
  std::vector<HermitianForm> out;
  while (out.size() < count) {
    switch (out.size() % 4) {
      case 0:
        out.push_back(s.form(a, 1 + out.size() % 3 / 2, 3));
        break;
      case 1: {
        const auto x = s.cone_member(a, c.ordering(), 1, 3, true);
        const auto y = s.cone_member(a, c.ordering(), 1, 3, true);
        out.push_back(HermitianForm::diagonal(a, {x, -y}));
        break;
      }
      case 2: {
        const HermitianForm h = s.form(a, 1, 3);
        out.push_back(orthogonal_sum(h, negated(h)));
        break;
      }
      default:
        out.push_back(s.diagonal_form(a, 2, 3));
    }
  }
  return out;
}

std::vector<QuadraticForm> mideal_qforms(Sampler& s, const OrderingHandle& p, std::size_t count) {
  const NumberField& f = p.field();
  std::vector<QuadraticForm> out;
  while (out.size() < count) {
    switch (out.size() % 3) {
      case 0:
        out.emplace_back(f, std::vector<FieldElement>{f.one(), -s.positive_at(p, 5)});
        break;
      case 1: {
        std::vector<FieldElement> d;
        for (long k = s.integer(1, 3); k > 0; --k) d.push_back(s.nonzero_field_element(f, 5));
        out.emplace_back(f, std::move(d));
        break;
      }
      default:
        out.emplace_back(f, std::vector<FieldElement>{s.nonzero_field_element(f, 5)});
    }
  }
  return out;
}

}  // namespace

CriterionResult mideal_suite(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0x9);
  Tally t;
  for (const auto& [name, a] : catalog()) {
    for (const auto& c : cones_of(a)) {
      if (c.orientation() < 0) continue;
      const auto forms = mideal_forms(s, c, 100);
      const auto qforms = mideal_qforms(s, c.ordering(), 100);
      const MIdealReport r = mideal_check(c, forms, qforms);
      const std::string id = name + "@" + std::to_string(c.ordering().root_index());
      t.expect(r.sum_closed.passed, id + " N+N");
      t.expect(r.scalar_closed.passed, id + " W(F)N");
      t.expect(r.ideal_product.passed, id + " I*W");
      t.expect(r.proper.passed, id + " <Phi> in N");
      t.expect(r.prime.passed, id + " primality");
      t.expect(r.torsion_free.passed, id + " torsion");
    }
  }
  // Negative control: rank parity in place of the signature puts <Phi> into N.
  const AlgebraWithInvolution m2 = catalog_entry("base_Q_M2").algebra;
  const PositiveConeHandle c(m2, m2.field().orderings().front(), 1);
  const MIdealReport bad = mideal_check(c, mideal_forms(s, c, 8), mideal_qforms(s, c.ordering(), 8), 8,
                                        [](const HermitianForm& h) { return static_cast<long>(form_rank(h) % 2); });
  t.expect(!bad.proper.passed, "rank-parity negative control not rejected");
  return finish(9, "m-ideal suite", t, "rank-parity control rejected");
}

namespace {

struct ZTally {
  std::size_t forms = 0;
  std::size_t zero_signature = 0;
  std::size_t witnesses = 0;
};

void z_case(const HermitianForm& h, const std::vector<PositiveConeHandle>& cones, Tally& t, ZTally& z,
            const std::string& id) {
  ++z.forms;
  const auto& p = cones.front().ordering();
  if (signature(h, p) != 0) {
    bool threw = false;
    try {
      (void)find_Z_witness(h, cones.front(), 4);
    } catch (const Error& e) {
      threw = e.code() == "ExpectedNPMember";
    }
    t.expect(threw, id + " nonzero signature accepted");
    return;
  }
  ++z.zero_signature;
  for (const auto& c : cones) {
    const ZSearch r = find_Z_witness(h, c, 4);
    t.expect(r.witness.has_value(), id + " no witness");
    if (!r.witness) continue;
    ++z.witnesses;
    t.expect(verify_Z_witness(h, c, *r.witness).ok(), id + " witness fails re-verification");
  }
}

}  // namespace

CriterionResult z_witness_completeness(const SuiteOptions&) {
  Tally t;
  ZTally z;
  const NumberField qq = rationals();
  {
    const AlgebraWithInvolution a = n1_algebra(DivisionAlgebra::base(qq));
    const auto cones = cones_of(a);
    const auto& d = a.division();
    auto el = [&](long v) { return AlgebraElement(1, 1, d.scalar(qq.from_rational(v))); };
    for (long x = -5; x <= 5; ++x) {
      if (x != 0) z_case(HermitianForm::diagonal(a, {el(x)}), cones, t, z, "<" + std::to_string(x) + ">");
      for (long y = -5; y <= 5; ++y)
        for (long w = -5; w <= 5; ++w) {
          if (x * w - y * y == 0) continue;
          FormMatrix g(2, 2, a.zero());
          g(0, 0) = el(x);
          g(0, 1) = el(y);
          g(1, 0) = el(y);
          g(1, 1) = el(w);
          z_case(HermitianForm(a, g), cones, t, z,
                 "Q [[" + std::to_string(x) + "," + std::to_string(y) + "],[.," + std::to_string(w) + "]]");
        }
    }
  }
  {
    const auto d = DivisionAlgebra::quaternion(qq.from_rational(-1), qq.from_rational(-1));
    const AlgebraWithInvolution a = n1_algebra(d);
    const auto cones = cones_of(a);
    auto el = [&](const DElement& e) { return AlgebraElement(1, 1, e); };
    std::vector<DElement> offdiag;
    for (long c0 = -5; c0 <= 5; ++c0)
      for (long c1 = -5; c1 <= 5; ++c1)
        for (long c2 = -5; c2 <= 5; ++c2)
          for (long c3 = -5; c3 <= 5; ++c3) {
            if (std::abs(c0) + std::abs(c1) + std::abs(c2) + std::abs(c3) > 5) continue;
            offdiag.push_back(d.element({qq.from_rational(c0), qq.from_rational(c1), qq.from_rational(c2),
                                         qq.from_rational(c3)}));
          }
    for (long x = -5; x <= 5; ++x) {
      if (x == 0) continue;
      z_case(HermitianForm::diagonal(a, {el(d.scalar(qq.from_rational(x)))}), cones, t, z,
             "H <" + std::to_string(x) + ">");
    }
    for (long x = -5; x <= 5; ++x)
      for (long w = -5; w <= 5; ++w)
        for (std::size_t k = 0; k < offdiag.size(); ++k) {
          const DElement& beta = offdiag[k];
          if (Rational(x * w) == beta.norm().coords()[0]) continue;
          FormMatrix g(2, 2, a.zero());
          g(0, 0) = el(d.scalar(qq.from_rational(x)));
          g(0, 1) = el(beta);
          g(1, 0) = el(conj(beta));
          g(1, 1) = el(d.scalar(qq.from_rational(w)));
          z_case(HermitianForm(a, g), cones, t, z, "H form " + std::to_string(x) + "," + std::to_string(w) + ",#" +
                                                       std::to_string(k));
        }
  }
  return finish(10, "Z-witness completeness", t,
                std::to_string(z.forms) + " forms, " + std::to_string(z.zero_signature) + " with zero signature, " +
                    std::to_string(z.witnesses) + " witnesses");
}

CriterionResult lambda_constancy(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0xb);
  Tally t;
  std::ostringstream seen;
  for (const auto& [name, a] : catalog()) {
    for (const auto& p : a.field().orderings()) {
      if (is_nil(a, p)) continue;
      std::optional<Rational> ratio;
      bool constant = true;
      for (std::size_t i = 0; i < 20; ++i) {
        const AlgebraElement b = s.cone_member(a, p, i % 2 == 0 ? 1 : -1, 3, true);
        const long sa = signature(HermitianForm::diagonal(a, {b}), p);
        const long ss = signature_qf(star_pairing(a, b, b), p);
        t.expect(sa != 0 && ss != 0, where(name, i) + " zero signature");
        if (sa == 0) continue;
        Rational r(ss, sa * sa);
        r.canonicalize();
        if (!ratio) ratio = r;
        if (*ratio != r) constant = false;
      }
      t.expect(constant, name + " ratio varies");
      t.expect(ratio && *ratio > 0, name + " ratio not positive");
      if (ratio) seen << name << "@" << p.root_index() << "=" << to_display_string(*ratio) << " ";
    }
  }
  return finish(11, "lambda_P^2 constancy", t, seen.str());
}

CriterionResult extension(const SuiteOptions& o) {
  Sampler s(o.seed ^ 0xc);
  Tally t;
  const NumberField qq = rationals();
  const NumberField r2 = sqrt2_field();
  const NumberField r4 = fourth_root2_field();
  const FieldElement y = r4.generator();
  struct Case {
    FieldEmbedding e;
    std::vector<std::string> algebras;
  };
  const std::vector<Case> cases = {
      {embed_field(qq, r2, r2.zero()), {"base_Q_M2", "base_Q_M2_phi", "quat_Q_11", "gauss_Q"}},
      {embed_field(r2, r4, y * y), {"base_sqrt2_phi", "quad_sqrt2_M2", "quat_sqrt2_nil"}},
  };
  std::size_t extensions = 0;
  for (const auto& c : cases) {
    for (const auto& name : c.algebras) {
      const AlgebraWithInvolution a = catalog_entry(name).algebra;
      const AlgebraWithInvolution ext = a.extend(c.e);
      for (const auto& q : c.e.target().orderings()) {
        const OrderingHandle p = c.e.restrict_ordering(q);
        const auto np = local_degree_nP(a, p);
        const auto nq = local_degree_nP(ext, q);
        t.expect(np.value == nq.value && np.nil == nq.nil, name + ": n_P not preserved");
        if (np.nil) continue;
        for (int orientation : {1, -1}) {
          const PositiveConeHandle cone(a, p, orientation);
          std::vector<AlgebraElement> samples;
          for (std::size_t i = 0; i < 200; ++i) samples.push_back(s.cone_member(a, p, orientation, 3, i % 4 != 0));
          const ConeExtension r = extend_cone(c.e, cone, q, samples);
          ++extensions;
          t.expect(r.ok(), name + ": pushed sample left the extended cone");
        }
        for (const auto& other : a.field().orderings()) {
          if (other == p || is_nil(a, other)) continue;
          bool threw = false;
          try {
            (void)extend_cone(c.e, PositiveConeHandle(a, other, 1), q, {});
          } catch (const Error& err) {
            threw = err.code() == "OrderingDoesNotRestrict";
          }
          t.expect(threw, name + ": incompatible ordering accepted");
        }
      }
    }
  }
  return finish(12, "Extension along ordered embeddings", t, std::to_string(extensions) + " cone extensions");
}

std::vector<Criterion> criteria() {
  return {sturm_counting, signature_consistency, congruence_invariance, nil_vanishing,
          max_signature,  cone_equality,         cone_axioms,           same_signature,
          mideal_suite,   z_witness_completeness, lambda_constancy,     extension};
}

std::vector<CriterionResult> run_all(const SuiteOptions& o, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  const auto all = criteria();
  for (std::size_t i = 0; i < all.size(); ++i) {
    CriterionResult r{static_cast<int>(i + 1), "", false, ""};
    try {
      r = all[i](o);
    } catch (const std::exception& e) {
      r.name = "criterion " + std::to_string(i + 1);
      r.detail = std::string("uncaught error: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

json::Json to_json(const CriterionResult& r) {
  return json::Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

}  // namespace hermsig::verify
