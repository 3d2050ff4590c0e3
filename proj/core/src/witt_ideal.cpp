#include "hermsig/witt_ideal.hpp"

#include "hermsig/error.hpp"

namespace hermsig {

namespace {

AlgebraElement scale(const AlgebraElement& x, const FieldElement& u) {
  return x.map([&](const DElement& e) { return e * u; });
}

void require_nonsingular(const HermitianForm& h) {
  if (form_rank(h) != h.dimension() * h.algebra().n()) throw Error("SingularForm");
}

void record(AxiomCheck& c, bool ok, const std::string& what) {
  ++c.tests;
  if (ok) return;
  c.passed = false;
  if (c.violations.size() < 8) c.violations.push_back(what);
}

void rank_and_signatures(const HermitianForm& h, std::size_t& rank, std::vector<long>& sigs) {
  const auto diag = morita_diagonal(h);
  rank = 0;
  for (const auto& d : diag)
    if (!d.is_zero()) ++rank;
  sigs.clear();
  for (const auto& p : h.algebra().field().orderings()) {
    long s = 0;
    if (!is_nil(h.algebra(), p))
      for (const auto& d : diag) s += sign_of(d, p);
    sigs.push_back(s);
  }
}

IsometryEvidence evidence_for(const HermitianForm& lhs, const HermitianForm& rhs) {
  IsometryEvidence ev;
  rank_and_signatures(lhs, ev.lhs_rank, ev.lhs_signatures);
  rank_and_signatures(rhs, ev.rhs_rank, ev.rhs_signatures);
  return ev;
}

ZWitnessCheck check_with(const HermitianForm& h, const PositiveConeHandle& cone, const ZWitness& w,
                         const IsometryEvidence& ev) {
  const auto& alg = h.algebra();
  ZWitnessCheck c{true, false, false, false};
  for (const auto* list : {&w.a_list, &w.b_list})
    for (const auto& x : *list) {
      if (!alg.is_symmetric(x) || !alg.is_invertible(x) || !cone_membership(x, cone).member) c.members = false;
    }
  c.q_nonzero = w.q.nonsingular() && signature_qf(w.q, cone.ordering()) != 0;
  c.balanced = w.a_list.size() == w.b_list.size();
  c.evidence = ev.holds();
  return c;
}

std::optional<ZWitness> checked(const HermitianForm& h, const PositiveConeHandle& cone, ZWitness w) {
  if (w.a_list.size() != w.b_list.size() || w.a_list.empty()) return std::nullopt;
  w.evidence = z_evidence(h, w.q, w.a_list, w.b_list);
  if (!w.evidence.holds() || !check_with(h, cone, w, w.evidence).ok()) return std::nullopt;
  return w;
}

QuadraticForm unit_form(const NumberField& f) { return QuadraticForm(f, {f.one()}); }

}  // namespace

bool in_IP(const QuadraticForm& q, const OrderingHandle& p) { return signature_qf(q, p) == 0; }

bool in_NP(const HermitianForm& h, const PositiveConeHandle& cone) { return signature(h, cone.ordering()) == 0; }

IsometryEvidence z_evidence(const HermitianForm& h, const QuadraticForm& q, const std::vector<AlgebraElement>& a_list,
                            const std::vector<AlgebraElement>& b_list) {
  const HermitianForm lhs = tensor(q, h);
  std::vector<AlgebraElement> entries = a_list;
  for (const auto& b : b_list) entries.push_back(-b);
  const HermitianForm rhs = HermitianForm::diagonal(h.algebra(), entries);
  return evidence_for(lhs, rhs);
}

SylvesterReduction sylvester_reduction(const HermitianForm& phi, const AlgebraElement& a,
                                       const PositiveConeHandle& cone) {
  const auto& alg = phi.algebra();
  require_nonsingular(phi);
  alg.check_element(a);
  if (!alg.is_invertible(a)) throw Error("NotInvertible");
  QuadraticForm q = star_pairing(alg, a, a);
  const QuadraticForm s = star_pairing_form(phi, a);
  const OrderingHandle& p = cone.ordering();
  std::vector<FieldElement> u;
  std::vector<FieldElement> v;
  for (const auto& x : s.diagonal()) {
    const int sg = sign_of(x, p);
    if (sg == 0) throw Error("SingularForm", "phi * <a> is singular");
    if (sg > 0)
      u.push_back(x);
    else
      v.push_back(-x);
  }
  std::vector<AlgebraElement> entries;
  for (const auto& x : u) entries.push_back(scale(a, x));
  for (const auto& x : v) entries.push_back(scale(a, -x));
  const HermitianForm lhs = tensor(q, phi);
  const HermitianForm rhs = HermitianForm::diagonal(alg, entries);
  IsometryEvidence ev = evidence_for(lhs, rhs);
  return {std::move(q), a, std::move(u), std::move(v), std::move(ev)};
}

ZSearch find_Z_witness(const HermitianForm& h, const PositiveConeHandle& cone, std::size_t bound,
                       const std::vector<AlgebraElement>& pool) {
  const auto& alg = h.algebra();
  require_nonsingular(h);
  if (signature(h, cone.ordering()) != 0) throw Error("ExpectedNPMember");
  ZSearch result{std::nullopt, bound, 0};
  const QuadraticForm one = unit_form(alg.field());

  if (h.is_diagonal()) {
    ++result.tried;
    ZWitness w{one, {}, {}, {}};
    bool classified = true;
    for (const auto& g : h.diagonal_entries()) {
      if (cone_membership(g, cone).member)
        w.a_list.push_back(g);
      else if (cone_membership(-g, cone).member)
        w.b_list.push_back(-g);
      else {
        classified = false;
        break;
      }
    }
    if (classified)
      if (auto ok = checked(h, cone, std::move(w))) {
        result.witness = std::move(ok);
        return result;
      }
  }

  if (alg.n() == 1) {
    ++result.tried;
    ZWitness w{one, {}, {}, {}};
    for (const auto& d : morita_diagonal(h)) {
      const AlgebraElement g = scale(alg.phi(), d);
      if (sign_of(d, cone.ordering()) * cone.orientation() > 0)
        w.a_list.push_back(g);
      else
        w.b_list.push_back(-g);
    }
    if (auto ok = checked(h, cone, std::move(w))) {
      result.witness = std::move(ok);
      return result;
    }
  }

  std::vector<AlgebraElement> candidates;
  candidates.push_back(cone.orientation() > 0 ? alg.phi() : -alg.phi());
  for (const auto& a : pool) candidates.push_back(a);
  for (const auto& a : candidates) {
    if (result.tried >= bound) break;
    if (!alg.is_symmetric(a) || !alg.is_invertible(a) || !cone_membership(a, cone).member) continue;
    ++result.tried;
    const SylvesterReduction s = sylvester_reduction(h, a, cone);
    ZWitness w{s.q, {}, {}, {}};
    for (const auto& x : s.u) w.a_list.push_back(scale(a, x));
    for (const auto& x : s.v) w.b_list.push_back(scale(a, x));
    if (auto ok = checked(h, cone, std::move(w))) {
      result.witness = std::move(ok);
      return result;
    }
  }
  return result;
}

ZWitnessCheck verify_Z_witness(const HermitianForm& h, const PositiveConeHandle& cone, const ZWitness& w) {
  return check_with(h, cone, w, z_evidence(h, w.q, w.a_list, w.b_list));
}

MIdealReport mideal_check(const PositiveConeHandle& cone, const std::vector<HermitianForm>& forms,
                          const std::vector<QuadraticForm>& qforms, std::size_t max_multiple, FormValue value) {
  const OrderingHandle& p = cone.ordering();
  const auto& alg = cone.algebra();
  if (!value) value = [&p](const HermitianForm& h) { return signature(h, p); };
  auto in_n = [&](const HermitianForm& h) { return value(h) == 0; };
  MIdealReport r;

  std::vector<const HermitianForm*> n_members;
  for (const auto& h : forms)
    if (in_n(h)) n_members.push_back(&h);

  for (std::size_t i = 0; i + 1 < n_members.size(); ++i)
    record(r.sum_closed, in_n(orthogonal_sum(*n_members[i], *n_members[i + 1])),
           "sum of N-samples " + std::to_string(i) + "," + std::to_string(i + 1));

  for (std::size_t i = 0; i < n_members.size() && !qforms.empty(); ++i) {
    const QuadraticForm& q = qforms[i % qforms.size()];
    for (const auto& u : q.diagonal()) {
      if (u.is_zero()) continue;
      record(r.scalar_closed, in_n(scaled(*n_members[i], u)), "scaling of N-sample " + std::to_string(i));
      break;
    }
  }

  std::vector<const QuadraticForm*> i_members;
  for (const auto& q : qforms)
    if (in_IP(q, p)) i_members.push_back(&q);
  for (std::size_t i = 0; i < i_members.size() && !forms.empty(); ++i)
    record(r.ideal_product, in_n(tensor(*i_members[i], forms[i % forms.size()])),
           "I * W product " + std::to_string(i));

  record(r.proper, !in_n(HermitianForm::diagonal(alg, {alg.phi()})), "<Phi> lies in N");

  for (std::size_t i = 0; i < forms.size() && !qforms.empty(); ++i) {
    const QuadraticForm& q = qforms[i % qforms.size()];
    const bool product = in_n(tensor(q, forms[i]));
    record(r.prime, !product || in_IP(q, p) || in_n(forms[i]), "primality fails for sample " + std::to_string(i));
  }

  for (std::size_t i = 0; i < forms.size(); ++i) {
    const bool base = in_n(forms[i]);
    for (std::size_t l = 2; l <= max_multiple; ++l)
      record(r.torsion_free, !in_n(multiple(forms[i], l)) || base,
             std::to_string(l) + " x sample " + std::to_string(i) + " in N");
  }
  return r;
}

}  // namespace hermsig
