#include "hermsig/cones.hpp"

#include "hermsig/error.hpp"

namespace hermsig {

PositiveConeHandle::PositiveConeHandle(AlgebraWithInvolution algebra, OrderingHandle ordering, int orientation)
    : alg_(std::move(algebra)), ordering_(std::move(ordering)), orientation_(orientation) {
  if (orientation_ != 1 && orientation_ != -1) throw Error("InvalidOrientation");
  if (!(ordering_.field() == alg_.field())) throw Error("FieldMismatch");
  if (is_nil(alg_, ordering_)) throw Error("NilOrdering");
}

Membership psd_membership(const DMatrix& b, const OrderingHandle& p) {
  auto d = diagonalize_hermitian(b);
  for (const auto& x : d.diagonal)
    if (sign_of(x, p) < 0) return {false, std::nullopt};
  return {true, ConeWitness{std::move(d.transform), std::move(d.diagonal)}};
}

Membership cone_membership(const AlgebraElement& b, const PositiveConeHandle& cone) {
  const auto& alg = cone.algebra();
  alg.check_element(b);
  if (!alg.is_symmetric(b)) throw Error("NotSymmetric");
  AlgebraElement m = alg.phi_inverse() * b;
  if (cone.orientation() < 0) m = -m;
  return psd_membership(m, cone.ordering());
}

DMatrix witness_matrix(const ConeWitness& w) {
  const DElement& z = w.transform(0, 0);
  const DivisionAlgebra& d = z.algebra();
  const DMatrix g_inv = invert_matrix(w.transform);
  DMatrix diag(w.diagonal.size(), w.diagonal.size(), d.zero());
  for (std::size_t i = 0; i < w.diagonal.size(); ++i) diag(i, i) = d.scalar(w.diagonal[i]);
  return theta_transpose(g_inv) * diag * g_inv;
}

AlgebraElement witness_element(const ConeWitness& w, const PositiveConeHandle& cone) {
  AlgebraElement x = cone.algebra().phi() * witness_matrix(w);
  return cone.orientation() < 0 ? -x : x;
}

std::vector<PositiveConeHandle> list_positive_cones(const AlgebraWithInvolution& algebra) {
  std::vector<PositiveConeHandle> out;
  if (!algebra.field().formally_real()) return out;
  for (const auto& p : algebra.field().orderings()) {
    if (is_nil(algebra, p)) continue;
    out.emplace_back(algebra, p, 1);
    out.emplace_back(algebra, p, -1);
  }
  return out;
}

namespace {

void record(AxiomCheck& c, bool ok, const std::string& what) {
  ++c.tests;
  if (ok) return;
  c.passed = false;
  if (c.violations.size() < 8) c.violations.push_back(what);
}

bool all_zero(const AlgebraElement& x) {
  for (const auto& e : x.data())
    if (!e.is_zero()) return false;
  return true;
}

AlgebraElement scale(const AlgebraElement& x, const FieldElement& u) {
  return x.map([&](const DElement& e) { return e * u; });
}

}  // namespace

ConeAxiomReport cone_axioms_check(const PositiveConeHandle& cone, const std::vector<AlgebraElement>& samples,
                                  const std::vector<FieldElement>& scalars,
                                  const std::vector<AlgebraElement>& multipliers, MembershipPredicate predicate) {
  const auto& alg = cone.algebra();
  if (!predicate) predicate = [&cone](const AlgebraElement& x) { return cone_membership(x, cone).member; };
  ConeAxiomReport r;

  std::vector<AlgebraElement> members;
  for (const auto& s : samples)
    if (predicate(s)) members.push_back(s);

  record(r.p1, !members.empty(), "no sampled member");

  for (std::size_t i = 0; i + 1 < members.size(); ++i)
    record(r.p2, predicate(members[i] + members[i + 1]), "sum of members " + std::to_string(i) + "," +
                                                             std::to_string(i + 1) + " not a member");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (multipliers.empty()) break;
    const AlgebraElement& a = multipliers[i % multipliers.size()];
    record(r.p3, predicate(alg.involution(a) * members[i] * a),
           "sigma(a) x a not a member for sample " + std::to_string(i));
  }

  const OrderingHandle& p = cone.ordering();
  for (std::size_t k = 0; k < scalars.size(); ++k) {
    const FieldElement& u = scalars[k];
    bool keeps = true;
    for (const auto& m : members)
      if (!predicate(scale(m, u))) {
        keeps = false;
        break;
      }
    if (keeps) r.scalar_cone.push_back(u);
    record(r.p4, keeps == (sign_of(u, p) >= 0), "scalar " + std::to_string(k) + " disagrees with P");
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    if (all_zero(members[i])) {
      record(r.p5, predicate(-members[i]), "zero not in the negated cone");
      continue;
    }
    record(r.p5, !predicate(-members[i]), "member " + std::to_string(i) + " lies in both cones");
  }
  return r;
}

std::vector<PositiveConeHandle> harrison_sigma(const AlgebraWithInvolution& algebra,
                                               const std::vector<AlgebraElement>& as) {
  for (const auto& a : as) {
    algebra.check_element(a);
    if (!algebra.is_symmetric(a)) throw Error("NotSymmetric");
  }
  std::vector<PositiveConeHandle> out;
  for (const auto& c : list_positive_cones(algebra)) {
    bool all = true;
    for (const auto& a : as)
      if (!cone_membership(a, c).member) {
        all = false;
        break;
      }
    if (all) out.push_back(c);
  }
  return out;
}

ConeExtension extend_cone(const FieldEmbedding& embedding, const PositiveConeHandle& cone, const OrderingHandle& q,
                          const std::vector<AlgebraElement>& samples) {
  if (!(q.field() == embedding.target()) || !(embedding.restrict_ordering(q) == cone.ordering()))
    throw Error("OrderingDoesNotRestrict");
  const AlgebraWithInvolution ext = cone.algebra().extend(embedding);
  PositiveConeHandle target(ext, q, cone.orientation());
  const auto np = local_degree_nP(cone.algebra(), cone.ordering());
  const auto nq = local_degree_nP(ext, q);
  ConeExtension r{target, 0, 0, np.value == nq.value && np.nil == nq.nil};
  for (const auto& s : samples) {
    ++r.checked;
    if (cone_membership(ext.push(embedding, s), target).member) ++r.contained;
  }
  return r;
}

}  // namespace hermsig
