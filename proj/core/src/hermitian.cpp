#include "hermsig/hermitian.hpp"

#include <limits>

#include "hermsig/error.hpp"

namespace hermsig {

namespace {

AlgebraElement scale(const AlgebraElement& x, const FieldElement& u) {
  return x.map([&](const DElement& e) { return e * u; });
}

FormMatrix block_diagonal(const FormMatrix& a, const FormMatrix& b, const AlgebraElement& zero) {
  const std::size_t m = a.rows();
  const std::size_t k = b.rows();
  FormMatrix out(m + k, m + k, zero);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(m + i, m + j) = b(i, j);
  return out;
}

QuadraticForm diagonal_form(const NumberField& field, const DMatrix& gram) {
  return QuadraticForm(field, diagonalize_hermitian(gram).diagonal);
}

void require_symmetric_unit(const AlgebraWithInvolution& alg, const AlgebraElement& x) {
  alg.check_element(x);
  if (!alg.is_symmetric(x)) throw Error("NotSymmetric");
  if (!alg.is_invertible(x)) throw Error("NotInvertible");
}

}  // namespace

HermitianDiagonalization diagonalize_hermitian(const DMatrix& b) {
  if (!b.square()) throw Error("ShapeMismatch", "hermitian matrix must be square");
  if (!(theta_transpose(b) == b)) throw Error("NotHermitian");
  const DivisionAlgebra& d = b(0, 0).algebra();
  const auto basis = d.basis();
  auto c = congruence_diagonalize<DElement>(b, d.zero(), d.one(), basis);
  std::vector<FieldElement> diag;
  diag.reserve(c.diagonal.size());
  for (const auto& x : c.diagonal) diag.push_back(x.component(0));
  return {std::move(c.transform), std::move(diag)};
}

HermitianForm::HermitianForm(AlgebraWithInvolution algebra, FormMatrix gram)
    : alg_(std::move(algebra)), gram_(std::move(gram)) {
  if (!gram_.square()) throw Error("ShapeMismatch", "gram must be square");
  for (const auto& x : gram_.data()) alg_.check_element(x);
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i; j < gram_.rows(); ++j) {
      if (!(alg_.involution(gram_(j, i)) == gram_(i, j))) throw Error("NotHermitian");
    }
}

HermitianForm HermitianForm::diagonal(const AlgebraWithInvolution& algebra,
                                      const std::vector<AlgebraElement>& entries) {
  if (entries.empty()) throw Error("ShapeMismatch", "empty form");
  FormMatrix g(entries.size(), entries.size(), algebra.zero());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    algebra.check_element(entries[i]);
    if (!algebra.is_symmetric(entries[i])) throw Error("NotSymmetric");
    g(i, i) = entries[i];
  }
  return HermitianForm(algebra, std::move(g));
}

bool HermitianForm::is_diagonal() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j) {
      if (i == j) continue;
      for (const auto& e : gram_(i, j).data())
        if (!e.is_zero()) return false;
    }
  return true;
}

std::vector<AlgebraElement> HermitianForm::diagonal_entries() const {
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < gram_.rows(); ++i) out.push_back(gram_(i, i));
  return out;
}

HermitianForm orthogonal_sum(const HermitianForm& a, const HermitianForm& b) {
  if (!(a.algebra().division() == b.algebra().division()) || !(a.algebra().phi() == b.algebra().phi()))
    throw Error("FieldMismatch", "forms over different algebras");
  return HermitianForm(a.algebra(), block_diagonal(a.gram(), b.gram(), a.algebra().zero()));
}

HermitianForm scaled(const HermitianForm& h, const FieldElement& u) {
  if (!(u.field() == h.algebra().field())) throw Error("FieldMismatch");
  return HermitianForm(h.algebra(), h.gram().map([&](const AlgebraElement& x) { return scale(x, u); }));
}

HermitianForm tensor(const QuadraticForm& q, const HermitianForm& h) {
  if (q.dimension() == 0) throw Error("ShapeMismatch", "empty quadratic form");
  HermitianForm out = scaled(h, q.diagonal().front());
  for (std::size_t i = 1; i < q.dimension(); ++i) out = orthogonal_sum(out, scaled(h, q.diagonal()[i]));
  return out;
}

HermitianForm negated(const HermitianForm& h) {
  return HermitianForm(h.algebra(), h.gram().map([](const AlgebraElement& x) { return -x; }));
}

HermitianForm multiple(const HermitianForm& h, std::size_t l) {
  if (l == 0) throw Error("ShapeMismatch", "zero multiple");
  HermitianForm out = h;
  for (std::size_t i = 1; i < l; ++i) out = orthogonal_sum(out, h);
  return out;
}

HermitianForm congruent(const HermitianForm& h, const FormMatrix& g) {
  const auto& alg = h.algebra();
  if (g.rows() != h.dimension() || !g.square()) throw Error("ShapeMismatch", "congruence matrix");
  FormMatrix gs(g.cols(), g.rows(), alg.zero());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) gs(j, i) = alg.involution(g(i, j));
  return HermitianForm(alg, gs * h.gram() * g);
}

DMatrix morita_matrix(const HermitianForm& h) {
  const auto& alg = h.algebra();
  const std::size_t n = alg.n();
  const std::size_t k = h.dimension();
  DMatrix out(k * n, k * n, alg.division().zero());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const AlgebraElement s = alg.phi_inverse() * h.gram()(i, j);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(i * n + r, j * n + c) = s(r, c);
    }
  return out;
}

std::vector<FieldElement> morita_diagonal(const HermitianForm& h) {
  return diagonalize_hermitian(morita_matrix(h)).diagonal;
}

std::size_t form_rank(const HermitianForm& h) {
  std::size_t r = 0;
  for (const auto& d : morita_diagonal(h))
    if (!d.is_zero()) ++r;
  return r;
}

bool is_nil(const AlgebraWithInvolution& algebra, const OrderingHandle& p) {
  const auto& d = algebra.division();
  switch (d.kind()) {
    case DivisionKind::base:
      return false;
    case DivisionKind::quadratic:
      return sign_of(d.d(), p) > 0;
    case DivisionKind::quaternion:
      return sign_of(d.a(), p) > 0 || sign_of(d.b(), p) > 0;
  }
  return false;
}

std::vector<OrderingHandle> nil_orderings(const AlgebraWithInvolution& algebra) {
  std::vector<OrderingHandle> out;
  for (const auto& p : algebra.field().orderings())
    if (is_nil(algebra, p)) out.push_back(p);
  return out;
}

LocalDegree local_degree_nP(const AlgebraWithInvolution& algebra, const OrderingHandle& p) {
  const bool nil = is_nil(algebra, p);
  const std::size_t n = algebra.n();
  if (nil && algebra.division().kind() == DivisionKind::quaternion) return {2 * n, true};
  return {n, nil};
}

long signature(const HermitianForm& h, const OrderingHandle& p) {
  if (!(p.field() == h.algebra().field())) throw Error("FieldMismatch");
  if (is_nil(h.algebra(), p)) return 0;
  long s = 0;
  for (const auto& d : morita_diagonal(h)) s += sign_of(d, p);
  return s;
}

std::vector<long> signature_vector(const HermitianForm& h) {
  const auto orderings = h.algebra().field().orderings();
  const auto diag = morita_diagonal(h);
  std::vector<long> out;
  for (const auto& p : orderings) {
    long s = 0;
    if (!is_nil(h.algebra(), p))
      for (const auto& d : diag) s += sign_of(d, p);
    out.push_back(s);
  }
  return out;
}

FieldMatrix trace_transfer_gram(const DMatrix& b) {
  if (!b.square()) throw Error("ShapeMismatch");
  if (!(theta_transpose(b) == b)) throw Error("NotHermitian");
  const DivisionAlgebra& d = b(0, 0).algebra();
  const auto basis = d.basis();
  const std::size_t t = basis.size();
  const std::size_t m = b.rows();
  FieldMatrix g(m * t, m * t, d.field().zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < t; ++s) {
      const DElement left = conj(basis[s]);
      for (std::size_t j = 0; j < m; ++j) {
        if (b(i, j).is_zero()) continue;
        const DElement lb = left * b(i, j);
        for (std::size_t u = 0; u < t; ++u) g(i * t + s, j * t + u) = (lb * basis[u]).component(0);
      }
    }
  return g;
}

QuadraticForm trace_transfer(const DMatrix& b) { return QuadraticForm::from_gram(trace_transfer_gram(b)); }

DMatrix star_pairing_gram(const AlgebraWithInvolution& algebra, const AlgebraElement& a, const AlgebraElement& b) {
  const auto basis = algebra.basis_over_center();
  const DivisionAlgebra z = algebra.center();
  DMatrix g(basis.size(), basis.size(), z.zero());
  std::vector<AlgebraElement> left;
  std::vector<AlgebraElement> right;
  for (const auto& e : basis) {
    left.push_back(algebra.involution(e) * a);
    right.push_back(e * b);
  }
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < basis.size(); ++q) g(p, q) = algebra.reduced_trace(left[p] * right[q]);
  return g;
}

QuadraticForm star_pairing(const AlgebraWithInvolution& algebra, const AlgebraElement& a, const AlgebraElement& b) {
  require_symmetric_unit(algebra, a);
  require_symmetric_unit(algebra, b);
  return diagonal_form(algebra.field(), star_pairing_gram(algebra, a, b));
}

QuadraticForm star_pairing_form(const HermitianForm& h, const AlgebraElement& a) {
  const auto& alg = h.algebra();
  require_symmetric_unit(alg, a);
  const auto basis = alg.basis_over_center();
  const std::size_t t = basis.size();
  const std::size_t k = h.dimension();
  const DivisionAlgebra z = alg.center();
  DMatrix g(k * t, k * t, z.zero());
  std::vector<AlgebraElement> sig;
  std::vector<AlgebraElement> right;
  for (const auto& e : basis) {
    sig.push_back(alg.involution(e));
    right.push_back(e * a);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const AlgebraElement& gij = h.gram()(i, j);
      bool zero = true;
      for (const auto& e : gij.data()) zero = zero && e.is_zero();
      if (zero) continue;
      for (std::size_t p = 0; p < t; ++p) {
        const AlgebraElement lg = sig[p] * gij;
        for (std::size_t q = 0; q < t; ++q) g(i * t + p, j * t + q) = alg.reduced_trace(lg * right[q]);
      }
    }
  return diagonal_form(alg.field(), g);
}

MaxSignature max_signature_mP(const AlgebraWithInvolution& algebra, const OrderingHandle& p,
                              const std::vector<AlgebraElement>& trials) {
  if (is_nil(algebra, p)) throw Error("NilOrdering");
  const long value = signature(HermitianForm::diagonal(algebra, {algebra.phi()}), p);
  long best = std::numeric_limits<long>::min();
  for (const auto& t : trials) best = std::max(best, signature(HermitianForm::diagonal(algebra, {t}), p));
  return {value, algebra.phi(), best};
}

}  // namespace hermsig
