#include "hermsig/algebra.hpp"

#include <optional>

#include "hermsig/error.hpp"

namespace hermsig {

namespace {

// Row-reduces in place; returns the rank.
std::size_t row_reduce(std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const FieldElement inv = rows[rank][c].inverse();
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const FieldElement f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<AlgebraElement> field_basis(const DivisionAlgebra& d, std::size_t n) {
  std::vector<AlgebraElement> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < d.dimension(); ++t) {
        AlgebraElement e(n, n, d.zero());
        e(r, s) = d.basis_element(t);
        out.push_back(std::move(e));
      }
  return out;
}

std::vector<FieldElement> coords_of(const AlgebraElement& x) {
  std::vector<FieldElement> out;
  for (const auto& e : x.data())
    for (const auto& c : e.components()) out.push_back(c);
  return out;
}

// Solves X * Y = I as an F-linear system; used when D has zero divisors.
std::optional<AlgebraElement> invert_linear(const AlgebraElement& x) {
  const DivisionAlgebra& d = x(0, 0).algebra();
  const std::size_t n = x.rows();
  const auto basis = field_basis(d, n);
  const std::size_t dim = basis.size();
  // Augmented system: column k holds coords(X * B_k); last column is coords(I).
  std::vector<std::vector<FieldElement>> rows(dim, std::vector<FieldElement>(dim + 1, d.field().zero()));
  for (std::size_t k = 0; k < dim; ++k) {
    const auto col = coords_of(x * basis[k]);
    for (std::size_t r = 0; r < dim; ++r) rows[r][k] = col[r];
  }
  const auto id = coords_of(AlgebraElement::identity(n, d.zero(), d.one()));
  for (std::size_t r = 0; r < dim; ++r) rows[r][dim] = id[r];
  row_reduce(rows);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!(rows[r][r] == d.field().one())) return std::nullopt;
  }
  AlgebraElement y(n, n, d.zero());
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t rs = k / d.dimension();
    const std::size_t t = k % d.dimension();
    y(rs / n, rs % n) += d.basis_element(t) * rows[k][dim];
  }
  return y;
}

}  // namespace

std::size_t field_rank(std::vector<std::vector<FieldElement>> rows) { return row_reduce(rows); }

AlgebraElement theta_transpose(const AlgebraElement& x) {
  AlgebraElement t(x.cols(), x.rows(), x(0, 0));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) t(j, i) = conj(x(i, j));
  return t;
}

AlgebraElement invert_matrix(const AlgebraElement& x) {
  if (!x.square()) throw Error("NotInvertible", "matrix is not square");
  const DivisionAlgebra& d = x(0, 0).algebra();
  const std::size_t n = x.rows();
  AlgebraElement a = x;
  AlgebraElement inv = AlgebraElement::identity(n, d.zero(), d.one());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    bool nonzero_seen = false;
    for (std::size_t r = k; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      nonzero_seen = true;
      if (!a(r, k).norm().is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) {
      if (!nonzero_seen) throw Error("NotInvertible", "singular matrix");
      if (auto y = invert_linear(x)) return *y;
      throw Error("NotInvertible", "singular matrix");
    }
    a.swap_rows(piv, k);
    inv.swap_rows(piv, k);
    const DElement p = a(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = p * a(k, j);
      inv(k, j) = p * inv(k, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a(r, k).is_zero()) continue;
      const DElement f = a(r, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(k, j);
        inv(r, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

AlgebraWithInvolution AlgebraWithInvolution::make(const DivisionAlgebra& division, std::size_t n,
                                                  const AlgebraElement& phi) {
  if (n == 0 || phi.rows() != n || phi.cols() != n) throw Error("ShapeMismatch", "phi must be n x n");
  for (const auto& e : phi.data()) {
    if (!(e.algebra() == division)) throw Error("ShapeMismatch", "phi entries belong to another algebra");
  }
  if (!(theta_transpose(phi) == phi)) throw Error("PhiNotSymmetric");
  AlgebraElement phi_inv = phi;
  try {
    phi_inv = invert_matrix(phi);
  } catch (const Error& e) {
    if (e.code() == "NotInvertible") throw Error("PhiSingular");
    throw;
  }
  AlgebraWithInvolution alg(division, n, phi, std::move(phi_inv));
  if (division.kind() == DivisionKind::quaternion && division.field().formally_real()) {
    bool any_definite = false;
    for (const auto& p : division.field().orderings()) {
      if (sign_of(division.a(), p) < 0 && sign_of(division.b(), p) < 0) any_definite = true;
    }
    if (!any_definite) alg.warnings_.push_back("DNotDivisionAtAnyOrdering");
  }
  return alg;
}

DivisionAlgebra AlgebraWithInvolution::center() const {
  return first_kind() ? DivisionAlgebra::base(field()) : division_;
}

AlgebraElement AlgebraWithInvolution::zero() const { return AlgebraElement(n_, n_, division_.zero()); }

AlgebraElement AlgebraWithInvolution::identity() const {
  return AlgebraElement::identity(n_, division_.zero(), division_.one());
}

AlgebraElement AlgebraWithInvolution::scalar(const FieldElement& u) const {
  return AlgebraElement::identity(n_, division_.zero(), division_.scalar(u));
}

void AlgebraWithInvolution::check_element(const AlgebraElement& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw Error("ShapeMismatch", "element is not n x n");
  for (const auto& e : x.data()) {
    if (!(e.algebra() == division_)) throw Error("ShapeMismatch", "entry belongs to another algebra");
  }
}

AlgebraElement AlgebraWithInvolution::involution(const AlgebraElement& x) const {
  return phi_ * theta_transpose(x) * phi_inv_;
}

AlgebraElement AlgebraWithInvolution::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  return x * y;
}

AlgebraElement AlgebraWithInvolution::add(const AlgebraElement& x, const AlgebraElement& y) const { return x + y; }

bool AlgebraWithInvolution::is_symmetric(const AlgebraElement& x) const { return involution(x) == x; }

AlgebraElement AlgebraWithInvolution::invert(const AlgebraElement& x) const {
  check_element(x);
  return invert_matrix(x);
}

bool AlgebraWithInvolution::is_invertible(const AlgebraElement& x) const {
  try {
    invert_matrix(x);
    return true;
  } catch (const Error& e) {
    if (e.code() == "NotInvertible") return false;
    throw;
  }
}

DElement AlgebraWithInvolution::reduced_trace(const AlgebraElement& x) const {
  const DivisionAlgebra z = center();
  switch (division_.kind()) {
    case DivisionKind::base: {
      FieldElement t = field().zero();
      for (std::size_t i = 0; i < n_; ++i) t += x(i, i).component(0);
      return z.scalar(t);
    }
    case DivisionKind::quaternion: {
      FieldElement t = field().zero();
      for (std::size_t i = 0; i < n_; ++i) t += x(i, i).component(0);
      return z.scalar(t * Rational(2));
    }
    case DivisionKind::quadratic: {
      DElement t = z.zero();
      for (std::size_t i = 0; i < n_; ++i) t += x(i, i);
      return t;
    }
  }
  throw Error("InternalError");
}

std::vector<AlgebraElement> AlgebraWithInvolution::basis_over_field() const { return field_basis(division_, n_); }

std::vector<AlgebraElement> AlgebraWithInvolution::basis_over_center() const {
  if (first_kind()) return basis_over_field();
  // D = Z(A) for the quadratic kind: the matrix units form a Z(A)-basis.
  std::vector<AlgebraElement> out;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t s = 0; s < n_; ++s) {
      AlgebraElement e = zero();
      e(r, s) = division_.one();
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<FieldElement> AlgebraWithInvolution::coordinates(const AlgebraElement& x) const { return coords_of(x); }

AlgebraElement AlgebraWithInvolution::from_coordinates(const std::vector<FieldElement>& coords) const {
  const std::size_t dd = division_.dimension();
  if (coords.size() != n_ * n_ * dd) throw Error("ShapeMismatch", "coordinate count");
  AlgebraElement x = zero();
  for (std::size_t rs = 0; rs < n_ * n_; ++rs) {
    std::vector<FieldElement> c(coords.begin() + static_cast<long>(rs * dd),
                                coords.begin() + static_cast<long>((rs + 1) * dd));
    x(rs / n_, rs % n_) = division_.element(std::move(c));
  }
  return x;
}

std::size_t AlgebraWithInvolution::symmetric_dimension() const {
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& e : basis_over_field()) rows.push_back(coords_of(involution(e) - e));
  return basis_over_field().size() - field_rank(std::move(rows));
}

AlgebraWithInvolution AlgebraWithInvolution::extend(const FieldEmbedding& embedding) const {
  const DivisionAlgebra target = division_.extend(embedding);
  AlgebraElement phi(n_, n_, target.zero());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<FieldElement> c;
      for (const auto& x : phi_(i, j).components()) c.push_back(embedding.push(x));
      phi(i, j) = target.element(std::move(c));
    }
  return make(target, n_, phi);
}

AlgebraElement AlgebraWithInvolution::push(const FieldEmbedding& embedding, const AlgebraElement& x) const {
  if (!(embedding.target() == field())) throw Error("FieldMismatch");
  AlgebraElement out(x.rows(), x.cols(), division_.zero());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      std::vector<FieldElement> c;
      for (const auto& v : x(i, j).components()) c.push_back(embedding.push(v));
      out(i, j) = division_.element(std::move(c));
    }
  return out;
}

}  // namespace hermsig
