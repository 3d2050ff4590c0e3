#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hermsig/matrix.hpp"

namespace hermsig {

/// Result of a congruence diagonalization: conj(G)^t * B * G == diag(d).
template <class T>
struct Congruence {
  Matrix<T> transform;
  std::vector<T> diagonal;
};

/// conj-hermitian congruence diagonalization by symmetric Gaussian
/// elimination. Requires T to provide conj(x), x.is_zero(), x.inverse()
/// (only ever called on nonzero diagonal pivots, which are conj-fixed and
/// hence central), and ring operators.
///
/// When every remaining diagonal entry vanishes but an off-diagonal b_ij does
/// not, column j * c is added to column i for the first c in `rescue` with
/// conj(c) b_ji + b_ij c != 0. For a division ring with nondegenerate trace
/// form, a basis always contains such a c. Zero diagonal entries at the end
/// span the radical.
template <class T>
Congruence<T> congruence_diagonalize(Matrix<T> b, const T& zero, const T& one, std::span<const T> rescue) {
  const std::size_t n = b.rows();
  Matrix<T> g = Matrix<T>::identity(n, zero, one);

  auto add_col = [&](std::size_t target, std::size_t source, const T& c) {
    // B <- conj(E)^t B E with E = I + c e_{source,target}
    for (std::size_t r = 0; r < n; ++r) b(r, target) += b(r, source) * c;
    const T cc = conj(c);
    for (std::size_t s = 0; s < n; ++s) b(target, s) += cc * b(source, s);
    for (std::size_t r = 0; r < n; ++r) g(r, target) += g(r, source) * c;
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!b(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      bool rescued = false;
      for (std::size_t i = k; i < n && !rescued; ++i) {
        for (std::size_t j = i + 1; j < n && !rescued; ++j) {
          if (b(i, j).is_zero()) continue;
          for (const T& c : rescue) {
            T value = conj(c) * b(j, i) + b(i, j) * c;
            if (!value.is_zero()) {
              add_col(i, j, c);
              pivot = i;
              rescued = true;
              break;
            }
          }
        }
      }
      if (!rescued) break;  // remaining block is zero
    }
    b.swap_rows(pivot, k);
    b.swap_cols(pivot, k);
    g.swap_cols(pivot, k);

    const T pivot_inv = b(k, k).inverse();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (b(k, j).is_zero()) continue;
      add_col(j, k, -(pivot_inv * b(k, j)));
    }
  }

  std::vector<T> d;
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(b(i, i));
  return {std::move(g), std::move(d)};
}

}  // namespace hermsig
