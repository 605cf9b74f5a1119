#pragma once

// Dense exact linear algebra over the concrete field types.

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specht {

template <class F>
struct DenseMatrix {
  using Elem = typename F::Elem;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> data;

  DenseMatrix() = default;
  DenseMatrix(const F& f, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, f.zero()) {}
  Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// In-place reduced row echelon form. Returns pivot columns in row order.
/// Row updates for a pivot run in parallel.
template <class F>
std::vector<std::size_t> rref(const F& f, DenseMatrix<F>& m) {
  using Elem = typename F::Elem;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && f.is_zero(m.at(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Elem inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j)
      if (!f.is_zero(m.at(r, j))) m.at(r, j) = f.mul(m.at(r, j), inv);
    const auto nrows = static_cast<long>(m.rows);
#pragma omp parallel for schedule(dynamic, 4)
    for (long ii = 0; ii < nrows; ++ii) {
      auto i = static_cast<std::size_t>(ii);
      if (i == r || f.is_zero(m.at(i, c))) continue;
      Elem factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!f.is_zero(m.at(r, j))) f.sub_mul(m.at(i, j), factor, m.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Serial forward elimination only; returns the rank. Kept as a reference for rref.
template <class F>
std::size_t rank_reference(const F& f, DenseMatrix<F> m) {
  using Elem = typename F::Elem;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && f.is_zero(m.at(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Elem inv = f.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      Elem factor = f.mul(m.at(i, c), inv);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!f.is_zero(m.at(r, j))) f.sub_mul(m.at(i, j), factor, m.at(r, j));
    }
    ++r;
  }
  return r;
}

template <class F>
std::size_t rank(const F& f, DenseMatrix<F> m) {
  return rref(f, m).size();
}

/// Basis of the right nullspace {x : m x = 0}.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& f, DenseMatrix<F> m) {
  auto piv = rref(f, m);
  std::vector<char> is_piv(m.cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<typename F::Elem> v(m.cols, f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = f.neg(m.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace specht
