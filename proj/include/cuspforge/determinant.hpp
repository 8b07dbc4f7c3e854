#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspforge/errors.hpp"
#include "cuspforge/matrix.hpp"

namespace cuspforge {

namespace detail {

inline Integer exact_div(const Integer& a, const Integer& b) {
  return exact_quotient(a, b);
}
inline Poly exact_div(const Poly& a, const Poly& b) { return a.divexact(b); }

template <typename T>
void require_square(const Matrix<T>& m, const char* who) {
  if (!m.square()) {
    throw std::invalid_argument(std::string(who) + ": matrix is " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
  }
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact over an integral domain; an inexact one raises
/// InternalError.
template <typename T>
T bareiss_det(Matrix<T> a) {
  detail::require_square(a, "bareiss_det");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == T(0)) ++p;
      if (p == n) return T(0);
      a.swap_rows(k, p);
      negate = !negate;
    }
    const T pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = pivot * a(i, j) - lead * a(k, j);
        a(i, j) = detail::exact_div(num, prev);
      }
      a(i, k) = T(0);
    }
    prev = pivot;
  }
  T det = a(n - 1, n - 1);
  return negate ? T(-det) : det;
}

/// First entry (i, j) with j > i + 1 that is nonzero, if any.
template <typename T>
std::optional<std::pair<std::size_t, std::size_t>> hessenberg_violation(
    const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 2; j < m.cols(); ++j)
      if (!(m(i, j) == T(0))) return std::make_pair(i, j);
  return std::nullopt;
}

/// det(M(0)), det(M(1)), ..., det(M(n)) of a lower Hessenberg matrix
/// (zero above the superdiagonal) via the leading-minor recursion
///   D_n = m_nn D_{n-1} + sum_{i<n} (-1)^{n-i} m_{n,i} (prod_{j=i}^{n-1} m_{j,j+1}) D_{i-1}
/// with D_0 = 1. Indices in the formula are 1-based.
template <typename T>
std::vector<T> hessenberg_minors(const Matrix<T>& m) {
  detail::require_square(m, "hessenberg_minors");
  if (auto bad = hessenberg_violation(m)) {
    throw std::invalid_argument(
        "hessenberg_det: entry (" + std::to_string(bad->first) + ", " +
        std::to_string(bad->second) +
        ") is nonzero but lies above the superdiagonal");
  }
  const std::size_t n = m.rows();
  std::vector<T> d;
  d.reserve(n + 1);
  d.emplace_back(1);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t r = k - 1;  // 0-based row of m_{k,.}
    T acc = m(r, r) * d[k - 1];
    T super_prod(1);
    // Walk i = k-1 down to 1 so the superdiagonal product grows by one factor.
    for (std::size_t i = k - 1; i >= 1; --i) {
      super_prod = super_prod * m(i - 1, i);
      if (!(m(r, i - 1) == T(0))) {
        T term = m(r, i - 1) * super_prod * d[i - 1];
        if ((k - i) % 2 == 1) acc -= term; else acc += term;
      }
    }
    d.push_back(std::move(acc));
  }
  return d;
}

template <typename T>
T hessenberg_det(const Matrix<T>& m) {
  return hessenberg_minors(m).back();
}

/// det of each leading block M(1), ..., M(n). Uses the Bareiss pivots
/// of unpivoted elimination (the k-th pivot is det M(k)); a zero pivot
/// falls back to a separate determinant per remaining block.
template <typename T>
std::vector<T> leading_principal_minors(const Matrix<T>& m) {
  detail::require_square(m, "leading_principal_minors");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  std::vector<T> out;
  out.reserve(n);
  T prev(1);
  std::size_t k = 0;
  for (; k < n; ++k) {
    const T pivot = a(k, k);
    out.push_back(pivot);
    if (pivot == T(0)) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      const T lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = pivot * a(i, j) - lead * a(k, j);
        a(i, j) = detail::exact_div(num, prev);
      }
      a(i, k) = T(0);
    }
    prev = pivot;
  }
  for (++k; k < n; ++k) out.push_back(bareiss_det(m.leading_block(k + 1)));
  return out;
}

}  // namespace cuspforge
