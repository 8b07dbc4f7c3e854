#pragma once

// Permutation-expansion determinant; exponential, test use only.

#include <algorithm>
#include <numeric>
#include <vector>

#include "cuspforge/matrix.hpp"

template <typename T>
T leibniz_det(const cuspforge::Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2) total -= term; else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}
