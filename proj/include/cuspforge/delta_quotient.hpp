#pragma once

#include <vector>

#include "cuspforge/divisors.hpp"
#include "cuspforge/field_params.hpp"
#include "cuspforge/matrix.hpp"

namespace cuspforge {

/// Tridiagonal (r+1)x(r+1) matrix taking closed-point coefficients a_j to
/// the numerators of the Delta-quotient exponents. With m(j) = min(j, r-j):
///   (i, i), 0 < i < r           : (P^2 + 1) P^{m(i) - 1}
///   |i - j| = 1, j not in {0, r} : -P^{m(j)}
///   (0, 0), (r, r)              : (q - 1) P
///   (1, 0), (r - 1, r)          : 1 - q
MatrixZ build_upsilon(const FieldParams& params);

/// Exponents r_m of the Delta-quotient attached to a divisor, indexed by
/// m = p^0..p^r. They sum to zero.
struct DeltaQuotient {
  std::vector<Rat> r_exps;
};

/// Throws std::invalid_argument when the divisor has nonzero weighted degree.
DeltaQuotient g_map(const CuspidalDivisor& d, const FieldParams& params);

/// E = ord (q^2 - 1) Upsilon a / (P^{r-1} (P^2 - 1)). Throws
/// std::domain_error if the result is not integral.
std::vector<Integer> integer_exponents(const CuspidalDivisor& d, const Integer& ord,
                                       const FieldParams& params);

/// sigma_k = sum_j E_j (min(k, j) - j), k = 0..r-1.
template <typename T>
std::vector<T> sigma_oracle(const std::vector<T>& E) {
  if (E.empty()) return {};
  const std::size_t r = E.size() - 1;
  std::vector<T> out(r, T(0));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = k + 1; j <= r; ++j) {
      // min(k, j) - j = k - j for j > k; zero otherwise.
      out[k] -= E[j] * T(static_cast<long>(j - k));
    }
  }
  return out;
}

/// Element of Lambda (x) Q/Z written as (u_0..u_{r-1}) / c.
struct TensorElement {
  std::vector<Integer> coords;
  Integer denom = 1;
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// Reduce coordinates into [0, c) and divide out gcd(u_0, ..., u_{r-1}, c).
/// Equal canonical forms iff equal elements.
TensorElement tensor_normalize(const TensorElement& raw);

/// Image of a generator under the reduced delta map, from the Upsilon
/// pipeline: coordinates -sigma_oracle(E), denominator (q - 1) ord.
TensorElement oracle_tensor(const CuspidalDivisor& d, const Integer& ord,
                            const FieldParams& params);

}  // namespace cuspforge
