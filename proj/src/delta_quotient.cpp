#include "cuspforge/delta_quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuspforge {

MatrixZ build_upsilon(const FieldParams& params) {
  const unsigned r = params.r();
  const Integer& P = params.abs_p();
  const Integer q(params.q());
  auto m = [r](unsigned j) { return std::min(j, r - j); };
  MatrixZ u(r + 1, r + 1);
  for (unsigned i = 0; i <= r; ++i) {
    for (unsigned j = 0; j <= r; ++j) {
      const unsigned dist = i > j ? i - j : j - i;
      if (i == j && i >= 1 && i + 1 <= r) {
        u(i, j) = (P * P + 1) * ipow(P, m(j) - 1);
      } else if (dist == 1 && j != 0 && j != r) {
        u(i, j) = -ipow(P, m(j));
      }
    }
  }
  u(0, 0) = (q - 1) * P;
  u(r, r) = (q - 1) * P;
  u(1, 0) = 1 - q;
  u(r - 1, r) = 1 - q;
  return u;
}

namespace {

std::vector<Integer> upsilon_apply(const CuspidalDivisor& d, const FieldParams& params) {
  const unsigned r = params.r();
  if (d.coeffs.size() != r + 1) throw std::invalid_argument("divisor length != r + 1");
  const MatrixZ u = build_upsilon(params);
  std::vector<Integer> out(r + 1, Integer(0));
  for (unsigned i = 0; i <= r; ++i)
    for (unsigned j = (i == 0 ? 0 : i - 1); j <= std::min(r, i + 1); ++j)
      out[i] += u(i, j) * d.coeffs[j];
  return out;
}

}  // namespace

DeltaQuotient g_map(const CuspidalDivisor& d, const FieldParams& params) {
  if (weighted_degree(d, params) != 0) {
    throw std::invalid_argument("g_map: divisor has nonzero degree");
  }
  const Integer& P = params.abs_p();
  const Integer den = Integer(params.q() - 1) * ipow(P, params.r() - 1) * (P * P - 1);
  DeltaQuotient out;
  for (const Integer& v : upsilon_apply(d, params)) out.r_exps.emplace_back(v, den);
  return out;
}

std::vector<Integer> integer_exponents(const CuspidalDivisor& d, const Integer& ord,
                                       const FieldParams& params) {
  if (ord < 1) throw std::invalid_argument("integer_exponents: order must be positive");
  const Integer& P = params.abs_p();
  const Integer q(params.q());
  const Integer den = ipow(P, params.r() - 1) * (P * P - 1);
  std::vector<Integer> out;
  for (const Integer& v : upsilon_apply(d, params)) {
    const Integer num = ord * (q * q - 1) * v;
    if (!divides(den, num)) {
      throw std::domain_error("integer_exponents: exponent " + num.get_str() + "/" +
                              den.get_str() + " is not integral");
    }
    out.push_back(exact_quotient(num, den));
  }
  return out;
}

TensorElement tensor_normalize(const TensorElement& raw) {
  if (raw.denom <= 0) throw std::invalid_argument("tensor_normalize: denominator must be positive");
  TensorElement out;
  Integer g = raw.denom;
  for (const Integer& u : raw.coords) {
    Integer v;
    mpz_fdiv_r(v.get_mpz_t(), u.get_mpz_t(), raw.denom.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.coords.push_back(std::move(v));
  }
  for (Integer& v : out.coords) v = exact_quotient(v, g);
  out.denom = exact_quotient(raw.denom, g);
  return out;
}

TensorElement oracle_tensor(const CuspidalDivisor& d, const Integer& ord,
                            const FieldParams& params) {
  TensorElement t;
  for (const Integer& s : sigma_oracle(integer_exponents(d, ord, params))) t.coords.push_back(-s);
  t.denom = Integer(params.q() - 1) * ord;
  return tensor_normalize(t);
}

}  // namespace cuspforge
