#include "cuspforge/field_params.hpp"

#include <stdexcept>
#include <string>

namespace cuspforge {

bool is_prime_power(unsigned long n, unsigned long* prime, unsigned* exponent) {
  if (n < 2) return false;
  unsigned long p = 0;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return false;
  if (prime != nullptr) *prime = p;
  if (exponent != nullptr) *exponent = e;
  return true;
}

FieldParams::FieldParams(unsigned long q, unsigned deg_p, unsigned r)
    : q_(q), deg_p_(deg_p), r_(r) {
  if (!is_prime_power(q, &char_, &ext_)) {
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a prime power");
  }
  if (deg_p == 0) throw std::invalid_argument("deg_p must be at least 1");
  if (r == 0) throw std::invalid_argument("r must be at least 1");
  abs_p_ = ipow(Integer(q), deg_p);
}

DerivedScalars derived_scalars(const FieldParams& params) {
  const Integer q(params.q());
  const Integer& P = params.abs_p();
  const Integer q2m1 = q * q - 1;
  DerivedScalars out;
  out.M = exact_quotient(P * P - 1, q2m1);
  out.N = exact_quotient(P - 1, params.deg_p() % 2 == 0 ? q2m1 : Integer(q - 1));
  return out;
}

}  // namespace cuspforge
