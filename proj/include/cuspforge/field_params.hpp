#pragma once

#include "cuspforge/integer.hpp"

namespace cuspforge {

/// Arithmetic context: F_q[T], a monic irreducible p of degree deg_p, and
/// the level p^r. Everything downstream depends on p only through
/// |p| = q^deg_p.
class FieldParams {
 public:
  /// Throws std::invalid_argument unless q is a prime power >= 2,
  /// deg_p >= 1 and r >= 1.
  FieldParams(unsigned long q, unsigned deg_p, unsigned r);

  unsigned long q() const { return q_; }
  unsigned deg_p() const { return deg_p_; }
  unsigned r() const { return r_; }
  /// Characteristic and exponent with q = characteristic^extension.
  unsigned long characteristic() const { return char_; }
  unsigned extension() const { return ext_; }
  const Integer& abs_p() const { return abs_p_; }

  FieldParams with_r(unsigned r) const { return {q_, deg_p_, r}; }

 private:
  unsigned long q_;
  unsigned deg_p_;
  unsigned r_;
  unsigned long char_ = 0;
  unsigned ext_ = 0;
  Integer abs_p_;
};

struct DerivedScalars {
  Integer M;  // (|p|^2 - 1) / (q^2 - 1)
  Integer N;  // (|p| - 1) / (q^2 - 1) for even deg_p, else (|p| - 1) / (q - 1)
};

DerivedScalars derived_scalars(const FieldParams& params);

/// Prime-power test by trial division; on success fills the prime and the
/// exponent.
bool is_prime_power(unsigned long n, unsigned long* prime = nullptr,
                    unsigned* exponent = nullptr);

}  // namespace cuspforge
