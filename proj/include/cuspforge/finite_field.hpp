#pragma once

#include <cstdint>
#include <vector>

namespace cuspforge {

/// GF(p^t) with elements encoded as 0..q-1 (base-p digit vectors of the
/// residue modulo the least monic irreducible of degree t over F_p).
/// Sized for exhaustive enumeration; q is expected to be small.
class FiniteField {
 public:
  FiniteField(unsigned long prime, unsigned extension);

  unsigned size() const { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const;
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

 private:
  unsigned q_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

/// Polynomial over a FiniteField, ascending coefficients, trimmed.
using FqPoly = std::vector<unsigned>;

FqPoly fq_trim(FqPoly a);
FqPoly fq_mul(const FiniteField& f, const FqPoly& a, const FqPoly& b);
FqPoly fq_scale(const FiniteField& f, unsigned k, const FqPoly& a);
/// Remainder of a modulo a nonzero b.
FqPoly fq_mod(const FiniteField& f, FqPoly a, const FqPoly& b);
FqPoly fq_pow(const FiniteField& f, const FqPoly& a, unsigned e);
bool fq_is_irreducible(const FiniteField& f, const FqPoly& a);

/// All polynomials of degree < n, in increasing numeric order of the
/// base-q encoding (constant term least significant).
std::vector<FqPoly> fq_all_below_degree(const FiniteField& f, unsigned n);

/// Least monic irreducible of degree d, enumerating the lower coefficients
/// lexicographically with the T^{d-1} coefficient most significant. For
/// d = 1 this is T itself.
FqPoly least_monic_irreducible(const FiniteField& f, unsigned d);

}  // namespace cuspforge
