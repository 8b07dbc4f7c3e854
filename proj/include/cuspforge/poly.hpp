#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuspforge/integer.hpp"

namespace cuspforge {

/// Dense univariate polynomial over the integers in the indeterminate P.
///
/// Coefficients are stored in ascending degree with trailing zeros trimmed,
/// so the zero polynomial is the empty sequence and the leading coefficient
/// of a nonzero polynomial is never zero.
class Poly {
 public:
  Poly() = default;
  Poly(long c);            // NOLINT(google-explicit-constructor)
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<long> ascending);

  static Poly from_coeffs(std::vector<Integer> ascending);
  static Poly monomial(unsigned degree, const Integer& coeff = 1);
  /// The indeterminate itself.
  static Poly var() { return monomial(1); }

  const std::vector<Integer>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  Integer constant_term() const { return coeff(0); }
  Integer leading_coeff() const { return c_.empty() ? Integer(0) : c_.back(); }

  Integer eval(const Integer& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Integer& k);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder by a monic divisor (always integral).
  std::pair<Poly, Poly> divmod_monic(const Poly& divisor) const;
  /// Exact quotient; throws InternalError when the division leaves a
  /// remainder or is not integral.
  Poly divexact(const Poly& divisor) const;
  Poly divexact(const Integer& divisor) const;

  /// Human-readable form, e.g. "P^4 - 2P^3 + 2P".
  std::string to_string(std::string_view var = "P") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

Poly pow(const Poly& base, unsigned exp);

/// P^k, the building block of every closed form in this library.
inline Poly Pk(unsigned k) { return Poly::monomial(k); }

}  // namespace cuspforge
