#pragma once

#include <gmpxx.h>

#include <string>

namespace cuspforge {

using Integer = mpz_class;

Integer ipow(const Integer& base, unsigned long exp);

/// Exact quotient a / b; throws InternalError when b does not divide a.
Integer exact_quotient(const Integer& a, const Integer& b);

bool divides(const Integer& d, const Integer& n);

/// Reduced fraction with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(const Integer& num);  // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den);

  Integer numerator() const { return Integer(value_.get_num()); }
  Integer denominator() const { return Integer(value_.get_den()); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  mpq_class value_;
};

}  // namespace cuspforge
