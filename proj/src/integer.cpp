#include "cuspforge/integer.hpp"

#include "cuspforge/errors.hpp"

namespace cuspforge {

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer exact_quotient(const Integer& a, const Integer& b) {
  if (b == 0) throw InternalError("exact_quotient: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InternalError("exact_quotient: " + b.get_str() +
                        " does not divide " + a.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Rat::Rat(const Integer& num) : value_(num) {}

Rat::Rat(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  value_.canonicalize();
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.value_ == 0) throw std::invalid_argument("Rat: division by zero");
  value_ /= o.value_;
  return *this;
}

Rat Rat::operator-() const {
  Rat out;
  out.value_ = -value_;
  return out;
}

std::string Rat::to_string() const { return value_.get_str(); }

}  // namespace cuspforge
