#include "cuspforge/poly.hpp"

#include <algorithm>

#include "cuspforge/errors.hpp"

namespace cuspforge {

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::initializer_list<long> ascending) {
  for (long c : ascending) c_.emplace_back(c);
  trim();
}

Poly Poly::from_coeffs(std::vector<Integer> ascending) {
  Poly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

Poly Poly::monomial(unsigned degree, const Integer& coeff) {
  Poly p;
  if (coeff == 0) return p;
  p.c_.assign(degree + 1, Integer(0));
  p.c_[degree] = coeff;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer Poly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                 b.c_[j].get_mpz_t());
    }
  }
  return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Integer& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::pair<Poly, Poly> Poly::divmod_monic(const Poly& divisor) const {
  if (divisor.is_zero() || divisor.leading_coeff() != 1) {
    throw std::invalid_argument("divmod_monic: divisor is not monic");
  }
  std::vector<Integer> rem = c_;
  const std::size_t dn = divisor.c_.size();
  if (rem.size() < dn) return {Poly{}, *this};
  std::vector<Integer> quot(rem.size() - dn + 1, Integer(0));
  for (std::size_t k = rem.size(); k-- >= dn;) {
    const Integer lead = rem[k];
    if (lead == 0) continue;
    const std::size_t shift = k - (dn - 1);
    quot[shift] = lead;
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[shift + j].get_mpz_t(), lead.get_mpz_t(),
                 divisor.c_[j].get_mpz_t());
    }
  }
  return {from_coeffs(std::move(quot)), from_coeffs(std::move(rem))};
}

Poly Poly::divexact(const Poly& divisor) const {
  if (divisor.is_zero()) throw InternalError("Poly::divexact: zero divisor");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw InternalError("Poly::divexact: " + divisor.to_string() +
                        " does not divide " + to_string());
  }
  std::vector<Integer> rem = c_;
  const std::size_t dn = divisor.c_.size();
  const Integer& lc = divisor.c_.back();
  std::vector<Integer> quot(rem.size() - dn + 1, Integer(0));
  for (std::size_t k = rem.size(); k-- >= dn;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lc.get_mpz_t())) {
      throw InternalError("Poly::divexact: non-integral quotient dividing " +
                          to_string() + " by " + divisor.to_string());
    }
    const std::size_t shift = k - (dn - 1);
    Integer t;
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(),
                 divisor.c_[j].get_mpz_t());
    }
    quot[shift] = std::move(t);
  }
  for (std::size_t k = 0; k + 1 < dn && k < rem.size(); ++k) {
    if (rem[k] != 0) {
      throw InternalError("Poly::divexact: " + divisor.to_string() +
                          " does not divide " + to_string());
    }
  }
  return from_coeffs(std::move(quot));
}

Poly Poly::divexact(const Integer& divisor) const {
  Poly out = *this;
  for (auto& c : out.c_) c = exact_quotient(c, divisor);
  return out;
}

std::string Poly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    Integer mag = neg ? Integer(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Poly pow(const Poly& base, unsigned exp) {
  Poly out(1);
  Poly b = base;
  while (exp != 0) {
    if (exp & 1U) out *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return out;
}

}  // namespace cuspforge
