#include "cuspforge/finite_field.hpp"

#include <stdexcept>

namespace cuspforge {

namespace {

// Polynomials over F_p with plain integer coefficients, used only to build
// the extension tables.
std::vector<unsigned> digits(unsigned x, unsigned p, unsigned t) {
  std::vector<unsigned> d(t);
  for (unsigned k = 0; k < t; ++k, x /= p) d[k] = x % p;
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

}  // namespace

FiniteField::FiniteField(unsigned long prime, unsigned extension) {
  unsigned long q = 1;
  for (unsigned k = 0; k < extension; ++k) q *= prime;
  if (q > 1024) throw std::invalid_argument("FiniteField: q too large for tables");
  q_ = static_cast<unsigned>(q);
  const auto p = static_cast<unsigned>(prime);
  const unsigned t = extension;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<unsigned> modulus;  // monic, degree t, ascending, over F_p
  if (t > 1) {
    FiniteField base(prime, 1);
    FqPoly m = least_monic_irreducible(base, t);
    modulus.assign(m.begin(), m.end());
  }

  for (unsigned a = 0; a < q_; ++a) {
    const auto da = digits(a, p, t);
    std::vector<unsigned> dn(t);
    for (unsigned k = 0; k < t; ++k) dn[k] = (p - da[k]) % p;
    neg_[a] = undigits(dn, p);
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = digits(b, p, t);
      std::vector<unsigned> s(t);
      for (unsigned k = 0; k < t; ++k) s[k] = (da[k] + db[k]) % p;
      add_[a * q_ + b] = undigits(s, p);
      std::vector<unsigned> prod(2 * t, 0);
      for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (unsigned k = 2 * t; k-- > t;) {
        const unsigned c = prod[k];
        if (c == 0) continue;
        for (unsigned j = 0; j <= t; ++j) {
          prod[k - t + j] = (prod[k - t + j] + p * p - c * modulus[j] % p) % p;
        }
      }
      prod.resize(t);
      mul_[a * q_ + b] = undigits(prod, p);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero");
  return inv_[a];
}

FqPoly fq_trim(FqPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FqPoly fq_mul(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  return fq_trim(std::move(out));
}

FqPoly fq_scale(const FiniteField& f, unsigned k, const FqPoly& a) {
  FqPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(k, a[i]);
  return fq_trim(std::move(out));
}

FqPoly fq_mod(const FiniteField& f, FqPoly a, const FqPoly& b) {
  if (b.empty()) throw std::domain_error("fq_mod: zero modulus");
  a = fq_trim(std::move(a));
  const unsigned lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const unsigned c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    a = fq_trim(std::move(a));
  }
  return a;
}

FqPoly fq_pow(const FiniteField& f, const FqPoly& a, unsigned e) {
  FqPoly out{1};
  for (unsigned k = 0; k < e; ++k) out = fq_mul(f, out, a);
  return out;
}

std::vector<FqPoly> fq_all_below_degree(const FiniteField& f, unsigned n) {
  const unsigned q = f.size();
  std::size_t count = 1;
  for (unsigned k = 0; k < n; ++k) count *= q;
  std::vector<FqPoly> out;
  out.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    FqPoly p(n);
    std::size_t y = x;
    for (unsigned k = 0; k < n; ++k, y /= q) p[k] = static_cast<unsigned>(y % q);
    out.push_back(fq_trim(std::move(p)));
  }
  return out;
}

bool fq_is_irreducible(const FiniteField& f, const FqPoly& a) {
  const FqPoly t = fq_trim(a);
  if (t.size() < 2) return false;
  const auto d = static_cast<unsigned>(t.size() - 1);
  // Any factorization has a monic factor of degree <= d/2.
  for (unsigned e = 1; 2 * e <= d; ++e) {
    for (const FqPoly& low : fq_all_below_degree(f, e)) {
      FqPoly g = low;
      g.resize(e + 1, 0);
      g[e] = 1;
      if (fq_mod(f, t, g).empty()) return false;
    }
  }
  return true;
}

FqPoly least_monic_irreducible(const FiniteField& f, unsigned d) {
  if (d == 0) throw std::invalid_argument("least_monic_irreducible: degree 0");
  const unsigned q = f.size();
  std::size_t count = 1;
  for (unsigned k = 0; k < d; ++k) count *= q;
  for (std::size_t x = 0; x < count; ++x) {
    // x's most significant base-q digit is the T^{d-1} coefficient.
    FqPoly p(d + 1, 0);
    std::size_t y = x;
    for (unsigned k = 0; k < d; ++k, y /= q) p[k] = static_cast<unsigned>(y % q);
    p[d] = 1;
    if (fq_is_irreducible(f, p)) return p;
  }
  throw std::logic_error("least_monic_irreducible: none found");
}

}  // namespace cuspforge
