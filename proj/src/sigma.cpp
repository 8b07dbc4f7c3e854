#include "cuspforge/sigma.hpp"

#include <stdexcept>

namespace cuspforge {

namespace {

const Poly P = Pk(1);

Poly c(long v) { return Poly(v); }

// (P - 1) / 2 * x; the product is integral for every table entry.
Poly half(const Poly& x) { return ((P - 1) * x).divexact(Integer(2)); }

Poly sq(const Poly& x) { return x * x; }

std::vector<Poly> small_table(unsigned r) {
  const Poly P2 = Pk(2), P3 = Pk(3);
  switch (r) {
    case 2:
      return {P - 1, P};
    case 3:
      return {-P3 * c(2) + P2 * c(3) + P - 2, -P3 * c(2) + P2 * c(2) + P - 1, -P3 + P2 + P};
    case 4:
      return {-P3 * c(2) + P2 * c(2) + P * c(3) - 3, -P3 * c(2) + P2 + P * c(3) - 2,
              -P3 + P2 + P * c(2) - 2, -P3 + P * c(2)};
    case 5:
      return {-P3 * c(3) + P2 * c(4) + P * c(2) - 3, -P3 * c(3) + P2 * c(3) + P * c(2) - 2,
              -P3 * c(2) + P2 * c(3) + P - 2, -P3 * c(2) + P2 + P, P2};
    case 6:
      return {-P3 * c(3) + P2 * c(3) + P * c(4) - 4, -P3 * c(3) + P2 * c(2) + P * c(4) - 3,
              -P3 * c(2) + P2 * c(2) + P * c(3) - 3, -P3 * c(2) + P2 + P * c(3) - 2,
              -P3 + P * c(2) - 1, P};
    default:
      throw std::logic_error("small_table: r out of range");
  }
}

// r = 3 mod 4, r >= 7.
Poly entry_r3(long r, long k) {
  const Poly A = Pk((r - 3) / 2), B = Pk((r - 1) / 2), P2 = Pk(2);
  if (k == 0) return -half(c(5 - 3 * r) + P * c(r - 1) + P2 * c(2 * (r - 1)) + A * c(r - 3) - B * c(r + 1));
  if (k == 1) return -half(c(7 - 3 * r) + P * c(r + 1) + P2 * c(2 * (r - 1)) + A * c(r - 3) - B * c(r + 1));
  if (k == 2) return -half(c(7 - 3 * r) + P * c(r - 1) + P2 * c(2 * (r - 2)) + A * c(r - 3) - B * c(r + 1));
  if (2 * k < r - 1) return half(c(-2 * k + 3 * r - 3) - P * c(r - 1) + P2 * c(2 * (k - r)) - A * c(r - 3) + B * c(r + 1));
  if (2 * k == r - 1) return -half(c(-2 * (r - 1)) + P * c(r - 1) + P2 * c(r + 1) + A * c(r - 3) - B * c(r + 1));
  if (2 * k == r + 1) return -half(c(-2 * (r - 3)) + P * c(r - 1) + P2 * c(r - 1) + A * c(r - 3) - B * c(r - 1));
  if (k < r - 2) return (P - 1) * (c(-2 * (k - r + 1)) + P * c(k - r) + P2 * c(k - r) + A * c(k - r + 1) + B * c(r - k));
  if (k == r - 2) return c(-2) + P * c(4) - Pk(3) * c(2) + A - B * c(3) + Pk((r + 1) / 2) * c(2);
  return P * c(2) - Pk(3) - B + Pk((r + 1) / 2);
}

// r = 0 mod 4, r >= 8.
Poly entry_r0(long r, long k) {
  const Poly A = Pk(r / 2 - 2), B = Pk(r / 2 - 1), P2 = Pk(2);
  if (k == 0) return -half(c(4 - 3 * r) + P * c(r + 2) + P2 * c(2 * (r - 2)) + A * c(r - 2) - B * c(r + 2));
  if (k == 1) return -half(c(-3 * (r - 2)) + P * c(r + 4) + P2 * c(2 * (r - 2)) + A * c(r - 2) - B * c(r + 2));
  if (k == 2) return -half(c(-3 * (r - 2)) + P * c(r + 2) + P2 * c(2 * (r - 3)) + A * c(r - 2) - B * c(r + 2));
  if (k < r / 2 - 1) return half(c(-2 * k + 3 * r - 2) - P * c(r + 2) + P2 * c(2 * (k - r + 1)) - A * c(r - 2) + B * c(r + 2));
  if (k == r / 2 - 1) return -half(c(-2 * r) + P * c(r + 2) + P2 * c(r) + A * c(r - 2) - B * c(r + 2));
  if (k == r / 2) return -half(c(-2 * (r - 1)) + P * c(r) + P2 * c(r - 2) + A * c(r - 2) - B * c(r));
  if (k < r - 2) {
    if ((k - r / 2) % 2 == 1) {
      return (P - 1) * (c(-2 * (k - r + 1)) + P * c(k - r - 2) + P2 * c(k - r) + A * c(k - r + 1) + B * c(r - k));
    }
    return (P - 1) * (c(-2 * k + 2 * r - 1) + P * c(k - r) + P2 * c(k - r + 1) + A * c(k - r + 1) + B * c(r - k));
  }
  if (k == r - 2) return -((P - 1) * (c(-3) + P * c(2) + P2 + A - B * c(2)));
  return P * c(3) - P2 - Pk(3) - B + Pk(r / 2);
}

// r = 1 mod 4, r >= 9.
Poly entry_r1(long r, long k) {
  const Poly A = Pk((r - 3) / 2), B = Pk((r - 1) / 2), P2 = Pk(2);
  if (k == 0) return half(c(2 * (r - 2)) + P * c(r - 1) - P2 * c(3 * (r - 1)) - A * c(r - 3) + B * c(r + 1));
  if (k == 1) return -half(c(-2 * (r - 3)) - P * c(r - 3) + P2 * c(3 * (r - 1)) + A * c(r - 3) - B * c(r + 1));
  if (k == 2) return -half(c(-2 * (r - 3)) - P * c(r - 1) + P2 * c(3 * r - 5) + A * c(r - 3) - B * c(r + 1));
  if (2 * k < r - 1) return half(c(-2 * (k - r + 1)) + P * c(r - 1) + P2 * c(2 * k - 3 * r + 1) - A * c(r - 3) + B * c(r + 1));
  if (2 * k == r - 1) return -half(c(-(r - 1)) - P * c(r - 1) + P2 * c(2 * r) + A * c(r - 3) - B * c(r + 1));
  if (2 * k == r + 1) return -half(c(-(r - 5)) - P * c(r - 5) + P2 * c(2 * (r - 1)) + A * c(r - 3) - B * c(r - 1));
  if (k < r - 2) {
    if ((k - (r + 3) / 2) % 2 == 1) {
      return (P - 1) * (c(-k + r - 2) + P * c(-k + r - 2) + P2 * c(2 * (k - r)) + A * c(k - r + 1) + B * c(r - k));
    }
    return (P - 1) * (c(-k + r - 1) + P * c(r - k) + P2 * c(2 * k - 2 * r + 1) + A * c(k - r + 1) + B * c(r - k));
  }
  if (k == r - 2) return -((P - 1) * (P2 * c(4) + A - B * c(2)));
  return P2 * c(2) - Pk(3) - B + Pk((r + 1) / 2);
}

// r = 2 mod 4, r >= 10.
Poly entry_r2(long r, long k) {
  const Poly A = Pk(r / 2 - 2), B = Pk(r / 2 - 1), P2 = Pk(2);
  if (k == 0) return half(c(2 * (r - 2)) + P * c(r - 2) + P2 * c(4 - 3 * r) - A * c(r - 2) + B * c(r + 2));
  if (k == 1) return half(c(2 * (r - 3)) + P * c(r - 4) + P2 * c(4 - 3 * r) - A * c(r - 2) + B * c(r + 2));
  if (k == 2) return half(c(2 * (r - 3)) + P * c(r - 2) - P2 * c(3 * (r - 2)) - A * c(r - 2) + B * c(r + 2));
  if (k < r / 2 - 1) return half(c(-2 * (k - r + 1)) + P * c(r - 2) + P2 * c(2 * k - 3 * r + 2) - A * c(r - 2) + B * c(r + 2));
  if (k == r / 2 - 1) return half(c(r) + P * c(r - 2) - P2 * c(2 * r) - A * c(r - 2) + B * c(r + 2));
  if (k == r / 2) return half(c(r - 2) + P * c(r - 4) - P2 * c(2 * (r - 1)) - A * c(r - 2) + B * c(r));
  if (k < r - 2) return (P - 1) * (c(-k + r - 1) + P * c(-k + r - 2) + P2 * c(2 * k - 2 * r + 1) + A * c(k - r + 1) + B * c(r - k));
  if (k == r - 2) return -((P - 1) * (c(-1) + P2 * c(3) + A - B * c(2)));
  return P + P2 - Pk(3) - B + Pk(r / 2);
}

Poly closed_entry(unsigned i, unsigned k, unsigned r) {
  const Poly d2 = sq(P - 1);
  if (i <= (r - 1) / 2) {
    if (k < i) return d2 * c(r - i) + P - 1;
    if (k == i) return d2 * c(r - i) + P * c(2) - 1;
    return d2 * c(r - k) + P - 1;
  }
  if (k < i) return d2;
  if (k == i) return Pk(2) - P + 1;
  if (k == i + 1) return -P;
  return {};
}

}  // namespace

SigmaVector sigma_closed_form(unsigned i, const FieldParams& params) {
  const unsigned r = params.r();
  if (r < 2) throw std::invalid_argument("sigma_closed_form: requires r >= 2");
  SigmaVector s;
  if (i == 0) {
    s.entries.assign(r, Poly(1));
    s.generator = {GeneratorKind::D0, 0};
    s.tensor_denom = P - 1;
    s.prefactor = Integer(params.q() - 1);
    return s;
  }
  const unsigned a = (r - 1) / 2;
  const unsigned b = (r + 1) / 2;
  const bool small = i >= 1 && i <= a;
  const bool shifted = i >= b && i + 2 <= r;
  if (!small && !shifted) {
    throw std::out_of_range("sigma_closed_form: i = " + std::to_string(i) +
                            " is not a generator index for r = " + std::to_string(r));
  }
  for (unsigned k = 0; k < r; ++k) s.entries.push_back(closed_entry(i, k, r));
  if (small) {
    s.generator = {GeneratorKind::C, i};
    s.tensor_denom = Pk(r - i) * (Pk(2) - 1);
  } else {
    s.generator = {GeneratorKind::CShift, i};
    s.tensor_denom = Pk(i) * (Pk(2) - 1);
  }
  return s;
}

SigmaVector sigma_r_minus_1(const FieldParams& params) {
  const unsigned r = params.r();
  if (r < 2) throw std::invalid_argument("sigma_r_minus_1: requires r >= 2");
  SigmaVector s;
  s.generator = {GeneratorKind::Dr1, r - 1};
  s.tensor_denom = Pk(2) - 1;
  if (r <= 6) {
    s.entries = small_table(r);
    return s;
  }
  const long rl = r;
  for (long k = 0; k < rl; ++k) {
    switch (r % 4) {
      case 3: s.entries.push_back(entry_r3(rl, k)); break;
      case 0: s.entries.push_back(entry_r0(rl, k)); break;
      case 1: s.entries.push_back(entry_r1(rl, k)); break;
      default: s.entries.push_back(entry_r2(rl, k)); break;
    }
  }
  return s;
}

SigmaVector sigma_row(unsigned i, const FieldParams& params) {
  if (i + 1 == params.r()) return sigma_r_minus_1(params);
  return sigma_closed_form(i, params);
}

TensorElement closed_tensor(const SigmaVector& s, const FieldParams& params) {
  const Integer& Pv = params.abs_p();
  const Integer scale = s.prefactor * Integer(params.q() + 1);
  TensorElement t;
  for (const Poly& e : s.entries) t.coords.push_back(-scale * e.eval(Pv));
  t.denom = s.tensor_denom.eval(Pv);
  return tensor_normalize(t);
}

}  // namespace cuspforge
