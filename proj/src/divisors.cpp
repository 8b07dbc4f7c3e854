#include "cuspforge/divisors.hpp"

#include <stdexcept>

#include "cuspforge/cusps.hpp"

namespace cuspforge {

namespace {

void require_r_at_least_2(unsigned r, const char* who) {
  if (r < 2) throw std::invalid_argument(std::string(who) + ": requires r >= 2");
}

// P^{r-1} - P^{r-2} - P^{r-2i+1} + P^{r-2i}: weight of C_i, 2 <= i < r/2.
Poly low_weight(unsigned r, unsigned i) {
  return Pk(r - 1) - Pk(r - 2) - Pk(r - 2 * i + 1) + Pk(r - 2 * i);
}

}  // namespace

void CBasisCombination::add_shifted(unsigned i, const Poly& w) {
  weights.at(i) += w;
  weights.at(i + 1) -= w * Pk(1);
}

std::string Generator::tag() const {
  switch (kind) {
    case GeneratorKind::D0:
      return "D_0";
    case GeneratorKind::C:
      return "C_" + std::to_string(index);
    case GeneratorKind::CShift:
      return "C_" + std::to_string(index) + " - P*C_" + std::to_string(index + 1);
    case GeneratorKind::Dr1:
      return "D_" + std::to_string(index);
  }
  return "?";
}

CuspidalDivisor build_C(unsigned i, const FieldParams& params) {
  const unsigned r = params.r();
  require_r_at_least_2(r, "build_C");
  if (i >= r) throw std::out_of_range("build_C: index must lie in [0, r-1]");
  CuspidalDivisor d = CuspidalDivisor::zero(r);
  d.coeffs[i] += 1;
  d.coeffs[r] -= closed_point_degree(i, params);
  return d;
}

CuspidalDivisor build_C_shift(unsigned i, const FieldParams& params) {
  if (i + 1 >= params.r()) throw std::out_of_range("build_C_shift: need i + 1 <= r - 1");
  CBasisCombination comb{std::vector<Poly>(params.r())};
  comb.add_shifted(i, 1);
  return expand(comb, params);
}

CBasisCombination D0_weights(const FieldParams& params) {
  const unsigned r = params.r();
  require_r_at_least_2(r, "build_D0");
  const Integer qm1(params.q() - 1);
  CBasisCombination comb{std::vector<Poly>(r)};
  comb.weights[0] = 1;
  // i = r/2 (even r) takes weight 1 from the first range.
  for (unsigned i = 1; i <= r / 2; ++i) comb.weights[i] = Poly(qm1);
  for (unsigned i = r / 2 + 1; i <= r - 1; ++i) {
    comb.weights[i] = Pk(2 * i - r);
    comb.weights[i] *= qm1;
  }
  return comb;
}

CBasisCombination Dr1_weights(unsigned r) {
  require_r_at_least_2(r, "build_Dr1");
  CBasisCombination comb{std::vector<Poly>(r)};
  if (r == 2) {
    comb.weights[1] = 1;
    return comb;
  }
  comb.weights[r - 1] += 1;
  comb.weights[1] -= Pk(r) - Pk(r - 2);
  switch (r % 4) {
    case 3: {
      const unsigned h = (r - 1) / 2;
      for (unsigned i = 2; i <= h; ++i) comb.weights[i] += low_weight(r, i);
      for (unsigned i = (r + 1) / 2; i + 1 < r; ++i)
        comb.add_shifted(i, -(Pk(i) - Pk(h) + Pk(i - h) - 1));
      break;
    }
    case 0: {
      const unsigned h = r / 2;
      for (unsigned i = 2; i < h; ++i) comb.weights[i] += low_weight(r, i);
      for (unsigned i = h; i + 1 < r; i += 1) {
        if (i % 2 == 0) {
          comb.add_shifted(i, Pk(i + 1) - Pk(i) * Poly(2) + Pk(h) - Pk(i - h + 1) + 1);
        } else if (i + 2 < r && i > h) {
          comb.add_shifted(i, -(Pk(i + 1) - Pk(h) + Pk(i - h + 1) - 1));
        }
      }
      break;
    }
    case 1: {
      const unsigned h = (r - 1) / 2;
      for (unsigned i = 2; i <= h; ++i) comb.weights[i] += low_weight(r, i);
      for (unsigned i = (r + 1) / 2; i + 1 < r; ++i) {
        if (i % 2 == 1) {
          comb.add_shifted(i, -(Pk(i + 1) * Poly(2) - Pk(i) - Pk(h) + Pk(i - h) - 1));
        } else if (i >= (r + 3) / 2 && i + 2 < r) {
          comb.add_shifted(i, -(Pk(i) - Pk(h) + Pk(i - h) - 1));
        }
      }
      break;
    }
    default: {  // r = 2 mod 4, r >= 6
      const unsigned h = r / 2;
      for (unsigned i = 2; i < h; ++i) comb.weights[i] += low_weight(r, i);
      for (unsigned i = h; i + 1 < r; ++i)
        comb.add_shifted(i, -(Pk(i + 1) - Pk(h) + Pk(i - h + 1) - 1));
      break;
    }
  }
  return comb;
}

CuspidalDivisor expand(const CBasisCombination& comb, const FieldParams& params) {
  const unsigned r = params.r();
  if (comb.weights.size() != r) throw std::invalid_argument("expand: weight count != r");
  const Integer& P = params.abs_p();
  CuspidalDivisor d = CuspidalDivisor::zero(r);
  for (unsigned i = 0; i < r; ++i) {
    const Integer w = comb.weights[i].eval(P);
    d.coeffs[i] += w;
    d.coeffs[r] -= w * closed_point_degree(i, params);
  }
  return d;
}

CuspidalDivisor build_D0(const FieldParams& params) {
  return expand(D0_weights(params), params);
}

CuspidalDivisor build_Dr1(const FieldParams& params) {
  return expand(Dr1_weights(params.r()), params);
}

Integer weighted_degree(const CuspidalDivisor& d, const FieldParams& params) {
  Integer s = 0;
  for (unsigned i = 0; i < d.coeffs.size(); ++i) s += d.coeffs[i] * closed_point_degree(i, params);
  return s;
}

std::vector<Generator> generator_family(unsigned r) {
  require_r_at_least_2(r, "generator_family");
  const unsigned a = (r - 1) / 2;
  const unsigned b = (r + 1) / 2;
  std::vector<Generator> out;
  out.push_back({GeneratorKind::D0, 0});
  for (unsigned i = 1; i <= a; ++i) out.push_back({GeneratorKind::C, i});
  for (unsigned i = b; i + 2 <= r; ++i) out.push_back({GeneratorKind::CShift, i});
  out.push_back({GeneratorKind::Dr1, r - 1});
  return out;
}

CuspidalDivisor build_generator(const Generator& g, const FieldParams& params) {
  switch (g.kind) {
    case GeneratorKind::D0:
      return build_D0(params);
    case GeneratorKind::C:
      return build_C(g.index, params);
    case GeneratorKind::CShift:
      return build_C_shift(g.index, params);
    case GeneratorKind::Dr1:
      return build_Dr1(params);
  }
  throw std::logic_error("build_generator: unknown kind");
}

Integer generator_order(const Generator& g, const FieldParams& params) {
  const auto s = derived_scalars(params);
  const Integer& P = params.abs_p();
  switch (g.kind) {
    case GeneratorKind::D0:
      return s.N;
    case GeneratorKind::C:
      return ipow(P, params.r() - g.index) * s.M;
    case GeneratorKind::CShift:
      return ipow(P, g.index) * s.M;
    case GeneratorKind::Dr1:
      return s.M;
  }
  throw std::logic_error("generator_order: unknown kind");
}

}  // namespace cuspforge
