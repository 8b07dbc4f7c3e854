#include <doctest.h>

#include "cuspforge/delta_quotient.hpp"
#include "cuspforge/divisors.hpp"

using namespace cuspforge;

namespace {
const std::vector<FieldParams> kGrid = [] {
  std::vector<FieldParams> g;
  for (unsigned long q : {2ul, 3ul, 4ul, 5ul})
    for (unsigned d = 1; d <= 2; ++d)
      for (unsigned r = 2; r <= 12; ++r) g.emplace_back(q, d, r);
  return g;
}();
}  // namespace

TEST_CASE("Upsilon: r = 1 and corner entries") {
  const FieldParams p(3, 2, 1);
  const MatrixZ u = build_upsilon(p);
  CHECK(u == MatrixZ::from_rows({{2 * 9, -2}, {-2, 2 * 9}}));
  for (unsigned r = 1; r <= 50; ++r) {
    const FieldParams pr(5, 1, r);
    const MatrixZ m = build_upsilon(pr);
    CHECK(m(0, 0) == 4 * 5);
    CHECK(m(r, r) == 4 * 5);
    CHECK(m(1, 0) == -4);
    CHECK(m(r - 1, r) == -4);
    for (unsigned i = 0; i <= r; ++i)
      for (unsigned j = 0; j <= r; ++j)
        if (i + 2 <= j || j + 2 <= i) CHECK(m(i, j) == 0);
  }
}

TEST_CASE("g_map examples") {
  const FieldParams p(3, 1, 5);
  const auto z = g_map(CuspidalDivisor::zero(5), p);
  for (const Rat& e : z.r_exps) CHECK(e == Rat(0));

  for (const FieldParams& q : kGrid) {
    const unsigned r = q.r();
    const Integer& P = q.abs_p();
    const auto d0 = g_map(build_D0(q), q);
    for (unsigned j = 0; j + 2 <= r; ++j) CHECK(d0.r_exps[j] == Rat(0));
    CHECK(d0.r_exps[r - 1] == Rat(Integer(1), P - 1));
    CHECK(d0.r_exps[r] == Rat(Integer(-1), P - 1));

    for (unsigned i = 1; i <= (r - 1) / 2; ++i) {
      const auto g = g_map(build_C(i, q), q);
      const Integer den = ipow(P, r - i) * (P * P - 1) * Integer(q.q() - 1);
      std::vector<Integer> num(r + 1, Integer(0));
      num[i - 1] += -P;
      num[i] += P * P + 1;
      num[i + 1] += -P;
      num[r - 1] += P - 1;
      num[r] += P - P * P;
      for (unsigned j = 0; j <= r; ++j) CHECK(g.r_exps[j] == Rat(num[j], den));
    }
  }
  CHECK_THROWS_AS(g_map(CuspidalDivisor{{Integer(1), Integer(0), Integer(0)}}, FieldParams(3, 1, 2)),
                  std::invalid_argument);
}

TEST_CASE("Delta-quotient exponents sum to zero") {
  for (const FieldParams& q : kGrid)
    for (const auto& g : generator_family(q.r())) {
      Rat s;
      for (const Rat& e : g_map(build_generator(g, q), q).r_exps) s += e;
      CHECK(s == Rat(0));
    }
}

TEST_CASE("integer_exponents examples") {
  for (unsigned long q : {2ul, 3ul, 5ul}) {
    const FieldParams p(q, 2, 6);
    const auto E = integer_exponents(build_D0(p), derived_scalars(p).N, p);
    std::vector<Integer> want(7, Integer(0));
    want[5] = q - 1;
    want[6] = -Integer(q - 1);
    CHECK(E == want);
  }
  const FieldParams p7(3, 1, 7);
  const Integer P = 3;
  const auto E = integer_exponents(build_C(2, p7), ipow(P, 5) * derived_scalars(p7).M, p7);
  CHECK(E == std::vector<Integer>{0, -P, P * P + 1, -P, 0, 0, P - 1, P - P * P});
  CHECK(integer_exponents(CuspidalDivisor::zero(7), 1, p7) == std::vector<Integer>(8, Integer(0)));
  // One order too small for C_2.
  CHECK_THROWS_AS(integer_exponents(build_C(2, p7), ipow(P, 4), p7), std::domain_error);
}

TEST_CASE("sigma_oracle examples") {
  CHECK(sigma_oracle(std::vector<Integer>(5, Integer(0))) == std::vector<Integer>(4, Integer(0)));
  // Symbolic: E(C_2) at r = 7, k = 0.
  const Poly P = Pk(1);
  const std::vector<Poly> E = {0, -P, Pk(2) + 1, -P, 0, 0, P - 1, P - Pk(2)};
  CHECK(sigma_oracle(E)[0] == Pk(2) * Poly(5) - P * Poly(9) + 4);
  for (unsigned long q : {2ul, 3ul, 4ul})
    for (unsigned r = 2; r <= 8; ++r) {
      const FieldParams p(q, 2, r);
      const auto s = sigma_oracle(integer_exponents(build_D0(p), derived_scalars(p).N, p));
      for (const Integer& x : s) CHECK(x == q - 1);
    }
}

TEST_CASE("tensor_normalize") {
  TensorElement z{{0, 0, 0}, 17};
  CHECK(tensor_normalize(z) == TensorElement{{0, 0, 0}, 1});
  CHECK(tensor_normalize(TensorElement{{34, -17, 51}, 17}) == TensorElement{{0, 0, 0}, 1});
  CHECK(tensor_normalize(TensorElement{{-1, 6}, 4}) == TensorElement{{3, 2}, 4});
  CHECK(tensor_normalize(TensorElement{{2, 6}, 4}) == TensorElement{{1, 1}, 2});
  CHECK_THROWS_AS(tensor_normalize(TensorElement{{1}, 0}), std::invalid_argument);

  // Two presentations of the image of D_0 for odd deg p agree.
  for (unsigned long q : {2ul, 3ul, 4ul, 5ul})
    for (unsigned d : {1u, 3u}) {
      const FieldParams p(q, d, 4);
      const Integer P = p.abs_p();
      TensorElement a{std::vector<Integer>(4, Integer(q * q - 1)), P - 1};
      const auto s = sigma_oracle(integer_exponents(build_D0(p), derived_scalars(p).N, p));
      TensorElement b{s, Integer(q - 1) * derived_scalars(p).N};
      CHECK(tensor_normalize(a) == tensor_normalize(b));
    }
}
