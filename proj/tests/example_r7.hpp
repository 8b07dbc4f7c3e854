#pragma once

// Golden r = 7 data: the plain, H-reduced and h-reduced delta matrices,
// entry by entry. The last row of each is the golden sigma(6).

#include <vector>

#include "cuspforge/matrix.hpp"

namespace example_r7 {

using cuspforge::MatrixPoly;
using cuspforge::Pk;
using cuspforge::Poly;

inline std::vector<Poly> golden_sigma6() {
  const Poly P = Pk(1), P2 = Pk(2), P3 = Pk(3), P4 = Pk(4);
  return {
      P4 * Poly(4) - P3 * Poly(12) + P2 * Poly(5) - P + 4,
      P4 * Poly(4) - P3 * Poly(12) + P2 * Poly(4) + P + 3,
      P4 * Poly(4) - P3 * Poly(11) + P2 * Poly(4) + P * Poly(2) + 1,
      P * (P3 * Poly(4) - P2 * Poly(10) + P * Poly(3) + 3),
      P * (P3 * Poly(3) - P2 * Poly(8) + P * Poly(2) + 3),
      P * (P3 * Poly(2) - P2 * Poly(5) + P + 2),
      P * (P3 - P2 * Poly(2) + 2),
  };
}

inline MatrixPoly plain() {
  const Poly P = Pk(1), P2 = Pk(2);
  const Poly d2 = (P - 1) * (P - 1);
  auto q = [&](long a, long b, long c) { return P2 * Poly(a) + P * Poly(b) + Poly(c); };
  const Poly last = (P - 1) * P;
  return MatrixPoly::from_rows({
      {1, 1, 1, 1, 1, 1, 1},
      {q(6, -11, 5), q(6, -10, 5), q(5, -9, 4), q(4, -7, 3), q(3, -5, 2), q(2, -3, 1), last},
      {q(5, -9, 4), q(5, -9, 4), q(5, -8, 4), q(4, -7, 3), q(3, -5, 2), q(2, -3, 1), last},
      {q(4, -7, 3), q(4, -7, 3), q(4, -7, 3), q(4, -6, 3), q(3, -5, 2), q(2, -3, 1), last},
      {d2, d2, d2, d2, q(1, -1, 1), -P, 0},
      {d2, d2, d2, d2, d2, q(1, -1, 1), -P},
      golden_sigma6(),
  });
}

inline MatrixPoly H_reduced() {
  const Poly P = Pk(1), P2 = Pk(2), P3 = Pk(3), P4 = Pk(4);
  const Poly d2 = (P - 1) * (P - 1);
  const Poly w = (P - 1) * P3;
  return MatrixPoly::from_rows({
      {1, 1, 1, 1, 1, 1, 1},
      {d2, P2 - P + 1, -P, 0, 0, 0, 0},
      {0, -P, P2 + 1, -P, 0, 0, 0},
      {w, w, P * (P3 - P2 - 1), P4 - P3 + P2 + 1, P * (P3 - 1), 0, 0},
      {-w, -w, -w, -P4 + P3 - P, -P4 + P2 + 1, -P, 0},
      {0, 0, 0, 0, -P, P2 + 1, -P},
      golden_sigma6(),
  });
}

inline MatrixPoly h_reduced() {
  const Poly P = Pk(1), P2 = Pk(2), P3 = Pk(3), P4 = Pk(4);
  const Poly w = (P - 1) * P3;
  auto s = golden_sigma6();
  return MatrixPoly::from_rows({
      {0, 1, 1, 1, 1, 1, 1},
      {-P, P2 - P + 1, -P, 0, 0, 0, 0},
      {P, -P, P2 + 1, -P, 0, 0, 0},
      {0, w, P * (P3 - P2 - 1), P4 - P3 + P2 + 1, P * (P3 - 1), 0, 0},
      {0, -w, -w, -P4 + P3 - P, -P4 + P2 + 1, -P, 0},
      {0, 0, 0, 0, -P, P2 + 1, -P},
      {(P - 1) * (P - 1), s[1], s[2], s[3], s[4], s[5], s[6]},
  });
}

}  // namespace example_r7
