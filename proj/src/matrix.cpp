#include "cuspforge/matrix.hpp"

namespace cuspforge {

MatrixZ evaluate(const MatrixPoly& m, const Integer& x) {
  MatrixZ out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(x);
  return out;
}

MatrixPoly lift(const MatrixZ& m) {
  MatrixPoly out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
  return out;
}

}  // namespace cuspforge
