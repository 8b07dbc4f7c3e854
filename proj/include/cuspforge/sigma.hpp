#pragma once

#include <vector>

#include "cuspforge/delta_quotient.hpp"
#include "cuspforge/divisors.hpp"
#include "cuspforge/field_params.hpp"
#include "cuspforge/poly.hpp"

namespace cuspforge {

/// Exponent vector of p in the image of one generator, as polynomials in P,
/// together with the tensor factor it is paired with: the image is
///   -prefactor (q + 1) sigma / tensor_denom   in  Lambda (x) Q/Z.
struct SigmaVector {
  std::vector<Poly> entries;
  Generator generator;
  Poly tensor_denom;
  Integer prefactor = 1;  // q - 1 for D_0, else 1
};

/// Closed forms for D_0 (i = 0), C_i (1 <= i <= floor((r-1)/2)) and
/// C_i - P C_{i+1} (floor((r+1)/2) <= i <= r-2). Throws std::out_of_range
/// for any other i.
SigmaVector sigma_closed_form(unsigned i, const FieldParams& params);

/// sigma(r-1) for D_{r-1}: explicit tables for r <= 6, four families by
/// r mod 4 for r >= 7.
SigmaVector sigma_r_minus_1(const FieldParams& params);

/// Row i of the delta matrix as a SigmaVector (i = 0..r-1).
SigmaVector sigma_row(unsigned i, const FieldParams& params);

/// Tensor element of a closed form, evaluated at the params' |p|.
TensorElement closed_tensor(const SigmaVector& s, const FieldParams& params);

}  // namespace cuspforge
