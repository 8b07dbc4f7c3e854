#pragma once

#include <string>
#include <vector>

#include "cuspforge/field_params.hpp"
#include "cuspforge/poly.hpp"

namespace cuspforge {

/// Integer combination of the closed points P_0..P_r (P_r plays [infinity]).
struct CuspidalDivisor {
  std::vector<Integer> coeffs;

  static CuspidalDivisor zero(unsigned r) { return {std::vector<Integer>(r + 1, Integer(0))}; }
  friend bool operator==(const CuspidalDivisor&, const CuspidalDivisor&) = default;
};

/// Combination sum_i w_i C_i over the basis C_0..C_{r-1}, with weights in
/// Z[P]. Weights may carry concrete q-dependent constants (D_0 does).
struct CBasisCombination {
  std::vector<Poly> weights;  // length r

  /// Add w * (C_i - P C_{i+1}).
  void add_shifted(unsigned i, const Poly& w);
};

/// Generator kinds, in the row order of the delta matrix.
enum class GeneratorKind { D0, C, CShift, Dr1 };

struct Generator {
  GeneratorKind kind;
  unsigned index;  // i of C_i or of C_i - P C_{i+1}; r-1 for D_{r-1}; 0 for D_0
  std::string tag() const;
};

CuspidalDivisor build_C(unsigned i, const FieldParams& params);
/// C_i - |p| C_{i+1}.
CuspidalDivisor build_C_shift(unsigned i, const FieldParams& params);
CuspidalDivisor build_D0(const FieldParams& params);
CuspidalDivisor build_Dr1(const FieldParams& params);

CBasisCombination D0_weights(const FieldParams& params);
/// Weights of D_{r-1}; independent of q.
CBasisCombination Dr1_weights(unsigned r);

/// Closed-point coordinates of a C-basis combination at the given params.
CuspidalDivisor expand(const CBasisCombination& comb, const FieldParams& params);

Integer weighted_degree(const CuspidalDivisor& d, const FieldParams& params);

/// D_0, C_1..C_a, (C_i - P C_{i+1}) for b <= i <= r-2, D_{r-1}; with
/// a = floor((r-1)/2), b = floor((r+1)/2). Requires r >= 2.
std::vector<Generator> generator_family(unsigned r);

CuspidalDivisor build_generator(const Generator& g, const FieldParams& params);

/// Order of the class of the generator in the cuspidal divisor class group.
Integer generator_order(const Generator& g, const FieldParams& params);

}  // namespace cuspforge
