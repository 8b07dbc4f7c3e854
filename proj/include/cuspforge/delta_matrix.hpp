#pragma once

#include <string>
#include <vector>

#include "cuspforge/field_params.hpp"
#include "cuspforge/matrix.hpp"

namespace cuspforge {

enum class DeltaVariant { Plain, Bold, HReduced, hReduced };

std::string variant_name(DeltaVariant v);
/// Inverse of variant_name; throws std::invalid_argument.
DeltaVariant parse_variant(const std::string& s);

/// r x r delta matrix with its reduction history. For reduced variants
/// body = left * source * right, where source is the plain matrix and
/// left/right are unimodular with determinant 1.
struct DeltaMatrix {
  DeltaVariant variant = DeltaVariant::Plain;
  unsigned r = 0;
  MatrixPoly body;
  std::vector<std::string> provenance;
  MatrixPoly left;
  MatrixPoly right;
};

/// Plain: rows sigma(0), sigma(1..a) (C_i), sigma(b..r-2) (C_i - P C_{i+1}),
/// sigma(r-1). Bold: each plain row times -s_i with s_0 = P^r (q - 1),
/// s_i = P^i for 1 <= i <= a, s_i = 1 for b <= i <= r-2, s_{r-1} = P^r.
/// Reduced variants apply step1_reduce (and step2_reduce) and need r >= 7.
DeltaMatrix build_M_delta(const FieldParams& params, DeltaVariant variant);

/// Row scale factors s_i of the bold matrix (without the overall sign).
std::vector<Poly> bold_row_scales(const FieldParams& params);

/// Row operations producing the H-reduced matrix; requires r >= 7.
DeltaMatrix step1_reduce(const DeltaMatrix& plain);

/// Column 0 <- column 0 - column 1 on the H-reduced matrix.
DeltaMatrix step2_reduce(const DeltaMatrix& reduced);

/// Left transform of step 1 as a matrix (row i of H = sum_j T(i,j) M[j]).
MatrixPoly step1_transform(unsigned r);

struct Mismatch {
  std::size_t row;
  std::size_t col;
  Poly expected;
  Poly actual;
};

struct ClaimReport {
  unsigned r = 0;
  std::vector<Mismatch> mismatches;
  /// sigma(r-1)_0 - sigma(r-1)_1 and its residue mod P (expected +-1).
  Poly corner;
  Integer corner_residue;
  bool ok() const { return mismatches.empty() && (corner_residue == 1 || corner_residue == -1); }
};

/// Exponent pair (e_lo, e_hi) in alpha = P^e_hi - P^e_lo and in the
/// entries P(P^e_lo - 1), -P^e_hi + P^2 + 1 of the two coupling rows.
///   Quoted:  e_lo = floor((r-1)/2), e_hi = floor((r+1)/2)
///   Ceiling: e_lo = ceil((r-1)/2),  e_hi = ceil((r+1)/2)
/// They coincide for odd r. For even r the reduced matrix has the Ceiling
/// shape.
enum class ClaimForm { Quoted, Ceiling };

/// Expected shape of the H-reduced matrix, with the last row copied from
/// the given sigma(r-1).
MatrixPoly claim1_template(unsigned r, const std::vector<Poly>& sigma_last,
                           ClaimForm form = ClaimForm::Quoted);
MatrixPoly claim2_template(unsigned r, const std::vector<Poly>& sigma_last,
                           ClaimForm form = ClaimForm::Quoted);

/// Entrywise comparison against the templates. The last row of the template
/// comes from the closed-form sigma(r-1); requires r >= 7.
ClaimReport verify_claim1(const DeltaMatrix& H, const FieldParams& params,
                          ClaimForm form = ClaimForm::Quoted);
ClaimReport verify_claim2(const DeltaMatrix& h, const FieldParams& params,
                          ClaimForm form = ClaimForm::Quoted);

/// sigma(r-1)_0 - sigma(r-1)_1 for any r >= 2, with its residue mod P.
std::pair<Poly, Integer> sigma_corner(const FieldParams& params);

}  // namespace cuspforge
