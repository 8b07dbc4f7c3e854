#pragma once

#include <string>
#include <vector>

#include "cuspforge/delta_matrix.hpp"
#include "cuspforge/field_params.hpp"

namespace cuspforge {

/// det(M_delta^h) = sign + P f(P) with sign = +-1.
struct DetCertificate {
  unsigned r = 0;
  Poly det;
  Poly f;
  int sign = 0;
  /// "bareiss(plain)" for r < 7; "bareiss(h) == laplace(col 0, hessenberg)" otherwise.
  std::string method;
  bool engines_agree = true;
  /// Leading principal minors of the (r-1, 0)-minor of M^h after moving its
  /// first row to the end (r >= 7 only).
  std::vector<Poly> hessenberg_minors;
  bool minors_unit_mod_P = true;
  /// Nonvanishing of det mod P needs |p| >= 3; |p| = 2 is accepted since
  /// +-1 + 2 f(2) is odd, and flagged here.
  bool abs_p_is_two = false;
};

/// Throws InternalError if the two engines disagree, VerificationFailure if
/// det is not +-1 mod P.
DetCertificate det_certify(const FieldParams& params);

/// (r-1, 0)-minor of M^h with its first row moved to the end; lower
/// Hessenberg. The permutation contributes (-1)^(r-2).
MatrixPoly permuted_corner_minor(const MatrixPoly& h);

/// Laplace expansion of det(M^h) along column 0, using hessenberg_det for
/// the (r-1, 0)-minor and bareiss_det for the other nonzero entries.
Poly laplace_hessenberg_det(const MatrixPoly& h);

struct CyclicFactor {
  std::string generator;
  Integer order;
  std::string order_formula;
};

struct TorsionReport {
  unsigned long q = 0;
  unsigned deg_p = 0;
  unsigned r = 0;
  Integer abs_p;
  Integer M;
  Integer N;
  std::vector<CyclicFactor> cuspidal_group;
  bool has_certificate = false;
  DetCertificate certificate;
  /// Unconditional statement about l-primary parts.
  std::string unconditional;
  /// Structure of the rational torsion of the generalised Jacobian, valid
  /// under the hypothesis below.
  std::string torsion_structure;  // e.g. "(Z/2Z)^2"
  std::string hypothesis;
  bool structure_is_conditional = true;
  std::vector<std::string> notes;
};

TorsionReport torsion_report(const FieldParams& params);

}  // namespace cuspforge
