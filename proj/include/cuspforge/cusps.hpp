#pragma once

#include <string>
#include <vector>

#include "cuspforge/field_params.hpp"
#include "cuspforge/finite_field.hpp"

namespace cuspforge {

/// Residue-field descriptor of a cuspidal closed point: the base field K
/// (conductor_exp = 0) or the maximal real subfield of K(p^e).
struct ResidueField {
  unsigned conductor_exp = 0;
  Integer degree = 1;  // [K(p^e)^+ : K]
  std::string label() const;
};

struct ClosedPoint {
  unsigned index = 0;
  unsigned d_exp = 0;  // min(index, r - index)
  Integer degree = 1;
  ResidueField residue_field;
  /// "omega_0" for index 0, "omega_inf" for index r, empty otherwise.
  std::string name;
};

/// Degree of the closed point at height p^i: 1 when min(i, r-i) = 0,
/// else (|p|^e - |p|^{e-1}) / (q - 1).
Integer closed_point_degree(unsigned i, const FieldParams& params);

std::vector<ClosedPoint> enumerate_closed_points(const FieldParams& params);

ResidueField residue_field(const ClosedPoint& point, const FieldParams& params);

/// Concrete model of p and of the residues modulo p^e, for exhaustive checks.
class CuspModel {
 public:
  explicit CuspModel(const FieldParams& params);

  const FieldParams& params() const { return params_; }
  const FiniteField& field() const { return field_; }
  const FqPoly& prime() const { return prime_; }
  /// p^min(j, r - j).
  FqPoly modulus_at_height(unsigned j) const;

 private:
  FieldParams params_;
  FiniteField field_;
  FqPoly prime_;
};

/// Cusp representative [a; p^j] with a reduced modulo p^min(j, r - j).
struct CuspRep {
  unsigned height_exp = 0;
  FqPoly numerator_class;
};

/// Throws std::invalid_argument when the representative violates its
/// invariants (height out of range, a not coprime to p, a != 1 when the
/// modulus is trivial).
void validate_cusp(const CuspRep& c, const CuspModel& model);

/// Same height and k a = a' modulo p^min(j, r - j) for some k in F_q^*.
bool cusp_equiv(const CuspRep& c1, const CuspRep& c2, const CuspModel& model);

/// Number of equivalence classes of representatives at height p^j, by
/// exhaustive enumeration of residues.
std::size_t count_cusp_classes(unsigned j, const CuspModel& model);

}  // namespace cuspforge
