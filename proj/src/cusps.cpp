#include "cuspforge/cusps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cuspforge {

std::string ResidueField::label() const {
  if (conductor_exp == 0) return "K";
  return conductor_exp == 1 ? "K(p)+" : "K(p^" + std::to_string(conductor_exp) + ")+";
}

Integer closed_point_degree(unsigned i, const FieldParams& params) {
  const unsigned r = params.r();
  if (i > r) throw std::out_of_range("closed point index exceeds r");
  const unsigned e = std::min(i, r - i);
  if (e == 0) return 1;
  const Integer& P = params.abs_p();
  return exact_quotient(ipow(P, e) - ipow(P, e - 1), Integer(params.q() - 1));
}

ResidueField residue_field(const ClosedPoint& point, const FieldParams& params) {
  ResidueField rf;
  rf.conductor_exp = point.d_exp;
  rf.degree = closed_point_degree(point.index, params);
  return rf;
}

std::vector<ClosedPoint> enumerate_closed_points(const FieldParams& params) {
  const unsigned r = params.r();
  std::vector<ClosedPoint> out;
  out.reserve(r + 1);
  for (unsigned i = 0; i <= r; ++i) {
    ClosedPoint pt;
    pt.index = i;
    pt.d_exp = std::min(i, r - i);
    pt.degree = closed_point_degree(i, params);
    pt.residue_field = residue_field(pt, params);
    if (i == 0) pt.name = "omega_0";
    if (i == r) pt.name = "omega_inf";
    out.push_back(std::move(pt));
  }
  return out;
}

CuspModel::CuspModel(const FieldParams& params)
    : params_(params),
      field_(params.characteristic(), params.extension()),
      prime_(least_monic_irreducible(field_, params.deg_p())) {}

FqPoly CuspModel::modulus_at_height(unsigned j) const {
  const unsigned r = params_.r();
  if (j > r) throw std::out_of_range("cusp height exceeds r");
  return fq_pow(field_, prime_, std::min(j, r - j));
}

void validate_cusp(const CuspRep& c, const CuspModel& model) {
  if (c.height_exp > model.params().r()) {
    throw std::invalid_argument("cusp height exponent exceeds r");
  }
  const FqPoly d = model.modulus_at_height(c.height_exp);
  const FqPoly a = fq_mod(model.field(), c.numerator_class, d);
  if (d.size() == 1) {
    if (fq_trim(c.numerator_class) != FqPoly{1}) {
      throw std::invalid_argument("numerator class must be 1 for a trivial modulus");
    }
    return;
  }
  if (fq_mod(model.field(), a, model.prime()).empty()) {
    throw std::invalid_argument("numerator class is not coprime to p");
  }
}

bool cusp_equiv(const CuspRep& c1, const CuspRep& c2, const CuspModel& model) {
  if (c1.height_exp != c2.height_exp) return false;
  const FqPoly d = model.modulus_at_height(c1.height_exp);
  if (d.size() == 1) return true;
  const FiniteField& f = model.field();
  const FqPoly a = fq_mod(f, c1.numerator_class, d);
  const FqPoly b = fq_mod(f, c2.numerator_class, d);
  for (unsigned k = 1; k < f.size(); ++k) {
    if (fq_scale(f, k, a) == b) return true;
  }
  return false;
}

std::size_t count_cusp_classes(unsigned j, const CuspModel& model) {
  const FqPoly d = model.modulus_at_height(j);
  if (d.size() == 1) return 1;
  const FiniteField& f = model.field();
  const auto n = static_cast<unsigned>(d.size() - 1);
  std::set<FqPoly> canon;
  for (const FqPoly& a : fq_all_below_degree(f, n)) {
    if (a.empty() || fq_mod(f, a, model.prime()).empty()) continue;
    FqPoly best = a;
    for (unsigned k = 2; k < f.size(); ++k) best = std::min(best, fq_scale(f, k, a));
    canon.insert(std::move(best));
  }
  return canon.size();
}

}  // namespace cuspforge
