#include "cuspforge/serialize.hpp"

#include <stdexcept>

namespace cuspforge {

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const Integer& c : p.coeffs()) out.push_back(integer_to_json(c));
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
  std::vector<Integer> c;
  for (const Json& x : j) c.push_back(integer_from_json(x));
  return Poly::from_coeffs(std::move(c));
}

Json matrix_to_json(const DeltaMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.body.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.body.cols(); ++j) row.push_back(poly_to_json(m.body(i, j)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["variant"] = variant_name(m.variant);
  out["r"] = m.r;
  out["entries"] = std::move(entries);
  return out;
}

DeltaMatrix matrix_from_json(const Json& j) {
  DeltaMatrix m;
  m.variant = parse_variant(j.at("variant").get<std::string>());
  m.r = j.at("r").get<unsigned>();
  const Json& e = j.at("entries");
  std::vector<std::vector<Poly>> rows;
  for (const Json& row : e) {
    std::vector<Poly> out;
    for (const Json& x : row) out.push_back(poly_from_json(x));
    rows.push_back(std::move(out));
  }
  m.body = MatrixPoly::from_rows(rows);
  return m;
}

Json closed_points_to_json(const std::vector<ClosedPoint>& pts) {
  Json out = Json::array();
  for (const ClosedPoint& p : pts) {
    Json o;
    o["index"] = p.index;
    o["d_exp"] = p.d_exp;
    o["degree"] = integer_to_json(p.degree);
    o["residue_field"] = p.residue_field.label();
    if (!p.name.empty()) o["name"] = p.name;
    out.push_back(std::move(o));
  }
  return out;
}

Json certificate_to_json(const DetCertificate& c) {
  Json o;
  o["r"] = c.r;
  o["det"] = poly_to_json(c.det);
  o["det_text"] = c.det.to_string();
  o["sign"] = c.sign;
  o["f"] = poly_to_json(c.f);
  o["method"] = c.method;
  o["engines_agree"] = c.engines_agree;
  if (!c.hessenberg_minors.empty()) {
    Json minors = Json::array();
    for (const Poly& m : c.hessenberg_minors) minors.push_back(poly_to_json(m));
    o["corner_minor_leading_minors"] = std::move(minors);
    o["corner_minor_minors_unit_mod_P"] = c.minors_unit_mod_P;
  }
  if (c.abs_p_is_two) o["abs_p_is_two"] = true;
  return o;
}

Json claim_report_to_json(const ClaimReport& rep) {
  Json o;
  o["r"] = rep.r;
  o["ok"] = rep.ok();
  Json mm = Json::array();
  for (const Mismatch& m : rep.mismatches) {
    Json x;
    x["row"] = m.row;
    x["col"] = m.col;
    x["expected"] = poly_to_json(m.expected);
    x["actual"] = poly_to_json(m.actual);
    mm.push_back(std::move(x));
  }
  o["mismatches"] = std::move(mm);
  o["corner"] = poly_to_json(rep.corner);
  o["corner_residue_mod_P"] = integer_to_json(rep.corner_residue);
  return o;
}

Json torsion_report_to_json(const TorsionReport& rep) {
  Json o;
  o["q"] = rep.q;
  o["deg_p"] = rep.deg_p;
  o["r"] = rep.r;
  o["abs_p"] = integer_to_json(rep.abs_p);
  o["M"] = integer_to_json(rep.M);
  o["N"] = integer_to_json(rep.N);
  Json g = Json::array();
  for (const CyclicFactor& f : rep.cuspidal_group) {
    Json x;
    x["generator"] = f.generator;
    x["order"] = integer_to_json(f.order);
    x["order_formula"] = f.order_formula;
    g.push_back(std::move(x));
  }
  o["cuspidal_group"] = std::move(g);
  if (rep.has_certificate) o["certificate"] = certificate_to_json(rep.certificate);
  o["unconditional"] = rep.unconditional;
  Json t;
  t["structure"] = rep.torsion_structure;
  t["conditional"] = rep.structure_is_conditional;
  t["hypothesis"] = rep.hypothesis;
  o["torsion"] = std::move(t);
  o["notes"] = rep.notes;
  return o;
}

}  // namespace cuspforge
