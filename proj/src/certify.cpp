#include "cuspforge/certify.hpp"

#include "cuspforge/determinant.hpp"
#include "cuspforge/divisors.hpp"
#include "cuspforge/errors.hpp"

namespace cuspforge {

namespace {

Poly shift_down(const Poly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  return Poly::from_coeffs(std::vector<Integer>(c.begin() + 1, c.end()));
}

int as_unit(const Integer& v) {
  if (v == 1) return 1;
  if (v == -1) return -1;
  return 0;
}

}  // namespace

MatrixPoly permuted_corner_minor(const MatrixPoly& h) {
  const std::size_t n = h.rows();
  MatrixPoly m = h.minor(n - 1, 0);
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) m.swap_rows(i, i + 1);
  return m;
}

Poly laplace_hessenberg_det(const MatrixPoly& h) {
  const std::size_t n = h.rows();
  Poly det;
  for (std::size_t i = 0; i < n; ++i) {
    if (h(i, 0).is_zero()) continue;
    Poly minor_det;
    if (i + 1 == n) {
      minor_det = hessenberg_det(permuted_corner_minor(h));
      if (n % 2 == 1) minor_det = -minor_det;  // (-1)^(n-2) from the row cycle
    } else {
      minor_det = bareiss_det(h.minor(i, 0));
    }
    Poly term = h(i, 0) * minor_det;
    if (i % 2 == 1) det -= term; else det += term;
  }
  return det;
}

DetCertificate det_certify(const FieldParams& params) {
  const unsigned r = params.r();
  DetCertificate c;
  c.r = r;
  c.abs_p_is_two = params.abs_p() == 2;
  const DeltaMatrix plain = build_M_delta(params, DeltaVariant::Plain);
  if (r < 7) {
    c.det = bareiss_det(plain.body);
    c.method = "bareiss(plain)";
  } else {
    const DeltaMatrix h = step2_reduce(step1_reduce(plain));
    c.det = bareiss_det(h.body);
    const Poly other = laplace_hessenberg_det(h.body);
    c.method = "bareiss(h) == laplace(col 0, hessenberg)";
    c.engines_agree = other == c.det;
    if (!c.engines_agree) {
      throw InternalError("det_certify: Bareiss gives " + c.det.to_string() +
                          " but the Hessenberg expansion gives " + other.to_string());
    }
    auto minors = hessenberg_minors(permuted_corner_minor(h.body));
    c.hessenberg_minors.assign(minors.begin() + 1, minors.end());
    for (const Poly& m : c.hessenberg_minors) {
      if (m.constant_term() != 1) c.minors_unit_mod_P = false;
    }
  }
  c.sign = as_unit(c.det.constant_term());
  if (c.sign == 0) {
    throw VerificationFailure("det_certify: det = " + c.det.to_string() +
                              " is not +-1 mod P (r = " + std::to_string(r) + ")");
  }
  c.f = shift_down(c.det - Poly(c.sign));
  return c;
}

namespace {

std::string cyclic_power(const Integer& n, unsigned e) {
  if (n == 1 || e == 0) return "0";
  const std::string z = "Z/" + n.get_str() + "Z";
  return e == 1 ? z : "(" + z + ")^" + std::to_string(e);
}

std::string order_formula(const Generator& g, unsigned r) {
  switch (g.kind) {
    case GeneratorKind::D0: return "N";
    case GeneratorKind::C: return "P^" + std::to_string(r - g.index) + " M";
    case GeneratorKind::CShift: return "P^" + std::to_string(g.index) + " M";
    case GeneratorKind::Dr1: return "M";
  }
  return "?";
}

}  // namespace

TorsionReport torsion_report(const FieldParams& params) {
  TorsionReport rep;
  rep.q = params.q();
  rep.deg_p = params.deg_p();
  rep.r = params.r();
  rep.abs_p = params.abs_p();
  const auto s = derived_scalars(params);
  rep.M = s.M;
  rep.N = s.N;
  if (params.r() == 1) {
    rep.cuspidal_group.push_back({"omega_0 - omega_inf", s.N, "N"});
  } else {
    for (const Generator& g : generator_family(params.r())) {
      rep.cuspidal_group.push_back({g.tag(), generator_order(g, params), order_formula(g, params.r())});
    }
    rep.certificate = det_certify(params);
    rep.has_certificate = true;
  }
  const Integer qm1(params.q() - 1);
  rep.unconditional = "for every odd prime l not dividing q(q^2 - 1) = " +
                      Integer(Integer(params.q()) * (Integer(params.q()) * params.q() - 1)).get_str() +
                      ", the l-primary part of J_0(p^r)_m(K) is trivial";
  rep.torsion_structure = cyclic_power(qm1, params.r());
  rep.hypothesis =
      "rational torsion of J_0(p^r) is cuspidal: C(p^r) = C_{p^r}(K) = J_0(p^r)(K)_tor";
  rep.structure_is_conditional = true;
  if (params.r() == 1) rep.notes.push_back("r = 1: no delta matrix; the cuspidal group is cyclic");
  if (rep.has_certificate && rep.certificate.abs_p_is_two) {
    rep.notes.push_back("|p| = 2: nonvanishing follows since +-1 + 2 f(2) is odd");
  }
  return rep;
}

}  // namespace cuspforge
