#include "cuspforge/delta_matrix.hpp"

#include <stdexcept>
#include <tuple>

#include "cuspforge/sigma.hpp"

namespace cuspforge {

namespace {

const Poly P = Pk(1);

unsigned lo_half(unsigned r) { return (r - 1) / 2; }
unsigned hi_half(unsigned r) { return (r + 1) / 2; }

void require_r7(unsigned r, const char* who) {
  if (r < 7) {
    throw std::invalid_argument(std::string(who) +
                                ": defined for r >= 7; use det_certify for the direct small-r path");
  }
}

}  // namespace

std::string variant_name(DeltaVariant v) {
  switch (v) {
    case DeltaVariant::Plain: return "plain";
    case DeltaVariant::Bold: return "bold";
    case DeltaVariant::HReduced: return "H-reduced";
    case DeltaVariant::hReduced: return "h-reduced";
  }
  return "?";
}

DeltaVariant parse_variant(const std::string& s) {
  for (auto v : {DeltaVariant::Plain, DeltaVariant::Bold, DeltaVariant::HReduced,
                 DeltaVariant::hReduced}) {
    if (variant_name(v) == s) return v;
  }
  throw std::invalid_argument("unknown matrix variant '" + s + "'");
}

std::vector<Poly> bold_row_scales(const FieldParams& params) {
  const unsigned r = params.r();
  std::vector<Poly> s(r);
  for (unsigned i = 0; i < r; ++i) {
    if (i == 0) {
      s[i] = Pk(r) * Poly(Integer(params.q() - 1));
    } else if (i <= lo_half(r)) {
      s[i] = Pk(i);
    } else {
      s[i] = 1;
    }
  }
  // Row r-1 falls in both the "b..r-1" and "r-1" cases; the later one wins.
  s[r - 1] = Pk(r);
  return s;
}

DeltaMatrix build_M_delta(const FieldParams& params, DeltaVariant variant) {
  const unsigned r = params.r();
  if (r < 2) throw std::invalid_argument("build_M_delta: requires r >= 2");
  if (variant == DeltaVariant::HReduced || variant == DeltaVariant::hReduced) {
    if (r < 7) throw std::invalid_argument("build_M_delta: reduced variants require r >= 7");
    DeltaMatrix H = step1_reduce(build_M_delta(params, DeltaVariant::Plain));
    return variant == DeltaVariant::HReduced ? H : step2_reduce(H);
  }
  DeltaMatrix m;
  m.variant = variant;
  m.r = r;
  m.body = MatrixPoly(r, r);
  for (unsigned i = 0; i < r; ++i) m.body.set_row(i, sigma_row(i, params).entries);
  m.provenance.push_back("rows: sigma(0), sigma(i) for C_i (1 <= i <= " + std::to_string(lo_half(r)) +
                         "), sigma(i) for C_i - P C_{i+1} (" + std::to_string(hi_half(r)) +
                         " <= i <= " + std::to_string(r >= 2 ? r - 2 : 0) + "), sigma(r-1)");
  m.left = MatrixPoly::identity(r);
  m.right = MatrixPoly::identity(r);
  if (variant == DeltaVariant::Bold) {
    const auto s = bold_row_scales(params);
    for (unsigned i = 0; i < r; ++i) {
      for (unsigned j = 0; j < r; ++j) m.body(i, j) = -(s[i] * m.body(i, j));
      m.left(i, i) = -s[i];
    }
    m.provenance.push_back("row i scaled by -s_i; row r-1 uses s = P^r");
  }
  return m;
}

MatrixPoly step1_transform(unsigned r) {
  require_r7(r, "step1_reduce");
  const unsigned a = lo_half(r);
  const unsigned b = hi_half(r);
  MatrixPoly T(r, r);
  T(0, 0) = 1;
  T(1, 1) = 1;
  T(1, 2) = -1;
  for (unsigned i = 2; i < a; ++i) {
    T(i, i) = 2;
    T(i, i - 1) = -1;
    T(i, i + 1) = -1;
  }
  // S = M[a] + sum_{k=1}^{floor((r-2)/2)} (P^k - 1) M[r-1-k]; the sum covers
  // every row b..r-2.
  std::vector<Poly> S(r);
  S[a] = 1;
  for (unsigned k = 1; k <= (r - 2) / 2; ++k) S[r - 1 - k] += Pk(k) - 1;
  for (unsigned j = 0; j < r; ++j) {
    T(a, j) = S[j];
    T(b, j) = -S[j];
  }
  T(a, a) += 1;
  T(a, a - 1) -= 1;
  T(b, b) += 1;
  for (unsigned i = b + 1; i + 2 <= r; ++i) {
    T(i, i) = 1;
    T(i, i - 1) = -1;
  }
  T(r - 1, r - 1) = 1;
  return T;
}

DeltaMatrix step1_reduce(const DeltaMatrix& plain) {
  if (plain.variant != DeltaVariant::Plain) {
    throw std::invalid_argument("step1_reduce: input must be the plain matrix");
  }
  const unsigned r = plain.r;
  const MatrixPoly T = step1_transform(r);
  const unsigned a = lo_half(r);
  const unsigned b = hi_half(r);
  DeltaMatrix h;
  h.variant = DeltaVariant::HReduced;
  h.r = r;
  h.body = T * plain.body;
  h.left = T;
  h.right = MatrixPoly::identity(r);
  h.provenance = plain.provenance;
  h.provenance.push_back("R[1] <- M[1] - M[2]");
  if (a > 2) h.provenance.push_back("R[i] <- 2M[i] - M[i-1] - M[i+1] for 1 < i < " + std::to_string(a));
  h.provenance.push_back("S = M[" + std::to_string(a) + "] + sum_{k=1}^{" + std::to_string((r - 2) / 2) +
                         "} (P^k - 1) M[" + std::to_string(r - 1) + " - k]");
  h.provenance.push_back("R[" + std::to_string(a) + "] <- M[" + std::to_string(a) + "] + S - M[" +
                         std::to_string(a - 1) + "]");
  h.provenance.push_back("R[" + std::to_string(b) + "] <- M[" + std::to_string(b) + "] - S");
  h.provenance.push_back("R[i] <- M[i] - M[i-1] for " + std::to_string(b) + " < i <= " +
                         std::to_string(r - 2) + "; row " + std::to_string(r - 1) + " kept");
  return h;
}

DeltaMatrix step2_reduce(const DeltaMatrix& reduced) {
  if (reduced.variant != DeltaVariant::HReduced) {
    throw std::invalid_argument("step2_reduce: input must be H-reduced");
  }
  DeltaMatrix h = reduced;
  h.variant = DeltaVariant::hReduced;
  h.body.add_col_multiple(0, 1, Poly(-1));
  h.right.add_col_multiple(0, 1, Poly(-1));
  h.provenance.push_back("C[0] <- C[0] - C[1]");
  return h;
}

MatrixPoly claim1_template(unsigned r, const std::vector<Poly>& sigma_last, ClaimForm form) {
  require_r7(r, "claim1_template");
  const unsigned a = lo_half(r);
  const unsigned b = hi_half(r);
  const unsigned e_lo = form == ClaimForm::Quoted ? a : r - 1 - a;
  const unsigned e_hi = form == ClaimForm::Quoted ? b : r - a;
  const Poly P2p1 = Pk(2) + 1;
  const Poly alpha = Pk(e_hi) - Pk(e_lo);
  const Poly beta = alpha + Pk(2) - P * Poly(2) + 1;
  MatrixPoly t(r, r);
  for (unsigned j = 0; j < r; ++j) t(0, j) = 1;
  t(1, 0) = (P - 1) * (P - 1);
  t(1, 1) = Pk(2) - P + 1;
  t(1, 2) = -P;
  auto tri = [&](unsigned i) {
    t(i, i - 1) = -P;
    t(i, i) = P2p1;
    t(i, i + 1) = -P;
  };
  for (unsigned i = 2; i < a; ++i) tri(i);
  for (unsigned j = 0; j + 1 < a; ++j) t(a, j) = alpha;
  t(a, a - 1) = alpha - P;
  t(a, a) = beta + P * Poly(2);
  t(a, b) = P * (Pk(e_lo) - 1);
  for (unsigned j = 0; j < a; ++j) t(b, j) = -alpha;
  t(b, a) = -alpha - P;
  t(b, b) = -Pk(e_hi) + P2p1;
  t(b, b + 1) = -P;
  for (unsigned i = b + 1; i + 1 < r; ++i) tri(i);
  for (unsigned j = 0; j < r; ++j) t(r - 1, j) = sigma_last.at(j);
  return t;
}

MatrixPoly claim2_template(unsigned r, const std::vector<Poly>& sigma_last, ClaimForm form) {
  MatrixPoly t = claim1_template(r, sigma_last, form);
  t.add_col_multiple(0, 1, Poly(-1));
  return t;
}

std::pair<Poly, Integer> sigma_corner(const FieldParams& params) {
  const auto s = sigma_r_minus_1(params).entries;
  Poly corner = s.at(0) - s.at(1);
  return {corner, corner.constant_term()};
}

namespace {

ClaimReport compare(const DeltaMatrix& m, const MatrixPoly& expected, const FieldParams& params) {
  ClaimReport rep;
  rep.r = m.r;
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.cols(); ++j)
      if (!(expected(i, j) == m.body(i, j))) rep.mismatches.push_back({i, j, expected(i, j), m.body(i, j)});
  std::tie(rep.corner, rep.corner_residue) = sigma_corner(params);
  return rep;
}

}  // namespace

ClaimReport verify_claim1(const DeltaMatrix& H, const FieldParams& params, ClaimForm form) {
  if (H.r != params.r()) throw std::invalid_argument("verify_claim1: r mismatch");
  return compare(H, claim1_template(H.r, sigma_r_minus_1(params).entries, form), params);
}

ClaimReport verify_claim2(const DeltaMatrix& h, const FieldParams& params, ClaimForm form) {
  if (h.r != params.r()) throw std::invalid_argument("verify_claim2: r mismatch");
  return compare(h, claim2_template(h.r, sigma_r_minus_1(params).entries, form), params);
}

}  // namespace cuspforge
