#include "cuspforge/cli.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cuspforge/certify.hpp"
#include "cuspforge/cusps.hpp"
#include "cuspforge/delta_quotient.hpp"
#include "cuspforge/determinant.hpp"
#include "cuspforge/divisors.hpp"
#include "cuspforge/errors.hpp"
#include "cuspforge/serialize.hpp"
#include "cuspforge/sigma.hpp"

namespace cuspforge {

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Everything a command needs besides its own logic.
struct Ctx {
  const RunConfig& cfg;
  FieldParams params;
  bool numeric;
  Integer point;  // evaluation point for numeric mode and csv

  Json poly(const Poly& p) const {
    return numeric ? integer_to_json(p.eval(point)) : poly_to_json(p);
  }
  std::string poly_text(const Poly& p) const {
    return numeric ? p.eval(point).get_str() : p.to_string();
  }
  std::string csv_value(const Poly& p) const { return p.eval(point).get_str(); }
};

/// What a command produces: the JSON result, plus optional text and csv
/// renderings. A missing renderer means the format is unsupported.
struct Output {
  Json result;
  std::string text;
  std::optional<std::string> csv;
  bool mismatch = false;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

void require_r2(const Ctx& c) {
  if (c.params.r() < 2) throw UsageError(c.cfg.command + " requires r >= 2");
}

// ---------------------------------------------------------------- commands

Output cmd_cusps(const Ctx& c) {
  Output o;
  const auto pts = enumerate_closed_points(c.params);
  Integer total = 0;
  for (const auto& p : pts) total += p.degree;
  o.result["closed_points"] = closed_points_to_json(pts);
  o.result["total_cusps"] = integer_to_json(total);
  std::ostringstream t, v;
  t << "closed points of X_0(p^" << c.params.r() << "), |p| = " << c.params.abs_p() << "\n";
  v << "index,d_exp,degree,residue_field\n";
  for (const auto& p : pts) {
    t << "  P_" << p.index << "  d_exp=" << p.d_exp << "  degree=" << p.degree << "  "
      << p.residue_field.label() << (p.name.empty() ? "" : "  (" + p.name + ")") << "\n";
    v << p.index << "," << p.d_exp << "," << p.degree << "," << p.residue_field.label() << "\n";
  }
  t << "total cusps: " << total << "\n";
  o.text = t.str();
  o.csv = v.str();
  return o;
}

Output cmd_divisors(const Ctx& c) {
  require_r2(c);
  Output o;
  Json gens = Json::array();
  std::ostringstream t, v;
  v << "generator,order,weighted_degree";
  for (unsigned i = 0; i <= c.params.r(); ++i) v << ",a_" << i;
  v << "\n";
  for (const Generator& g : generator_family(c.params.r())) {
    const CuspidalDivisor d = build_generator(g, c.params);
    const Integer ord = generator_order(g, c.params);
    const Integer wd = weighted_degree(d, c.params);
    Json x;
    x["generator"] = g.tag();
    Json coeffs = Json::array();
    std::vector<std::string> cs;
    for (const Integer& a : d.coeffs) {
      coeffs.push_back(integer_to_json(a));
      cs.push_back(a.get_str());
    }
    x["coeffs"] = std::move(coeffs);
    x["weighted_degree"] = integer_to_json(wd);
    x["order"] = integer_to_json(ord);
    gens.push_back(std::move(x));
    t << "  " << g.tag() << ": (" << join(cs, ", ") << ")  order " << ord << "\n";
    v << '"' << g.tag() << "\"," << ord << "," << wd << "," << join(cs, ",") << "\n";
  }
  o.result["generators"] = std::move(gens);
  o.text = t.str();
  o.csv = v.str();
  return o;
}

Output cmd_gmap(const Ctx& c) {
  require_r2(c);
  Output o;
  Json gens = Json::array();
  std::ostringstream t, v;
  v << "generator,j,r_exp\n";
  for (const Generator& g : generator_family(c.params.r())) {
    const DeltaQuotient dq = g_map(build_generator(g, c.params), c.params);
    Json x;
    x["generator"] = g.tag();
    Json ex = Json::array();
    std::vector<std::string> es;
    Rat sum;
    for (std::size_t j = 0; j < dq.r_exps.size(); ++j) {
      const Rat& e = dq.r_exps[j];
      ex.push_back(e.to_string());
      es.push_back(e.to_string());
      sum += e;
      v << '"' << g.tag() << "\"," << j << "," << e.to_string() << "\n";
    }
    x["r_exps"] = std::move(ex);
    x["sum"] = sum.to_string();
    if (!(sum == Rat(0))) o.mismatch = true;
    gens.push_back(std::move(x));
    t << "  g(" << g.tag() << ") = (" << join(es, ", ") << ")\n";
  }
  o.result["generators"] = std::move(gens);
  o.text = t.str();
  o.csv = v.str();
  return o;
}

Output cmd_sigma(const Ctx& c) {
  require_r2(c);
  Output o;
  Json rows = Json::array();
  std::ostringstream t, v;
  v << "row,generator";
  for (unsigned k = 0; k < c.params.r(); ++k) v << ",k" << k;
  v << "\n";
  const auto family = generator_family(c.params.r());
  for (unsigned i = 0; i < c.params.r(); ++i) {
    const SigmaVector s = sigma_row(i, c.params);
    const Generator& g = family[i];
    const bool agrees = closed_tensor(s, c.params) ==
                        oracle_tensor(build_generator(g, c.params), generator_order(g, c.params), c.params);
    if (!agrees) o.mismatch = true;
    Json x;
    x["row"] = i;
    x["generator"] = g.tag();
    Json es = Json::array();
    std::vector<std::string> ts, vs;
    for (const Poly& e : s.entries) {
      es.push_back(c.poly(e));
      ts.push_back(c.poly_text(e));
      vs.push_back(c.csv_value(e));
    }
    x["entries"] = std::move(es);
    x["tensor_denom"] = c.poly(s.tensor_denom);
    x["prefactor"] = integer_to_json(s.prefactor);
    x["oracle_agrees"] = agrees;
    rows.push_back(std::move(x));
    t << "sigma(" << i << ") [" << g.tag() << "]" << (agrees ? "" : "  ORACLE MISMATCH") << "\n";
    for (std::size_t k = 0; k < ts.size(); ++k) t << "  k=" << k << ": " << ts[k] << "\n";
    v << i << ",\"" << g.tag() << "\"," << join(vs, ",") << "\n";
  }
  o.result["rows"] = std::move(rows);
  o.text = t.str();
  o.csv = v.str();
  return o;
}

DeltaMatrix build_variant(const Ctx& c, DeltaVariant v) {
  if (v == DeltaVariant::Plain || v == DeltaVariant::Bold) return build_M_delta(c.params, v);
  if (c.params.r() < 7) throw UsageError("reduced variants require r >= 7");
  return build_M_delta(c.params, v);
}

DeltaMatrix evaluated(const Ctx& c, DeltaMatrix m) {
  if (c.numeric) m.body = lift(evaluate(m.body, c.point));
  return m;
}

std::string matrix_text(const Ctx& c, const DeltaMatrix& m) {
  std::ostringstream t;
  t << variant_name(m.variant) << " delta matrix, r = " << m.r << "\n";
  for (std::size_t i = 0; i < m.body.rows(); ++i) {
    std::vector<std::string> xs;
    for (std::size_t j = 0; j < m.body.cols(); ++j) xs.push_back(c.poly_text(m.body(i, j)));
    t << "  [" << i << "] " << join(xs, " | ") << "\n";
  }
  return t.str();
}

std::string matrix_csv(const Ctx& c, const DeltaMatrix& m) {
  std::ostringstream v;
  for (std::size_t i = 0; i < m.body.rows(); ++i) {
    std::vector<std::string> xs;
    for (std::size_t j = 0; j < m.body.cols(); ++j) xs.push_back(c.csv_value(m.body(i, j)));
    v << join(xs, ",") << "\n";
  }
  return v.str();
}

Output cmd_matrix(const Ctx& c) {
  require_r2(c);
  Output o;
  const DeltaMatrix m = build_variant(c, parse_variant(c.cfg.variant));
  o.result = matrix_to_json(evaluated(c, m));
  o.result["provenance"] = m.provenance;
  o.text = matrix_text(c, m);
  o.csv = matrix_csv(c, m);
  return o;
}

Output cmd_reduce(const Ctx& c) {
  if (c.params.r() < 7) throw UsageError("reduce requires r >= 7");
  Output o;
  const DeltaMatrix H = build_variant(c, DeltaVariant::HReduced);
  const DeltaMatrix h = step2_reduce(H);
  o.result["H"] = matrix_to_json(evaluated(c, H));
  o.result["h"] = matrix_to_json(evaluated(c, h));
  o.result["provenance"] = h.provenance;
  o.text = matrix_text(c, H) + matrix_text(c, h) + "provenance:\n  " + join(h.provenance, "\n  ") + "\n";
  return o;
}

Output cmd_det(const Ctx& c) {
  require_r2(c);
  Output o;
  const DetCertificate cert = det_certify(c.params);
  o.result = certificate_to_json(cert);
  if (c.numeric) o.result["det_value"] = integer_to_json(cert.det.eval(c.point));
  std::ostringstream t, v;
  t << "det(M_delta^h), r = " << cert.r << ": " << c.poly_text(cert.det) << "\n"
    << "  = " << cert.sign << " + P * (" << cert.f.to_string() << ")\n"
    << "  method: " << cert.method << "\n";
  if (!cert.hessenberg_minors.empty()) {
    t << "  corner-minor leading minors = 1 mod P: " << (cert.minors_unit_mod_P ? "yes" : "NO") << "\n";
    if (!cert.minors_unit_mod_P) o.mismatch = true;
  }
  if (cert.abs_p_is_two) t << "  note: |p| = 2\n";
  v << "r,P,det,sign\n" << cert.r << "," << c.point << "," << cert.det.eval(c.point) << "," << cert.sign << "\n";
  o.text = t.str();
  o.csv = v.str();
  return o;
}

Output cmd_verify(const Ctx& c) {
  require_r2(c);
  Output o;
  Json checks = Json::array();
  std::ostringstream t;
  auto check = [&](const std::string& name, bool ok, Json detail) {
    Json x;
    x["check"] = name;
    x["ok"] = ok;
    if (!detail.is_null()) x["detail"] = std::move(detail);
    checks.push_back(std::move(x));
    t << (ok ? "  ok    " : "  FAIL  ") << name << "\n";
    if (!ok) o.mismatch = true;
  };

  const auto family = generator_family(c.params.r());
  for (unsigned i = 0; i < c.params.r(); ++i) {
    const Generator& g = family[i];
    const CuspidalDivisor d = build_generator(g, c.params);
    check("weighted degree of " + g.tag() + " is 0", weighted_degree(d, c.params) == 0, {});
    bool ok = true;
    std::string why;
    try {
      ok = closed_tensor(sigma_row(i, c.params), c.params) ==
           oracle_tensor(d, generator_order(g, c.params), c.params);
    } catch (const std::domain_error& e) {
      ok = false;
      why = e.what();
    }
    check("closed-form sigma(" + std::to_string(i) + ") matches oracle for " + g.tag(), ok,
          why.empty() ? Json() : Json(why));
  }
  const auto [corner, residue] = sigma_corner(c.params);
  Json cd;
  cd["corner"] = poly_to_json(corner);
  cd["residue"] = integer_to_json(residue);
  check("sigma(r-1)_0 - sigma(r-1)_1 = +-1 mod P", residue == 1 || residue == -1, cd);

  if (c.params.r() >= 7) {
    const DeltaMatrix plain = build_M_delta(c.params, DeltaVariant::Plain);
    const DeltaMatrix H = step1_reduce(plain);
    const DeltaMatrix h = step2_reduce(H);
    const ClaimReport c1 = verify_claim1(H, c.params);
    const ClaimReport c2 = verify_claim2(h, c.params);
    check("H-reduced matrix matches its template", c1.mismatches.empty(), claim_report_to_json(c1));
    check("h-reduced matrix matches its template", c2.mismatches.empty(), claim_report_to_json(c2));
    const Poly dp = bareiss_det(plain.body);
    const Poly dh = bareiss_det(h.body);
    check("det(plain) == det(h-reduced)", dp == dh, {});
  }
  try {
    const DetCertificate cert = det_certify(c.params);
    check("det = +-1 mod P", true, certificate_to_json(cert));
    if (!cert.hessenberg_minors.empty()) {
      check("corner-minor leading minors = 1 mod P", cert.minors_unit_mod_P, {});
    }
  } catch (const VerificationFailure& e) {
    check("det = +-1 mod P", false, Json(e.what()));
  }
  std::size_t failures = 0;
  for (const Json& x : checks) failures += x["ok"].get<bool>() ? 0 : 1;
  o.result["checks"] = std::move(checks);
  o.result["mismatches"] = failures;
  t << failures << " mismatch(es)\n";
  o.text = t.str();
  return o;
}

Output cmd_report(const Ctx& c) {
  Output o;
  const TorsionReport rep = torsion_report(c.params);
  o.result = torsion_report_to_json(rep);
  std::ostringstream t;
  t << "q = " << rep.q << ", deg p = " << rep.deg_p << ", r = " << rep.r << ", |p| = " << rep.abs_p
    << ", M = " << rep.M << ", N = " << rep.N << "\n";
  t << "rational cuspidal divisor class group:\n";
  for (const CyclicFactor& f : rep.cuspidal_group) {
    t << "  <" << f.generator << ">  order " << f.order << " (" << f.order_formula << ")\n";
  }
  if (rep.has_certificate) {
    t << "determinant certificate: det = " << rep.certificate.det.to_string() << " = "
      << rep.certificate.sign << " + P f(P)\n";
  }
  t << rep.unconditional << "\n";
  t << "torsion of J_0(p^r)_m(K) = " << rep.torsion_structure << ", conditional on: " << rep.hypothesis
    << "\n";
  for (const auto& n : rep.notes) t << "note: " << n << "\n";
  o.text = t.str();
  return o;
}

const std::map<std::string, std::function<Output(const Ctx&)>>& dispatch() {
  static const std::map<std::string, std::function<Output(const Ctx&)>> table = {
      {"cusps", cmd_cusps},   {"divisors", cmd_divisors}, {"gmap", cmd_gmap},
      {"sigma", cmd_sigma},   {"matrix", cmd_matrix},     {"reduce", cmd_reduce},
      {"det", cmd_det},       {"verify", cmd_verify},     {"report", cmd_report},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = {"cusps",  "divisors", "gmap",   "sigma", "matrix",
                                                 "reduce", "det",      "verify", "report"};
  return names;
}

RunResult run(const RunConfig& cfg) {
  RunResult res;
  try {
    const auto it = dispatch().find(cfg.command);
    if (it == dispatch().end()) throw UsageError("unknown command '" + cfg.command + "'");
    if (cfg.mode != "symbolic" && cfg.mode != "numeric") throw UsageError("mode must be symbolic or numeric");
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text") {
      throw UsageError("format must be json, csv or text");
    }
    const FieldParams params(cfg.q, cfg.deg_p, cfg.r);
    if (cfg.mode == "symbolic" && cfg.r > cfg.max_r) {
      throw UsageError("r = " + std::to_string(cfg.r) + " exceeds the symbolic cap " +
                       std::to_string(cfg.max_r) + " (CUSPFORGE_MAX_R)");
    }
    if (cfg.format == "csv" && !cfg.at) throw UsageError("csv output needs --at to evaluate polynomials");
    const Ctx ctx{cfg, params, cfg.mode == "numeric", cfg.at.value_or(params.abs_p())};
    Output out = it->second(ctx);

    if (cfg.format == "json") {
      Json doc;
      Json header;
      header["tool"] = "cuspforge";
      header["version"] = kVersion;
      header["command"] = cfg.command;
      header["params"] = {{"q", cfg.q}, {"deg_p", cfg.deg_p}, {"r", cfg.r}};
      header["abs_p"] = integer_to_json(params.abs_p());
      header["mode"] = cfg.mode;
      if (ctx.numeric) header["at"] = integer_to_json(ctx.point);
      doc["header"] = std::move(header);
      doc["result"] = std::move(out.result);
      res.document = doc.dump(2) + "\n";
    } else if (cfg.format == "text") {
      res.document = out.text;
    } else {
      if (!out.csv) throw UsageError("csv output is not available for '" + cfg.command + "'");
      res.document = *out.csv;
    }
    if (out.mismatch) {
      res.code = ExitCode::Mismatch;
      res.error = cfg.command + ": verification mismatch";
    }
  } catch (const UsageError& e) {
    res = {ExitCode::Usage, "", e.what()};
  } catch (const VerificationFailure& e) {
    res = {ExitCode::Mismatch, "", e.what()};
  } catch (const InternalError& e) {
    res = {ExitCode::Mismatch, "", std::string("internal disagreement: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    res = {ExitCode::Usage, "", e.what()};
  } catch (const std::out_of_range& e) {
    res = {ExitCode::Usage, "", e.what()};
  }
  return res;
}

}  // namespace cuspforge
