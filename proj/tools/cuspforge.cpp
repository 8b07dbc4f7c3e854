#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "cuspforge/cli.hpp"

namespace {

unsigned max_r_from_env() {
  const char* v = std::getenv("CUSPFORGE_MAX_R");
  if (v == nullptr || *v == '\0') return 64;
  try {
    return static_cast<unsigned>(std::stoul(v));
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring malformed CUSPFORGE_MAX_R='" << v << "'\n";
    return 64;
  }
}

}  // namespace

int main(int argc, char** argv) {
  cuspforge::RunConfig cfg;
  cfg.max_r = max_r_from_env();
  std::string at;
  std::string out_path;
  std::string cmd_flag;

  CLI::App app{"Exact cuspidal divisor and delta-matrix computations for X_0(p^r)"};
  app.require_subcommand(0, 1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "size of the constant field F_q (prime power)");
    sub->add_option("--deg-p", cfg.deg_p, "degree of the prime p");
    sub->add_option("--r", cfg.r, "exponent of the level p^r");
    sub->add_option("--mode", cfg.mode, "symbolic | numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
    sub->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--at", at, "evaluate polynomials at P = value (csv, numeric)");
    sub->add_option("--out", out_path, "write the document to this file");
  };
  add_common(&app);
  app.add_option("--cmd", cmd_flag, "command to run, as an alternative to a subcommand");
  app.add_option("--variant", cfg.variant, "matrix variant: plain | bold | H-reduced | h-reduced");
  const std::map<std::string, std::string> about = {
      {"cusps", "closed points at the cusps and their degrees"},
      {"divisors", "generator divisors in closed-point coordinates"},
      {"gmap", "delta-quotient exponents of each generator"},
      {"sigma", "sigma rows of the delta matrix with oracle agreement"},
      {"matrix", "delta matrix in the chosen variant"},
      {"reduce", "both reduction steps with their transforms (r >= 7)"},
      {"det", "determinant and its certificate"},
      {"verify", "run every consistency check; exit 2 on mismatch"},
      {"report", "cuspidal group generators, orders and torsion structure"},
  };
  for (const auto& name : cuspforge::known_commands()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    add_common(sub);
    if (name == "matrix") sub->add_option("--variant", cfg.variant, "plain | bold | H-reduced | h-reduced");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(cuspforge::ExitCode::Usage);
  }

  if (!app.get_subcommands().empty()) {
    cfg.command = app.get_subcommands().front()->get_name();
  } else if (!cmd_flag.empty()) {
    cfg.command = cmd_flag;
  } else {
    std::cerr << app.help();
    return static_cast<int>(cuspforge::ExitCode::Usage);
  }
  if (!at.empty()) {
    try {
      cfg.at = cuspforge::Integer(at);
    } catch (const std::invalid_argument&) {
      std::cerr << "error: --at expects an integer, got '" << at << "'\n";
      return static_cast<int>(cuspforge::ExitCode::Usage);
    }
  }

  const cuspforge::RunResult res = cuspforge::run(cfg);
  if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
  if (!res.document.empty()) {
    if (out_path.empty()) {
      std::cout << res.document;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f || !(f << res.document) || !f.flush()) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return static_cast<int>(cuspforge::ExitCode::Usage);
      }
    }
  }
  return static_cast<int>(res.code);
}
