#include <doctest.h>

#include "cuspforge/cli.hpp"
#include "cuspforge/delta_matrix.hpp"
#include "cuspforge/serialize.hpp"

using namespace cuspforge;

namespace {
RunConfig cfg(const std::string& cmd, unsigned r, unsigned long q = 3, unsigned d = 1) {
  RunConfig c;
  c.command = cmd;
  c.q = q;
  c.deg_p = d;
  c.r = r;
  return c;
}
}  // namespace

TEST_CASE("every command succeeds on a small instance") {
  for (const std::string& cmd : known_commands()) {
    const auto res = run(cfg(cmd, 7));
    INFO(cmd << ": " << res.error);
    CHECK(res.code == ExitCode::Ok);
    const Json doc = Json::parse(res.document);
    CHECK(doc["header"]["command"] == cmd);
    CHECK(doc["header"]["params"]["r"] == 7);
    CHECK(doc.contains("result"));
  }
}

TEST_CASE("usage errors") {
  CHECK(run(cfg("frobnicate", 3)).code == ExitCode::Usage);
  CHECK(run(cfg("det", 3, 6)).code == ExitCode::Usage);  // 6 is not a prime power
  CHECK(run(cfg("reduce", 5)).code == ExitCode::Usage);
  CHECK(run(cfg("matrix", 0)).code == ExitCode::Usage);

  auto c = cfg("matrix", 4);
  c.format = "csv";
  CHECK(run(c).code == ExitCode::Usage);
  c.at = Integer(3);
  const auto ok = run(c);
  CHECK(ok.code == ExitCode::Ok);
  CHECK(ok.document.substr(0, 8) == "1,1,1,1\n");

  auto v = cfg("matrix", 4);
  v.variant = "sideways";
  CHECK(run(v).code == ExitCode::Usage);

  auto m = cfg("sigma", 4);
  m.mode = "loud";
  CHECK(run(m).code == ExitCode::Usage);

  auto cap = cfg("det", 20);
  cap.max_r = 10;
  CHECK(run(cap).code == ExitCode::Usage);
  cap.mode = "numeric";
  cap.at = Integer(3);
  CHECK(run(cap).code == ExitCode::Ok);
}

TEST_CASE("matrix JSON round trip") {
  for (const std::string& name : {"plain", "bold", "H-reduced", "h-reduced"})
    for (unsigned r = 2; r <= 20; ++r) {
      const DeltaVariant v = parse_variant(name);
      if ((v == DeltaVariant::HReduced || v == DeltaVariant::hReduced) && r < 7) continue;
      auto c = cfg("matrix", r);
      c.variant = name;
      const auto res = run(c);
      REQUIRE(res.code == ExitCode::Ok);
      const DeltaMatrix back = matrix_from_json(Json::parse(res.document)["result"]);
      const DeltaMatrix direct = build_M_delta(FieldParams(3, 1, r), v);
      CHECK(back.variant == v);
      CHECK(back.r == r);
      CHECK(back.body == direct.body);
      CHECK(matrix_to_json(back)["entries"] == matrix_to_json(direct)["entries"]);
    }
}

TEST_CASE("r = 2 matrix document") {
  const Json doc = Json::parse(run(cfg("matrix", 2)).document);
  CHECK(doc["result"]["entries"] == Json::parse("[[[1],[1]],[[-1,1],[0,1]]]"));
}

TEST_CASE("output is deterministic") {
  for (const std::string& cmd : known_commands()) {
    const auto a = run(cfg(cmd, 8, 4, 2));
    const auto b = run(cfg(cmd, 8, 4, 2));
    CHECK(a.code == b.code);
    CHECK(a.document == b.document);
  }
}

TEST_CASE("verify and report") {
  const auto v = run(cfg("verify", 9, 2, 1));
  CHECK(v.code == ExitCode::Ok);
  const Json rep = Json::parse(run(cfg("report", 2)).document)["result"];
  CHECK(rep.dump().find("(Z/2Z)^2") != std::string::npos);
}
