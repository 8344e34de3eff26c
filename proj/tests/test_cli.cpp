#include <doctest.h>

#include <sstream>

#include "osc/cli.hpp"

using namespace osc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "osc-kit");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--case", "sp", "--n", "2", "--k", "2", "--scheme", "schrodinger"}).code == kExitPass);
  CHECK(run({"verify", "--case", "u", "--p", "1", "--q", "1", "--k", "1", "--scheme", "holomorphic"}).code == kExitPass);
  CHECK(run({"verify", "--case", "ostar", "--n", "2", "--k", "1", "--scheme", "mixed"}).code == kExitPass);
  CHECK(run({"verify", "--case", "sp", "--n", "0", "--scheme", "fock"}).code == kExitUsage);
  CHECK(run({"verify", "--case", "sp", "--scheme", "mixed"}).code == kExitUsage);
  CHECK(run({"verify", "--case", "gl", "--scheme", "mixed"}).code == kExitUsage);
  CHECK(run({"verify", "--case", "sp"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
  CHECK(run({"verify", "--case", "sp", "--n", "5", "--scheme", "fock", "--max-dim", "45"}).code == kExitCap);
}

TEST_CASE("verify report layout") {
  auto r = run({"verify", "--case", "sp", "--n", "1", "--k", "1", "--scheme", "fock"});
  auto j = Json::parse(r.out);
  CHECK(j["schema"] == "v1");
  CHECK(j["kind"] == "verify");
  CHECK(j["passed"] == true);
  std::vector<std::string> kinds;
  for (auto& rep : j["reports"]) kinds.push_back(rep["kind"]);
  for (std::string want : {"moment_defining_equation", "classical_homomorphism", "cayley_diagram", "ccr",
                           "quantum_homomorphism", "commutant", "formula_conformance", "degree_shifts"})
    CHECK(std::find(kinds.begin(), kinds.end(), want) != kinds.end());
}

TEST_CASE("decompose") {
  auto r = run({"decompose", "--case", "sp", "--n", "1", "--k", "1", "--scheme", "fock", "-d", "4"});
  REQUIRE(r.code == kExitPass);
  auto j = Json::parse(r.out);
  CHECK(j["slice_dims"] == Json::array({1, 1, 1, 1, 1}));
  REQUIRE(j["vectors"].size() == 2);
  CHECK(j["vectors"][0]["degree"] == 0);
  CHECK(j["vectors"][1]["degree"] == 1);

  auto z = Json::parse(run({"decompose", "--case", "u", "--p", "1", "--q", "1", "--scheme", "mixed", "-d", "0"}).out);
  REQUIRE(z["vectors"].size() == 1);
  CHECK(z["vectors"][0]["vector"] == "1");

  auto w = Json::parse(run({"decompose", "--case", "u", "--p", "1", "--q", "1", "--scheme", "mixed", "-d", "2"}).out);
  CHECK(w["slice_dims"] == Json::array({1, 2, 3}));
  CHECK(w["vectors"].size() == 5);

  CHECK(run({"decompose", "--case", "sp", "--n", "3", "--k", "3", "--scheme", "fock", "-d", "12"}).code == kExitCap);
}

TEST_CASE("variety") {
  auto r = run({"variety", "--case", "sp", "--n", "2", "--k", "1", "--scheme", "fock", "--samples", "50"});
  REQUIRE(r.code == kExitPass);
  auto j = Json::parse(r.out);
  CHECK(j["max_rank"] == 1);
  CHECK(r.out == run({"variety", "--case", "sp", "--n", "2", "--k", "1", "--scheme", "fock", "--samples", "50"}).out);

  auto h = Json::parse(run({"variety", "--case", "u", "--p", "1", "--q", "1", "--scheme", "holomorphic"}).out);
  bool flagged = false;
  for (auto& c : h["checks"])
    if (c["name"] == "mu_C vanishes identically on the Lagrangian") flagged = c["failures"].empty();
  CHECK(flagged);
}

TEST_CASE("emit") {
  auto b = Json::parse(run({"emit", "--case", "u", "--p", "1", "--q", "1", "--what", "basis"}).out);
  CHECK(b["basis"].size() == 4);
  CHECK_FALSE(b.contains("pi"));

  auto tex = run({"emit", "--case", "sp", "--n", "1", "--scheme", "schrodinger", "--format", "latex"});
  REQUIRE(tex.code == kExitPass);
  CHECK(tex.out.find("\\hat\\mu = \\begin{pmatrix}") != std::string::npos);
  CHECK(tex.out.find("{x_{1,1}}^{2}") != std::string::npos);
  CHECK(tex.out.find("\\partial_{x_{1,1}}^{2}") != std::string::npos);

  CHECK(run({"emit", "--case", "sp", "--what", "pi"}).code == kExitUsage);
  CHECK(run({"emit", "--case", "sp", "--what", "bogus"}).code == kExitUsage);
}

TEST_CASE("emit json round-trips") {
  for (auto [c, sch, p, q, n, k] : std::vector<std::tuple<std::string, std::string, int, int, int, int>>{
           {"sp", "fock", 0, 0, 2, 2}, {"u", "mixed", 2, 1, 0, 1}, {"ostar", "holomorphic", 0, 0, 2, 1}}) {
    RunConfig cfg;
    cfg.lie_case = c, cfg.scheme = sch, cfg.k = k;
    if (p) cfg.p = p, cfg.q = q;
    if (n) cfg.n = n;
    QuantizationScheme s = resolve(cfg);
    LieAlgebraSpec spec = model_spec(s.model);
    EmitData d = collect_emit(spec, &s, {});
    Json j = emit_to_json(d);
    EmitData back = emit_from_json(Json::parse(j.dump()));
    CHECK(emit_to_json(back) == j);
    REQUIRE(back.basis.size() == spec.dim());
    for (std::size_t a = 0; a < spec.dim(); ++a) CHECK(back.basis[a].m == spec.basis()[a].m);
    CHECK(back.structure == spec.structure_constants());
    REQUIRE(back.mu_hat);
    // operators survive with the right coefficients on a table with the same labels
    for (std::size_t r = 0; r < back.mu_hat->rows(); ++r)
      for (std::size_t col = 0; col < back.mu_hat->cols(); ++col)
        CHECK(back.mu_hat->operator()(r, col).str() == d.mu_hat->operator()(r, col).str());
    REQUIRE(back.pi.size() == d.pi.size());
    for (std::size_t a = 0; a < d.pi.size(); ++a) CHECK(back.pi[a].second == d.pi[a].second);
  }
  CHECK_THROWS_AS(emit_from_json(Json::parse(R"({"schema":"v0"})")), UsageError);
}

TEST_CASE("scalar encoding") {
  Scalar x(mpq_class(-3, 4), mpq_class(5, 7));
  CHECK(scalar_from_json(scalar_to_json(x)) == x);
  CHECK(scalar_from_json(Json{{"re", "2/4"}, {"im", "0"}}) == Scalar(1, 2));
  CHECK_THROWS_AS(scalar_from_json(Json{{"re", "x"}, {"im", "0"}}), UsageError);
}
