#include "osc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "osc/variety.hpp"

namespace osc {

namespace {

LieCase parse_case(const std::string& s) {
  if (s == "sp") return LieCase::Sp;
  if (s == "u") return LieCase::Gl;
  if (s == "ostar") return LieCase::OStar;
  throw UsageError("unknown case '" + s + "' (expected sp, u or ostar)");
}

std::pair<std::size_t, std::size_t> sizes(const RunConfig& c) {
  if (parse_case(c.lie_case) == LieCase::Gl) {
    if (c.p < 1 || c.q < 1) throw UsageError("u(p,q) needs p, q >= 1");
    return {c.p, c.q};
  }
  if (c.n < 1) throw UsageError("n must be >= 1");
  return {c.n, 0};
}

Json header(const std::string& kind, const RunConfig& c) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = kind;
  j["case"] = c.lie_case;
  return j;
}

std::vector<DenseMatrix> cayley_samples(std::size_t n, std::size_t k, std::size_t count, std::uint64_t seed,
                                        long bound) {
  std::vector<DenseMatrix> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::seed_seq seq{seed, std::uint64_t(s), std::uint64_t(0xca41e7)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    DenseMatrix z = zeros(n, k);
    for (auto i = 0u; i < n; ++i)
      for (auto a = 0u; a < k; ++a) z(i, a) = Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    out.push_back(std::move(z));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

LieAlgebraSpec resolve_spec(const RunConfig& c) {
  LieCase lc = parse_case(c.lie_case);
  auto [a, b] = sizes(c);
  LieAlgebraSpec spec = build_basis(lc, a, b);
  if (spec.dim() > c.max_dim)
    throw SizeError("dim g = " + std::to_string(spec.dim()) + " exceeds the cap " + std::to_string(c.max_dim));
  return spec;
}

SchemeId resolve_scheme(const RunConfig& c) {
  LieCase lc = parse_case(c.lie_case);
  const std::string& s = c.scheme;
  if (s.empty()) throw UsageError("--scheme is required");
  switch (lc) {
    case LieCase::Sp:
      if (s == "schrodinger") return SchemeId::SpSchrodinger;
      if (s == "fock") return SchemeId::SpFock;
      break;
    case LieCase::Gl:
      if (s == "holomorphic") return SchemeId::UpqHolomorphic;
      if (s == "mixed") return SchemeId::UpqMixed;
      break;
    case LieCase::OStar:
      if (s == "holomorphic") return SchemeId::OStarHolomorphic;
      if (s == "mixed") return SchemeId::OStarMixed;
      break;
  }
  throw UsageError("scheme '" + s + "' does not belong to case " + c.lie_case);
}

QuantizationScheme resolve(const RunConfig& c) {
  resolve_spec(c);  // size checks
  SchemeId id = resolve_scheme(c);
  auto [a, b] = sizes(c);
  return build_scheme(id, a, b, c.k);
}

CommandResult cmd_verify(const RunConfig& c) {
  QuantizationScheme s = resolve(c);
  LieAlgebraSpec spec = model_spec(s.model);
  std::vector<Report> reps;
  reps.push_back(verify_moment_defining_equation(s.model, spec));
  reps.push_back(verify_classical_homomorphism(s.model, spec));
  reps.push_back(verify_equivariance(s.model, spec));
  if (spec.kind() == LieCase::Sp) {
    std::size_t count = std::max<std::size_t>(c.samples, 20);
    Report cay = verify_cayley_diagram(c.n, c.k, cayley_samples(c.n, c.k, count, c.seed, c.bound));
    auto& sym = cay.add("cayley square commutes symbolically");
    sym.pairs_checked = 1;
    if (!verify_cayley_symbolic(c.n, c.k)) sym.failures.push_back("polynomial identity");
    reps.push_back(std::move(cay));
  }
  reps.push_back(verify_ccr(s));
  reps.push_back(verify_quantum_homomorphism(s, spec));
  DualActionSpec dual = derived_dual_action(s);
  reps.push_back(verify_commutant(s, spec, dual));
  reps.push_back(verify_dual_homomorphism(s, dual));
  reps.push_back(verify_formula_conformance(s, spec));
  reps.push_back(verify_degree_shifts(s, spec));
  if (s.id == SchemeId::SpSchrodinger) reps.push_back(parity_decomposition_check(c.n, c.k, std::max(c.degree, 2u)));

  Json j = header("verify", c);
  j["scheme"] = scheme_name(s.id);
  j["params"] = spec.params_str();
  j["k"] = c.k;
  j["reports"] = Json::array();
  bool ok = true;
  for (auto& r : reps) {
    ok = ok && r.ok();
    j["reports"].push_back(r.to_json());
  }
  j["passed"] = ok;
  return {ok ? kExitPass : kExitFail, dump(j)};
}

CommandResult cmd_decompose(const RunConfig& c) {
  QuantizationScheme s = resolve(c);
  LieAlgebraSpec spec = model_spec(s.model);
  Decomposition dec = joint_highest_weight_vectors(s, spec, derived_dual_action(s), c.degree, c.max_slice);
  Report rep = decomposition_report(s, dec);
  rep.params["degree"] = c.degree;
  return {rep.ok() ? kExitPass : kExitFail, dump(rep.to_json())};
}

CommandResult cmd_variety(const RunConfig& c) {
  resolve_spec(c);
  OrbitCheckConfig oc;
  oc.scheme = resolve_scheme(c);
  std::tie(oc.a, oc.b) = sizes(c);
  oc.k = c.k;
  oc.samples = c.samples;
  oc.seed = c.seed;
  oc.coefficient_bound = c.bound;
  Report rep = generic_rank_experiment(oc);
  return {rep.ok() ? kExitPass : kExitFail, dump(rep.to_json())};
}

CommandResult cmd_emit(const RunConfig& c) {
  if (c.format != "json" && c.format != "latex") throw UsageError("format must be json or latex");
  EmitSections what{false, false, false, false};
  bool explicit_ops = false;
  std::stringstream ss(c.what);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part == "all") {
      what = {true, true, true, true};
    } else if (part == "basis") {
      what.basis = true;
    } else if (part == "structure") {
      what.structure = true;
    } else if (part == "mu_hat" || part == "pi") {
      (part == "pi" ? what.pi : what.mu_hat) = true;
      explicit_ops = true;
    } else {
      throw UsageError("unknown emit section '" + part + "'");
    }
  }
  LieAlgebraSpec spec = resolve_spec(c);
  std::optional<QuantizationScheme> s;
  if (!c.scheme.empty())
    s = resolve(c);
  else if (explicit_ops)
    throw UsageError("mu_hat and pi need --scheme");
  if (what.structure) what.basis = true;  // structure constants refer to basis indices
  EmitData d = collect_emit(spec, s ? &*s : nullptr, what);
  return {kExitPass, c.format == "json" ? dump(emit_to_json(d)) : emit_to_latex(d)};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact checks for oscillator representations built from quantized moment maps."};
  app.require_subcommand(1);
  app.footer(
      "Schemes (case: name):\n"
      "  sp: schrodinger   x -> x, y -> -i d/dx on the real Lagrangian\n"
      "  sp: fock          z -> z, zb -> -2 d/dz\n"
      "  u, ostar: holomorphic  z -> z, zb -> -2 eps d/dz (degree preserving)\n"
      "  u: mixed          z_i (i <= p) holomorphic, the last q rows swapped to w = zb\n"
      "  ostar: mixed      z_i holomorphic, z_{n+i} -> -2 d/dw, zb_{n+i} -> w\n"
      "Exit codes: 0 pass, 1 check failed, 2 usage, 3 size cap.\n"
      "OSC_KIT_THREADS caps worker threads.");

  auto common = [&](CLI::App* sub, bool needs_scheme) {
    sub->add_option("--case", cfg.lie_case, "sp, u or ostar")->check(CLI::IsMember({"sp", "u", "ostar"}));
    sub->add_option("--n", cfg.n, "size for sp and ostar");
    sub->add_option("--p", cfg.p, "u(p,q)");
    sub->add_option("--q", cfg.q, "u(p,q)");
    sub->add_option("--k", cfg.k, "number of copies");
    auto* sch = sub->add_option("--scheme", cfg.scheme, "schrodinger, fock, holomorphic or mixed");
    if (needs_scheme) sch->required();
    sub->add_option("--seed", cfg.seed, "seed for random samples");
    sub->add_option("--samples", cfg.samples, "random samples")->check(CLI::PositiveNumber);
    sub->add_option("--bound", cfg.bound, "coefficient range for random points")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "report path (default stdout)");
    sub->add_option("--max-dim", cfg.max_dim, "cap on dim g");
  };
  auto* verify = app.add_subcommand("verify", "run every check suite for one scheme");
  common(verify, true);
  verify->add_option("-d,--degree", cfg.degree, "slice degree for the parity check");
  auto* decompose = app.add_subcommand("decompose", "joint highest weight vectors on the degree <= d slice");
  common(decompose, true);
  decompose->add_option("-d,--degree", cfg.degree, "slice degree");
  decompose->add_option("--max-slice", cfg.max_slice, "cap on slice monomials");
  auto* variety = app.add_subcommand("variety", "rank and block form of the restricted moment map");
  common(variety, true);
  auto* emit = app.add_subcommand("emit", "render bases, brackets, mu_hat and pi");
  common(emit, false);
  emit->add_option("--format", cfg.format, "json or latex")->check(CLI::IsMember({"json", "latex"}));
  emit->add_option("--what", cfg.what, "all, or a comma list of basis,structure,mu_hat,pi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::string name = app.get_subcommands().front()->get_name();
  CommandResult res;
  try {
    if (name == "verify") res = cmd_verify(cfg);
    else if (name == "decompose") res = cmd_decompose(cfg);
    else if (name == "variety") res = cmd_variety(cfg);
    else res = cmd_emit(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "size cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }

  if (cfg.output.empty()) {
    out << res.body;
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      err << "usage error: cannot write " << cfg.output << "\n";
      return kExitUsage;
    }
    f << res.body;
  }
  err << name << ": " << (res.exit_code == kExitPass ? "pass" : "FAIL") << "\n";
  return res.exit_code;
}

}  // namespace osc
