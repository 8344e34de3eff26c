#include "osc/variety.hpp"

#include <algorithm>
#include <random>

#include "osc/parallel.hpp"

namespace osc {

PolyMatrix restricted_moment_map(const QuantizationScheme& s) {
  PolyMatrix mu = classical_moment_map(s.model);
  PolyMatrix out(mu.rows(), mu.cols(), Poly(s.lagrangian));
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) out(i, j) = substitute(mu(i, j), s.restriction, s.lagrangian);
  return out;
}

namespace {

DenseMatrix evaluate(const PolyMatrix& mu, const std::vector<Scalar>& point) {
  DenseMatrix out = zeros(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) out(i, j) = osc::evaluate(mu(i, j), point);
  return out;
}

// row count of the upper left block
std::size_t split(const SymplecticModel& m) { return m.lie == LieCase::Gl ? m.p : m.ambient / 2; }

}  // namespace

DenseMatrix mu_c_on_lagrangian(const QuantizationScheme& s, const std::vector<Scalar>& point) {
  if (point.size() != s.lagrangian->size()) throw UsageError("point has the wrong number of coordinates");
  return evaluate(restricted_moment_map(s), point);
}

std::size_t real_rank(const SymplecticModel& m) {
  switch (m.lie) {
    case LieCase::Sp: return m.n;
    case LieCase::Gl: return std::min(m.p, m.q);
    case LieCase::OStar: return m.n / 2;
  }
  return 0;
}

std::size_t orbit_bound(const SymplecticModel& m) { return std::min(m.k, real_rank(m)); }

OrbitCheck check_orbit_membership(const SymplecticModel& m, const DenseMatrix& mat) {
  std::size_t d = m.ambient, s = split(m);
  if (mat.rows() != d || mat.cols() != d) throw UsageError("matrix is not in the ambient space");
  OrbitCheck r;
  r.block_ok = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if ((i >= s || j < s) && !mat(i, j).is_zero()) r.block_ok = false;
  DenseMatrix c = sub_block(mat, 0, s, s, d - s);
  r.symmetry_ok = true;
  if (m.lie != LieCase::Gl) {
    Scalar sign(m.lie == LieCase::Sp ? 1 : -1);
    r.symmetry_ok = transpose(c) == sign * c;
  }
  r.rank = rank(c);
  r.orbit = m.lie == LieCase::OStar ? r.rank / 2 : r.rank;
  r.rank_ok = r.orbit <= orbit_bound(m) && (m.lie != LieCase::OStar || r.rank % 2 == 0);
  r.square_zero = is_zero(mat * mat);
  return r;
}

Report generic_rank_experiment(const OrbitCheckConfig& cfg) {
  if (cfg.samples < 1) throw UsageError("samples must be >= 1");
  if (cfg.coefficient_bound < 1) throw UsageError("coefficient bound must be >= 1");
  QuantizationScheme s = build_scheme(cfg.scheme, cfg.a, cfg.b, cfg.k);
  const SymplecticModel& m = s.model;
  PolyMatrix mu = restricted_moment_map(s);

  Report rep;
  rep.kind = "variety";
  rep.params["scheme"] = scheme_name(cfg.scheme);
  rep.params["params"] = model_spec(m).params_str();
  rep.params["k"] = cfg.k;
  rep.params["samples"] = cfg.samples;
  rep.params["seed"] = cfg.seed;
  rep.params["coefficient_bound"] = cfg.coefficient_bound;

  std::size_t nv = s.lagrangian->size();
  auto checks = parallel_map<OrbitCheck>(cfg.samples, [&](std::size_t i) {
    std::seed_seq seq{std::uint64_t(cfg.seed), std::uint64_t(i)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> dist(-cfg.coefficient_bound, cfg.coefficient_bound);
    std::vector<Scalar> point;
    for (std::size_t v = 0; v < nv; ++v) point.push_back(Scalar(dist(rng)));
    return check_orbit_membership(m, evaluate(mu, point));
  });

  std::size_t max_rank = 0, max_orbit = 0;
  bool all_block = true, all_sym = true;
  auto& block = rep.add("block form [[0, C], [0, 0]]");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i].block_ok) block.failures.push_back("sample " + std::to_string(i));
    all_block = all_block && checks[i].block_ok;
    ++block.pairs_checked;
  }
  auto& sym = rep.add(m.lie == LieCase::Sp ? "C symmetric" : m.lie == LieCase::OStar ? "C antisymmetric" : "C unconstrained");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i].symmetry_ok) sym.failures.push_back("sample " + std::to_string(i));
    all_sym = all_sym && checks[i].symmetry_ok;
    ++sym.pairs_checked;
  }
  auto& rk = rep.add("orbit index <= min(k, r)");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i].rank_ok) rk.failures.push_back("sample " + std::to_string(i) + " rank " + std::to_string(checks[i].rank));
    max_rank = std::max(max_rank, checks[i].rank);
    max_orbit = std::max(max_orbit, checks[i].orbit);
    ++rk.pairs_checked;
  }
  auto& sq = rep.add("M^2 = 0");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i].square_zero) sq.failures.push_back("sample " + std::to_string(i));
    ++sq.pairs_checked;
  }
  std::size_t bound = orbit_bound(m);
  if (is_holomorphic(cfg.scheme)) {
    auto& z = rep.add("mu_C vanishes identically on the Lagrangian");
    for (std::size_t i = 0; i < mu.rows(); ++i)
      for (std::size_t j = 0; j < mu.cols(); ++j) {
        if (!mu(i, j).is_zero()) z.failures.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        ++z.pairs_checked;
      }
  } else {
    auto& att = rep.add("max orbit index attains min(k, r)");
    att.pairs_checked = 1;
    if (max_orbit != bound)
      att.failures.push_back("observed " + std::to_string(max_orbit) + ", expected " + std::to_string(bound));
  }
  if (m.lie == LieCase::OStar) rep.notes.push_back("o*: rank C = 2j, orbit index j bounded by min(k, floor(n/2))");

  rep.data["case"] = case_name(m.lie);
  rep.data["scheme"] = scheme_name(cfg.scheme);
  rep.data["k"] = cfg.k;
  rep.data["r"] = real_rank(m);
  rep.data["m"] = bound;
  rep.data["samples"] = cfg.samples;
  rep.data["max_rank"] = max_rank;
  rep.data["max_orbit_index"] = max_orbit;
  rep.data["all_block_ok"] = all_block;
  rep.data["all_symmetry_ok"] = all_sym;
  return rep;
}

}  // namespace osc
