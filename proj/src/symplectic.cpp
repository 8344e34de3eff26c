#include "osc/symplectic.hpp"

#include "osc/parallel.hpp"

namespace osc {

std::string model_name(ModelCase m) {
  switch (m) {
    case ModelCase::SpReal: return "sp-real";
    case ModelCase::SpFock: return "sp-fock";
    case ModelCase::UpqComplex: return "upq";
    case ModelCase::OStarComplex: return "ostar";
  }
  return "?";
}

namespace {

const Scalar I = Scalar::i();

GenMatrix grid(std::size_t rows, std::size_t cols, std::size_t offset) {
  GenMatrix g{rows, cols, {}};
  for (std::size_t i = 0; i < rows * cols; ++i) g.idx.push_back(offset + i);
  return g;
}

GenMatrix stack(const GenMatrix& top, const GenMatrix& bottom) {
  GenMatrix g{top.rows + bottom.rows, top.cols, top.idx};
  g.idx.insert(g.idx.end(), bottom.idx.begin(), bottom.idx.end());
  return g;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Complex coordinates z (rows x k) then zb (rows x k), with signs eps.
SymplecticModel complex_model(ModelCase c, std::size_t rows, std::size_t k, const std::vector<int>& eps,
                              bool vbar_separate) {
  auto t = GeneratorTable::make(concat(grid_labels("z", rows, k), grid_labels("zb", rows, k)));
  std::size_t half = rows * k, N = 2 * half;
  DenseMatrix P = zeros(N, N), W = zeros(N, N);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t z = r * k + a, zb = half + z;
      Scalar e(eps[r]);
      P(z, zb) = Scalar(2) * I * e;  // {z, zb} = 2 i eps
      P(zb, z) = -P(z, zb);
      W(z, zb) = Scalar(1, 2) * I * e;  // omega = sum eps (i/2) dz ^ dzb
      W(zb, z) = -W(z, zb);
    }
  SymplecticModel m(t, P);
  m.kind = c;
  m.omega = W;
  m.epsilon = eps;
  m.k = k;
  GenMatrix z = grid(rows, k, 0), zb = grid(rows, k, half);
  if (vbar_separate) {
    m.v = z;
    m.vbar = zb;
  } else {
    m.v = stack(z, zb);
  }
  m.conj_of.resize(N);
  for (std::size_t i = 0; i < half; ++i) {
    m.conj_of[i] = half + i;
    m.conj_of[half + i] = i;
  }
  return m;
}

}  // namespace

SymplecticModel build_model(ModelCase c, std::size_t a, std::size_t b, std::size_t k) {
  switch (c) {
    case ModelCase::SpReal: {
      std::size_t n = a;
      if (n < 1) throw UsageError("sp model: need n >= 1");
      auto t = GeneratorTable::make(concat(grid_labels("x", n, k), grid_labels("y", n, k)));
      std::size_t half = n * k, N = 2 * half;
      DenseMatrix P = zeros(N, N), W = zeros(N, N);
      for (std::size_t i = 0; i < half; ++i) {
        P(i, half + i) = Scalar(-1);  // {x, y} = -1
        P(half + i, i) = Scalar(1);
        W(i, half + i) = Scalar(1);  // omega = sum dx ^ dy
        W(half + i, i) = Scalar(-1);
      }
      SymplecticModel m(t, P);
      m.kind = c;
      m.lie = LieCase::Sp;
      m.n = n;
      m.k = k;
      m.ambient = 2 * n;
      m.omega = W;
      m.v = grid(2 * n, k, 0);
      m.conj_of.resize(N);
      for (std::size_t i = 0; i < N; ++i) m.conj_of[i] = i;
      m.moment_terms.push_back({Scalar(1), {}, m.v, {}, m.v, J_matrix(n)});
      return m;
    }
    case ModelCase::SpFock: {
      std::size_t n = a;
      if (n < 1) throw UsageError("sp model: need n >= 1");
      SymplecticModel m = complex_model(c, n, k, std::vector<int>(n, 1), false);
      m.lie = LieCase::Sp;
      m.n = n;
      m.ambient = 2 * n;
      m.moment_terms.push_back({Scalar(1, 2) * I, {}, m.v, {}, m.v, J_matrix(n)});
      return m;
    }
    case ModelCase::UpqComplex: {
      std::size_t p = a, q = b;
      if (p < 1 || q < 1) throw UsageError("u(p,q) model: need p, q >= 1");
      std::vector<int> eps(p + q, 1);
      for (std::size_t r = p; r < p + q; ++r) eps[r] = -1;
      SymplecticModel m = complex_model(c, p + q, k, eps, true);
      m.lie = LieCase::Gl;
      m.p = p;
      m.q = q;
      m.ambient = p + q;
      m.moment_terms.push_back({Scalar(-1, 2) * I, {}, m.v, {}, *m.vbar, I_pq(p, q)});
      return m;
    }
    case ModelCase::OStarComplex: {
      std::size_t n = a;
      if (n < 1) throw UsageError("o* model: need n >= 1");
      std::vector<int> eps(2 * n, 1);
      for (std::size_t r = n; r < 2 * n; ++r) eps[r] = -1;
      SymplecticModel m = complex_model(c, 2 * n, k, eps, true);
      m.lie = LieCase::OStar;
      m.n = n;
      m.p = m.q = n;
      m.ambient = 2 * n;
      DenseMatrix S = S_matrix(n), Inn = I_pq(n, n);
      // -(i/2)(z zb^T I - S I zb z^T S)
      m.moment_terms.push_back({Scalar(-1, 2) * I, {}, m.v, {}, *m.vbar, Inn});
      m.moment_terms.push_back({Scalar(1, 2) * I, S * Inn, *m.vbar, {}, m.v, S});
      return m;
    }
  }
  throw UsageError("unknown model");
}

LieAlgebraSpec model_spec(const SymplecticModel& m) {
  switch (m.lie) {
    case LieCase::Sp: return build_sp(m.n);
    case LieCase::Gl: return build_gl(m.p, m.q);
    case LieCase::OStar: return build_ostar(m.n);
  }
  throw UsageError("unknown case");
}

namespace {

std::vector<Poly> variables(const TablePtr& t) {
  std::vector<Poly> g;
  for (std::size_t v = 0; v < t->size(); ++v) g.push_back(Poly::variable(t, v));
  return g;
}

void require_case(const SymplecticModel& m, const LieAlgebraSpec& spec) {
  if (m.lie != spec.kind() || m.ambient != spec.ambient_dim())
    throw UsageError("model and Lie algebra spec do not match");
}

}  // namespace

PolyMatrix classical_moment_map(const SymplecticModel& m) {
  return eval_outer(m.moment_terms, m.ambient, variables(m.table), Poly(m.table));
}

std::vector<OuterTerm> ostar_block_terms(const SymplecticModel& m) {
  if (m.kind != ModelCase::OStarComplex) throw UsageError("block form only exists for the o* model");
  std::size_t n = m.n, k = m.k;
  GenMatrix vp{n, 2 * k, {}}, vpb{n, 2 * k, {}};
  vp.idx.resize(n * 2 * k);
  vpb.idx.resize(n * 2 * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < k; ++a) {
      vp.idx[i * 2 * k + a] = m.v(i, a);
      vp.idx[i * 2 * k + k + a] = (*m.vbar)(n + i, a);
      vpb.idx[i * 2 * k + a] = (*m.vbar)(i, a);
      vpb.idx[i * 2 * k + k + a] = m.v(n + i, a);
    }
  DenseMatrix P1 = zeros(2 * n, n), P2 = zeros(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    P1(i, i) = Scalar(1);
    P2(n + i, i) = Scalar(1);
  }
  DenseMatrix Jk = J_matrix(k);
  Scalar h = Scalar(1, 2) * I;
  return {
      {-h, P1, vp, {}, vpb, transpose(P1)},
      {h, P1, vp, Jk, vp, transpose(P2)},
      {h, P2, vpb, Jk, vpb, transpose(P1)},
      {h, P2, vpb, {}, vp, transpose(P2)},
  };
}

PolyMatrix ostar_block_moment_map(const SymplecticModel& m) {
  return eval_outer(ostar_block_terms(m), m.ambient, variables(m.table), Poly(m.table));
}

Poly pairing(const PolyMatrix& mu, const LieAlgebraSpec& spec, const DenseMatrix& x) {
  if (mu.rows() != spec.ambient_dim() || x.rows() != spec.ambient_dim()) throw UsageError("pairing: size mismatch");
  Poly h(mu(0, 0).table());
  for (std::size_t r = 0; r < mu.rows(); ++r)
    for (std::size_t s = 0; s < mu.cols(); ++s)
      if (!x(s, r).is_zero()) h += mu(r, s) * x(s, r);
  return h * spec.form_factor();
}

Poly hamiltonian(const SymplecticModel& m, const LieAlgebraSpec& spec, const DenseMatrix& x) {
  require_case(m, spec);
  return pairing(classical_moment_map(m), spec, x);
}

DenseMatrix lift(const SymplecticModel& m, const DenseMatrix& mat) {
  if (mat.rows() != m.ambient || mat.cols() != m.ambient) throw UsageError("lift: size mismatch");
  std::size_t N = m.table->size();
  DenseMatrix G = zeros(N, N);
  for (std::size_t a = 0; a < m.k; ++a)
    for (std::size_t r = 0; r < m.ambient; ++r)
      for (std::size_t s = 0; s < m.ambient; ++s) {
        G(m.v(r, a), m.v(s, a)) = mat(r, s);
        if (m.vbar) G((*m.vbar)(r, a), (*m.vbar)(s, a)) = mat(r, s).conj();
      }
  return G;
}

WeylOp induced_vector_field(const SymplecticModel& m, const DenseMatrix& x) {
  DenseMatrix A = lift(m, x);
  WeylOp f(m.table);
  for (std::size_t b = 0; b < A.rows(); ++b)
    for (std::size_t c = 0; c < A.cols(); ++c)
      if (!A(b, c).is_zero()) f.add_term(Monomial::var(c), Monomial::var(b), -A(b, c));
  return f;
}

namespace {

Report base_report(const std::string& kind, const SymplecticModel& m, const LieAlgebraSpec& spec) {
  Report r;
  r.kind = kind;
  r.params["case"] = model_name(m.kind);
  r.params["params"] = spec.params_str();
  r.params["k"] = m.k;
  return r;
}

}  // namespace

Report verify_moment_defining_equation(const SymplecticModel& m, const LieAlgebraSpec& spec) {
  require_case(m, spec);
  Report rep = base_report("moment_defining_equation", m, spec);
  auto& chk = rep.add("dH_X = iota(X_W) omega");
  PolyMatrix mu = classical_moment_map(m);
  auto vars = variables(m.table);
  std::size_t N = m.table->size();
  auto& basis = spec.real_basis();
  auto fails = parallel_map<std::vector<std::string>>(basis.size(), [&](std::size_t i) {
    std::vector<std::string> out;
    Poly h = pairing(mu, spec, basis[i].m);
    DenseMatrix A = lift(m, basis[i].m);
    std::vector<Poly> c(N, Poly(m.table));
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t e = 0; e < N; ++e)
        if (!A(b, e).is_zero()) c[b] -= vars[e] * A(b, e);
    for (std::size_t a = 0; a < N; ++a) {
      Poly rhs(m.table);
      for (std::size_t b = 0; b < N; ++b)
        if (!m.omega(b, a).is_zero()) rhs += c[b] * m.omega(b, a);
      if (partial_derivative(h, a) != rhs) out.push_back(basis[i].label() + " at " + m.table->label(a));
    }
    return out;
  });
  chk.pairs_checked = basis.size() * N;
  for (auto& f : fails) chk.failures.insert(chk.failures.end(), f.begin(), f.end());
  return rep;
}

Report verify_classical_homomorphism(const SymplecticModel& m, const LieAlgebraSpec& spec) {
  require_case(m, spec);
  Report rep = base_report("classical_homomorphism", m, spec);
  auto& chk = rep.add("{H_X, H_Y} = H_[X,Y]");
  PolyMatrix mu = classical_moment_map(m);
  auto& basis = spec.real_basis();
  std::size_t d = basis.size();
  std::vector<Poly> H;
  for (auto& b : basis) H.push_back(pairing(mu, spec, b.m));
  auto fails = parallel_map<std::vector<std::string>>(d, [&](std::size_t a) {
    std::vector<std::string> out;
    for (std::size_t b = 0; b < d; ++b) {
      Poly lhs = poisson_bracket(m.poisson, H[a], H[b]);
      Poly rhs = pairing(mu, spec, bracket(basis[a].m, basis[b].m));
      if (lhs != rhs) out.push_back(basis[a].label() + ", " + basis[b].label());
    }
    return out;
  });
  chk.pairs_checked = d * d;
  for (auto& f : fails) chk.failures.insert(chk.failures.end(), f.begin(), f.end());
  return rep;
}

Report verify_equivariance(const SymplecticModel& m, const LieAlgebraSpec& spec) {
  require_case(m, spec);
  Report rep = base_report("infinitesimal_equivariance", m, spec);
  auto& chk = rep.add("{H_X, mu} = [mu, X]");
  PolyMatrix mu = classical_moment_map(m);
  auto& basis = spec.real_basis();
  std::size_t dim = m.ambient;
  Poly zero(m.table);
  auto fails = parallel_map<std::vector<std::string>>(basis.size(), [&](std::size_t i) {
    std::vector<std::string> out;
    const DenseMatrix& X = basis[i].m;
    Poly h = pairing(mu, spec, X);
    PolyMatrix rhs = mul(mu, X, zero);
    PolyMatrix xm = mul(X, mu, zero);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s)
        if (poisson_bracket(m.poisson, h, mu(r, s)) != rhs(r, s) - xm(r, s))
          out.push_back(basis[i].label() + " entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ")");
    return out;
  });
  chk.pairs_checked = basis.size() * dim * dim;
  for (auto& f : fails) chk.failures.insert(chk.failures.end(), f.begin(), f.end());
  return rep;
}

bool check_group_equivariance(const SymplecticModel& m, const DenseMatrix& g) {
  DenseMatrix G = lift(m, g);
  auto vars = variables(m.table);
  std::vector<Poly> images(vars.size(), Poly(m.table));
  for (std::size_t b = 0; b < G.rows(); ++b)
    for (std::size_t c = 0; c < G.cols(); ++c)
      if (!G(b, c).is_zero()) images[b] += vars[c] * G(b, c);
  PolyMatrix mu = classical_moment_map(m);
  Poly zero(m.table);
  PolyMatrix want = mul(mul(g, mu, zero), inverse(g), zero);
  for (std::size_t r = 0; r < mu.rows(); ++r)
    for (std::size_t s = 0; s < mu.cols(); ++s)
      if (substitute(mu(r, s), images, m.table) != want(r, s)) return false;
  return true;
}

DenseMatrix cayley_gamma(std::size_t n) {
  DenseMatrix id = identity(n);
  return Scalar(1, 2) * block2(id, id, -I * id, I * id);
}

namespace {

DenseMatrix eval_matrix(const PolyMatrix& mu, const std::vector<Scalar>& pt) {
  DenseMatrix out = zeros(mu.rows(), mu.cols());
  for (std::size_t r = 0; r < mu.rows(); ++r)
    for (std::size_t s = 0; s < mu.cols(); ++s) out(r, s) = evaluate(mu(r, s), pt);
  return out;
}

}  // namespace

Report verify_cayley_diagram(std::size_t n, std::size_t k, const std::vector<DenseMatrix>& samples) {
  SymplecticModel fock = build_model(ModelCase::SpFock, n, 0, k);
  SymplecticModel real = build_model(ModelCase::SpReal, n, 0, k);
  PolyMatrix mu_f = classical_moment_map(fock), mu_r = classical_moment_map(real);
  DenseMatrix g = cayley_gamma(n), ginv = inverse(g);
  Report rep;
  rep.kind = "cayley_diagram";
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["samples"] = samples.size();
  rep.params["convention"] = "mu_fock(v) = gamma^-1 mu(gamma v) gamma";
  auto& chk = rep.add("cayley square commutes");
  std::size_t literal = 0;
  std::size_t half = n * k;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const DenseMatrix& z = samples[s];
    if (z.rows() != n || z.cols() != k) throw UsageError("cayley sample has wrong shape");
    std::vector<Scalar> pf(2 * half), pr(2 * half);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < k; ++a) {
        Scalar zv = z(i, a), zc = zv.conj();
        pf[i * k + a] = zv;
        pf[half + i * k + a] = zc;
        pr[i * k + a] = Scalar(1, 2) * (zv + zc);
        pr[half + i * k + a] = Scalar(-1, 2) * I * (zv - zc);
      }
    DenseMatrix lhs = eval_matrix(mu_f, pf), base = eval_matrix(mu_r, pr);
    if (lhs != ginv * base * g) chk.failures.push_back("sample " + std::to_string(s));
    if (lhs == g * base * ginv) ++literal;
    ++chk.pairs_checked;
  }
  rep.notes.push_back("samples where gamma mu gamma^-1 also matches: " + std::to_string(literal) + "/" +
                      std::to_string(samples.size()));
  return rep;
}

bool verify_cayley_symbolic(std::size_t n, std::size_t k) {
  SymplecticModel fock = build_model(ModelCase::SpFock, n, 0, k);
  SymplecticModel real = build_model(ModelCase::SpReal, n, 0, k);
  auto z = variables(fock.table);
  std::size_t half = n * k;
  std::vector<Poly> images;
  for (std::size_t i = 0; i < half; ++i) images.push_back((z[i] + z[half + i]) * Scalar(1, 2));
  for (std::size_t i = 0; i < half; ++i) images.push_back((z[i] - z[half + i]) * (Scalar(-1, 2) * I));
  PolyMatrix mu_r = classical_moment_map(real), mu_f = classical_moment_map(fock);
  Poly zero(fock.table);
  PolyMatrix pulled(2 * n, 2 * n, zero);
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (std::size_t s = 0; s < 2 * n; ++s) pulled(r, s) = substitute(mu_r(r, s), images, fock.table);
  DenseMatrix g = cayley_gamma(n);
  return mul(mul(inverse(g), pulled, zero), g, zero) == mu_f;
}

}  // namespace osc
