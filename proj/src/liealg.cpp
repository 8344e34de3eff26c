#include "osc/liealg.hpp"

namespace osc {

std::string case_name(LieCase c) {
  switch (c) {
    case LieCase::Sp: return "sp";
    case LieCase::Gl: return "u";
    case LieCase::OStar: return "ostar";
  }
  return "?";
}

std::string BasisElement::label() const {
  return type + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

DenseMatrix J_matrix(std::size_t n) {
  return block2(zeros(n, n), identity(n), Scalar(-1) * identity(n), zeros(n, n));
}

DenseMatrix S_matrix(std::size_t n) { return block2(zeros(n, n), identity(n), identity(n), zeros(n, n)); }

DenseMatrix I_pq(std::size_t p, std::size_t q) {
  DenseMatrix m = identity(p + q);
  for (std::size_t r = p; r < p + q; ++r) m(r, r) = Scalar(-1);
  return m;
}

namespace {

// E_{r,s} with 1-based indices
DenseMatrix E(std::size_t dim, std::size_t r, std::size_t s) { return unit(dim, r - 1, s - 1); }

const Scalar I = Scalar::i();

}  // namespace

LieAlgebraSpec build_sp(std::size_t n) {
  if (n < 1) throw UsageError("sp: need n >= 1");
  LieAlgebraSpec s;
  s.kind_ = LieCase::Sp;
  s.n_ = n;
  s.ambient_ = 2 * n;
  s.factor_ = Scalar(1, 2);
  std::size_t d = 2 * n;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) s.basis_.push_back({"X0", i, j, E(d, i, j) - E(d, n + j, n + i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) s.basis_.push_back({"X+", i, j, E(d, i, n + j) + E(d, j, n + i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) s.basis_.push_back({"X-", i, j, E(d, n + i, j) + E(d, n + j, i)});
  s.real_ = s.basis_;
  s.finish();
  return s;
}

LieAlgebraSpec build_gl(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1) throw UsageError("u(p,q): need p, q >= 1");
  LieAlgebraSpec s;
  s.kind_ = LieCase::Gl;
  s.p_ = p;
  s.q_ = q;
  std::size_t d = p + q;
  s.ambient_ = d;
  s.factor_ = Scalar(1);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= d; ++j) s.basis_.push_back({"E", i, j, E(d, i, j)});
  auto same_block = [&](std::size_t i, std::size_t j) { return (i <= p) == (j <= p); };
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j)
      if (same_block(i, j)) s.real_.push_back({"Xc", i, j, E(d, i, j) - E(d, j, i)});
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j)
      if (same_block(i, j)) s.real_.push_back({"Yc", i, j, I * (E(d, i, j) + E(d, j, i))});
  for (std::size_t i = 1; i <= p; ++i)
    for (std::size_t j = 1; j <= q; ++j) s.real_.push_back({"Xn", i, j, E(d, i, p + j) + E(d, p + j, i)});
  for (std::size_t i = 1; i <= p; ++i)
    for (std::size_t j = 1; j <= q; ++j) s.real_.push_back({"Yn", i, j, I * (E(d, i, p + j) - E(d, p + j, i))});
  s.finish();
  return s;
}

LieAlgebraSpec build_ostar(std::size_t n) {
  if (n < 1) throw UsageError("o*(2n): need n >= 1");
  LieAlgebraSpec s;
  s.kind_ = LieCase::OStar;
  s.n_ = n;
  std::size_t d = 2 * n;
  s.ambient_ = d;
  s.factor_ = Scalar(1, 2);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) s.basis_.push_back({"X0", i, j, E(d, i, j) - E(d, n + j, n + i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) s.basis_.push_back({"X+", i, j, E(d, i, n + j) - E(d, j, n + i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) s.basis_.push_back({"X-", i, j, E(d, n + j, i) - E(d, n + i, j)});

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      s.real_.push_back({"Xc", i, j, E(d, i, j) - E(d, j, i) + E(d, n + i, n + j) - E(d, n + j, n + i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      s.real_.push_back({"Yc", i, j, I * (E(d, i, j) + E(d, j, i) - E(d, n + i, n + j) - E(d, n + j, n + i))});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      s.real_.push_back({"Xn", i, j, E(d, i, n + j) - E(d, j, n + i) - E(d, n + i, j) + E(d, n + j, i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      s.real_.push_back({"Yn", i, j, I * (E(d, i, n + j) - E(d, j, n + i) + E(d, n + i, j) - E(d, n + j, i))});
  s.finish();
  return s;
}

LieAlgebraSpec build_basis(LieCase c, std::size_t a, std::size_t b) {
  switch (c) {
    case LieCase::Sp: return build_sp(a);
    case LieCase::Gl: return build_gl(a, b);
    case LieCase::OStar: return build_ostar(a);
  }
  throw UsageError("unknown case");
}

Scalar LieAlgebraSpec::form(const DenseMatrix& x, const DenseMatrix& y) const {
  if (x.rows() != ambient_ || y.rows() != ambient_) throw UsageError("trace_form: size mismatch");
  return factor_ * trace(x * y);
}

Scalar trace_form(const LieAlgebraSpec& spec, const DenseMatrix& x, const DenseMatrix& y) {
  return spec.form(x, y);
}

std::vector<DenseMatrix> dual_basis(const LieAlgebraSpec& spec) { return spec.dual_basis(); }

bool LieAlgebraSpec::contains(const DenseMatrix& m) const {
  if (m.rows() != ambient_ || m.cols() != ambient_) return false;
  switch (kind_) {
    case LieCase::Sp: {
      DenseMatrix j = J_matrix(n_);
      return is_zero(transpose(m) * j + j * m);
    }
    case LieCase::OStar: {
      DenseMatrix s = S_matrix(n_);
      return is_zero(transpose(m) * s + s * m);
    }
    case LieCase::Gl: return true;
  }
  return false;
}

bool LieAlgebraSpec::real_form_contains(const DenseMatrix& m) const {
  if (!contains(m)) return false;
  switch (kind_) {
    case LieCase::Sp:
      for (auto& x : m.data())
        if (!x.is_real()) return false;
      return true;
    case LieCase::Gl: {
      DenseMatrix ip = I_pq(p_, q_);
      return is_zero(conj_transpose(m) * ip + ip * m);
    }
    case LieCase::OStar: {
      DenseMatrix ip = I_pq(n_, n_);
      return is_zero(conj_transpose(m) * ip + ip * m);
    }
  }
  return false;
}

std::vector<Scalar> LieAlgebraSpec::coordinates(const DenseMatrix& m) const {
  std::vector<Scalar> c;
  c.reserve(dim());
  DenseMatrix back = zeros(ambient_, ambient_);
  for (std::size_t a = 0; a < dim(); ++a) {
    c.push_back(form(m, dual_[a]));
    if (!c.back().is_zero()) back = back + c.back() * basis_[a].m;
  }
  if (back != m) throw DomainError("coordinates: matrix is not in the Lie algebra");
  return c;
}

void LieAlgebraSpec::finish() {
  std::size_t d = basis_.size();
  DenseMatrix gram = zeros(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) gram(a, b) = form(basis_[a].m, basis_[b].m);
  DenseMatrix ginv;
  try {
    ginv = inverse(gram);
  } catch (const DomainError&) {
    throw InternalError("Gram matrix of the trace form is singular");
  }
  // B(X_a, X_b^v) = delta_ab with X_b^v = sum_c (G^-1)_{cb} X_c
  dual_.assign(d, zeros(ambient_, ambient_));
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t c = 0; c < d; ++c)
      if (!ginv(c, b).is_zero()) dual_[b] = dual_[b] + ginv(c, b) * basis_[c].m;

  sc_.assign(d * d, {});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      DenseMatrix br = bracket(basis_[a].m, basis_[b].m);
      std::vector<Scalar> c;
      try {
        c = coordinates(br);
      } catch (const DomainError&) {
        throw InternalError("basis not closed under bracket: " + basis_[a].label() + ", " + basis_[b].label());
      }
      for (std::size_t g = 0; g < d; ++g)
        if (!c[g].is_zero()) sc_[a * d + b].emplace_back(g, c[g]);
    }
}

std::string LieAlgebraSpec::params_str() const {
  if (kind_ == LieCase::Gl) return "p=" + std::to_string(p_) + ",q=" + std::to_string(q_);
  return "n=" + std::to_string(n_);
}

}  // namespace osc
