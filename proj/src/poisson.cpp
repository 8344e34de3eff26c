#include "osc/poisson.hpp"

namespace osc {

PoissonStructure::PoissonStructure(TablePtr t, DenseMatrix tensor) : t_(std::move(t)), p_(std::move(tensor)) {
  std::size_t n = t_->size();
  if (p_.rows() != n || p_.cols() != n) throw UsageError("PoissonStructure: tensor shape mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (p_(a, b) != -p_(b, a)) throw UsageError("PoissonStructure: tensor not antisymmetric");
      if (!p_(a, b).is_zero()) nz_.emplace_back(a, b);
    }
}

Poly poisson_bracket(const PoissonStructure& ps, const Poly& f, const Poly& g) {
  require_same_table(ps.t_, f.table(), "poisson_bracket");
  require_same_table(ps.t_, g.table(), "poisson_bracket");
  std::size_t n = ps.t_->size();
  std::vector<Poly> df, dg;
  df.reserve(n);
  dg.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    df.push_back(partial_derivative(f, v));
    dg.push_back(partial_derivative(g, v));
  }
  Poly r(ps.t_);
  for (auto [a, b] : ps.nz_) {
    if (df[a].is_zero() || dg[b].is_zero()) continue;
    r += (df[a] * dg[b]) * ps.p_(a, b);
  }
  return r;
}

}  // namespace osc
