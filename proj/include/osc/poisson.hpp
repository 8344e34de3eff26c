#pragma once

#include "osc/matrix.hpp"
#include "osc/poly.hpp"

namespace osc {

// Constant antisymmetric bracket tensor P_ab = {u_a, u_b} on a generator table.
class PoissonStructure {
 public:
  PoissonStructure(TablePtr t, DenseMatrix tensor);  // throws UsageError unless antisymmetric

  const TablePtr& table() const { return t_; }
  const DenseMatrix& tensor() const { return p_; }

 private:
  TablePtr t_;
  DenseMatrix p_;
  friend Poly poisson_bracket(const PoissonStructure&, const Poly&, const Poly&);
  std::vector<std::pair<std::size_t, std::size_t>> nz_;
};

// {f, g} = sum_ab P_ab (d_a f)(d_b g)
Poly poisson_bracket(const PoissonStructure& ps, const Poly& f, const Poly& g);

}  // namespace osc
