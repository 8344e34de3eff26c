#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osc/matrix.hpp"

namespace osc {

enum class LieCase { Sp, Gl, OStar };

std::string case_name(LieCase c);  // "sp", "u", "ostar"

// One basis matrix with its family tag ("X0", "X+", "X-", "E", "Xc", "Yc", "Xn", "Yn")
// and 1-based indices.
struct BasisElement {
  std::string type;
  std::size_t i = 0, j = 0;
  DenseMatrix m;
  std::string label() const;
};

using StructureConstants = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

// Matrix realization of g (complex basis) and g0 (real basis) for one case.
class LieAlgebraSpec {
 public:
  LieCase kind() const { return kind_; }
  std::size_t n() const { return n_; }  // sp, ostar
  std::size_t p() const { return p_; }  // gl
  std::size_t q() const { return q_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Scalar& form_factor() const { return factor_; }

  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<BasisElement>& real_basis() const { return real_; }
  const std::vector<DenseMatrix>& dual_basis() const { return dual_; }
  // c[a*dim+b] lists (gamma, c^gamma_ab) with [X_a, X_b] = sum c^gamma_ab X_gamma.
  const StructureConstants& structure_constants() const { return sc_; }

  Scalar form(const DenseMatrix& x, const DenseMatrix& y) const;
  // Coordinates in the complex basis; throws DomainError if m is not in g.
  std::vector<Scalar> coordinates(const DenseMatrix& m) const;
  bool contains(const DenseMatrix& m) const;       // defining relation of g
  bool real_form_contains(const DenseMatrix& m) const;  // relation of g0

  std::string params_str() const;

 private:
  friend LieAlgebraSpec build_sp(std::size_t);
  friend LieAlgebraSpec build_gl(std::size_t, std::size_t);
  friend LieAlgebraSpec build_ostar(std::size_t);
  void finish();

  LieCase kind_ = LieCase::Sp;
  std::size_t n_ = 0, p_ = 0, q_ = 0, ambient_ = 0;
  Scalar factor_;
  std::vector<BasisElement> basis_, real_;
  std::vector<DenseMatrix> dual_;
  StructureConstants sc_;
};

LieAlgebraSpec build_sp(std::size_t n);
LieAlgebraSpec build_gl(std::size_t p, std::size_t q);
LieAlgebraSpec build_ostar(std::size_t n);
// a = n for Sp/OStar, a = p and b = q for Gl.
LieAlgebraSpec build_basis(LieCase c, std::size_t a, std::size_t b = 0);

Scalar trace_form(const LieAlgebraSpec& spec, const DenseMatrix& x, const DenseMatrix& y);
std::vector<DenseMatrix> dual_basis(const LieAlgebraSpec& spec);

DenseMatrix J_matrix(std::size_t n);              // [[0, 1],[-1, 0]] in n-blocks
DenseMatrix S_matrix(std::size_t n);              // [[0, 1],[1, 0]] in n-blocks
DenseMatrix I_pq(std::size_t p, std::size_t q);   // diag(1_p, -1_q)

}  // namespace osc
