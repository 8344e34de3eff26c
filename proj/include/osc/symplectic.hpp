#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osc/liealg.hpp"
#include "osc/poisson.hpp"
#include "osc/report.hpp"
#include "osc/weyl.hpp"

namespace osc {

enum class ModelCase { SpReal, SpFock, UpqComplex, OStarComplex };

std::string model_name(ModelCase m);

// rows x cols matrix of generator indices
struct GenMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> idx;
  std::size_t operator()(std::size_t r, std::size_t c) const { return idx[r * cols + c]; }
};

// coeff * left * (col * middle * row^T) * right. Empty left/middle/right mean identity.
// Products of generators are taken in the order column entry, then row entry.
struct OuterTerm {
  Scalar coeff;
  DenseMatrix left;
  GenMatrix col;
  DenseMatrix middle;
  GenMatrix row;
  DenseMatrix right;
};

struct SymplecticModel {
  ModelCase kind = ModelCase::SpReal;
  LieCase lie = LieCase::Sp;
  std::size_t n = 0, p = 0, q = 0, k = 0;
  std::size_t ambient = 0;
  TablePtr table;
  PoissonStructure poisson;
  DenseMatrix omega;          // omega(d_a, d_b) from the stated symplectic form
  std::vector<int> epsilon;   // per ambient row (complex models), all 1 for SpFock
  GenMatrix v;                // ambient x k: [x; y], [z; zb] (SpFock) or z
  std::optional<GenMatrix> vbar;  // zb for UpqComplex / OStarComplex
  std::vector<std::size_t> conj_of;  // formal conjugate generator (identity for SpReal)
  std::vector<OuterTerm> moment_terms;

  SymplecticModel(TablePtr t, DenseMatrix p) : table(t), poisson(std::move(t), std::move(p)) {}
};

// a = n for sp/ostar models, (a, b) = (p, q) for UpqComplex. k >= 0.
SymplecticModel build_model(ModelCase c, std::size_t a, std::size_t b, std::size_t k);
LieAlgebraSpec model_spec(const SymplecticModel& m);

// Evaluates factored outer-product terms over any ring (Poly, WeylOp) given per-generator images.
template <class R>
Matrix<R> eval_outer(const std::vector<OuterTerm>& terms, std::size_t dim, const std::vector<R>& gens, const R& zero);

PolyMatrix classical_moment_map(const SymplecticModel& m);
// The o* block form built from v+ = [v', conj(v'')]; UsageError for other models.
std::vector<OuterTerm> ostar_block_terms(const SymplecticModel& m);
PolyMatrix ostar_block_moment_map(const SymplecticModel& m);

// factor * tr(mu X)
Poly hamiltonian(const SymplecticModel& m, const LieAlgebraSpec& spec, const DenseMatrix& x);
Poly pairing(const PolyMatrix& mu, const LieAlgebraSpec& spec, const DenseMatrix& x);

// Matrix on generator coordinates induced by v -> M v (and zb -> conj(M) zb).
DenseMatrix lift(const SymplecticModel& m, const DenseMatrix& mat);
// X_W = -sum_b (lift(X) u)_b d_b
WeylOp induced_vector_field(const SymplecticModel& m, const DenseMatrix& x);

Report verify_moment_defining_equation(const SymplecticModel& m, const LieAlgebraSpec& spec);
Report verify_classical_homomorphism(const SymplecticModel& m, const LieAlgebraSpec& spec);
// {H_X, mu} = [mu, X] entrywise for every real basis X.
Report verify_equivariance(const SymplecticModel& m, const LieAlgebraSpec& spec);
// mu(g u) = g mu(u) g^-1 for a supplied group element g.
bool check_group_equivariance(const SymplecticModel& m, const DenseMatrix& g);

DenseMatrix cayley_gamma(std::size_t n);  // (1/2)[[1, 1], [-i, i]]
// samples: n x k matrices of z values. Checks mu_Fock(v) = gamma^-1 mu_SpReal(gamma v) gamma.
Report verify_cayley_diagram(std::size_t n, std::size_t k, const std::vector<DenseMatrix>& samples);
// Same identity as polynomial matrices in z, zb.
bool verify_cayley_symbolic(std::size_t n, std::size_t k);

// --- template implementation

template <class R>
Matrix<R> eval_outer(const std::vector<OuterTerm>& terms, std::size_t dim, const std::vector<R>& gens, const R& zero) {
  Matrix<R> out(dim, dim, zero);
  for (auto& t : terms) {
    std::size_t rc = t.col.rows, rr = t.row.rows, kk = t.col.cols;
    if (t.row.cols != kk) throw UsageError("eval_outer: column count mismatch");
    Matrix<R> inner(rc, rr, zero);
    for (std::size_t r = 0; r < rc; ++r)
      for (std::size_t s = 0; s < rr; ++s) {
        R acc = zero;
        for (std::size_t a = 0; a < kk; ++a)
          for (std::size_t b = 0; b < kk; ++b) {
            Scalar w = t.middle.rows() ? t.middle(a, b) : Scalar(a == b ? 1 : 0);
            if (w.is_zero()) continue;
            acc += (gens[t.col(r, a)] * gens[t.row(s, b)]) * w;
          }
        inner(r, s) = std::move(acc);
      }
    std::size_t lr = t.left.rows() ? t.left.rows() : rc;
    Matrix<R> mid(lr, rr, zero);
    for (std::size_t i = 0; i < lr; ++i)
      for (std::size_t s = 0; s < rr; ++s) {
        if (!t.left.rows()) {
          mid(i, s) = inner(i, s);
          continue;
        }
        for (std::size_t r = 0; r < rc; ++r)
          if (!t.left(i, r).is_zero()) mid(i, s) += inner(r, s) * t.left(i, r);
      }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        if (!t.right.rows()) {
          out(i, j) += mid(i, j) * t.coeff;
          continue;
        }
        for (std::size_t s = 0; s < rr; ++s)
          if (!t.right(s, j).is_zero()) out(i, j) += mid(i, s) * (t.right(s, j) * t.coeff);
      }
  }
  return out;
}

}  // namespace osc
