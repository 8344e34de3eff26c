#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osc/quantize.hpp"

namespace osc {

enum class DualGroup { O, GL, GLTwisted, Sp };

std::string dual_group_name(DualGroup g);
DualGroup dual_group(SchemeId s);

// Lagrangian coordinates arranged as matrices on which G' acts from the right.
// Twisted blocks transform as w -> w g^-T.
struct CoordBlock {
  GenMatrix u;  // indices into the Lagrangian table
  bool twisted = false;
};
std::vector<CoordBlock> coordinate_blocks(const QuantizationScheme& s);

struct DualActionSpec {
  DualGroup group = DualGroup::O;
  std::size_t k = 0;     // copies
  std::size_t size = 0;  // matrix size of g' (k, or 2k for Sp_k)
  std::vector<BasisElement> basis;
  std::vector<WeylOp> ops;  // rho'(basis[i])
  // Borel data used by the decomposition. For O_k these are complex combinations
  // taken in an isotropic basis, not members of `basis`.
  std::vector<DenseMatrix> cartan, raising;
  std::string convention;
};

// rho'(Y) = sum u_{ia} Y_{ab} d/du_{ib} on plain blocks, -sum w_{jb} Y_{ab} d/dw_{ja} on twisted ones.
WeylOp rho_prime(const QuantizationScheme& s, const DenseMatrix& y);
DualActionSpec derived_dual_action(const QuantizationScheme& s);

// f(u g) on plain blocks, f(w g^-T) on twisted ones. UsageError when g is singular.
Poly right_translate(const QuantizationScheme& s, const Poly& f, const DenseMatrix& g);

Report verify_commutant(const QuantizationScheme& s, const LieAlgebraSpec& spec, const DualActionSpec& dual);
Report verify_dual_homomorphism(const QuantizationScheme& s, const DualActionSpec& dual);
// rho(g)^-1 d_{ia} rho(g) = sum_b g_{ab} d_{ib} and rho(g)^-1 u_{ia} rho(g) = sum_b (g^-1)_{ba} u_{ib},
// checked on every monomial of degree <= d. Schemes with twisted blocks are rejected.
Report verify_adjoint_identities(const QuantizationScheme& s, const std::vector<DenseMatrix>& gs, unsigned d);
// Schrodinger scheme: pi(X) maps even (odd) polynomials to even (odd) ones, up to degree d.
Report parity_decomposition_check(std::size_t n, std::size_t k, unsigned d);

struct JointVector {
  unsigned degree = 0;
  std::vector<Scalar> weight_g, weight_gprime;
  Poly f;
};

struct Decomposition {
  std::vector<std::size_t> slice_dims;  // monomials per degree 0..d
  std::vector<JointVector> vectors;
  std::vector<std::string> g_cartan, g_raising;
  std::string gprime_convention;
};

constexpr std::size_t kDefaultSliceCap = 20000;

// Polynomials of degree <= d killed by pi of the degree-lowering and upper triangular
// degree-preserving elements of g and by rho' of the g' raising operators, split into
// joint Cartan eigenspaces. SizeError above `cap` monomials.
Decomposition joint_highest_weight_vectors(const QuantizationScheme& s, const LieAlgebraSpec& spec,
                                           const DualActionSpec& dual, unsigned d,
                                           std::size_t cap = kDefaultSliceCap);
Report decomposition_report(const QuantizationScheme& s, const Decomposition& dec);

}  // namespace osc
