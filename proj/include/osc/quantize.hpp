#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osc/symplectic.hpp"

namespace osc {

enum class SchemeId { SpSchrodinger, SpFock, UpqHolomorphic, UpqMixed, OStarMixed, OStarHolomorphic };

std::string scheme_name(SchemeId s);  // e.g. "sp-schrodinger"
const std::vector<SchemeId>& all_schemes();
ModelCase scheme_model(SchemeId s);
// Degree-preserving (finite-dimensional) schemes.
bool is_holomorphic(SchemeId s);

struct QuantizationScheme {
  SchemeId id;
  SymplecticModel model;
  TablePtr lagrangian;             // coordinates on the Lagrangian copy V^k
  std::vector<WeylOp> assignment;  // per classical generator
  std::vector<Poly> restriction;   // classical generator -> coordinate on V^k, or 0

  QuantizationScheme(SchemeId s, SymplecticModel m) : id(s), model(std::move(m)) {}
};

// a = n for sp/ostar, (a, b) = (p, q) for the u schemes.
QuantizationScheme build_scheme(SchemeId id, std::size_t a, std::size_t b, std::size_t k);

OpMatrix quantized_moment_map(const QuantizationScheme& s);
// o* mixed only: the same operator matrix built from the n x 2k block expression.
OpMatrix quantized_block_moment_map(const QuantizationScheme& s);

// i * form_factor * tr(mu_hat X)
WeylOp pi(const OpMatrix& mu_hat, const LieAlgebraSpec& spec, const DenseMatrix& x);
WeylOp pi(const QuantizationScheme& s, const LieAlgebraSpec& spec, const DenseMatrix& x);
// pi over the complex basis, in basis order
std::vector<WeylOp> pi_basis(const QuantizationScheme& s, const LieAlgebraSpec& spec);

// [u_a^, u_b^] = -i {u_a, u_b} for all generator pairs.
Report verify_ccr(const QuantizationScheme& s);
Report verify_quantum_homomorphism(const QuantizationScheme& s, const LieAlgebraSpec& spec);
// Holomorphic schemes: shifts in {0}; oscillator schemes: shifts in {-2, 0, 2}, all three present.
Report verify_degree_shifts(const QuantizationScheme& s, const LieAlgebraSpec& spec);

// One closed-form entry of the pi table. `corrected` is set when the reference form is known
// to be wrong; the note says how.
struct ClosedFormEntry {
  std::string label;
  WeylOp reference;
  std::optional<WeylOp> corrected;
  std::string note;
};
std::vector<ClosedFormEntry> closed_form_table(const QuantizationScheme& s, const LieAlgebraSpec& spec);
// Fails on any mismatch not covered by a matching correction. Matches of a correction are
// listed under data["deviations"].
Report verify_formula_conformance(const QuantizationScheme& s, const LieAlgebraSpec& spec);

}  // namespace osc
