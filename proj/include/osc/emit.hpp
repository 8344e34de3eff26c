#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "osc/quantize.hpp"

namespace osc {

using Json = nlohmann::ordered_json;

// Exact encodings: scalars as {"re": "p/q", "im": "p/q"}, Weyl operators as term lists
// over a separately stored generator table.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j);
Json weyl_to_json(const WeylOp& w);
WeylOp weyl_from_json(const Json& j, const TablePtr& t);

struct EmitSections {
  bool basis = true, structure = true, mu_hat = true, pi = true;
};

// Everything `emit` can render for one case and (optionally) one scheme.
struct EmitData {
  std::string lie_case, params;
  std::optional<std::string> scheme;
  std::size_t k = 0;
  std::vector<BasisElement> basis;
  StructureConstants structure;  // empty unless requested
  std::vector<std::string> lagrangian;
  std::optional<OpMatrix> mu_hat;
  std::vector<std::pair<std::string, WeylOp>> pi;
};

EmitData collect_emit(const LieAlgebraSpec& spec, const QuantizationScheme* s, const EmitSections& what);
Json emit_to_json(const EmitData& d);
EmitData emit_from_json(const Json& j);
std::string emit_to_latex(const EmitData& d);

std::string latex_label(const std::string& generator);  // "zb_{1,2}" -> "\bar{z}_{1,2}"
std::string weyl_latex(const WeylOp& w);

}  // namespace osc
