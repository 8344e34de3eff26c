#pragma once

#include <cstdint>
#include <vector>

#include "osc/quantize.hpp"

namespace osc {

// Classical moment map with every generator replaced by its restriction to the Lagrangian
// (derivative-type generators become 0). Entries are polynomials on V^k.
PolyMatrix restricted_moment_map(const QuantizationScheme& s);
// point: one value per Lagrangian coordinate
DenseMatrix mu_c_on_lagrangian(const QuantizationScheme& s, const std::vector<Scalar>& point);

// r and m = min(k, r). For o*(2n) r = floor(n/2) and orbits are indexed by rank(C)/2.
std::size_t real_rank(const SymplecticModel& m);
std::size_t orbit_bound(const SymplecticModel& m);

struct OrbitCheck {
  bool block_ok = false;     // M = [[0, C], [0, 0]]
  bool symmetry_ok = false;  // C symmetric (sp), antisymmetric (o*), anything (u)
  std::size_t rank = 0;      // rank(C)
  std::size_t orbit = 0;     // rank, or rank/2 for o*
  bool rank_ok = false;      // orbit <= min(k, r)
  bool square_zero = false;
};
OrbitCheck check_orbit_membership(const SymplecticModel& m, const DenseMatrix& mat);

struct OrbitCheckConfig {
  SchemeId scheme = SchemeId::SpFock;
  std::size_t a = 1, b = 0, k = 1;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  long coefficient_bound = 5;
};

Report generic_rank_experiment(const OrbitCheckConfig& cfg);

}  // namespace osc
