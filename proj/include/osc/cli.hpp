#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "osc/dualpair.hpp"
#include "osc/emit.hpp"

namespace osc {

struct RunConfig {
  std::string lie_case = "sp";  // sp, u, ostar
  std::size_t n = 1, p = 1, q = 1, k = 1;
  std::string scheme;           // schrodinger, fock, holomorphic, mixed
  unsigned degree = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  long bound = 5;               // coefficient range for random points
  std::string format = "json";  // json, latex (emit only)
  std::string output;           // empty: stdout
  std::string what = "all";     // emit sections: all or a comma list of basis,structure,mu_hat,pi
  std::size_t max_dim = 45;
  std::size_t max_slice = kDefaultSliceCap;
};

// Exit codes
constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitCap = 3;

// UsageError on a bad (case, scheme) pair or size, SizeError when dim g > max_dim.
LieAlgebraSpec resolve_spec(const RunConfig& c);
SchemeId resolve_scheme(const RunConfig& c);
QuantizationScheme resolve(const RunConfig& c);

struct CommandResult {
  int exit_code = kExitPass;
  std::string body;  // JSON or LaTeX text
};

CommandResult cmd_verify(const RunConfig& c);
CommandResult cmd_decompose(const RunConfig& c);
CommandResult cmd_variety(const RunConfig& c);
CommandResult cmd_emit(const RunConfig& c);

// Full front end: parses argv, runs one subcommand, writes the body to --output or `out`,
// and a one-line status to `err`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osc
