#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tilingdet/exactnum.hpp"

namespace tilingdet::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2, kBudget = 3 };

inline constexpr const char* kBudgetEnv = "TILINGDET_ORACLE_BUDGET";

/// Parameters of an identity sweep; unset fields take per-identity defaults.
struct IdentityRange {
  std::optional<long> n_max, m_max, p_max, k_max, order, trials;
  std::uint64_t seed = 1;
  /// Hexagon parameters for the series identities (may be non-integral).
  std::vector<Rational> n_values;
};

struct IdentityReport {
  std::string name;
  std::uint64_t cases = 0;
  bool pass = true;
  /// Description of the first failing case.
  std::optional<std::string> counterexample;
};

/// Names accepted by run_identity.
std::vector<std::string> identity_names();

/// Exhaustive sweep over the range; throws DomainError for unknown names.
IdentityReport run_identity(const std::string& name, const IdentityRange& range);

/// Entry point behind the command-line tool. `args` excludes the program
/// name. Returns one of the ExitCode values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilingdet::cli
