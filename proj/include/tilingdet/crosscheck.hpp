#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilingdet/exactnum.hpp"
#include "tilingdet/formulas.hpp"
#include "tilingdet/oracle.hpp"
#include "tilingdet/regions.hpp"

namespace tilingdet::crosscheck {

enum class Method { closed_form, determinant, oracle };

std::string to_string(Method method);
std::optional<Method> parse_method(const std::string& text);

/// A single computed count together with how it was obtained.
struct CountResult {
  Integer value;
  Method method = Method::closed_form;
  std::string family;
  std::vector<std::pair<std::string, std::string>> inputs;
};

enum class Family {
  hexagon,          // (k, q, k) hexagon: k, q
  semihex,          // dented semi-hexagon: k, q, indices = dents
  aztec,            // dented Aztec rectangle: a, b, indices = dents
  crossing,         // hexagon with restricted crossings: k, q, indices = L
  notri,            // central triangle removed: k, n
  central_lozenge,  // central lozenge forced: m, n, parity
  problem1,         // central lozenge count against all tilings: n, parity
  missing_squares,  // undented rectangle minus diagonal squares: a, b, indices
  problem10,        // (2k-1) by 2k with one square removed: k
};

std::string to_string(Family family);
std::optional<Family> parse_family(const std::string& text);

struct Instance {
  Family family = Family::hexagon;
  long k = 0, q = 0, m = 0, n = 0, a = 0, b = 0;
  formulas::Parity parity = formulas::Parity::odd;
  std::vector<long> indices;

  /// The parameters that define this family, as (name, decimal) pairs.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Methods implemented for the family, in closed/determinant/oracle order.
std::vector<Method> available_methods(Family family);

/// Throws DomainError when the method is unavailable for the family and
/// BudgetExceeded when the oracle runs out of budget.
CountResult compute(const Instance& instance, Method method, const oracle::Options& options = {});

/// The cell region the oracle counts for this instance.
regions::CellRegion oracle_region(const Instance& instance);

enum class LegStatus { computed, skipped_budget, not_requested };

struct Leg {
  Method method = Method::closed_form;
  LegStatus status = LegStatus::not_requested;
  std::optional<Integer> value;
};

struct CrossCheckResult {
  Instance instance;
  /// The family's count by each method.
  std::vector<Leg> legs;
  /// problem1 only: legs for the unrestricted hexagon and the ratio
  /// central / total, which must be exactly 1/3.
  std::vector<Leg> total_legs;
  std::optional<Rational> ratio;
  bool oracle_skipped = false;
  bool agree = true;
};

/// Runs the requested legs (all available ones when `methods` is empty).
/// An oracle over budget is recorded as skipped and the remaining legs are
/// still compared.
CrossCheckResult cross_check(const Instance& instance, std::vector<Method> methods = {},
                             const oracle::Options& options = {});

}  // namespace tilingdet::crosscheck
