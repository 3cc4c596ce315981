#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tilingdet/exactnum.hpp"
#include "tilingdet/regions.hpp"

namespace tilingdet::oracle {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct Options {
  /// Maximum number of search states visited before BudgetExceeded.
  std::uint64_t budget = kDefaultBudget;
};

/// Number of perfect matchings of the region's adjacency graph.
/// Profile dynamic programming over the cell order: cells are consumed in
/// index order, and the state is the set of already covered cells inside
/// the window reachable by a single tile. The empty region gives 1.
Integer count_matchings(const regions::CellRegion& region, const Options& options = {});

/// Plain branching on the lowest uncovered cell, no memoization. Exponential;
/// kept as an independent reference for small regions.
Integer count_matchings_naive(const regions::CellRegion& region, const Options& options = {});

struct MatchingConstraint {
  enum class Kind { none, cell_pair_forced, crossing_subset };
  Kind kind = Kind::none;
  /// The tile every counted matching must use (cell_pair_forced).
  std::optional<regions::Tile> forced;
  /// Axis positions at which crossing tiles are allowed (crossing_subset).
  std::vector<long> allowed;

  static MatchingConstraint force(const regions::Tile& tile) { return {Kind::cell_pair_forced, tile, {}}; }
  static MatchingConstraint crossing(std::vector<long> allowed) { return {Kind::crossing_subset, std::nullopt, std::move(allowed)}; }
};

/// Forcing a tile deletes its two cells; a tile outside the adjacency gives 0.
/// Crossing restrictions forbid the axis tiles outside `allowed`.
Integer count_matchings_constrained(const regions::CellRegion& region, const MatchingConstraint& constraint,
                                    const Options& options = {});

/// A matching as index pairs (i < j) into region.cells(), sorted by i.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

/// Every perfect matching, in lexicographic branching order. Throws
/// BudgetExceeded when more than `limit` matchings exist.
std::vector<Matching> enumerate_matchings(const regions::CellRegion& region, std::size_t limit);

}  // namespace tilingdet::oracle
