#include "tilingdet/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <unordered_map>

#include "tilingdet/errors.hpp"

namespace tilingdet::oracle {

using regions::CellRegion;

namespace {

constexpr std::size_t kWideBits = 512;

std::size_t window_width(const CellRegion& region) {
  std::size_t w = 1;
  for (auto [i, j] : region.adjacency()) w = std::max(w, j - i + 1);
  return w;
}

[[noreturn]] void over_budget(std::uint64_t budget) {
  throw BudgetExceeded("oracle node budget of " + std::to_string(budget) + " states exceeded");
}

// Mask bit t means cell i + t is already covered, for the current position i.
template <class Mask>
struct MaskOps;

template <>
struct MaskOps<std::uint64_t> {
  static bool test(std::uint64_t m, std::size_t t) { return (m >> t) & 1u; }
  static std::uint64_t set(std::uint64_t m, std::size_t t) { return m | (std::uint64_t{1} << t); }
};

template <>
struct MaskOps<std::bitset<kWideBits>> {
  static bool test(const std::bitset<kWideBits>& m, std::size_t t) { return m.test(t); }
  static std::bitset<kWideBits> set(std::bitset<kWideBits> m, std::size_t t) { return m.set(t); }
};

template <class Mask>
Integer profile_count(const CellRegion& region, const Options& options) {
  using Ops = MaskOps<Mask>;
  const auto& nbrs = region.neighbours();
  const std::size_t n = region.size();
  std::unordered_map<Mask, Integer> layer{{Mask{}, Integer(1)}};
  std::uint64_t visited = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<Mask, Integer> next;
    for (const auto& [mask, ways] : layer) {
      if (++visited > options.budget) over_budget(options.budget);
      if (Ops::test(mask, 0)) {
        next[mask >> 1] += ways;
        continue;
      }
      for (std::size_t j : nbrs[i]) {
        if (j <= i || Ops::test(mask, j - i)) continue;
        next[Ops::set(mask, j - i) >> 1] += ways;
      }
    }
    layer = std::move(next);
    if (layer.empty()) return 0;
  }
  auto it = layer.find(Mask{});
  return it == layer.end() ? Integer(0) : it->second;
}

struct NaiveSearch {
  const CellRegion& region;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<bool> covered;

  Integer run(std::size_t from) {
    if (++visited > budget) over_budget(budget);
    while (from < covered.size() && covered[from]) ++from;
    if (from == covered.size()) return 1;
    Integer total = 0;
    covered[from] = true;
    for (std::size_t j : region.neighbours()[from]) {
      if (covered[j]) continue;
      covered[j] = true;
      total += run(from + 1);
      covered[j] = false;
    }
    covered[from] = false;
    return total;
  }
};

struct Enumerator {
  const CellRegion& region;
  std::size_t limit;
  std::vector<bool> covered;
  Matching current;
  std::vector<Matching> out;

  void run(std::size_t from) {
    while (from < covered.size() && covered[from]) ++from;
    if (from == covered.size()) {
      if (out.size() == limit) throw BudgetExceeded("more than " + std::to_string(limit) + " matchings");
      out.push_back(current);
      return;
    }
    covered[from] = true;
    for (std::size_t j : region.neighbours()[from]) {
      if (covered[j]) continue;
      covered[j] = true;
      current.emplace_back(from, j);
      run(from + 1);
      current.pop_back();
      covered[j] = false;
    }
    covered[from] = false;
  }
};

}  // namespace

Integer count_matchings(const CellRegion& region, const Options& options) {
  if (region.empty()) return 1;
  if (!region.balanced()) return 0;
  const std::size_t w = window_width(region);
  if (w <= 64) return profile_count<std::uint64_t>(region, options);
  if (w <= kWideBits) return profile_count<std::bitset<kWideBits>>(region, options);
  throw DomainError("region too wide for the oracle (tile span " + std::to_string(w) + ")");
}

Integer count_matchings_naive(const CellRegion& region, const Options& options) {
  NaiveSearch search{region, options.budget, 0, std::vector<bool>(region.size(), false)};
  return search.run(0);
}

Integer count_matchings_constrained(const CellRegion& region, const MatchingConstraint& constraint,
                                    const Options& options) {
  switch (constraint.kind) {
    case MatchingConstraint::Kind::none:
      return count_matchings(region, options);
    case MatchingConstraint::Kind::cell_pair_forced: {
      if (!constraint.forced) throw DomainError("cell_pair_forced constraint without a tile");
      if (!region.has_tile(*constraint.forced)) return 0;
      const regions::Cell cells[] = {constraint.forced->first, constraint.forced->second};
      return count_matchings(region.without_cells(cells), options);
    }
    case MatchingConstraint::Kind::crossing_subset: {
      const auto& axis = region.axis();
      if (axis.empty()) throw DomainError("region has no crossing axis");
      regions::require_strictly_increasing(constraint.allowed, 0, static_cast<long>(axis.size()), "crossing");
      std::vector<regions::Tile> forbidden;
      for (std::size_t p = 0; p < axis.size(); ++p) {
        if (!axis[p]) continue;
        if (!std::binary_search(constraint.allowed.begin(), constraint.allowed.end(), static_cast<long>(p)))
          forbidden.push_back(*axis[p]);
      }
      return count_matchings(region.without_tiles(forbidden), options);
    }
  }
  throw DomainError("unknown constraint kind");
}

std::vector<Matching> enumerate_matchings(const CellRegion& region, std::size_t limit) {
  Enumerator e{region, limit, std::vector<bool>(region.size(), false), {}, {}};
  e.run(0);
  return std::move(e.out);
}

}  // namespace tilingdet::oracle
