#pragma once

// Small seeded generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tilingdet/exactnum.hpp"
#include "tilingdet/lingebra.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline tilingdet::Rational rational(long span = 9) {
  const long num = integer(-span, span);
  const long den = integer(1, span);
  return tilingdet::exactnum::make_rational(num, den);
}

/// Uniform k-subset of {0, ..., n-1}, sorted.
inline std::vector<long> subset(long n, long k) {
  std::vector<long> all(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng());
  all.resize(static_cast<std::size_t>(k));
  std::sort(all.begin(), all.end());
  return all;
}

inline tilingdet::lingebra::ExactMatrix int_matrix(std::size_t rows, std::size_t cols, long span = 5) {
  return tilingdet::lingebra::ExactMatrix::generate(
      rows, cols, [&](std::size_t, std::size_t) { return tilingdet::Rational(integer(-span, span)); });
}

inline tilingdet::lingebra::ExactMatrix rational_matrix(std::size_t rows, std::size_t cols) {
  return tilingdet::lingebra::ExactMatrix::generate(rows, cols, [&](std::size_t, std::size_t) { return rational(); });
}

/// Calls f on every strictly increasing k-subset of {0, ..., n-1}.
template <class F>
void for_each_subset(long n, long k, F&& f) {
  std::vector<long> pick(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, long pos, long start) -> void {
    if (pos == k) {
      f(pick);
      return;
    }
    for (long v = start; v <= n - (k - pos); ++v) {
      pick[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace gen
