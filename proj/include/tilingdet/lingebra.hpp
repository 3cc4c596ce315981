#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tilingdet/exactnum.hpp"

namespace tilingdet::lingebra {

/// Row-major dense matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Builds entry (i, j) = f(i, j) for 0 <= i < rows, 0 <= j < cols.
  static ExactMatrix generate(std::size_t rows, std::size_t cols,
                              const std::function<Rational(std::size_t, std::size_t)>& f);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix transpose() const;
  /// Rows listed in `row_indices` (in that order), all columns.
  ExactMatrix select_rows(std::span<const std::size_t> row_indices) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant. Integral matrices go through Bareiss fraction-free
/// elimination over Z; anything else uses Gaussian elimination over Q.
/// The 0x0 determinant is 1.
Rational det_exact(const ExactMatrix& m);

/// det(M M^t) for a k x n matrix with k <= n (the Binet-Cauchy sum of
/// squared maximal minors).
Rational gram_count(const ExactMatrix& m);

/// Sum over k-subsets A of the 2k row indices of det(U_A) det(U_{A^c}),
/// each minor taken with its rows in increasing order. Brute force.
Rational sylvester_pairing_sum(const ExactMatrix& u);

/// 2^k det(even rows of U) det(odd rows of U), the closed value of the
/// pairing sum.
Rational sylvester_pairing_closed(const ExactMatrix& u);

/// A sequence a_0, a_1, ... together with the Hankel shape parameters.
/// The matrix built from it has entry a_{(i+j+s)/2}, zero when i+j+s is odd.
struct HankelSpec {
  std::vector<Rational> sequence;
  unsigned shift = 0;
  unsigned size = 0;
};

/// Largest sequence index referenced by a HankelSpec of this shape.
std::size_t hankel_required_index(unsigned shift, unsigned size);

ExactMatrix hankel_matrix(const HankelSpec& spec);

/// H_s(k) by direct determinant; H_s(0) = 1.
Rational hankel_det(const HankelSpec& spec);

/// M_r(k) = det(a_{i+j+r})_{0..k-1}; M_r(0) = 1.
Rational moment_det(std::span<const Rational> sequence, unsigned r, unsigned k);

/// M_1(m)^2 - M_0(m) M_2(m) + M_0(m+1) M_2(m-1), which vanishes for every
/// sequence (Jacobi). Needs a_0 .. a_{2m}; m >= 1.
Rational jacobi_identity_residual(std::span<const Rational> sequence, unsigned m);

/// det(S_p^{i+j})_{0..k-1} by direct elimination.
Rational power_sum_hankel_det(long p, unsigned k);

/// Closed form of det(S_p^{i+j})_{0..k-1}:
///   V_{k-1}^4 / V_{2k-1} * prod_{|i|<k} (p+i)^{k-|i|}.
/// This product form is authoritative; it is zero whenever p <= k-1. For
/// p >= k the superfactorial form is also available below.
Rational zavrotsky_closed_form(long p, unsigned k);

/// V_{p+k-1} V_{p-k-1} V_{k-1}^4 / (V_{p-1}^2 V_{2k-1}); only defined for p >= k.
Rational zavrotsky_superfactorial_form(long p, unsigned k);

/// (1/(i+j+1))_{0..k-1}.
ExactMatrix hilbert_matrix(std::size_t k);

}  // namespace tilingdet::lingebra
