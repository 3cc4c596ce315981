#include "tilingdet/lingebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tilingdet/errors.hpp"

namespace tilingdet::lingebra {

using exactnum::power_sum;
using exactnum::superfactorial;

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match its shape");
}

ExactMatrix ExactMatrix::generate(std::size_t rows, std::size_t cols,
                                  const std::function<Rational(std::size_t, std::size_t)>& f) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f(i, j);
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> row_indices) const {
  ExactMatrix s(row_indices.size(), cols_);
  for (std::size_t r = 0; r < row_indices.size(); ++r) {
    if (row_indices[r] >= rows_) throw DomainError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) s(r, j) = (*this)(row_indices[r], j);
  }
  return s;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

Integer bareiss(std::vector<Integer> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(t);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

Rational gauss(std::vector<Rational> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      det = -det;
    }
    det *= at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      Rational f = at(i, k) / at(k, k);
      for (std::size_t j = k; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return det;
}

// Iterates all k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Rational det_exact(const ExactMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  bool integral = true;
  for (std::size_t i = 0; i < n && integral; ++i)
    for (std::size_t j = 0; j < n && integral; ++j) integral = m(i, j).get_den() == 1;
  if (integral) {
    std::vector<Integer> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.emplace_back(m(i, j).get_num());
    return Rational(bareiss(std::move(a), n));
  }
  std::vector<Rational> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(m(i, j));
  return gauss(std::move(a), n);
}

Rational gram_count(const ExactMatrix& m) {
  if (m.rows() > m.cols()) throw DomainError("gram_count needs rows <= cols");
  return det_exact(m * m.transpose());
}

Rational sylvester_pairing_sum(const ExactMatrix& u) {
  const std::size_t k = u.cols();
  if (u.rows() != 2 * k) throw DomainError("pairing sum needs a 2k x k matrix");
  Rational total = 0;
  for_each_subset(2 * k, k, [&](std::span<const std::size_t> a) {
    std::vector<std::size_t> complement;
    complement.reserve(k);
    for (std::size_t r = 0, p = 0; r < 2 * k; ++r) {
      if (p < a.size() && a[p] == r) {
        ++p;
        continue;
      }
      complement.push_back(r);
    }
    total += det_exact(u.select_rows(a)) * det_exact(u.select_rows(complement));
  });
  return total;
}

Rational sylvester_pairing_closed(const ExactMatrix& u) {
  const std::size_t k = u.cols();
  if (u.rows() != 2 * k) throw DomainError("pairing sum needs a 2k x k matrix");
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < k; ++i) {
    even.push_back(2 * i);
    odd.push_back(2 * i + 1);
  }
  return Rational(exactnum::pow(Integer(2), static_cast<unsigned>(k))) * det_exact(u.select_rows(even)) *
         det_exact(u.select_rows(odd));
}

std::size_t hankel_required_index(unsigned shift, unsigned size) {
  return size == 0 ? 0 : (2 * (size - 1) + shift) / 2;
}

ExactMatrix hankel_matrix(const HankelSpec& spec) {
  if (spec.size > 0 && hankel_required_index(spec.shift, spec.size) >= spec.sequence.size()) {
    throw DomainError("Hankel determinant needs sequence terms through index " +
                      std::to_string(hankel_required_index(spec.shift, spec.size)));
  }
  return ExactMatrix::generate(spec.size, spec.size, [&](std::size_t i, std::size_t j) {
    const std::size_t t = i + j + spec.shift;
    return t % 2 == 1 ? Rational(0) : spec.sequence[t / 2];
  });
}

Rational hankel_det(const HankelSpec& spec) {
  if (spec.size == 0) return 1;
  return det_exact(hankel_matrix(spec));
}

Rational moment_det(std::span<const Rational> sequence, unsigned r, unsigned k) {
  if (k == 0) return 1;
  if (2 * (k - 1) + r >= sequence.size()) throw DomainError("sequence too short for M_r(k)");
  return det_exact(ExactMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return sequence[i + j + r]; }));
}

Rational jacobi_identity_residual(std::span<const Rational> sequence, unsigned m) {
  if (m == 0) throw DomainError("Jacobi residual needs m >= 1");
  if (sequence.size() < 2 * m + 1) throw DomainError("Jacobi residual needs a_0 .. a_{2m}");
  const Rational m1 = moment_det(sequence, 1, m);
  return m1 * m1 - moment_det(sequence, 0, m) * moment_det(sequence, 2, m) +
         moment_det(sequence, 0, m + 1) * moment_det(sequence, 2, m - 1);
}

Rational power_sum_hankel_det(long p, unsigned k) {
  return det_exact(ExactMatrix::generate(
      k, k, [&](std::size_t i, std::size_t j) { return Rational(power_sum(p, static_cast<unsigned>(i + j))); }));
}

Rational zavrotsky_closed_form(long p, unsigned k) {
  if (p < 0) throw DomainError("zavrotsky_closed_form needs p >= 0");
  if (k == 0) return 1;
  const long kk = static_cast<long>(k);
  Integer product = 1;
  for (long i = -(kk - 1); i <= kk - 1; ++i) {
    const long factor = p + i;
    if (factor == 0) return 0;
    product *= exactnum::pow(Integer(factor), static_cast<unsigned>(kk - std::abs(i)));
  }
  Rational pre(exactnum::pow(superfactorial(kk - 1), 4), superfactorial(2 * kk - 1));
  pre.canonicalize();
  return pre * Rational(product);
}

Rational zavrotsky_superfactorial_form(long p, unsigned k) {
  const long kk = static_cast<long>(k);
  if (k == 0) return 1;
  if (p < kk) throw DomainError("superfactorial form of the power-sum Hankel determinant needs p >= k");
  Rational r(superfactorial(p + kk - 1) * superfactorial(p - kk - 1) * exactnum::pow(superfactorial(kk - 1), 4),
             exactnum::pow(superfactorial(p - 1), 2) * superfactorial(2 * kk - 1));
  r.canonicalize();
  return r;
}

ExactMatrix hilbert_matrix(std::size_t k) {
  return ExactMatrix::generate(k, k, [](std::size_t i, std::size_t j) {
    return Rational(1, static_cast<unsigned long>(i + j + 1));
  });
}

}  // namespace tilingdet::lingebra
