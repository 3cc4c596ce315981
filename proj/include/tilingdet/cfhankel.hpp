#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tilingdet/exactnum.hpp"

namespace tilingdet::cfhankel {

inline constexpr unsigned kDefaultOrder = 16;

/// Power series truncated after x^order, with exact rational coefficients.
/// Binary operations require both operands to carry the same order.
class FormalSeries {
 public:
  explicit FormalSeries(unsigned order = kDefaultOrder);
  FormalSeries(unsigned order, std::vector<Rational> coeffs);

  static FormalSeries constant(unsigned order, const Rational& c);
  /// x as a series of the given order.
  static FormalSeries variable(unsigned order);
  /// e^{c x}.
  static FormalSeries exp(unsigned order, const Rational& c = 1);

  unsigned order() const { return order_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  unsigned valuation() const;
  bool is_zero() const { return valuation() > order_; }

  FormalSeries& operator+=(const FormalSeries& rhs);
  FormalSeries& operator-=(const FormalSeries& rhs);
  FormalSeries& operator*=(const Rational& c);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator-(FormalSeries a) { return a *= Rational(-1); }
  friend FormalSeries operator*(FormalSeries a, const Rational& c) { return a *= c; }
  friend FormalSeries operator*(const Rational& c, FormalSeries a) { return a *= c; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) = default;

  /// Multiplicative inverse; the constant term must be nonzero.
  FormalSeries inverse() const;
  FormalSeries derivative() const;
  /// f(g(x)) for an inner series g with zero constant term.
  FormalSeries compose(const FormalSeries& inner) const;
  /// Drops the first `n` coefficients (division by x^n); they must be zero.
  /// The result has order order() - n.
  FormalSeries divide_by_x_power(unsigned n) const;
  /// f(x^n) truncated to `new_order`.
  FormalSeries substitute_power(unsigned n, unsigned new_order) const;
  /// Same coefficients, truncated or zero-extended to `new_order`.
  FormalSeries with_order(unsigned new_order) const;

  std::string to_string() const;

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// L(sum u_i x^i / i!) = sum u_i x^i.
FormalSeries l_operator(const FormalSeries& s);
/// E = L^{-1}.
FormalSeries e_operator(const FormalSeries& s);

/// lambda_0 / (1 - lambda_1 x / (1 - lambda_2 x / ...)).
/// `terminated` marks a fraction known to stop after lambda.back()
/// (the next coefficient is zero).
struct JFraction {
  std::vector<Rational> lambda;
  bool terminated = false;
};

FormalSeries cf_to_series(const JFraction& jf, unsigned order);

/// Recovers up to `max_depth` + 1 coefficients lambda_0..lambda_max_depth.
/// Each contraction step consumes one coefficient of precision, so at most
/// s.order() + 1 coefficients can be produced. A vanishing remainder sets
/// `terminated`; a zero constant term over a nonzero remainder means a
/// Hankel minor vanished and raises DomainError.
JFraction series_to_cf(const FormalSeries& s, unsigned max_depth);

/// lambda_0^k lambda_1^{k-1} ... lambda_{k-1}; equals det(a_{(i+j)/2})_{0..k-1}
/// for the sequence the fraction generates.
Rational hankel_from_cf(const JFraction& jf, unsigned k);

/// H_2(k) = lambda_0^{-1} H_0(k+1) sum_{j<=k/2} prod_{i=1..j} lambda_{2i-1}/lambda_{2i}.
/// Needs lambda_0..lambda_k. Throws DomainError when a needed lambda_{2i}
/// vanishes (terminating fraction; fall back to a direct determinant).
Rational prop_j_h2(std::span<const Rational> lambda, unsigned k);

struct MuCoefficients {
  Rational n;
  std::vector<Rational> mu;
};

/// mu_0 = n(n+1), mu_{2i} = i/(4i+2) (n+i+1)(n-i), mu_{2i+1} = (i+1)/(4i+2) (n+i+1)(n-i).
MuCoefficients mu_coefficients(const Rational& n, unsigned count);

/// J-fraction built from the mu sequence, truncated at the first zero.
JFraction mu_fraction(const Rational& n, unsigned count);

/// sum_i 2 S_n^{2i+1} x^i.
FormalSeries odd_power_sum_series(long n, unsigned order);

/// 2 sinh(nx/2) sinh((n+1)x/2) / sinh(x/2); for integer n its coefficients are
/// (1 + (-1)^{j-1}) S_n^j / j!.
FormalSeries sinh_kernel_series(const Rational& n, unsigned order);

/// The odd continued fraction n(n+1) x / (1 - mu_1 x^2 / (1 - mu_2 x^2 / ...)),
/// which should coincide with l_operator(sinh_kernel_series(n)).
FormalSeries odd_mu_fraction_series(const Rational& n, unsigned order);

/// Truncated Gauss series 2F1(a, b; c; z) = sum (a)_m (b)_m / (m! (c)_m) z^m,
/// evaluated at a series argument with zero constant term.
struct Hypergeometric2F1 {
  Rational a, b, c;
  /// Coefficients of the series in z through z^order.
  std::vector<Rational> z_coefficients(unsigned order) const;
  FormalSeries evaluate(const FormalSeries& argument) const;
};

/// (1/(z(beta-1))) ((1-z)^{1-beta} - 1) expanded as a series in z, beta != 1.
/// Used to check 2F1(1, beta; 2; z) against its elementary closed form.
FormalSeries f21_one_beta_two_closed(const Rational& beta, unsigned order);

/// c_k of the recurrence dg_k/dx - g_{k-1} = c_k g_{k+1}.
Rational g_recurrence_coefficient(unsigned k, const Rational& n);

/// ((e^x-1)^k / k!) e^{-nx} 2F1(A, A-n; k+1; 1-e^x) 2F1(B+1, B-n; k+1; 1-e^x)
/// with A = floor((k+1)/2), B = floor(k/2).
FormalSeries g_k_series(unsigned k, const Rational& n, unsigned order);

/// dg_k/dx - g_{k-1} - c_k g_{k+1}, truncated to order-1. Should vanish.
FormalSeries verify_g_recurrence(unsigned k, const Rational& n, unsigned order);

}  // namespace tilingdet::cfhankel
