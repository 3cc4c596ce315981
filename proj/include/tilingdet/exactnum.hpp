#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tilingdet {

using Integer = mpz_class;
using Rational = mpq_class;

namespace exactnum {

/// S_m^j with the sign convention extended to negative m:
///   m > 0 : 1^j + ... + m^j
///   m = 0 : 0
///   m < 0 : (-1)^(j+1) (0^j + 1^j + ... + (-m-1)^j), with 0^0 = 1.
/// Results are cached in a process-wide table.
Integer power_sum(long m, unsigned j);

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient i multiplies x^i. Trailing zeros are stripped.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(unsigned degree, Rational c = 1);

  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// The polynomial P_j with P_j(m) = S_m^j for every integer m
/// (degree j+1, leading coefficient 1/(j+1)).
Polynomial power_sum_polynomial(unsigned j);

/// num / den reduced to lowest terms (the two-argument mpq constructor
/// does not canonicalize). Throws DomainError when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(long n);

/// V_n = 1! 2! ... n!, with V_0 = V_{-1} = 1.
Integer superfactorial(long n);

Integer binomial(long n, long k);

/// Rising factorial (a)_j = a (a+1) ... (a+j-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned j);

Integer pow(const Integer& base, unsigned e);
Rational pow(const Rational& base, unsigned e);

/// Exact conversion; throws NonIntegralResult when the denominator is not 1.
Integer to_integer(const Rational& q, const std::string& context = {});

std::string to_string(const Integer& z);
/// "p/q", or just "p" when the value is integral.
std::string to_string(const Rational& q);

/// Accepts "p", "-p" or "p/q". Throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace exactnum
}  // namespace tilingdet
