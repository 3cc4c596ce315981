#include "tilingdet/cfhankel.hpp"

#include <algorithm>
#include <utility>

#include "tilingdet/errors.hpp"

namespace tilingdet::cfhankel {

using exactnum::factorial;
using exactnum::power_sum;

namespace {

void require_same_order(const FormalSeries& a, const FormalSeries& b) {
  if (a.order() != b.order()) throw DomainError("formal series of different truncation orders");
}

}  // namespace

FormalSeries::FormalSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

FormalSeries::FormalSeries(unsigned order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

FormalSeries FormalSeries::constant(unsigned order, const Rational& c) {
  FormalSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

FormalSeries FormalSeries::variable(unsigned order) {
  FormalSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

FormalSeries FormalSeries::exp(unsigned order, const Rational& c) {
  FormalSeries s(order);
  Rational term = 1;
  for (unsigned j = 0; j <= order; ++j) {
    s.coeffs_[j] = term;
    term = term * c / (j + 1);
  }
  return s;
}

unsigned FormalSeries::valuation() const {
  for (unsigned i = 0; i <= order_; ++i)
    if (coeffs_[i] != 0) return i;
  return order_ + 1;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
  require_same_order(*this, rhs);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
  require_same_order(*this, rhs);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  require_same_order(a, b);
  FormalSeries out(a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) { return a * b.inverse(); }

FormalSeries FormalSeries::inverse() const {
  if (coeffs_[0] == 0) throw DomainError("inverse of a series with zero constant term");
  FormalSeries r(order_);
  const Rational inv0 = 1 / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (unsigned j = 1; j <= order_; ++j) {
    Rational acc = 0;
    for (unsigned i = 1; i <= j; ++i) acc += coeffs_[i] * r.coeffs_[j - i];
    r.coeffs_[j] = -acc * inv0;
  }
  return r;
}

FormalSeries FormalSeries::derivative() const {
  FormalSeries d(order_);
  for (unsigned i = 0; i < order_; ++i) d.coeffs_[i] = coeffs_[i + 1] * (i + 1);
  // The top coefficient would need x^{order+1}, which is unknown.
  return d.with_order(order_ == 0 ? 0 : order_ - 1);
}

FormalSeries FormalSeries::compose(const FormalSeries& inner) const {
  require_same_order(*this, inner);
  if (inner.coeffs_[0] != 0) throw DomainError("composition needs an inner series with zero constant term");
  FormalSeries acc = constant(order_, coeffs_[order_]);
  for (unsigned m = order_; m-- > 0;) {
    acc = acc * inner;
    acc.coeffs_[0] += coeffs_[m];
  }
  return acc;
}

FormalSeries FormalSeries::divide_by_x_power(unsigned n) const {
  if (n > order_) throw DomainError("cannot divide a series by a power of x above its order");
  for (unsigned i = 0; i < n; ++i)
    if (coeffs_[i] != 0) throw DomainError("series is not divisible by the requested power of x");
  return FormalSeries(order_ - n, std::vector<Rational>(coeffs_.begin() + n, coeffs_.end()));
}

FormalSeries FormalSeries::substitute_power(unsigned n, unsigned new_order) const {
  if (n == 0) throw DomainError("substitute_power needs n >= 1");
  FormalSeries out(new_order);
  for (unsigned i = 0; i <= order_ && i * n <= new_order; ++i) out.coeffs_[i * n] = coeffs_[i];
  return out;
}

FormalSeries FormalSeries::with_order(unsigned new_order) const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min(order_, new_order) + 1);
  return FormalSeries(new_order, std::move(c));
}

std::string FormalSeries::to_string() const {
  std::string out = "[";
  for (unsigned i = 0; i <= order_; ++i) {
    if (i) out += ", ";
    out += exactnum::to_string(coeffs_[i]);
  }
  return out + "]";
}

FormalSeries l_operator(const FormalSeries& s) {
  FormalSeries out(s.order());
  for (unsigned i = 0; i <= s.order(); ++i) out[i] = s[i] * Rational(factorial(i));
  return out;
}

FormalSeries e_operator(const FormalSeries& s) {
  FormalSeries out(s.order());
  for (unsigned i = 0; i <= s.order(); ++i) out[i] = s[i] / Rational(factorial(i));
  return out;
}

FormalSeries cf_to_series(const JFraction& jf, unsigned order) {
  if (jf.lambda.empty() || jf.lambda[0] == 0) throw DomainError("continued fraction needs lambda_0 != 0");
  // lambda_i first influences the coefficient of x^i, so deeper terms are irrelevant.
  std::size_t depth = std::min<std::size_t>(jf.lambda.size() - 1, order);
  for (std::size_t i = 1; i <= depth; ++i) {
    if (jf.lambda[i] == 0) {
      depth = i - 1;
      break;
    }
  }
  const FormalSeries x = FormalSeries::variable(order);
  FormalSeries tail = FormalSeries::constant(order, 1);
  for (std::size_t i = depth; i >= 1; --i) {
    FormalSeries denom = FormalSeries::constant(order, 1) - (x * tail) * jf.lambda[i];
    tail = denom.inverse();
  }
  return tail * jf.lambda[0];
}

JFraction series_to_cf(const FormalSeries& s, unsigned max_depth) {
  JFraction jf;
  if (s[0] == 0) throw DomainError("series_to_cf needs a nonzero constant term");
  jf.lambda.push_back(s[0]);
  FormalSeries g = s * (1 / s[0]);
  for (unsigned depth = 1; depth <= max_depth && g.order() > 0; ++depth) {
    FormalSeries w = (FormalSeries::constant(g.order(), 1) - g.inverse()).divide_by_x_power(1);
    if (w.is_zero()) {
      jf.terminated = true;
      return jf;
    }
    if (w[0] == 0) {
      throw DomainError("vanishing Hankel minor at continued-fraction depth " + std::to_string(depth));
    }
    jf.lambda.push_back(w[0]);
    g = w * (1 / w[0]);
  }
  return jf;
}

Rational hankel_from_cf(const JFraction& jf, unsigned k) {
  Rational product = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (i >= jf.lambda.size()) {
      if (jf.terminated) return 0;
      throw DomainError("hankel_from_cf needs lambda_0 .. lambda_" + std::to_string(k - 1));
    }
    product *= exactnum::pow(jf.lambda[i], k - i);
  }
  return product;
}

Rational prop_j_h2(std::span<const Rational> lambda, unsigned k) {
  if (lambda.size() < k + 1) throw DomainError("prop_j_h2 needs lambda_0 .. lambda_" + std::to_string(k));
  if (lambda[0] == 0) throw DomainError("prop_j_h2 needs lambda_0 != 0");
  Rational h0 = 1;
  for (unsigned i = 0; i <= k; ++i) h0 *= exactnum::pow(lambda[i], k + 1 - i);
  Rational sum = 1;
  Rational ratio = 1;
  for (unsigned j = 1; j <= k / 2; ++j) {
    if (lambda[2 * j] == 0) {
      throw DomainError("terminating fraction (lambda_" + std::to_string(2 * j) +
                        " = 0); use a direct Hankel determinant");
    }
    ratio *= lambda[2 * j - 1] / lambda[2 * j];
    sum += ratio;
  }
  return h0 * sum / lambda[0];
}

MuCoefficients mu_coefficients(const Rational& n, unsigned count) {
  MuCoefficients out{n, {}};
  out.mu.reserve(count);
  for (unsigned idx = 0; idx < count; ++idx) {
    if (idx == 0) {
      out.mu.push_back(n * (n + 1));
      continue;
    }
    const unsigned i = idx / 2;
    const Rational tail = (n + i + 1) * (n - i);
    if (idx % 2 == 0) {
      out.mu.push_back(exactnum::make_rational(i, 4 * i + 2) * tail);
    } else {
      out.mu.push_back(exactnum::make_rational(i + 1, 4 * i + 2) * tail);
    }
  }
  return out;
}

JFraction mu_fraction(const Rational& n, unsigned count) {
  JFraction jf;
  for (const Rational& m : mu_coefficients(n, count).mu) {
    if (m == 0) {
      jf.terminated = true;
      break;
    }
    jf.lambda.push_back(m);
  }
  return jf;
}

FormalSeries odd_power_sum_series(long n, unsigned order) {
  if (n < 1) throw DomainError("odd_power_sum_series needs n >= 1");
  FormalSeries s(order);
  for (unsigned i = 0; i <= order; ++i) s[i] = Rational(2 * power_sum(n, 2 * i + 1));
  return s;
}

FormalSeries sinh_kernel_series(const Rational& n, unsigned order) {
  const unsigned work = order + 2;
  auto sinh = [work](const Rational& c) {
    return (FormalSeries::exp(work, c) - FormalSeries::exp(work, -c)) * Rational(1, 2);
  };
  const FormalSeries numerator = sinh(n / 2) * sinh((n + 1) / 2);
  const FormalSeries denominator = sinh(Rational(1, 2));
  // Both carry a factor x; cancel it before dividing.
  FormalSeries q = numerator.divide_by_x_power(1) / denominator.divide_by_x_power(1);
  return q.with_order(order) * Rational(2);
}

FormalSeries odd_mu_fraction_series(const Rational& n, unsigned order) {
  FormalSeries out(order);
  if (order == 0) return out;
  const unsigned inner_order = (order - 1) / 2;
  const FormalSeries inner = cf_to_series(mu_fraction(n, inner_order + 1), inner_order);
  for (unsigned i = 0; i <= inner_order; ++i) out[2 * i + 1] = inner[i];
  return out;
}

std::vector<Rational> Hypergeometric2F1::z_coefficients(unsigned order) const {
  std::vector<Rational> out(order + 1);
  Rational term = 1;
  for (unsigned m = 0; m <= order; ++m) {
    out[m] = term;
    if (term == 0) continue;
    const Rational up = (a + m) * (b + m);
    if (up == 0) {
      term = 0;
      continue;
    }
    const Rational down = (c + m) * (m + 1);
    if (down == 0) throw DomainError("2F1 lower parameter hits a nonpositive integer before the series terminates");
    term = term * up / down;
  }
  return out;
}

FormalSeries Hypergeometric2F1::evaluate(const FormalSeries& argument) const {
  FormalSeries outer(argument.order(), z_coefficients(argument.order()));
  return outer.compose(argument);
}

FormalSeries f21_one_beta_two_closed(const Rational& beta, unsigned order) {
  if (beta == 1) throw DomainError("closed form of 2F1(1, beta; 2; z) needs beta != 1");
  // (1-z)^{1-beta} via the generalized binomial series.
  const Rational alpha = 1 - beta;
  FormalSeries binom(order + 1);
  Rational c = 1;
  for (unsigned m = 0; m <= order + 1; ++m) {
    binom[m] = (m % 2 == 0) ? c : Rational(-c);
    c = c * (alpha - m) / (m + 1);
  }
  binom[0] -= 1;
  return binom.divide_by_x_power(1) * (1 / (beta - 1));
}

Rational g_recurrence_coefficient(unsigned k, const Rational& n) {
  if (k == 0) return 0;
  const unsigned i = k / 2;
  if (k % 2 == 0) return exactnum::make_rational(i, 4 * i + 2) * (n + i + 1) * (n - i);
  return exactnum::make_rational(i + 1, 4 * i + 2) * (n + i + 1) * (n - i);
}

FormalSeries g_k_series(unsigned k, const Rational& n, unsigned order) {
  const FormalSeries ex = FormalSeries::exp(order);
  const FormalSeries one = FormalSeries::constant(order, 1);
  const FormalSeries z = one - ex;
  const FormalSeries ex_minus_one = ex - one;

  FormalSeries g = one;
  for (unsigned i = 0; i < k; ++i) g = g * ex_minus_one;
  g *= exactnum::make_rational(1, factorial(k));
  g = g * FormalSeries::exp(order, -n);

  const Rational upper_a = (k + 1) / 2;
  const Rational upper_b = k / 2;
  const Rational lower = k + 1;
  g = g * Hypergeometric2F1{upper_a, upper_a - n, lower}.evaluate(z);
  g = g * Hypergeometric2F1{upper_b + 1, upper_b - n, lower}.evaluate(z);
  return g;
}

FormalSeries verify_g_recurrence(unsigned k, const Rational& n, unsigned order) {
  if (k == 0) throw DomainError("the g recurrence starts at k = 1");
  if (order == 0) throw DomainError("verify_g_recurrence needs order >= 1");
  const FormalSeries derivative = g_k_series(k, n, order).derivative();
  const unsigned out_order = order - 1;
  return derivative - g_k_series(k - 1, n, order).with_order(out_order) -
         g_k_series(k + 1, n, order).with_order(out_order) * g_recurrence_coefficient(k, n);
}

}  // namespace tilingdet::cfhankel
