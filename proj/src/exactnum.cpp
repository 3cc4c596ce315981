#include "tilingdet/exactnum.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "tilingdet/errors.hpp"

namespace tilingdet::exactnum {

namespace {

Integer power_sum_uncached(long m, unsigned j) {
  Integer total = 0;
  if (m > 0) {
    for (long l = 1; l <= m; ++l) total += pow(Integer(l), j);
    return total;
  }
  if (m == 0) return total;
  // mpz pow gives 0^0 = 1, which is the convention we want here.
  for (long l = 0; l <= -m - 1; ++l) total += pow(Integer(l), j);
  return (j % 2 == 1) ? total : Integer(-total);
}

struct PowerSumCache {
  std::mutex mutex;
  std::map<std::pair<long, unsigned>, Integer> table;
};

PowerSumCache& cache() {
  static PowerSumCache instance;
  return instance;
}

}  // namespace

Integer power_sum(long m, unsigned j) {
  auto& c = cache();
  const auto key = std::make_pair(m, j);
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.table.find(key); it != c.table.end()) return it->second;
  }
  Integer value = power_sum_uncached(m, j);
  std::lock_guard lock(c.mutex);
  c.table.emplace(key, value);
  return value;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(unsigned degree, Rational c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial power_sum_polynomial(unsigned j) {
  // Telescoping (l+1)^{j+1} - l^{j+1} summed over l = 1..m gives
  //   (m+1)^{j+1} - 1 = sum_{i<=j} C(j+1, i) P_i(m).
  std::vector<Polynomial> polys;
  polys.reserve(j + 1);
  for (unsigned d = 0; d <= j; ++d) {
    std::vector<Rational> shifted(d + 2);
    for (unsigned i = 0; i <= d + 1; ++i) shifted[i] = Rational(binomial(d + 1, i));
    Polynomial rhs(std::move(shifted));
    rhs -= Polynomial({Rational(1)});
    for (unsigned i = 0; i < d; ++i) rhs -= polys[i] * Rational(binomial(d + 1, i));
    rhs *= Rational(1, d + 1);
    polys.push_back(std::move(rhs));
  }
  return polys.back();
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer superfactorial(long n) {
  if (n < -1) throw DomainError("superfactorial V_n is defined for n >= -1, got " + std::to_string(n));
  Integer v = 1;
  Integer f = 1;
  for (long i = 1; i <= n; ++i) {
    f *= i;
    v *= f;
  }
  return v;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pochhammer(const Rational& a, unsigned j) {
  Rational r = 1;
  Rational term = a;
  for (unsigned i = 0; i < j; ++i) {
    r *= term;
    term += 1;
  }
  return r;
}

Integer pow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& base, unsigned e) {
  Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer to_integer(const Rational& value, const std::string& context) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() != 1) {
    throw NonIntegralResult("non-integral result " + to_string(q) + (context.empty() ? "" : " in " + context));
  }
  return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + text + "'");
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace tilingdet::exactnum
