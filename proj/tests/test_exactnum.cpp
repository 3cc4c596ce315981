#include "doctest.h"
#include "generators.hpp"
#include "tilingdet/cfhankel.hpp"
#include "tilingdet/errors.hpp"
#include "tilingdet/exactnum.hpp"

using namespace tilingdet;
using namespace tilingdet::exactnum;

TEST_CASE("power sums") {
  CHECK(power_sum(3, 2) == 14);
  CHECK(power_sum(0, 5) == 0);
  CHECK(power_sum(-3, 2) == -5);
  CHECK(power_sum(-1, 0) == -1);
  CHECK(power_sum(-1, 3) == 0);
  CHECK(power_sum(5, 0) == 5);

  SUBCASE("difference and interval sums") {
    for (unsigned j = 0; j <= 8; ++j) {
      for (long m = 1; m <= 12; ++m) CHECK(power_sum(m, j) - power_sum(m - 1, j) == pow(Integer(m), j));
      for (long p = -6; p <= 6; ++p) {
        for (long q = p; q <= 8; ++q) {
          Integer direct = 0;
          for (long i = p; i <= q; ++i) direct += (i == 0 && j == 0) ? Integer(1) : pow(Integer(i), j);
          CHECK(power_sum(q, j) - power_sum(p - 1, j) == direct);
        }
      }
    }
  }

  SUBCASE("reflection") {
    for (long m = 1; m <= 10; ++m)
      for (unsigned j = 1; j <= 9; ++j)
        CHECK(power_sum(-m, j) == ((j + 1) % 2 == 0 ? 1 : -1) * power_sum(m - 1, j));
    // j = 0 picks up the 0^0 term.
    for (long m = 1; m <= 10; ++m) CHECK(power_sum(-m, 0) == -m);
  }

  SUBCASE("exponential generating function") {
    using cfhankel::FormalSeries;
    const unsigned N = 12;
    for (long m = 1; m <= 6; ++m) {
      FormalSeries egf(N);
      for (unsigned j = 0; j <= N; ++j) egf[j] = Rational(power_sum(m, j)) / Rational(factorial(j));
      // e^x (e^{mx} - 1) / (e^x - 1), cancelling the common factor x first.
      const FormalSeries num = FormalSeries::exp(N + 1) * (FormalSeries::exp(N + 1, m) - FormalSeries::constant(N + 1, 1));
      const FormalSeries den = FormalSeries::exp(N + 1) - FormalSeries::constant(N + 1, 1);
      CHECK(egf == num.divide_by_x_power(1) / den.divide_by_x_power(1));
    }
  }
}

TEST_CASE("power sum polynomials") {
  CHECK(power_sum_polynomial(0) == Polynomial({0, 1}));
  CHECK(power_sum_polynomial(1) == Polynomial({0, Rational(1, 2), Rational(1, 2)}));
  CHECK(power_sum_polynomial(2)(3) == 14);
  for (unsigned j = 0; j <= 10; ++j) {
    const Polynomial p = power_sum_polynomial(j);
    CHECK(p.degree() == static_cast<int>(j) + 1);
    CHECK(p.coeff(j + 1) == make_rational(1, j + 1));
    for (long m = -8; m <= 15; ++m) CHECK(p(m) == Rational(power_sum(m, j)));
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial a({1, 2});
  const Polynomial b({-1, 0, 3});
  CHECK(a * b == Polynomial({-1, -2, 3, 6}));
  CHECK((a + b) == Polynomial({0, 2, 3}));
  CHECK((a - a).degree() == -1);
  CHECK(Polynomial::monomial(3, 2)(2) == 16);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p({gen::rational(), gen::rational(), gen::rational()});
    const Polynomial q({gen::rational(), gen::rational()});
    const Rational x = gen::rational();
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK((p + q)(x) == p(x) + q(x));
  }
}

TEST_CASE("superfactorials and factorials") {
  CHECK(superfactorial(-1) == 1);
  CHECK(superfactorial(0) == 1);
  CHECK(superfactorial(3) == 12);
  CHECK(superfactorial(5) == 34560);
  for (long n = 1; n <= 20; ++n) CHECK(superfactorial(n) == superfactorial(n - 1) * factorial(n));
  CHECK_THROWS_AS(superfactorial(-2), DomainError);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 7) == 0);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(1, 3) == 6);
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-7, 3), 0) == 1);
  CHECK(pochhammer(-2, 3) == 0);
  for (int t = 0; t < 100; ++t) {
    const Rational a = gen::rational();
    const unsigned i = static_cast<unsigned>(gen::integer(0, 5));
    const unsigned j = static_cast<unsigned>(gen::integer(0, 5));
    CHECK(pochhammer(a, i + j) == pochhammer(a, i) * pochhammer(a + i, j));
  }
}

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, 4) == Rational(3, 2));
  CHECK(make_rational(6, 4).get_den() == 2);
  CHECK(make_rational(3, -6) == Rational(-1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(to_integer(make_rational(12, 4)) == 3);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), NonIntegralResult);
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
  CHECK(parse_rational("7/2") == Rational(7, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}
