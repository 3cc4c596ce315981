#include "doctest.h"
#include "generators.hpp"
#include "tilingdet/errors.hpp"
#include "tilingdet/lingebra.hpp"

using namespace tilingdet;
using namespace tilingdet::lingebra;
using exactnum::power_sum;
using exactnum::superfactorial;

namespace {

Rational cofactor_det(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    ExactMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

std::vector<Rational> catalan(std::size_t count) {
  std::vector<Rational> out{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
  out.resize(count);
  return out;
}

}  // namespace

TEST_CASE("det_exact examples") {
  CHECK(det_exact(ExactMatrix::identity(3)) == 1);
  CHECK(det_exact(ExactMatrix()) == 1);
  CHECK(det_exact(hilbert_matrix(2)) == Rational(1, 12));
  CHECK(det_exact(ExactMatrix(2, 2, {2, 3, 3, 5})) == 1);
  CHECK(det_exact(ExactMatrix(2, 2, {0, 1, 1, 0})) == -1);
  CHECK(det_exact(ExactMatrix(2, 2, {1, 2, 2, 4})) == 0);
  CHECK_THROWS_AS(det_exact(ExactMatrix(2, 3)), DomainError);
}

TEST_CASE("det_exact agrees with cofactor expansion") {
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen::integer(1, 4));
    const ExactMatrix m = (t % 2 == 0) ? gen::int_matrix(n, n) : gen::rational_matrix(n, n);
    CHECK(det_exact(m) == cofactor_det(m));
  }
}

TEST_CASE("det is multiplicative") {
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen::integer(1, 6));
    const ExactMatrix a = gen::int_matrix(n, n), b = gen::rational_matrix(n, n);
    CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("Hilbert determinants") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const Rational expect = exactnum::make_rational(exactnum::pow(superfactorial(static_cast<long>(k) - 1), 4),
                                                    superfactorial(2 * static_cast<long>(k) - 1));
    CHECK(det_exact(hilbert_matrix(k)) == expect);
  }
}

TEST_CASE("gram_count") {
  CHECK(gram_count(ExactMatrix(1, 2, {1, 2})) == 5);
  const ExactMatrix powers = ExactMatrix::generate(1, 3, [](std::size_t, std::size_t j) {
    return Rational(exactnum::pow(Integer(static_cast<long>(j)), 0));
  });
  CHECK(gram_count(powers) == 3);
  CHECK_THROWS_AS(gram_count(ExactMatrix(3, 2)), DomainError);

  SUBCASE("square input") {
    const ExactMatrix m = gen::int_matrix(3, 3);
    CHECK(gram_count(m) == det_exact(m) * det_exact(m));
  }
  SUBCASE("Binet-Cauchy sum of squared maximal minors") {
    for (long k = 1; k <= 3; ++k) {
      for (long n = k; n <= 6; ++n) {
        const ExactMatrix m = gen::int_matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n), 3);
        Rational sum = 0;
        gen::for_each_subset(n, k, [&](const std::vector<long>& cols) {
          const ExactMatrix minor = ExactMatrix::generate(
              k, k, [&](std::size_t i, std::size_t j) { return m(i, static_cast<std::size_t>(cols[j])); });
          const Rational d = det_exact(minor);
          sum += d * d;
        });
        CHECK(gram_count(m) == sum);
      }
    }
  }
}

TEST_CASE("Sylvester pairing identity") {
  CHECK(sylvester_pairing_sum(ExactMatrix(2, 1, {3, 7})) == 42);
  CHECK(sylvester_pairing_closed(ExactMatrix(2, 1, {3, 7})) == 42);
  const ExactMatrix repeated(4, 2, {1, 2, 5, 1, 1, 2, 3, 3});
  CHECK(sylvester_pairing_closed(repeated) == 0);
  CHECK(sylvester_pairing_sum(repeated) == 0);
  CHECK_THROWS_AS(sylvester_pairing_sum(ExactMatrix(3, 1)), DomainError);
  for (int t = 0; t < 60; ++t) {
    const std::size_t k = static_cast<std::size_t>(gen::integer(1, 3));
    const ExactMatrix u = gen::int_matrix(2 * k, k);
    CHECK(sylvester_pairing_sum(u) == sylvester_pairing_closed(u));
  }
}

TEST_CASE("Hankel determinants") {
  CHECK(hankel_det({catalan(5), 0, 3}) == 1);
  CHECK(hankel_det({catalan(5), 2, 2}) == 2);
  CHECK(hankel_det({{}, 0, 0}) == 1);
  CHECK(hankel_det({{7}, 3, 0}) == 1);
  CHECK(hankel_required_index(0, 3) == 2);
  CHECK(hankel_required_index(2, 2) == 2);
  CHECK_THROWS_AS(hankel_det({catalan(2), 0, 3}), DomainError);

  const ExactMatrix h = hankel_matrix({catalan(5), 1, 3});
  CHECK(h(0, 0) == 0);
  CHECK(h(0, 1) == 1);
  CHECK(h(1, 2) == 2);
  CHECK(h == h.transpose());

  // H_0 of an interleaved sequence is the moment determinant det(a_{i+j}).
  for (unsigned k = 0; k <= 6; ++k) {
    std::vector<Rational> seq = catalan(k + 1);
    CHECK(hankel_det({seq, 0, k}) == moment_det(catalan(2 * k + 1), 0, (k + 1) / 2) * moment_det(catalan(2 * k + 1), 1, k / 2));
  }
}

TEST_CASE("Jacobi residual") {
  CHECK(jacobi_identity_residual(catalan(5), 2) == 0);
  std::vector<Rational> ps;
  for (unsigned i = 0; i <= 6; ++i) ps.emplace_back(power_sum(5, 2 * i));
  CHECK(jacobi_identity_residual(ps, 2) == 0);
  CHECK(jacobi_identity_residual(catalan(3), 1) == 0);
  CHECK_THROWS_AS(jacobi_identity_residual(catalan(4), 2), DomainError);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> seq;
    for (int i = 0; i < 9; ++i) seq.emplace_back(gen::integer(1, 30));
    for (unsigned m = 1; m <= 4; ++m) CHECK(jacobi_identity_residual(seq, m) == 0);
  }
}

TEST_CASE("Zavrotsky determinant") {
  CHECK(zavrotsky_closed_form(3, 1) == 3);
  CHECK(zavrotsky_closed_form(2, 2) == 1);
  CHECK(zavrotsky_closed_form(1, 3) == 0);
  CHECK(power_sum_hankel_det(2, 2) == 1);
  for (long p = 0; p <= 8; ++p) {
    for (unsigned k = 1; k <= 6; ++k) {
      CHECK(zavrotsky_closed_form(p, k) == power_sum_hankel_det(p, k));
      if (p >= static_cast<long>(k)) CHECK(zavrotsky_superfactorial_form(p, k) == zavrotsky_closed_form(p, k));
    }
  }
  CHECK_THROWS_AS(zavrotsky_superfactorial_form(2, 3), DomainError);
}

TEST_CASE("matrix helpers") {
  const ExactMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(a.transpose().rows() == 3);
  CHECK(a.transpose()(2, 1) == 6);
  const std::size_t pick[] = {1, 0};
  CHECK(a.select_rows(pick)(0, 0) == 4);
  CHECK((a * a.transpose()) == ExactMatrix(2, 2, {14, 32, 32, 77}));
  CHECK_THROWS_AS(a * a, DomainError);
}
