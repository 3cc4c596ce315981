#include "tilingdet/formulas.hpp"

#include <string>

#include "tilingdet/errors.hpp"

namespace tilingdet::formulas {

using exactnum::power_sum;
using exactnum::superfactorial;
using exactnum::to_integer;
using lingebra::det_exact;
using lingebra::ExactMatrix;

namespace {

std::string args(std::initializer_list<long> values) {
  std::string s = "(";
  for (long v : values) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(v);
  }
  return s + ")";
}

void require_increasing(std::span<const long> xs, long lo, long hi, bool strict, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < lo || xs[i] > hi)
      throw DomainError(std::string(what) + " " + std::to_string(xs[i]) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    if (i > 0 && (strict ? xs[i] <= xs[i - 1] : xs[i] < xs[i - 1]))
      throw DomainError(std::string(what) + "s must be " + (strict ? "strictly increasing" : "nondecreasing"));
  }
}

Rational V(long n) { return Rational(superfactorial(n)); }

Integer ipow(long base, long e) { return exactnum::pow(Integer(base), static_cast<unsigned>(e)); }

// Entries (1 + (-1)^{i+j}) S_p^{i+j} over i, j in [from, to].
ExactMatrix symmetric_power_matrix(long p, long from, long to) {
  const long size = to - from + 1;
  return ExactMatrix::generate(size, size, [&](std::size_t i, std::size_t j) {
    const long e = static_cast<long>(i + j) + 2 * from;
    return e % 2 == 0 ? Rational(2 * power_sum(p, static_cast<unsigned>(e))) : Rational(0);
  });
}

// prod over pairs with one element from each arithmetic progression (step 2);
// every element of the second exceeds every element of the first.
Integer progression_split_product(long x0, long nx, long y0, long ny) {
  std::vector<long> xs, ys;
  for (long i = 0; i < nx; ++i) xs.push_back(x0 + 2 * i);
  for (long i = 0; i < ny; ++i) ys.push_back(y0 + 2 * i);
  Integer cross = 1;
  for (long x : xs)
    for (long y : ys) cross *= y - x;
  return detail::vandermonde(xs) * detail::vandermonde(ys) * cross;
}

}  // namespace

namespace detail {

Integer vandermonde(std::span<const long> xs) {
  Integer p = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) p *= xs[j] - xs[i];
  return p;
}

Integer problem10_vandermonde_form(long k) {
  if (k < 1) throw DomainError("problem10 needs k >= 1");
  std::vector<long> even, odd;
  long index = 0;
  for (long t = 0; t <= 2 * k - 1; ++t) {
    if (t == k - 1) continue;
    (index++ % 2 == 0 ? even : odd).push_back(t);
  }
  const Rational value = Rational(exactnum::pow(Integer(2), static_cast<unsigned>(k * k + k - 1))) /
                         (V(k - 2) * V(k - 1)) * Rational(vandermonde(even) * vandermonde(odd));
  return to_integer(value, "problem10 Vandermonde form" + args({k}));
}

Integer problem10_even_product(long k) {
  if (k < 1) throw DomainError("problem10 needs k >= 1");
  const long q = k / 2;
  if (k % 2 == 0) return progression_split_product(0, q, 2 * q + 1, q);
  return progression_split_product(0, q, 2 * q + 1, q + 1);
}

Integer problem10_odd_product(long k) {
  if (k < 1) throw DomainError("problem10 needs k >= 1");
  const long q = k / 2;
  if (k % 2 == 0) return progression_split_product(1, q - 1, 2 * q, q);
  return progression_split_product(1, q, 2 * q + 2, q);
}

}  // namespace detail

Integer semihex_dented_count(long k, long q, std::span<const long> dents) {
  if (k < 1 || q < 0) throw DomainError("semi-hexagon needs k >= 1, q >= 0");
  if (static_cast<long>(dents.size()) != k) throw DomainError("semi-hexagon needs exactly k dents");
  require_increasing(dents, 0, q + k - 1, true, "dent");
  return to_integer(Rational(detail::vandermonde(dents)) / V(k - 1), "semihex_dented_count");
}

Integer aztec_dented_count(long a, long b, std::span<const long> dents) {
  if (a < 1 || b < 1) throw DomainError("Aztec rectangle needs a, b >= 1");
  if (static_cast<long>(dents.size()) != b) throw DomainError("dented Aztec rectangle needs exactly b dents");
  require_increasing(dents, 0, a, false, "dent");
  const Rational value = Rational(exactnum::pow(Integer(2), static_cast<unsigned>(b * (b - 1) / 2))) *
                         Rational(detail::vandermonde(dents)) / V(b - 1);
  return to_integer(value, "aztec_dented_count");
}

Integer hexagon_count_kqk(long k, long q) {
  if (k < 0 || q < 0) throw DomainError("hexagon needs k, q >= 0");
  const Rational value = V(2 * k + q - 1) * V(q - 1) * V(k - 1) * V(k - 1) / (V(k + q - 1) * V(k + q - 1) * V(2 * k - 1));
  return to_integer(value, "hexagon_count_kqk" + args({k, q}));
}

Integer crossing_restricted_count(long k, long q, std::span<const long> L) {
  if (k < 1 || q < 0) throw DomainError("crossing count needs k >= 1, q >= 0");
  require_increasing(L, 0, k + q - 1, true, "crossing position");
  const ExactMatrix m = ExactMatrix::generate(k, k, [&](std::size_t i, std::size_t j) {
    Integer s = 0;
    for (long l : L) s += exactnum::pow(Integer(l), static_cast<unsigned>(i + j));
    return Rational(s);
  });
  return to_integer(det_exact(m) / (V(k - 1) * V(k - 1)), "crossing_restricted_count");
}

ExactMatrix central_triangle_matrix(long k, long n) {
  if (n < 1 || k < 1 || k > 2 * n) throw DomainError("central triangle defect needs 1 <= k <= 2n");
  return ExactMatrix::generate(k, k, [&](std::size_t i, std::size_t j) {
    if ((i + j) % 2 == 1) return Rational(0);
    return Rational(2 * power_sum(n, static_cast<unsigned>(i + j + 1)));
  });
}

Integer central_triangle_removed_det(long k, long n) {
  const Rational d = det_exact(central_triangle_matrix(k, n));
  return to_integer(d / (V(k - 1) * V(k)), "central_triangle_removed_det" + args({k, n}));
}

Integer central_triangle_removed_closed(long k, long n) {
  if (n < 1 || k < 1 || k > 2 * n) throw DomainError("central triangle defect needs 1 <= k <= 2n");
  Integer num = 1, den = 1;
  if (k % 2 == 1) {
    const long q = (k - 1) / 2;
    for (long i = 0; i <= q; ++i) num *= ipow(n - q + i, 4 * i + 1) * ipow(n + q + 1 - i, 4 * i + 1);
    den = ipow(2, 2 * q * (2 * q + 1));
    for (long j = 1; j <= q; ++j) den *= ipow(2 * j + 1, 8 * (q - j) + 2);
  } else {
    const long q = k / 2;
    for (long i = 1; i <= q; ++i) num *= ipow(n - q + i, 4 * i - 1) * ipow(n + q + 1 - i, 4 * i - 1);
    den = ipow(2, (2 * q - 1) * 2 * q);
    for (long j = 1; j < q; ++j) den *= ipow(2 * j + 1, 8 * (q - j) - 2);
  }
  return to_integer(exactnum::make_rational(num, den), "central_triangle_removed_closed" + args({k, n}));
}

HexagonShape central_lozenge_shape(long m, long n, Parity parity) {
  if (m < 1 || n < 1) throw DomainError("central lozenge family needs m, n >= 1");
  return parity == Parity::odd ? HexagonShape{2 * m - 1, 2 * n} : HexagonShape{2 * m, 2 * n - 1};
}

long central_lozenge_order(long m, Parity parity) { return parity == Parity::odd ? 2 * m - 2 : 2 * m - 1; }

Integer central_lozenge_det(long m, long n, Parity parity) {
  central_lozenge_shape(m, n, parity);
  const long K = central_lozenge_order(m, parity);
  const Rational d = det_exact(symmetric_power_matrix(m + n - 1, 1, K));
  return to_integer(d / (V(K) * V(K)), "central_lozenge_det" + args({m, n}));
}

Integer central_lozenge_total_det(long m, long n, Parity parity) {
  central_lozenge_shape(m, n, parity);
  const long K = central_lozenge_order(m, parity);
  ExactMatrix mat = symmetric_power_matrix(m + n - 1, 0, K);
  mat(0, 0) += 1;
  return to_integer(det_exact(mat) / (V(K) * V(K)), "central_lozenge_total_det" + args({m, n}));
}

Integer central_lozenge_absent_det(long m, long n, Parity parity) {
  central_lozenge_shape(m, n, parity);
  const long K = central_lozenge_order(m, parity);
  const Rational d = det_exact(symmetric_power_matrix(m + n - 1, 0, K));
  return to_integer(d / (V(K) * V(K)), "central_lozenge_absent_det" + args({m, n}));
}

Rational hexagon_sum_term(long N, long j) {
  using exactnum::pochhammer;
  const unsigned u = static_cast<unsigned>(j);
  const Rational half(1, 2);
  const Rational num = pochhammer(half, u) * pochhammer(half, u) * pochhammer(Rational(5, 4), u) *
                       pochhammer(Rational(1 - N), u) * pochhammer(Rational(N), u);
  const Rational den = pochhammer(1, u) * pochhammer(1, u) * pochhammer(Rational(1, 4), u) *
                       pochhammer(half + N, u) * pochhammer(Rational(3, 2) - N, u);
  return num / den;
}

namespace {

// sum_{j=0}^{count-1} of the very-well-poised term with upper pair (a1, a2)
// and lower pair (b1, b2); each step multiplies the running term by the
// ratio of consecutive Pochhammer products.
Rational well_poised_partial_sum(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2,
                                 long count) {
  Rational term = 1, sum = 0;
  const Rational half(1, 2), five_q(5, 4), one_q(1, 4);
  for (long j = 0; j < count; ++j) {
    sum += term;
    const Rational jj(j);
    term *= (half + jj) * (half + jj) * (five_q + jj) * (a1 + jj) * (a2 + jj);
    term /= (1 + jj) * (1 + jj) * (one_q + jj) * (b1 + jj) * (b2 + jj);
  }
  return sum;
}

}  // namespace

Integer central_lozenge_closed(long m, long n, Parity parity) {
  central_lozenge_shape(m, n, parity);
  const long N = m + n;
  Rational pre;
  if (parity == Parity::odd) {
    pre = V(4 * m + 2 * n - 3) * V(2 * n - 1) * V(2 * m - 2) * V(2 * m - 2) /
          (Rational(2 * m + 2 * n - 1) * V(2 * m + 2 * n - 2) * V(2 * m + 2 * n - 2) * V(4 * m - 3));
  } else {
    pre = V(4 * m + 2 * n - 2) * V(2 * n - 2) * V(2 * m - 1) * V(2 * m - 1) /
          (Rational(2 * m + 2 * n - 1) * V(2 * m + 2 * n - 2) * V(2 * m + 2 * n - 2) * V(4 * m - 1));
  }
  const Rational sum =
      well_poised_partial_sum(Rational(1 - N), Rational(N), Rational(1, 2) + N, Rational(3, 2) - N, m);
  return to_integer(pre * sum, "central_lozenge_closed" + args({m, n}));
}

Rational prop_det_direct(long p, long k) {
  if (p < 1 || k < 0) throw DomainError("prop_det needs p >= 1, k >= 0");
  return det_exact(symmetric_power_matrix(p, 1, k));
}

Rational prop_det_closed(long p, long k) {
  if (p < 1 || k < 0) throw DomainError("prop_det needs p >= 1, k >= 0");
  if (k == 0) return 1;
  if (k > 2 * p) return 0;
  const Rational pre = V(2 * p + k + 1) * V(2 * p - k - 1) * exactnum::pow(V(k), 4) /
                       (Rational(2 * p + 1) * V(2 * p) * V(2 * p) * V(2 * k + 1));
  const Rational sum =
      well_poised_partial_sum(Rational(-p), Rational(p + 1), Rational(3, 2) + p, Rational(1, 2) - p, k / 2 + 1);
  return pre * sum;
}

Rational wz_sum(long n) {
  if (n < 1) throw DomainError("wz_sum needs n >= 1");
  return well_poised_partial_sum(Rational(1 - 2 * n), Rational(2 * n), Rational(1, 2) + 2 * n,
                                 Rational(3, 2) - 2 * n, n);
}

Rational wz_Q(long n, long i) {
  if (n < 1 || i < 0) throw DomainError("wz_Q needs n >= 1, i >= 0");
  return hexagon_sum_term(2 * n, i) / (4 * n - 1);
}

Rational wz_U(long n, long i) {
  if (n < 1 || i < 0) throw DomainError("wz_U needs n >= 1, i >= 0");
  const Rational num = Rational(i * i) * (2 * i + 1 - 4 * n) * (1 + 4 * n) * (8 * n * n + 4 * n - 2 * i * i + i + 1);
  const Rational den = Rational(4 * i + 1) * (2 * i + 1 + 4 * n) * (i - 2 * n) * (i - 1 - 2 * n) * (2 * n + 1) * n;
  return num / den * wz_Q(n, i);
}

Rational wz_certificate_residual(long n, long i) {
  if (n < 1 || i < 0 || i > n - 1) throw DomainError("wz residual needs 0 <= i <= n-1");
  return wz_U(n, i + 1) - wz_U(n, i) - wz_Q(n + 1, i) + wz_Q(n, i);
}

Integer aztec_missing_squares_count(long a, long b, std::span<const long> removed) {
  if (a < 1 || b <= a || b > 2 * a + 1) throw DomainError("missing-squares count needs a < b <= 2a+1");
  if (static_cast<long>(removed.size()) != b - a)
    throw DomainError("expected " + std::to_string(b - a) + " removed squares, got " + std::to_string(removed.size()));
  require_increasing(removed, 0, a, true, "removed square");
  std::vector<long> t;
  {
    std::size_t r = 0;
    for (long i = 0; i <= a; ++i) {
      if (r < removed.size() && removed[r] == i) {
        ++r;
      } else {
        t.push_back(i);
      }
    }
  }
  std::vector<long> t_even, t_odd;
  for (std::size_t i = 0; i < t.size(); ++i) (i % 2 == 0 ? t_even : t_odd).push_back(t[i]);

  Rational pre;
  if (b % 2 == 1) {
    const long k = (b - 1) / 2;
    pre = Rational(exactnum::pow(Integer(2), static_cast<unsigned>(k * k + a))) / (V(k) * V(k));
  } else {
    const long k = b / 2;
    pre = Rational(exactnum::pow(Integer(2), static_cast<unsigned>(k * k - k + a))) / (V(k - 1) * V(k));
  }
  const Integer pairs = detail::vandermonde(removed);
  Integer cross = 1;
  for (long ti : t)
    for (long r : removed) cross *= (ti > r ? ti - r : r - ti);
  const Rational value =
      pre * Rational(pairs * pairs * cross * detail::vandermonde(t_even) * detail::vandermonde(t_odd));
  return to_integer(value, "aztec_missing_squares_count" + args({a, b}));
}

Integer problem10_closed(long k) {
  if (k < 1) throw DomainError("problem10 needs k >= 1");
  Integer prod = 1;
  const long q = k / 2;
  Rational pre;
  if (k % 2 == 0) {
    pre = Rational(exactnum::pow(Integer(2), static_cast<unsigned>(k * k + k - 1))) / (V(2 * q - 2) * V(2 * q - 1));
    for (long j = 1; j <= q - 1; ++j) prod *= ipow(2 * j, 4 * q - 1 - 4 * j);
    for (long j = 1; j <= q - 1; ++j) prod *= ipow(2 * j + 1, 2 * j);
    for (long i = 0; i <= q - 1; ++i) prod *= ipow(2 * q + 1 + 2 * i, 2 * q - 1 - 2 * i);
  } else {
    pre = Rational(exactnum::pow(Integer(2), static_cast<unsigned>(k * k + k - 1))) / (V(2 * q - 1) * V(2 * q));
    for (long j = 1; j <= q; ++j) prod *= ipow(2 * j, 4 * q + 1 - 4 * j);
    for (long j = 1; j <= q - 1; ++j) prod *= ipow(2 * j + 1, 2 * j);
    prod *= ipow(2 * q + 1, 2 * q);
    for (long i = 1; i <= q; ++i) prod *= ipow(2 * q + 1 + 2 * i, 2 * q + 1 - 2 * i);
  }
  return to_integer(pre * Rational(prod), "problem10_closed" + args({k}));
}

}  // namespace tilingdet::formulas
