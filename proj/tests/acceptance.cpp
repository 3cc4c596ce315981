// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tilingdet/cfhankel.hpp"
#include "tilingdet/crosscheck.hpp"
#include "tilingdet/exactnum.hpp"
#include "tilingdet/formulas.hpp"
#include "tilingdet/lingebra.hpp"
#include "tilingdet/oracle.hpp"
#include "tilingdet/regions.hpp"

using namespace tilingdet;
using exactnum::make_rational;
using exactnum::superfactorial;
using formulas::Parity;

namespace {

// Collects case counts and the first failure of a criterion.
class Tally {
 public:
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    ++cases_;
    if (got == want) return;
    ++failed_;
    if (failure_) return;
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    failure_ = os.str();
  }
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++failed_;
    if (!failure_) failure_ = what;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(cases_) + " cases";
    if (failure_) s += ", " + std::to_string(failed_) + " failed; first: " + *failure_;
    return s;
  }

 private:
  std::size_t cases_ = 0, failed_ = 0;
  std::optional<std::string> failure_;
};

std::string args(std::initializer_list<long> xs) {
  std::string s = "(";
  for (long x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

std::vector<long> range(long n) {
  std::vector<long> v(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

void for_each_subset(long n, long k, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> s;
  std::function<void(long)> rec = [&](long start) {
    if (static_cast<long>(s.size()) == k) {
      f(s);
      return;
    }
    for (long v = start; v < n; ++v) {
      s.push_back(v);
      rec(v + 1);
      s.pop_back();
    }
  };
  rec(0);
}

Integer oracle_count(const regions::CellRegion& r) { return oracle::count_matchings(r); }

const char* parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

// 1. Central vertical lozenge: exactly one third of all tilings.
void one_third(Tally& t) {
  for (Parity p : {Parity::odd, Parity::even})
    for (long n = 1; n <= 2; ++n) {
      crosscheck::Instance inst;
      inst.family = crosscheck::Family::problem1;
      inst.n = n;
      inst.parity = p;
      const auto r = crosscheck::cross_check(inst);
      const std::string where = std::string("three legs n=") + std::to_string(n) + " " + parity_name(p);
      t.expect(r.agree && !r.oracle_skipped, where + " agree");
      t.expect(r.ratio && *r.ratio == make_rational(1, 3), where + " ratio");
    }
  for (Parity p : {Parity::odd, Parity::even})
    for (long n = 1; n <= 25; ++n) {
      const auto s = formulas::central_lozenge_shape(n, n, p);
      const Integer central = formulas::central_lozenge_closed(n, n, p);
      const Integer total = formulas::hexagon_count_kqk(s.k, s.q);
      const std::string where = std::string(parity_name(p)) + " n=" + std::to_string(n);
      t.expect_eq(formulas::central_lozenge_det(n, n, p), central, where + " central det");
      t.expect_eq(formulas::central_lozenge_total_det(n, n, p), total, where + " total det");
      t.expect_eq(Rational(central) / Rational(total), make_rational(1, 3), where + " ratio");
    }
}

// 2. Hexagon with the central triangle removed.
void central_triangle(Tally& t) {
  for (long k = 1; k <= 6; ++k)
    for (long n = 1; n <= 8; ++n) {
      if (k > 2 * n) continue;
      t.expect_eq(formulas::central_triangle_removed_closed(k, n), formulas::central_triangle_removed_det(k, n),
                  "closed vs det " + args({k, n}));
    }
  for (auto [k, n] : {std::pair{1L, 1L}, {1L, 2L}, {2L, 2L}, {3L, 2L}}) {
    const auto r = regions::build_hexagon_region({k, 2 * n + 1 - k, k, k + 1, 2 * n - k, k + 1},
                                                 {regions::DefectKind::central_triangle_removed, {}});
    t.expect_eq(oracle_count(r), formulas::central_triangle_removed_closed(k, n), "oracle " + args({k, n}));
  }
}

// 3. (2k-1) by 2k Aztec rectangle with one central-diagonal square removed.
void diagonal_defect(Tally& t) {
  t.expect_eq(formulas::problem10_closed(1), Integer(2), "k=1 value");
  for (long k = 1; k <= 6; ++k) {
    const std::vector<long> removed{k - 1};
    t.expect_eq(formulas::problem10_closed(k), formulas::aztec_missing_squares_count(2 * k - 1, 2 * k, removed),
                "closed vs determinant form k=" + std::to_string(k));
  }
  for (long k = 1; k <= 3; ++k) {
    const auto r = regions::build_aztec_region(regions::UndentedAztecRectangle{2 * k - 1, 2 * k},
                                               {regions::DefectKind::diagonal_squares_removed, {k - 1}});
    t.expect_eq(oracle_count(r), formulas::problem10_closed(k), "oracle k=" + std::to_string(k));
  }
}

// 4. Dented semi-hexagons and dented Aztec rectangles against the oracle.
void dented_regions(Tally& t) {
  for (long k = 1; k <= 3; ++k)
    for (long q = 0; q <= 3; ++q)
      for_each_subset(q + k, k, [&](const std::vector<long>& r) {
        t.expect_eq(formulas::semihex_dented_count(k, q, r), oracle_count(regions::build_semihexagon_region({k, q, r})),
                    "semi-hexagon " + args({k, q}));
      });
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 3; ++b)
      for_each_subset(a + 1, b, [&](const std::vector<long>& r) {
        t.expect_eq(formulas::aztec_dented_count(a, b, r),
                    oracle_count(regions::build_aztec_region(regions::DentedAztecRectangle{a, b, r})),
                    "Aztec " + args({a, b}));
      });
}

// 5. (k, q, k) hexagons.
void hexagons(Tally& t) {
  t.expect_eq(formulas::hexagon_count_kqk(2, 2), Integer(20), "(2,2) value");
  for (long k = 1; k <= 3; ++k)
    for (long q = 0; q <= 3; ++q)
      t.expect_eq(formulas::hexagon_count_kqk(k, q),
                  oracle_count(regions::build_hexagon_region(regions::HexagonSpec::kqk(k, q))),
                  "oracle " + args({k, q}));
  for (long k = 1; k <= 6; ++k)
    for (long q = 0; q <= 6; ++q)
      t.expect_eq(formulas::crossing_restricted_count(k, q, range(k + q)), formulas::hexagon_count_kqk(k, q),
                  "full crossing set " + args({k, q}));
}

// 6. Determinant layer.
void determinants(Tally& t) {
  for (long p = 0; p <= 8; ++p)
    for (unsigned k = 1; k <= 6; ++k)
      t.expect_eq(lingebra::zavrotsky_closed_form(p, k), lingebra::power_sum_hankel_det(p, k),
                  "power-sum Hankel " + args({p, static_cast<long>(k)}));
  for (std::size_t k = 1; k <= 5; ++k) {
    const long km = static_cast<long>(k);
    const Rational v = Rational(superfactorial(km - 1));
    t.expect_eq(lingebra::det_exact(lingebra::hilbert_matrix(k)), v * v * v * v / Rational(superfactorial(2 * km - 1)),
                "Hilbert k=" + std::to_string(k));
  }
  std::mt19937_64 rng(7);
  auto small = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = static_cast<unsigned>(1 + trial % 4);
    std::vector<Rational> seq;
    for (unsigned i = 0; i <= 2 * m + 2; ++i) seq.emplace_back(small(1, 9));
    t.expect_eq(lingebra::jacobi_identity_residual(seq, m), Rational(0), "Jacobi trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(1 + trial % 3);
    const auto u = lingebra::ExactMatrix::generate(2 * k, k, [&](std::size_t, std::size_t) { return Rational(small(-5, 5)); });
    t.expect_eq(lingebra::sylvester_pairing_sum(u), lingebra::sylvester_pairing_closed(u),
                "pairing trial " + std::to_string(trial));
  }
}

// 7. Continued-fraction layer.
void continued_fractions(Tally& t) {
  using namespace cfhankel;
  for (long n = 1; n <= 10; ++n) {
    const JFraction recovered = series_to_cf(odd_power_sum_series(n, 11), 11);
    const JFraction mu = mu_fraction(n, 12);
    t.expect(recovered.lambda == mu.lambda, "mu coefficients n=" + std::to_string(n));
  }
  const JFraction ones{std::vector<Rational>(17, 1), false};
  const FormalSeries catalan = cf_to_series(ones, 16);
  for (unsigned k = 0; k <= 8; ++k) {
    t.expect_eq(hankel_from_cf(ones, k), lingebra::hankel_det({catalan.coeffs(), 0, k}),
                "Catalan product k=" + std::to_string(k));
    for (long n = 1; n <= 10; ++n) {
      const FormalSeries s = odd_power_sum_series(n, 16);
      t.expect_eq(hankel_from_cf(mu_fraction(n, 17), k), lingebra::hankel_det({s.coeffs(), 0, k}),
                  "mu product " + args({n, static_cast<long>(k)}));
    }
  }
  const std::vector<Rational> h2_parameters{Rational(7, 2), Rational(15, 2), Rational(1, 3)};
  for (unsigned k = 0; k <= 8; ++k) {
    t.expect_eq(prop_j_h2(ones.lambda, k), lingebra::hankel_det({catalan.coeffs(), 2, k}),
                "Catalan H_2 k=" + std::to_string(k));
    for (const Rational& n : h2_parameters) {
      const JFraction mu = mu_fraction(n, 10);
      const FormalSeries s = cf_to_series(mu, 9);
      t.expect_eq(prop_j_h2(mu.lambda, k), lingebra::hankel_det({s.coeffs(), 2, k}),
                  "mu H_2 n=" + exactnum::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

// 8. WZ pair for the one-third sum.
void wz(Tally& t) {
  for (long n = 1; n <= 200; ++n)
    t.expect_eq(formulas::wz_sum(n), make_rational(4 * n - 1, 3), "sum n=" + std::to_string(n));
  for (long n = 1; n <= 30; ++n) {
    for (long i = 0; i < n; ++i)
      t.expect_eq(formulas::wz_certificate_residual(n, i), Rational(0), "residual " + args({n, i}));
    t.expect_eq(formulas::wz_U(n, 0), Rational(0), "U(n,0) n=" + std::to_string(n));
    t.expect_eq(formulas::wz_Q(n + 1, n) + formulas::wz_U(n, n), Rational(0), "upper boundary n=" + std::to_string(n));
  }
}

// 9. Series layer: g_k recurrence and the odd continued fraction.
void series(Tally& t) {
  using namespace cfhankel;
  const unsigned order = 12;
  const std::vector<Rational> ns{Rational(1), Rational(2), Rational(3), Rational(7, 2)};
  for (const Rational& n : ns) {
    const std::string where = "n=" + exactnum::to_string(n);
    for (unsigned k = 1; k <= 3; ++k)
      t.expect(verify_g_recurrence(k, n, order).is_zero(), "g recurrence k=" + std::to_string(k) + " " + where);
    t.expect(odd_mu_fraction_series(n, order) == l_operator(sinh_kernel_series(n, order)), "odd fraction " + where);
    t.expect(g_k_series(0, n, order) == FormalSeries::constant(order, 1), "g_0 " + where);
    const Rational scale = Rational(1) / (n * (n + 1));
    t.expect(g_k_series(1, n, order) == sinh_kernel_series(n, order) * scale, "g_1 " + where);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Tally&);
  };
  const Criterion criteria[] = {
      {1, "central lozenge is one third of all tilings", one_third},
      {2, "central triangle removed: closed form, determinant, oracle", central_triangle},
      {3, "diagonal square removed from the (2k-1) by 2k rectangle", diagonal_defect},
      {4, "dented semi-hexagons and Aztec rectangles vs oracle", dented_regions},
      {5, "(k, q, k) hexagon counts", hexagons},
      {6, "determinant identities", determinants},
      {7, "continued fractions and Hankel determinants", continued_fractions},
      {8, "WZ pair", wz},
      {9, "g_k recurrence and odd continued fraction", series},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.ok();
    failures += ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << t.summary();
    if (!error.empty()) line << "; exception: " << error;
    line << "; " << secs << "s]";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
