#include "tilingdet/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tilingdet/cfhankel.hpp"
#include "tilingdet/crosscheck.hpp"
#include "tilingdet/errors.hpp"
#include "tilingdet/formulas.hpp"
#include "tilingdet/lingebra.hpp"

namespace tilingdet::cli {

using crosscheck::Family;
using crosscheck::Instance;
using crosscheck::Method;
using exactnum::to_string;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- identities

struct Sweep {
  IdentityReport report;
  void check(bool ok, const std::function<std::string()>& describe) {
    ++report.cases;
    if (!ok && report.pass) {
      report.pass = false;
      report.counterexample = describe();
    }
  }
};

std::vector<Rational> default_series_parameters() { return {1, 2, 3, Rational(7, 2)}; }

std::vector<Rational> random_sequence(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<long> dist(1, 20);
  std::vector<Rational> seq;
  for (std::size_t i = 0; i < length; ++i) seq.emplace_back(dist(rng));
  return seq;
}

std::vector<Rational> catalan(std::size_t count) {
  std::vector<Rational> out;
  Integer c = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(c);
    c = c * 2 * (2 * static_cast<long>(i) + 1) / (static_cast<long>(i) + 2);
  }
  return out;
}

void identity_wz(Sweep& s, const IdentityRange& r) {
  const long n_max = r.n_max.value_or(50);
  for (long n = 1; n <= n_max; ++n) {
    const Rational sum = formulas::wz_sum(n);
    s.check(sum == exactnum::make_rational(4 * n - 1, 3),
            [&] { return "wz_sum(" + std::to_string(n) + ") = " + to_string(sum); });
    s.check(formulas::wz_U(n, 0) == 0, [&] { return "U(" + std::to_string(n) + ", 0) != 0"; });
    s.check(formulas::wz_Q(n + 1, n) + formulas::wz_U(n, n) == 0,
            [&] { return "Q(n+1, n) + U(n, n) != 0 at n = " + std::to_string(n); });
    for (long i = 0; i < n; ++i) {
      const Rational res = formulas::wz_certificate_residual(n, i);
      s.check(res == 0, [&] {
        return "residual(" + std::to_string(n) + ", " + std::to_string(i) + ") = " + to_string(res);
      });
    }
  }
}

void identity_jacobi(Sweep& s, const IdentityRange& r) {
  const long m_max = r.m_max.value_or(4);
  const long trials = r.trials.value_or(100);
  std::mt19937_64 rng(r.seed);
  auto run_on = [&](const std::vector<Rational>& seq, const std::string& label) {
    for (long m = 1; m <= m_max; ++m) {
      const Rational res = lingebra::jacobi_identity_residual(seq, static_cast<unsigned>(m));
      s.check(res == 0, [&] { return label + ", m = " + std::to_string(m) + ": residual " + to_string(res); });
    }
  };
  // M_0(m+1) needs a_0 .. a_{2m}; M_2(m) needs up to a_{2m}.
  const std::size_t length = static_cast<std::size_t>(2 * m_max + 1);
  run_on(catalan(length), "catalan");
  for (long t = 0; t < trials; ++t) run_on(random_sequence(rng, length), "random trial " + std::to_string(t));
}

void identity_zavrotsky(Sweep& s, const IdentityRange& r) {
  const long p_max = r.p_max.value_or(8);
  const long k_max = r.k_max.value_or(6);
  for (long p = 0; p <= p_max; ++p) {
    for (long k = 1; k <= k_max; ++k) {
      const auto ku = static_cast<unsigned>(k);
      const Rational direct = lingebra::power_sum_hankel_det(p, ku);
      const Rational closed = lingebra::zavrotsky_closed_form(p, ku);
      s.check(direct == closed, [&] {
        return "p = " + std::to_string(p) + ", k = " + std::to_string(k) + ": det " + to_string(direct) +
               " vs closed " + to_string(closed);
      });
      if (p >= k) {
        const Rational sf = lingebra::zavrotsky_superfactorial_form(p, ku);
        s.check(sf == closed, [&] {
          return "superfactorial form at p = " + std::to_string(p) + ", k = " + std::to_string(k);
        });
      }
    }
  }
}

void identity_sylvester(Sweep& s, const IdentityRange& r) {
  const long k_max = r.k_max.value_or(3);
  const long trials = r.trials.value_or(100);
  std::mt19937_64 rng(r.seed);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (long t = 0; t < trials; ++t) {
    const long k = 1 + t % k_max;
    const auto u = lingebra::ExactMatrix::generate(2 * k, k, [&](std::size_t, std::size_t) { return Rational(dist(rng)); });
    const Rational lhs = lingebra::sylvester_pairing_sum(u);
    const Rational rhs = lingebra::sylvester_pairing_closed(u);
    s.check(lhs == rhs, [&] {
      return "trial " + std::to_string(t) + " (k = " + std::to_string(k) + "): " + to_string(lhs) + " vs " +
             to_string(rhs);
    });
  }
}

void identity_cf_roundtrip(Sweep& s, const IdentityRange& r) {
  using namespace cfhankel;
  const long n_max = r.n_max.value_or(10);
  const long terms = r.order.value_or(12);
  const long k_max = r.k_max.value_or(8);
  if (terms < 1) throw DomainError("cf-roundtrip needs at least one term");
  const auto order = static_cast<unsigned>(terms - 1);

  const JFraction ones{std::vector<Rational>(static_cast<std::size_t>(terms), Rational(1)), false};
  const FormalSeries cat = cf_to_series(ones, order);
  s.check(cat.coeffs() == catalan(static_cast<std::size_t>(terms)), [] { return "Catalan expansion"; });
  s.check(series_to_cf(cat, order).lambda == ones.lambda, [] { return "Catalan inversion"; });

  for (long n = 1; n <= n_max; ++n) {
    const FormalSeries series = odd_power_sum_series(n, order);
    const JFraction mu = mu_fraction(n, static_cast<unsigned>(terms));
    const JFraction recovered = series_to_cf(series, order);
    s.check(recovered.lambda == mu.lambda, [&] { return "mu coefficients differ at n = " + std::to_string(n); });
    s.check(cf_to_series(mu, order) == series, [&] { return "mu fraction expansion at n = " + std::to_string(n); });

    const FormalSeries long_series = odd_power_sum_series(n, static_cast<unsigned>(2 * k_max));
    const JFraction long_mu = mu_fraction(n, static_cast<unsigned>(2 * k_max + 1));
    for (long k = 0; k <= k_max; ++k) {
      lingebra::HankelSpec spec{long_series.coeffs(), 0, static_cast<unsigned>(k)};
      const Rational direct = lingebra::hankel_det(spec);
      const Rational product = hankel_from_cf(long_mu, static_cast<unsigned>(k));
      s.check(direct == product, [&] {
        return "Hankel product at n = " + std::to_string(n) + ", k = " + std::to_string(k);
      });
    }
  }
}

void identity_g_recurrence(Sweep& s, const IdentityRange& r) {
  using namespace cfhankel;
  const long k_max = r.k_max.value_or(3);
  const auto order = static_cast<unsigned>(r.order.value_or(12));
  const auto params = r.n_values.empty() ? default_series_parameters() : r.n_values;
  for (const Rational& n : params) {
    const std::string at = " at n = " + to_string(n);
    s.check(g_k_series(0, n, order) == FormalSeries::constant(order, 1), [&] { return "g_0 != 1" + at; });
    if (n != 0 && n != -1) {
      const FormalSeries kernel = sinh_kernel_series(n, order) * (1 / (n * (n + 1)));
      s.check(g_k_series(1, n, order) == kernel, [&] { return "g_1 differs from the sinh product" + at; });
    }
    for (long k = 1; k <= k_max; ++k) {
      s.check(verify_g_recurrence(static_cast<unsigned>(k), n, order).is_zero(),
              [&] { return "recurrence residual nonzero for k = " + std::to_string(k) + at; });
    }
  }
}

void identity_sinh_fraction(Sweep& s, const IdentityRange& r) {
  using namespace cfhankel;
  const auto order = static_cast<unsigned>(r.order.value_or(12));
  const auto params = r.n_values.empty() ? default_series_parameters() : r.n_values;
  for (const Rational& n : params) {
    s.check(odd_mu_fraction_series(n, order) == l_operator(sinh_kernel_series(n, order)),
            [&] { return "odd fraction differs from L(sinh kernel) at n = " + to_string(n); });
  }
}

void identity_hilbert(Sweep& s, const IdentityRange& r) {
  const long k_max = r.k_max.value_or(5);
  for (long k = 1; k <= k_max; ++k) {
    const Rational d = lingebra::det_exact(lingebra::hilbert_matrix(static_cast<std::size_t>(k)));
    const Rational expect = exactnum::make_rational(exactnum::pow(exactnum::superfactorial(k - 1), 4),
                                                    exactnum::superfactorial(2 * k - 1));
    s.check(d == expect, [&] { return "k = " + std::to_string(k) + ": " + to_string(d); });
  }
}

void identity_one_third(Sweep& s, const IdentityRange& r) {
  const long n_max = r.n_max.value_or(25);
  for (long n = 1; n <= n_max; ++n) {
    for (auto parity : {formulas::Parity::odd, formulas::Parity::even}) {
      const auto shape = formulas::central_lozenge_shape(n, n, parity);
      const Integer closed = formulas::central_lozenge_closed(n, n, parity);
      const Integer det = formulas::central_lozenge_det(n, n, parity);
      const Integer total = formulas::hexagon_count_kqk(shape.k, shape.q);
      const std::string at = "n = " + std::to_string(n) + (parity == formulas::Parity::odd ? " odd" : " even");
      s.check(closed == det, [&] { return "closed and determinant legs differ, " + at; });
      s.check(3 * closed == total, [&] { return "ratio is not 1/3, " + at; });
    }
  }
}

void identity_prop_det(Sweep& s, const IdentityRange& r) {
  const long p_max = r.p_max.value_or(6);
  const long k_max = r.k_max.value_or(8);
  for (long p = 1; p <= p_max; ++p) {
    for (long k = 0; k <= k_max; ++k) {
      s.check(formulas::prop_det_closed(p, k) == formulas::prop_det_direct(p, k),
              [&] { return "p = " + std::to_string(p) + ", k = " + std::to_string(k); });
    }
  }
}

const std::map<std::string, std::function<void(Sweep&, const IdentityRange&)>>& identity_table() {
  static const std::map<std::string, std::function<void(Sweep&, const IdentityRange&)>> table{
      {"wz", identity_wz},
      {"jacobi", identity_jacobi},
      {"zavrotsky", identity_zavrotsky},
      {"sylvester", identity_sylvester},
      {"cf-roundtrip", identity_cf_roundtrip},
      {"g-recurrence", identity_g_recurrence},
      {"sinh-fraction", identity_sinh_fraction},
      {"hilbert", identity_hilbert},
      {"one-third", identity_one_third},
      {"prop-det", identity_prop_det},
  };
  return table;
}

// ---------------------------------------------------------------- parsing

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::text;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

struct ShapeFlags {
  std::optional<long> k, q, m, n, a, b;
  std::optional<std::string> dents, L, removed, parity;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--k", k, "k parameter");
    cmd.add_option("--q", q, "q parameter");
    cmd.add_option("--m", m, "m parameter");
    cmd.add_option("--n", n, "n parameter");
    cmd.add_option("--a", a, "a parameter (Aztec height)");
    cmd.add_option("--b", b, "b parameter (Aztec width)");
    cmd.add_option("--dents", dents, "comma-separated dent positions");
    cmd.add_option("--L", L, "comma-separated allowed crossing positions");
    cmd.add_option("--removed", removed, "comma-separated removed diagonal positions");
    cmd.add_option("--parity", parity, "odd or even hexagon shape")->check(CLI::IsMember({"odd", "even"}));
  }

  Instance instance(Family family) const {
    // Flags each family takes; everything else is rejected.
    static const std::map<Family, std::string> allowed{
        {Family::hexagon, "kq"},        {Family::semihex, "kqD"},         {Family::aztec, "abD"},
        {Family::crossing, "kqL"},      {Family::notri, "kn"},            {Family::central_lozenge, "mnP"},
        {Family::problem1, "nP"},       {Family::missing_squares, "abR"}, {Family::problem10, "k"},
    };
    const std::string& ok = allowed.at(family);
    const std::pair<char, bool> given[] = {{'k', k.has_value()},     {'q', q.has_value()},     {'m', m.has_value()},
                                           {'n', n.has_value()},     {'a', a.has_value()},     {'b', b.has_value()},
                                           {'D', dents.has_value()}, {'L', L.has_value()},     {'R', removed.has_value()},
                                           {'P', parity.has_value()}};
    static const std::map<char, std::string> flag_name{{'k', "--k"},     {'q', "--q"}, {'m', "--m"},
                                                       {'n', "--n"},     {'a', "--a"}, {'b', "--b"},
                                                       {'D', "--dents"}, {'L', "--L"}, {'R', "--removed"},
                                                       {'P', "--parity"}};
    for (auto [flag, present] : given) {
      const bool wanted = ok.find(flag) != std::string::npos;
      if (present && !wanted)
        throw UsageError(flag_name.at(flag) + " does not apply to " + crosscheck::to_string(family));
      if (!present && wanted && flag != 'P')
        throw UsageError(crosscheck::to_string(family) + " requires " + flag_name.at(flag));
    }
    Instance in;
    in.family = family;
    in.k = k.value_or(0);
    in.q = q.value_or(0);
    in.m = m.value_or(0);
    in.n = n.value_or(0);
    in.a = a.value_or(0);
    in.b = b.value_or(0);
    if (dents) in.indices = parse_list(*dents);
    if (L) in.indices = parse_list(*L);
    if (removed) in.indices = parse_list(*removed);
    in.parity = parity.value_or("odd") == "even" ? formulas::Parity::even : formulas::Parity::odd;
    return in;
  }
};

Family family_or_throw(const std::string& text) {
  auto f = crosscheck::parse_family(text);
  if (!f) throw UsageError("unknown family '" + text + "'");
  return *f;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kBudgetEnv) + " is not a nonnegative integer");
  }
  return oracle::kDefaultBudget;
}

// ---------------------------------------------------------------- output

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\n";
}

ordered_json inputs_json(const std::vector<std::pair<std::string, std::string>>& inputs) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : inputs) j[k] = v;
  return j;
}

std::string inputs_text(const std::vector<std::pair<std::string, std::string>>& inputs) {
  std::string s;
  for (const auto& [k, v] : inputs) s += " " + k + "=" + v;
  return s;
}

std::string status_name(crosscheck::LegStatus s) {
  switch (s) {
    case crosscheck::LegStatus::computed:
      return "computed";
    case crosscheck::LegStatus::skipped_budget:
      return "skipped_budget";
    case crosscheck::LegStatus::not_requested:
      break;
  }
  return "not_requested";
}

ordered_json legs_json(const std::vector<crosscheck::Leg>& legs) {
  ordered_json arr = ordered_json::array();
  for (const auto& l : legs) {
    arr.push_back({{"method", crosscheck::to_string(l.method)},
                   {"status", status_name(l.status)},
                   {"value", l.value ? ordered_json(to_string(*l.value)) : ordered_json(nullptr)}});
  }
  return arr;
}

void print_count(std::ostream& os, Format fmt, const crosscheck::CountResult& r) {
  switch (fmt) {
    case Format::json:
      os << ordered_json{{"command", "count"},
                         {"family", r.family},
                         {"inputs", inputs_json(r.inputs)},
                         {"method", crosscheck::to_string(r.method)},
                         {"value", to_string(r.value)}}
                .dump(2)
         << "\n";
      break;
    case Format::csv: {
      std::vector<std::string> header{"family"}, row{r.family};
      for (const auto& [k, v] : r.inputs) {
        header.push_back(k);
        row.push_back(v);
      }
      header.insert(header.end(), {"method", "value"});
      row.insert(row.end(), {crosscheck::to_string(r.method), to_string(r.value)});
      csv_row(os, header);
      csv_row(os, row);
      break;
    }
    case Format::text:
      os << r.family << inputs_text(r.inputs) << ": " << to_string(r.value) << " ("
         << crosscheck::to_string(r.method) << ")\n";
      break;
  }
}

void print_check(std::ostream& os, Format fmt, const crosscheck::CrossCheckResult& r) {
  const auto inputs = r.instance.echo();
  const std::string family = crosscheck::to_string(r.instance.family);
  switch (fmt) {
    case Format::json: {
      ordered_json j{{"command", "check"}, {"family", family}, {"inputs", inputs_json(inputs)},
                     {"legs", legs_json(r.legs)}};
      if (!r.total_legs.empty()) j["total_legs"] = legs_json(r.total_legs);
      if (r.ratio) j["ratio"] = to_string(*r.ratio);
      j["oracle_skipped"] = r.oracle_skipped;
      j["agree"] = r.agree;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      csv_row(os, {"part", "method", "status", "value"});
      auto rows = [&](const char* part, const std::vector<crosscheck::Leg>& legs) {
        for (const auto& l : legs)
          csv_row(os, {part, crosscheck::to_string(l.method), status_name(l.status),
                       l.value ? to_string(*l.value) : ""});
      };
      rows("count", r.legs);
      rows("total", r.total_legs);
      if (r.ratio) csv_row(os, {"ratio", "", "", to_string(*r.ratio)});
      csv_row(os, {"verdict", "", "", r.agree ? "agree" : "disagree"});
      break;
    }
    case Format::text: {
      os << "check " << family << inputs_text(inputs) << "\n";
      auto rows = [&](const std::string& prefix, const std::vector<crosscheck::Leg>& legs) {
        for (const auto& l : legs) {
          os << "  " << prefix << crosscheck::to_string(l.method) << ": "
             << (l.value ? to_string(*l.value) : status_name(l.status)) << "\n";
        }
      };
      rows("", r.legs);
      rows("total ", r.total_legs);
      if (r.ratio) os << "  ratio: " << to_string(*r.ratio) << "\n";
      if (r.oracle_skipped) os << "  oracle skipped (budget exceeded)\n";
      os << (r.agree ? "agree" : "DISAGREE") << "\n";
      break;
    }
  }
}

struct Table {
  std::string family;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void print_table(std::ostream& os, Format fmt, const Table& t) {
  switch (fmt) {
    case Format::json: {
      ordered_json rows = ordered_json::array();
      for (const auto& r : t.rows) rows.push_back(r);
      os << ordered_json{{"command", "table"}, {"family", t.family}, {"columns", t.columns}, {"rows", rows}}.dump(2)
         << "\n";
      break;
    }
    case Format::csv:
      csv_row(os, t.columns);
      for (const auto& r : t.rows) csv_row(os, r);
      break;
    case Format::text: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
        for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          os << (c ? "  " : "") << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        os << "\n";
      };
      line(t.columns);
      for (const auto& r : t.rows) line(r);
      break;
    }
  }
}

Table make_table(const std::string& family, long k_max, long q_max, long n_max) {
  Table t{family, {}, {}};
  auto s = [](long v) { return std::to_string(v); };
  if (family == "hexagon") {
    t.columns = {"k", "q", "value"};
    for (long k = 1; k <= k_max; ++k)
      for (long q = 1; q <= q_max; ++q) t.rows.push_back({s(k), s(q), to_string(formulas::hexagon_count_kqk(k, q))});
  } else if (family == "problem10") {
    t.columns = {"k", "value"};
    for (long k = 1; k <= k_max; ++k) t.rows.push_back({s(k), to_string(formulas::problem10_closed(k))});
  } else if (family == "notri") {
    t.columns = {"k", "n", "value"};
    for (long k = 1; k <= k_max; ++k)
      for (long n = 1; n <= n_max; ++n)
        if (k <= 2 * n) t.rows.push_back({s(k), s(n), to_string(formulas::central_triangle_removed_closed(k, n))});
  } else if (family == "one-third") {
    t.columns = {"n", "parity", "central", "total", "ratio"};
    for (long n = 1; n <= n_max; ++n) {
      for (auto parity : {formulas::Parity::odd, formulas::Parity::even}) {
        const auto shape = formulas::central_lozenge_shape(n, n, parity);
        const Integer central = formulas::central_lozenge_closed(n, n, parity);
        const Integer total = formulas::hexagon_count_kqk(shape.k, shape.q);
        t.rows.push_back({s(n), parity == formulas::Parity::odd ? "odd" : "even", to_string(central),
                          to_string(total), to_string(exactnum::make_rational(central, total))});
      }
    }
  } else {
    throw UsageError("unknown table family '" + family + "' (hexagon, problem10, notri, one-third)");
  }
  return t;
}

void print_identity(std::ostream& os, Format fmt, const IdentityReport& r) {
  switch (fmt) {
    case Format::json:
      os << ordered_json{{"command", "identity"},
                         {"name", r.name},
                         {"cases", std::to_string(r.cases)},
                         {"pass", r.pass},
                         {"counterexample", r.counterexample ? ordered_json(*r.counterexample) : ordered_json(nullptr)}}
                .dump(2)
         << "\n";
      break;
    case Format::csv:
      csv_row(os, {"name", "cases", "pass", "counterexample"});
      csv_row(os, {r.name, std::to_string(r.cases), r.pass ? "true" : "false", r.counterexample.value_or("")});
      break;
    case Format::text:
      os << "identity " << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.cases << " cases)\n";
      if (r.counterexample) os << "  first counterexample: " << *r.counterexample << "\n";
      break;
  }
}

void print_render(std::ostream& os, Format fmt, const regions::CellRegion& region) {
  switch (fmt) {
    case Format::json:
      os << regions::to_json(region, 2) << "\n";
      break;
    case Format::csv:
      csv_row(os, {"index", "shape", "row", "col"});
      for (std::size_t i = 0; i < region.size(); ++i) {
        const auto& c = region.cells()[i];
        csv_row(os, {std::to_string(i), regions::to_string(c.shape), std::to_string(c.row), std::to_string(c.col)});
      }
      break;
    case Format::text:
      os << regions::render_ascii(region);
      break;
  }
}

}  // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : identity_table()) names.push_back(name);
  return names;
}

IdentityReport run_identity(const std::string& name, const IdentityRange& range) {
  const auto& table = identity_table();
  auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown identity '" + name + "'");
  Sweep s;
  s.report.name = name;
  it->second(s, range);
  return s.report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tiling counts for hexagons and Aztec rectangles with defects", "tilingdet"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output_path;
  std::optional<std::uint64_t> budget;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output,-o", output_path, "Write output to this file instead of stdout");
  app.add_option("--budget", budget, std::string("Oracle node budget (default from ") + kBudgetEnv + ")");

  std::string family_name;
  ShapeFlags shape;
  std::string method_name = "auto";
  std::string legs_text;

  auto* count = app.add_subcommand("count", "Compute one count");
  count->add_option("family", family_name, "Region family")->required();
  shape.add_to(*count);
  count->add_option("--method", method_name, "closed, det, oracle or auto")
      ->check(CLI::IsMember({"auto", "closed", "det", "oracle"}));

  auto* check = app.add_subcommand("check", "Compare closed form, determinant and oracle");
  check->add_option("family", family_name, "Region family")->required();
  ShapeFlags check_shape;
  check_shape.add_to(*check);
  check->add_option("--legs", legs_text, "Comma-separated subset of closed,det,oracle");

  auto* table = app.add_subcommand("table", "Tabulate a family");
  std::string table_family;
  long k_max = 4, q_max = 4, n_max = 5;
  table->add_option("family", table_family, "hexagon, problem10, notri or one-third")->required();
  table->add_option("--k-max", k_max, "Largest k");
  table->add_option("--q-max", q_max, "Largest q");
  table->add_option("--n-max", n_max, "Largest n");

  auto* identity = app.add_subcommand("identity", "Verify an identity over a parameter range");
  std::string identity_name;
  IdentityRange range;
  std::string n_values_text;
  identity->add_option("name", identity_name, "Identity name")->required();
  identity->add_option("--n-max", range.n_max);
  identity->add_option("--m-max", range.m_max);
  identity->add_option("--p-max", range.p_max);
  identity->add_option("--k-max", range.k_max);
  identity->add_option("--order", range.order, "Series truncation order or number of terms");
  identity->add_option("--trials", range.trials, "Random instances");
  identity->add_option("--seed", range.seed, "Random seed");
  identity->add_option("--n-values", n_values_text, "Comma-separated rationals for series identities");

  auto* render = app.add_subcommand("render", "Print the oracle region of a family instance");
  ShapeFlags render_shape;
  render->add_option("family", family_name, "Region family")->required();
  render_shape.add_to(*render);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ExtrasError&) {
    std::string extras;
    for (const auto& a : app.remaining(true)) extras += " " + a;
    err << "error: unrecognized arguments:" << extras << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot open " << output_path << "\n";
      return kUsage;
    }
  }
  std::ostream& os = output_path.empty() ? out : file;
  const Format fmt = parse_format(format);

  try {
    const oracle::Options options{resolve_budget(budget)};
    if (*count) {
      const Instance in = shape.instance(family_or_throw(family_name));
      Method method = crosscheck::available_methods(in.family).front();
      if (method_name != "auto") method = *crosscheck::parse_method(method_name);
      print_count(os, fmt, crosscheck::compute(in, method, options));
      return kOk;
    }
    if (*check) {
      const Instance in = check_shape.instance(family_or_throw(family_name));
      std::vector<Method> methods;
      std::stringstream ss(legs_text);
      for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        auto m = crosscheck::parse_method(item);
        if (!m) throw UsageError("unknown leg '" + item + "'");
        methods.push_back(*m);
      }
      const auto result = crosscheck::cross_check(in, methods, options);
      print_check(os, fmt, result);
      return result.agree ? kOk : kDisagreement;
    }
    if (*table) {
      print_table(os, fmt, make_table(table_family, k_max, q_max, n_max));
      return kOk;
    }
    if (*identity) {
      if (!n_values_text.empty()) {
        std::stringstream ss(n_values_text);
        for (std::string item; std::getline(ss, item, ',');)
          if (!item.empty()) range.n_values.push_back(exactnum::parse_rational(item));
      }
      const auto report = run_identity(identity_name, range);
      print_identity(os, fmt, report);
      return report.pass ? kOk : kDisagreement;
    }
    if (*render) {
      const Instance in = render_shape.instance(family_or_throw(family_name));
      print_render(os, fmt, crosscheck::oracle_region(in));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const NonIntegralResult& e) {
    err << "error: " << e.what() << "\n";
    return kDisagreement;
  }
  return kUsage;
}

}  // namespace tilingdet::cli
