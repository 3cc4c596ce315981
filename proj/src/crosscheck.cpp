#include "tilingdet/crosscheck.hpp"

#include <algorithm>
#include <array>

#include "tilingdet/errors.hpp"

namespace tilingdet::crosscheck {

using formulas::Parity;
using regions::CellRegion;
using regions::DefectKind;
using regions::DefectSpec;
using regions::HexagonSpec;

namespace {

constexpr std::array<std::pair<Family, const char*>, 9> kFamilyNames{{
    {Family::hexagon, "hexagon"},
    {Family::semihex, "semihex"},
    {Family::aztec, "aztec"},
    {Family::crossing, "crossing"},
    {Family::notri, "notri"},
    {Family::central_lozenge, "central-lozenge"},
    {Family::problem1, "problem1"},
    {Family::missing_squares, "missing-squares"},
    {Family::problem10, "problem10"},
}};

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (long x : xs) {
    if (!s.empty()) s += ",";
    s += std::to_string(x);
  }
  return s;
}

Instance hexagon_of(long k, long q) {
  Instance h;
  h.family = Family::hexagon;
  h.k = k;
  h.q = q;
  return h;
}

std::vector<long> full_axis(long k, long q) {
  std::vector<long> all;
  for (long i = 0; i < k + q; ++i) all.push_back(i);
  return all;
}

bool legs_agree(const std::vector<Leg>& legs) {
  const Integer* first = nullptr;
  for (const Leg& leg : legs) {
    if (!leg.value) continue;
    if (!first) {
      first = &*leg.value;
    } else if (*leg.value != *first) {
      return false;
    }
  }
  return true;
}

std::vector<Leg> run_legs(const Instance& instance, const std::vector<Method>& methods,
                          const oracle::Options& options, bool& oracle_skipped) {
  std::vector<Leg> legs;
  for (Method m : available_methods(instance.family)) {
    Leg leg{m, LegStatus::not_requested, std::nullopt};
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) {
      try {
        leg.value = compute(instance, m, options).value;
        leg.status = LegStatus::computed;
      } catch (const BudgetExceeded&) {
        leg.status = LegStatus::skipped_budget;
        oracle_skipped = true;
      }
    }
    legs.push_back(std::move(leg));
  }
  return legs;
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::closed_form:
      return "closed_form";
    case Method::determinant:
      return "determinant";
    case Method::oracle:
      break;
  }
  return "oracle";
}

std::optional<Method> parse_method(const std::string& text) {
  if (text == "closed" || text == "closed_form" || text == "closed-form") return Method::closed_form;
  if (text == "det" || text == "determinant") return Method::determinant;
  if (text == "oracle") return Method::oracle;
  return std::nullopt;
}

std::string to_string(Family family) {
  for (auto [f, name] : kFamilyNames)
    if (f == family) return name;
  return "unknown";
}

std::optional<Family> parse_family(const std::string& text) {
  for (auto [f, name] : kFamilyNames)
    if (text == name) return f;
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> Instance::echo() const {
  auto s = [](long v) { return std::to_string(v); };
  const std::string par = parity == Parity::odd ? "odd" : "even";
  switch (family) {
    case Family::hexagon:
      return {{"k", s(k)}, {"q", s(q)}};
    case Family::semihex:
      return {{"k", s(k)}, {"q", s(q)}, {"dents", join(indices)}};
    case Family::aztec:
      return {{"a", s(a)}, {"b", s(b)}, {"dents", join(indices)}};
    case Family::crossing:
      return {{"k", s(k)}, {"q", s(q)}, {"L", join(indices)}};
    case Family::notri:
      return {{"k", s(k)}, {"n", s(n)}};
    case Family::central_lozenge:
      return {{"m", s(m)}, {"n", s(n)}, {"parity", par}};
    case Family::problem1:
      return {{"n", s(n)}, {"parity", par}};
    case Family::missing_squares:
      return {{"a", s(a)}, {"b", s(b)}, {"removed", join(indices)}};
    case Family::problem10:
      return {{"k", s(k)}};
  }
  return {};
}

std::vector<Method> available_methods(Family family) {
  switch (family) {
    case Family::semihex:
    case Family::aztec:
      return {Method::closed_form, Method::oracle};
    case Family::crossing:
    case Family::missing_squares:
      return {Method::determinant, Method::oracle};
    default:
      return {Method::closed_form, Method::determinant, Method::oracle};
  }
}

CellRegion oracle_region(const Instance& in) {
  switch (in.family) {
    case Family::hexagon:
      return regions::build_hexagon_region(HexagonSpec::kqk(in.k, in.q));
    case Family::semihex:
      return regions::build_semihexagon_region({in.k, in.q, in.indices});
    case Family::aztec:
      return regions::build_aztec_region(regions::DentedAztecRectangle{in.a, in.b, in.indices});
    case Family::crossing:
      return regions::build_hexagon_region(HexagonSpec::kqk(in.k, in.q),
                                           DefectSpec{DefectKind::crossing_set_restricted, in.indices});
    case Family::notri: {
      const long k = in.k, n = in.n;
      if (n < 1 || k < 1 || k > 2 * n) throw DomainError("central triangle defect needs 1 <= k <= 2n");
      return regions::build_hexagon_region({k, 2 * n + 1 - k, k, k + 1, 2 * n - k, k + 1},
                                           DefectSpec{DefectKind::central_triangle_removed, {}});
    }
    case Family::central_lozenge:
    case Family::problem1: {
      const long m = in.family == Family::problem1 ? in.n : in.m;
      const auto shape = formulas::central_lozenge_shape(m, in.n, in.parity);
      return regions::build_hexagon_region(HexagonSpec::kqk(shape.k, shape.q),
                                           DefectSpec{DefectKind::central_lozenge_forced, {}});
    }
    case Family::missing_squares:
      return regions::build_aztec_region(regions::UndentedAztecRectangle{in.a, in.b},
                                         DefectSpec{DefectKind::diagonal_squares_removed, in.indices});
    case Family::problem10: {
      if (in.k < 1) throw DomainError("problem10 needs k >= 1");
      return regions::build_aztec_region(regions::UndentedAztecRectangle{2 * in.k - 1, 2 * in.k},
                                         DefectSpec{DefectKind::diagonal_squares_removed, {in.k - 1}});
    }
  }
  throw DomainError("unknown family");
}

CountResult compute(const Instance& in, Method method, const oracle::Options& options) {
  const auto methods = available_methods(in.family);
  if (std::find(methods.begin(), methods.end(), method) == methods.end())
    throw DomainError("method " + to_string(method) + " is not available for " + to_string(in.family));
  CountResult r{0, method, to_string(in.family), in.echo()};
  if (method == Method::oracle) {
    r.value = oracle::count_matchings(oracle_region(in), options);
    return r;
  }
  const bool closed = method == Method::closed_form;
  switch (in.family) {
    case Family::hexagon:
      r.value = closed ? formulas::hexagon_count_kqk(in.k, in.q)
                       : formulas::crossing_restricted_count(in.k, in.q, full_axis(in.k, in.q));
      break;
    case Family::semihex:
      r.value = formulas::semihex_dented_count(in.k, in.q, in.indices);
      break;
    case Family::aztec:
      r.value = formulas::aztec_dented_count(in.a, in.b, in.indices);
      break;
    case Family::crossing:
      r.value = formulas::crossing_restricted_count(in.k, in.q, in.indices);
      break;
    case Family::notri:
      r.value = closed ? formulas::central_triangle_removed_closed(in.k, in.n)
                       : formulas::central_triangle_removed_det(in.k, in.n);
      break;
    case Family::central_lozenge:
      r.value = closed ? formulas::central_lozenge_closed(in.m, in.n, in.parity)
                       : formulas::central_lozenge_det(in.m, in.n, in.parity);
      break;
    case Family::problem1:
      r.value = closed ? formulas::central_lozenge_closed(in.n, in.n, in.parity)
                       : formulas::central_lozenge_det(in.n, in.n, in.parity);
      break;
    case Family::missing_squares:
      r.value = formulas::aztec_missing_squares_count(in.a, in.b, in.indices);
      break;
    case Family::problem10:
      r.value = closed ? formulas::problem10_closed(in.k)
                       : formulas::aztec_missing_squares_count(2 * in.k - 1, 2 * in.k, std::vector<long>{in.k - 1});
      break;
  }
  return r;
}

CrossCheckResult cross_check(const Instance& instance, std::vector<Method> methods, const oracle::Options& options) {
  if (methods.empty()) methods = available_methods(instance.family);
  CrossCheckResult out;
  out.instance = instance;
  out.legs = run_legs(instance, methods, options, out.oracle_skipped);
  out.agree = legs_agree(out.legs);

  if (instance.family == Family::problem1) {
    const auto shape = formulas::central_lozenge_shape(instance.n, instance.n, instance.parity);
    out.total_legs = run_legs(hexagon_of(shape.k, shape.q), methods, options, out.oracle_skipped);
    out.agree = out.agree && legs_agree(out.total_legs);
    auto first_value = [](const std::vector<Leg>& legs) -> const Integer* {
      for (const Leg& l : legs)
        if (l.value) return &*l.value;
      return nullptr;
    };
    const Integer* central = first_value(out.legs);
    const Integer* total = first_value(out.total_legs);
    if (central && total && *total != 0) {
      out.ratio = exactnum::make_rational(*central, *total);
      out.agree = out.agree && *out.ratio == Rational(1, 3);
    }
  }
  return out;
}

}  // namespace tilingdet::crosscheck
