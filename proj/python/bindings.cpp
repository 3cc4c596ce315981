#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tilingdet/cfhankel.hpp"
#include "tilingdet/cli.hpp"
#include "tilingdet/crosscheck.hpp"
#include "tilingdet/errors.hpp"
#include "tilingdet/formulas.hpp"
#include "tilingdet/lingebra.hpp"
#include "tilingdet/oracle.hpp"
#include "tilingdet/regions.hpp"

namespace py = pybind11;
using namespace tilingdet;

namespace {

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(exactnum::to_string(z)); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(Integer(q.get_num())), to_py(Integer(q.get_den())));
}

formulas::Parity parse_parity(const std::string& s) {
  if (s == "odd") return formulas::Parity::odd;
  if (s == "even") return formulas::Parity::even;
  throw DomainError("parity must be 'odd' or 'even'");
}

crosscheck::Instance make_instance(const std::string& family, const py::kwargs& params) {
  crosscheck::Instance inst;
  const auto f = crosscheck::parse_family(family);
  if (!f) throw DomainError("unknown family '" + family + "'");
  inst.family = *f;
  for (auto [key, value] : params) {
    const std::string k = py::str(key);
    if (k == "k") inst.k = value.cast<long>();
    else if (k == "q") inst.q = value.cast<long>();
    else if (k == "m") inst.m = value.cast<long>();
    else if (k == "n") inst.n = value.cast<long>();
    else if (k == "a") inst.a = value.cast<long>();
    else if (k == "b") inst.b = value.cast<long>();
    else if (k == "parity") inst.parity = parse_parity(value.cast<std::string>());
    else if (k == "dents" || k == "L" || k == "removed") inst.indices = value.cast<std::vector<long>>();
    else throw DomainError("unknown parameter '" + k + "'");
  }
  return inst;
}

oracle::Options budget_options(std::optional<std::uint64_t> budget) {
  oracle::Options o;
  if (budget) o.budget = *budget;
  return o;
}

py::list legs_to_py(const std::vector<crosscheck::Leg>& legs) {
  py::list out;
  for (const auto& l : legs) {
    py::dict d;
    d["method"] = crosscheck::to_string(l.method);
    d["status"] = l.status == crosscheck::LegStatus::computed         ? "computed"
                  : l.status == crosscheck::LegStatus::skipped_budget ? "skipped_budget"
                                                                      : "not_requested";
    d["value"] = l.value ? to_py(*l.value) : py::none();
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tiling counts for hexagons and Aztec rectangles with defects";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonIntegralResult>(m, "NonIntegralResult", PyExc_ArithmeticError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("families", [] {
    std::vector<std::string> names;
    for (auto f : {crosscheck::Family::hexagon, crosscheck::Family::semihex, crosscheck::Family::aztec,
                   crosscheck::Family::crossing, crosscheck::Family::notri, crosscheck::Family::central_lozenge,
                   crosscheck::Family::problem1, crosscheck::Family::missing_squares, crosscheck::Family::problem10})
      names.push_back(crosscheck::to_string(f));
    return names;
  });

  m.def(
      "count",
      [](const std::string& family, const std::string& method, std::optional<std::uint64_t> budget,
         const py::kwargs& params) {
        const auto inst = make_instance(family, params);
        const auto methods = crosscheck::available_methods(inst.family);
        crosscheck::Method chosen = methods.front();
        if (method != "auto") {
          const auto parsed = crosscheck::parse_method(method);
          if (!parsed) throw DomainError("unknown method '" + method + "'");
          chosen = *parsed;
        }
        return to_py(crosscheck::compute(inst, chosen, budget_options(budget)).value);
      },
      py::arg("family"), py::kw_only(), py::arg("method") = "auto", py::arg("budget") = py::none(),
      "Count tilings of a family instance, e.g. count('hexagon', k=2, q=2).");

  m.def(
      "cross_check",
      [](const std::string& family, std::vector<std::string> legs, std::optional<std::uint64_t> budget,
         const py::kwargs& params) {
        const auto inst = make_instance(family, params);
        std::vector<crosscheck::Method> methods;
        for (const auto& l : legs) {
          const auto parsed = crosscheck::parse_method(l);
          if (!parsed) throw DomainError("unknown method '" + l + "'");
          methods.push_back(*parsed);
        }
        const auto r = crosscheck::cross_check(inst, methods, budget_options(budget));
        py::dict d;
        d["family"] = family;
        d["legs"] = legs_to_py(r.legs);
        d["total_legs"] = legs_to_py(r.total_legs);
        d["ratio"] = r.ratio ? to_py(*r.ratio) : py::none();
        d["oracle_skipped"] = r.oracle_skipped;
        d["agree"] = r.agree;
        return d;
      },
      py::arg("family"), py::kw_only(), py::arg("legs") = std::vector<std::string>{},
      py::arg("budget") = py::none());

  m.def(
      "region_json",
      [](const std::string& family, const py::kwargs& params) {
        return regions::to_json(crosscheck::oracle_region(make_instance(family, params)));
      },
      py::arg("family"));

  m.def(
      "render",
      [](const std::string& family, const py::kwargs& params) {
        return regions::render_ascii(crosscheck::oracle_region(make_instance(family, params)));
      },
      py::arg("family"));

  m.def("hexagon_count", [](long k, long q) { return to_py(formulas::hexagon_count_kqk(k, q)); }, py::arg("k"),
        py::arg("q"));
  m.def(
      "semihex_dented_count",
      [](long k, long q, std::vector<long> dents) { return to_py(formulas::semihex_dented_count(k, q, dents)); },
      py::arg("k"), py::arg("q"), py::arg("dents"));
  m.def(
      "aztec_dented_count",
      [](long a, long b, std::vector<long> dents) { return to_py(formulas::aztec_dented_count(a, b, dents)); },
      py::arg("a"), py::arg("b"), py::arg("dents"));
  m.def(
      "crossing_restricted_count",
      [](long k, long q, std::vector<long> L) { return to_py(formulas::crossing_restricted_count(k, q, L)); },
      py::arg("k"), py::arg("q"), py::arg("L"));
  m.def("central_triangle_removed",
        [](long k, long n) { return to_py(formulas::central_triangle_removed_closed(k, n)); }, py::arg("k"),
        py::arg("n"));
  m.def(
      "central_lozenge",
      [](long m, long n, const std::string& parity) {
        return to_py(formulas::central_lozenge_closed(m, n, parse_parity(parity)));
      },
      py::arg("m"), py::arg("n"), py::arg("parity") = "odd");
  m.def(
      "aztec_missing_squares_count",
      [](long a, long b, std::vector<long> removed) {
        return to_py(formulas::aztec_missing_squares_count(a, b, removed));
      },
      py::arg("a"), py::arg("b"), py::arg("removed"));
  m.def("problem10", [](long k) { return to_py(formulas::problem10_closed(k)); }, py::arg("k"));
  m.def("wz_sum", [](long n) { return to_py(formulas::wz_sum(n)); }, py::arg("n"));
  m.def(
      "zavrotsky", [](long p, unsigned k) { return to_py(lingebra::zavrotsky_closed_form(p, k)); }, py::arg("p"),
      py::arg("k"));

  m.def("identity_names", &cli::identity_names);
  m.def(
      "run_identity",
      [](const std::string& name, std::optional<long> n_max, std::optional<long> m_max, std::optional<long> p_max,
         std::optional<long> k_max, std::optional<long> order, std::optional<long> trials) {
        cli::IdentityRange r;
        r.n_max = n_max;
        r.m_max = m_max;
        r.p_max = p_max;
        r.k_max = k_max;
        r.order = order;
        r.trials = trials;
        const auto report = cli::run_identity(name, r);
        py::dict d;
        d["name"] = report.name;
        d["cases"] = report.cases;
        d["pass"] = report.pass;
        d["counterexample"] = report.counterexample ? py::cast(*report.counterexample) : py::none();
        return d;
      },
      py::arg("name"), py::kw_only(), py::arg("n_max") = py::none(), py::arg("m_max") = py::none(),
      py::arg("p_max") = py::none(), py::arg("k_max") = py::none(), py::arg("order") = py::none(),
      py::arg("trials") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
