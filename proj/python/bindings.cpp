#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "domroots/complexroots.hpp"
#include "domroots/exactpoly.hpp"
#include "domroots/families.hpp"
#include "domroots/graphs.hpp"
#include "domroots/introots.hpp"
#include "domroots/limitsets.hpp"
#include "domroots/realroots.hpp"
#include "domroots/report.hpp"
#include "domroots/svgplot.hpp"
#include "domroots/verify.hpp"

namespace py = pybind11;
using namespace domroots;

namespace {

// Coefficients cross the boundary as Python ints (arbitrary size) via their
// decimal strings.
py::list to_py(const IntPolynomial& p) {
  py::list out;
  py::object int_type = py::module_::import("builtins").attr("int");
  for (const auto& c : p.coeffs()) out.append(int_type(c.get_str()));
  return out;
}

IntPolynomial from_py(const py::sequence& coeffs) {
  std::vector<mpz_class> c;
  for (const auto& item : coeffs) c.emplace_back(py::str(item).cast<std::string>());
  return IntPolynomial(c);
}

FamilyId family_id(const std::string& family, int n) {
  if (family == "friendship" || family == "F") return FamilyId::friendship(n);
  if (family == "book" || family == "B") return FamilyId::book(n);
  if (family == "corona-odd-odd") return FamilyId::corona(CoronaVariant::OddOdd, n);
  if (family == "corona-even-odd") return FamilyId::corona(CoronaVariant::EvenOdd, n);
  if (family == "corona-odd-even") return FamilyId::corona(CoronaVariant::OddEven, n);
  throw std::invalid_argument("unknown family: " + family);
}

CoronaVariant variant(const std::string& name) {
  if (name == "odd-odd") return CoronaVariant::OddOdd;
  if (name == "even-odd") return CoronaVariant::EvenOdd;
  if (name == "odd-even") return CoronaVariant::OddEven;
  throw std::invalid_argument("unknown corona variant: " + name);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::TiedDominantPair: return "tied_pair";
    case Verdict::VanishingDominantAlpha: return "vanishing_alpha";
    case Verdict::SpecialPoint: return "special_point";
    case Verdict::BoundaryTie: return "boundary_tie";
    case Verdict::NotOnLimitSet: break;
  }
  return "not_on_limit_set";
}

py::list roots_of(const IntPolynomial& p, int precision) {
  SolverOptions opt;
  opt.precision_bits = precision;
  py::list out;
  for (const auto& r : all_roots(p, opt).roots) out.append(r.value.to_std());
  return out;
}

}  // namespace

PYBIND11_MODULE(_domroots, m) {
  m.doc() = "Domination polynomials of friendship, book and corona graphs and their roots";

  py::register_exception<RootSolveError>(m, "RootSolveError", PyExc_RuntimeError);
  py::register_exception<GraphParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<OracleCapExceeded>(m, "OracleCapExceeded", PyExc_ValueError);

  m.def("family_poly", [](const std::string& family, int n) { return to_py(family_poly(family_id(family, n))); },
        py::arg("family"), py::arg("n"), "Ascending integer coefficients of D(G, x) for a named family member.");
  m.def("friendship_poly", [](int n) { return to_py(friendship_poly(n)); }, py::arg("n"));
  m.def("book_poly", [](int n) { return to_py(book_poly(n)); }, py::arg("n"));

  m.def(
      "oracle_poly",
      [](const std::string& adjacency, int cap) {
        std::istringstream in(adjacency);
        return to_py(brute_force_dompoly(parse_adjacency(in), cap));
      },
      py::arg("adjacency"), py::arg("cap") = kDefaultOracleCap,
      "Brute-force domination polynomial of a graph given in adjacency-list text.");

  m.def("roots", [](const py::sequence& coeffs, int precision) { return roots_of(from_py(coeffs), precision); },
        py::arg("coeffs"), py::arg("precision") = 256, "All complex roots, with multiplicity, sorted by (re, im).");
  m.def("family_roots", [](const std::string& family, int n, int precision) {
        return roots_of(family_poly(family_id(family, n)), precision);
      },
      py::arg("family"), py::arg("n"), py::arg("precision") = 256);

  m.def("count_real_roots", [](const py::sequence& coeffs) { return count_real_roots(from_py(coeffs)); },
        py::arg("coeffs"), "Distinct real roots, certified by a Sturm sequence.");
  m.def("integer_roots", [](const py::sequence& coeffs) {
        std::vector<long> out;
        for (const auto& r : integer_root_scan(from_py(coeffs)).roots_found) out.push_back(r.get_si());
        return out;
      },
      py::arg("coeffs"));

  m.def("friendship_real_roots", [](int n) {
        const FriendshipRealRoots r = solve_friendship_real_roots(n);
        return py::make_tuple(r.x_minus.to_double(), r.x_plus.to_double());
      },
      py::arg("n"), "(x_minus, x_plus) for even n.");
  m.def("book_real_roots", [](int n) {
        std::vector<double> out;
        for (const auto& r : book_real_roots(n).roots) out.push_back(r.value.to_double());
        return out;
      },
      py::arg("n"), "Distinct nonzero real roots of D(B_n, x), ascending.");

  m.def("explicit_bound", [](int n) { return explicit_bound(n).to_double(); }, py::arg("n"));
  m.def("implicit_radius", [](int n) { return implicit_radius(n).to_double(); }, py::arg("n"));

  m.def("classify_point", [](const std::string& family, std::complex<double> z) {
        const ExpPolyFamily fam = family == "book" ? book_family() : family == "friendship"
                                                                         ? friendship_family()
                                                                         : throw std::invalid_argument(family);
        return std::string(verdict_name(classify_point(fam, z).verdict));
      },
      py::arg("family"), py::arg("z"));

  m.def("corona_minus2", [](const std::string& v, int m) {
        const CoronaMinus2Report r = corona_minus2_check(variant(v), m);
        py::dict d;
        d["name"] = r.id.name();
        d["degree"] = r.degree;
        d["minus2_is_root"] = r.minus2_is_root;
        d["exclusivity_checked"] = r.exclusivity_checked;
        d["exclusive"] = r.exclusive;
        d["distinct_real_roots"] = r.distinct_real_roots;
        return d;
      },
      py::arg("variant"), py::arg("m"));

  m.def("plot_svg", [](const std::string& family, int n) { return render_svg(family_plot(family_id(family, n))); },
        py::arg("family"), py::arg("n"));

  m.def("verify", [](const std::string& scope) {
        const auto s = parse_scope(scope);
        if (!s) throw std::invalid_argument("unknown scope: " + scope);
        py::list out;
        for (const auto& c : run_verify(*s)) out.append(py::make_tuple(c.name, to_string(c.status), c.detail));
        return out;
      },
      py::arg("scope") = "all", "List of (name, status, detail) for each check.");
}
