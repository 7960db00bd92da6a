#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "freeinv/cli.hpp"
#include "freeinv/freeinv.hpp"

namespace py = pybind11;
using namespace freeinv;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

UnitaryRep rep_from(const py::object& source) {
  if (py::isinstance<UnitaryRep>(source)) return source.cast<UnitaryRep>();
  if (py::isinstance<py::str>(source)) return load_rep(source.cast<std::string>());
  return rep_from_json(from_python(source));
}

std::optional<BasisMethod> method_from(const std::optional<std::string>& name) {
  if (!name || *name == "auto") return std::nullopt;
  if (*name == "general") return BasisMethod::General;
  if (*name == "abelian") return BasisMethod::Abelian;
  throw std::invalid_argument("unknown basis method: " + *name);
}

py::list terms_of(const FreePoly& p) {
  py::list out;
  for (const Term& t : p.terms()) {
    py::tuple letters(t.word.degree());
    for (int k = 0; k < t.word.degree(); ++k) letters[k] = t.word[k] + 1;
    out.append(py::make_tuple(letters, t.coeff));
  }
  return out;
}

FreePoly poly_from_terms(std::size_t d, const std::vector<std::pair<std::vector<int>, Complex>>& terms) {
  FreePoly p(d);
  for (const auto& [letters, c] : terms) {
    std::vector<Letter> w;
    for (int i : letters) {
      if (i < 1 || static_cast<std::size_t>(i) > d) throw std::invalid_argument("letter out of range");
      w.push_back(static_cast<Letter>(i - 1));
    }
    p += FreePoly::monomial(Word(d, w), c);
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariant free polynomials under finite unitary group actions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<RewriteError>(m, "RewriteError", PyExc_ValueError);
  py::register_exception<BasisError>(m, "BasisError", PyExc_RuntimeError);
  py::register_exception<CountingError>(m, "CountingError", PyExc_RuntimeError);
  py::register_exception<SpectrumError>(m, "SpectrumError", PyExc_RuntimeError);

  py::class_<FreePoly>(m, "FreePoly")
      .def(py::init<std::size_t>(), py::arg("alphabet_size"))
      .def(py::init([](const std::string& text, std::size_t d, char var) { return parse(text, d, var); }),
           py::arg("text"), py::arg("alphabet_size"), py::arg("var") = 'x')
      .def(py::init(&poly_from_terms), py::arg("alphabet_size"), py::arg("terms"))
      .def_static("constant", &FreePoly::constant, py::arg("alphabet_size"), py::arg("value"))
      .def_static("variable", [](std::size_t d, int i) {
        if (i < 1 || static_cast<std::size_t>(i) > d) throw std::invalid_argument("letter out of range");
        return FreePoly::variable(d, static_cast<Letter>(i - 1));
      }, py::arg("alphabet_size"), py::arg("index"))
      .def_property_readonly("alphabet_size", &FreePoly::alphabet_size)
      .def_property_readonly("degree", [](const FreePoly& p) -> std::optional<int> {
        if (p.is_zero()) return std::nullopt;
        return p.degree();
      })
      .def("is_zero", &FreePoly::is_zero)
      .def("terms", &terms_of)
      .def("homogeneous_part", &FreePoly::homogeneous_part, py::arg("n"))
      .def("homogeneous_component", [](const FreePoly& p, int n) { return homogeneous_component(p, n).coeffs; },
           py::arg("n"))
      .def("format", [](const FreePoly& p, char var) { return format(p, var); }, py::arg("var") = 'x')
      .def("norm", [](const FreePoly& p) { return norm(p); })
      .def("inner", [](const FreePoly& p, const FreePoly& q) { return inner_product(p, q); })
      .def("__len__", &FreePoly::size)
      .def("__str__", [](const FreePoly& p) { return format(p); })
      .def("__repr__", [](const FreePoly& p) { return "FreePoly('" + format(p) + "')"; })
      .def("__eq__", [](const FreePoly& a, const FreePoly& b) { return a == b; })
      .def("__add__", [](const FreePoly& a, const FreePoly& b) { return a + b; })
      .def("__sub__", [](const FreePoly& a, const FreePoly& b) { return a - b; })
      .def("__mul__", [](const FreePoly& a, const FreePoly& b) { return a * b; })
      .def("__mul__", [](const FreePoly& a, Complex s) { return a * s; })
      .def("__rmul__", [](const FreePoly& a, Complex s) { return s * a; })
      .def("__neg__", [](const FreePoly& a) { return -a; });

  m.def("parse", [](const std::string& text, std::optional<std::size_t> d, char var) {
    return d ? parse(text, *d, var) : parse_infer(text, var);
  }, py::arg("text"), py::arg("alphabet_size") = py::none(), py::arg("var") = 'x');

  py::class_<UnitaryRep>(m, "UnitaryRep")
      .def_static("builtin", [](const std::string& name) {
        auto r = builtin_rep(name);
        if (!r) throw std::invalid_argument("unknown builtin representation: " + name);
        return *r;
      }, py::arg("name"))
      .def_static("load", &rep_from, py::arg("source"))
      .def_property_readonly("dim", &UnitaryRep::dim)
      .def_property_readonly("order", [](const UnitaryRep& r) { return r.group().order(); })
      .def_property_readonly("name", &UnitaryRep::name)
      .def_property_readonly("matrices", &UnitaryRep::matrices)
      .def("is_abelian", &UnitaryRep::is_abelian)
      .def("fingerprint", &UnitaryRep::fingerprint)
      .def("to_dict", [](const UnitaryRep& r) { return to_python(rep_to_json(r)); })
      .def("__repr__", [](const UnitaryRep& r) {
        return "UnitaryRep('" + r.name() + "', dim=" + std::to_string(r.dim()) + ")";
      });

  m.def("reynolds", [](const py::object& rep, const FreePoly& p) { return reynolds(rep_from(rep), p); },
        py::arg("rep"), py::arg("p"));
  m.def("is_invariant",
        [](const py::object& rep, const FreePoly& p, double tol) { return is_invariant(rep_from(rep), p, tol); },
        py::arg("rep"), py::arg("p"), py::arg("tol") = 1e-10);
  m.def("count", [](const py::object& rep, int max_degree) {
    return to_python(to_json(count(rep_from(rep).character(), max_degree)));
  }, py::arg("rep"), py::arg("max_degree"));

  py::class_<SuperorthoBasis>(m, "Basis")
      .def_property_readonly("rep", &SuperorthoBasis::rep)
      .def_property_readonly("max_degree", &SuperorthoBasis::max_degree)
      .def_property_readonly("alphabet_size", &SuperorthoBasis::alphabet_size)
      .def_property_readonly("method", [](const SuperorthoBasis& b) {
        return b.method() == BasisMethod::Abelian ? "abelian" : "general";
      })
      .def_property_readonly("counts_by_degree", &SuperorthoBasis::counts_by_degree)
      .def("fingerprint", &SuperorthoBasis::fingerprint)
      .def("element", [](const SuperorthoBasis& b, int i) { return b.element(i).poly; }, py::arg("index"))
      .def("degree_of", [](const SuperorthoBasis& b, int i) { return b.element(i).degree; }, py::arg("index"))
      .def("elements", [](const SuperorthoBasis& b) {
        std::vector<FreePoly> out;
        for (const auto& e : b.elements()) out.push_back(e.poly);
        return out;
      })
      .def("check_superorthogonality", [](const SuperorthoBasis& b, int pad, double tol) {
        return to_python(to_json(check_superorthogonality(b, pad, tol)));
      }, py::arg("pad") = 2, py::arg("tol") = 1e-10)
      .def("to_dict", [](const SuperorthoBasis& b) { return to_python(to_json(b)); })
      .def_static("from_dict", [](const py::object& j, const py::object& rep) {
        return basis_from_json(from_python(j), rep_from(rep));
      }, py::arg("data"), py::arg("rep"))
      .def("__len__", &SuperorthoBasis::size);

  m.def("build_basis", [](const py::object& rep, int max_degree, std::optional<std::string> method) {
    return build_basis(rep_from(rep), max_degree, method_from(method));
  }, py::arg("rep"), py::arg("max_degree"), py::arg("method") = py::none());

  py::class_<HatPoly>(m, "HatPoly")
      .def_readonly("poly", &HatPoly::poly)
      .def_readonly("basis_fingerprint", &HatPoly::basis_fingerprint)
      .def("__str__", [](const HatPoly& h) { return format(h.poly, 'u'); })
      .def("__repr__", [](const HatPoly& h) { return "HatPoly('" + format(h.poly, 'u') + "')"; });

  m.def("rewrite", [](const FreePoly& p, const SuperorthoBasis& b, double tol) { return rewrite(p, b, tol).hat; },
        py::arg("p"), py::arg("basis"), py::arg("tol") = kDefaultRewriteTol);
  m.def("expand", &expand, py::arg("hat"), py::arg("basis"));

  m.def("evaluate", [](const FreePoly& p, const std::vector<Matrix>& x) { return eval(p, OperatorTuple(x)); },
        py::arg("p"), py::arg("x"));
  m.def("sample_row_contraction", [](std::size_t d, Eigen::Index size, double margin, std::uint64_t seed) {
    return sample_row_contraction(d, size, margin, seed).entries();
  }, py::arg("d"), py::arg("size"), py::arg("margin"), py::arg("seed"));
  m.def("row_ball_max_eigenvalue",
        [](const std::vector<Matrix>& x) { return certify_row_ball(OperatorTuple(x)).max_eigenvalue; },
        py::arg("x"));
  m.def("check_partial_row_ball", [](const SuperorthoBasis& b, const std::vector<Matrix>& x, int max_degree,
                                     double tol) {
    return to_python(to_json(check_partial_row_ball(b, OperatorTuple(x), max_degree, tol)));
  }, py::arg("basis"), py::arg("x"), py::arg("max_degree"), py::arg("tol") = 1e-10);
  m.def("even_dilation", [](const std::vector<Matrix>& u) { return even_dilation(OperatorTuple(u)).entries(); },
        py::arg("u"));
  m.def("truncated_fock_shifts",
        [](std::size_t d, int level) { return truncated_fock_shifts(d, level).entries(); }, py::arg("d"),
        py::arg("level"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"freeinv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
