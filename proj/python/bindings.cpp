#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tlbasis/bijection.hpp"
#include "tlbasis/errors.hpp"
#include "tlbasis/verify.hpp"
#include "tlbasis/xbasis.hpp"
#include "tlbasis/zinno.hpp"

namespace py = pybind11;
using namespace tlbasis;

namespace {

py::int_ to_py(const BigInt& c) {
  const std::string s = c.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

LaurentPoly poly_from_dict(const py::dict& d) {
  LaurentPoly p;
  for (auto [e, c] : d) p += LaurentPoly::monomial(from_py(c), e.cast<int>());
  return p;
}

py::dict poly_to_dict(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

std::vector<std::vector<LaurentPoly>> rows(const LaurentMatrix& m) {
  std::vector<std::vector<LaurentPoly>> out(m.dim(), std::vector<LaurentPoly>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < m.dim(); ++k) out[i][k] = m.at(i, k);
  return out;
}

}  // namespace

PYBIND11_MODULE(_tlbasis, m) {
  m.doc() = "Temperley-Lieb bases over Z[v, v^-1]";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<>())
      .def(py::init(&poly_from_dict), py::arg("coefficients"), "From {exponent: coefficient}")
      .def_static("v", &LaurentPoly::v_power, py::arg("exponent") = 1)
      .def_static("delta", &LaurentPoly::delta)
      .def("coefficients", &poly_to_dict)
      .def("is_zero", &LaurentPoly::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const LaurentPoly& p) { return to_string(p); })
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + to_string(p) + "')"; });

  py::class_<FullyCommutative>(m, "FullyCommutative")
      .def(py::init(&FullyCommutative::from_sets), py::arg("n"), py::arg("J"), py::arg("I"))
      .def_property_readonly("rank", &FullyCommutative::rank)
      .def_property_readonly("J", &FullyCommutative::J)
      .def_property_readonly("I", &FullyCommutative::I)
      .def_property_readonly("length", &FullyCommutative::length)
      .def("word", &FullyCommutative::word)
      .def("window", [](const FullyCommutative& w) { return w.perm().window(); })
      .def(py::self == py::self)
      .def("__hash__", [](const FullyCommutative& w) { return py::hash(py::str(to_string(w))); })
      .def("__str__", [](const FullyCommutative& w) { return to_string(w); })
      .def("__repr__", [](const FullyCommutative& w) { return "FullyCommutative('" + to_string(w) + "')"; });

  py::class_<NoncrossingPartition>(m, "NoncrossingPartition")
      .def(py::init(&NoncrossingPartition::from_blocks), py::arg("n"), py::arg("blocks"))
      .def_property_readonly("rank", &NoncrossingPartition::rank)
      .def_property_readonly("blocks", &NoncrossingPartition::blocks)
      .def_property_readonly("length", &NoncrossingPartition::length)
      .def_property_readonly("reflection_length", &NoncrossingPartition::reflection_length)
      .def("window", [](const NoncrossingPartition& x) { return x.perm().window(); })
      .def(py::self == py::self)
      .def("__hash__", [](const NoncrossingPartition& x) { return py::hash(py::str(to_string(x))); })
      .def("__str__", [](const NoncrossingPartition& x) { return to_string(x); })
      .def("__repr__",
           [](const NoncrossingPartition& x) { return "NoncrossingPartition('" + to_string(x) + "')"; });

  py::class_<TLElement>(m, "TLElement")
      .def(py::init<int>())
      .def_static("unit", &TLElement::unit)
      .def_static("generator", &TLElement::generator, py::arg("i"), py::arg("n"))
      .def_static("basis", [](const FullyCommutative& w) { return TLElement::basis(w); })
      .def_property_readonly("rank", &TLElement::rank)
      .def("terms", &TLElement::terms)
      .def("coeff", &TLElement::coeff)
      .def("is_zero", &TLElement::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(LaurentPoly() * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const TLElement& t) { return to_string(t); });

  m.def("enumerate_fc", &enumerate_fc, py::arg("n"), "W_f in (J, I) order");
  m.def("enumerate_pc", &enumerate_pc, py::arg("n"), "P_c in canonical order");
  m.def(
      "basis_order",
      [](int n) {
        const auto& o = BasisOrder::get(n);
        return py::make_tuple(o.partitions(), o.fully_commutative());
      },
      py::arg("n"), "(partitions, phi images) in matrix order");
  m.def("phi", &phi);
  m.def("psi", &psi);
  m.def("zinno_element", &zinno_element);
  m.def(
      "m_matrix", [](int n) { return rows(z_matrix(n).entries); }, py::arg("n"));
  m.def(
      "h_matrix", [](int n) { return rows(invert_triangular(z_matrix(n)).entries); }, py::arg("n"));
  m.def(
      "x_lr",
      [](const FullyCommutative& w, const std::vector<int>& L, const std::vector<int>& R,
         std::optional<std::uint64_t> seed) {
        if (!seed) return x_lr(w, L, R);
        EndingPairPolicy policy(*seed);
        return x_lr(w, L, R, policy);
      },
      py::arg("w"), py::arg("L"), py::arg("R"), py::arg("seed") = py::none());
  m.def("q_set", &q_set);
  m.def("p_coefficient", &p_coefficient);
  m.def("x_element", [](const FullyCommutative& w) { return x_element(w).value; });
  m.def("f_set", &f_set);
  m.def("closed_form_h", &closed_form_h);
  m.def("_verify_json", [](int n_max, const std::vector<std::string>& only, std::uint64_t seed) {
    VerifyOptions options;
    options.seed = seed;
    py::gil_scoped_release release;
    return to_json(run_all(n_max, only, options)).dump();
  });
}
