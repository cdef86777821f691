#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltader/constructors.hpp"
#include "deltader/errors.hpp"
#include "deltader/gradings.hpp"
#include "deltader/halfring.hpp"
#include "deltader/serialize.hpp"
#include "deltader/super.hpp"

namespace py = pybind11;
using namespace deltader;

namespace {

Field field_of(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') return Field::prime_field(std::stoull(s.substr(3, s.size() - 4)));
  throw InputError("unknown field '" + s + "' (use Q or GF(p))");
}

std::string solve_json(const Algebra& A, const std::string& kind, const std::string& delta, int parity) {
  const Field& f = A.field();
  SolutionSpace s;
  if (kind == "der")
    s = solve_delta_derivations(A, f.parse(delta));
  else if (kind == "superder")
    s = solve_superderivations(A, f.parse(delta), parity);
  else if (kind == "centroid")
    s = solve_centroid(A);
  else if (kind == "supercentroid")
    s = solve_supercentroid(A, parity);
  else if (kind == "quasider")
    s = solve_quasiderivations(A);
  else
    throw InputError("unknown kind '" + kind + "'");
  return solution_to_json(s).dump();
}

std::string parametric_json(const Algebra& A) {
  const ParametricResult r = solve_parametric(A);
  json j;
  j["generic_dim"] = r.generic_dim;
  json sp = json::array();
  for (const auto& [d, dim] : r.specials) sp.push_back({{"delta", element_to_json(d)}, {"dim", dim}});
  j["specials"] = sp;
  return j.dump();
}

std::string grade_json(const Algebra& A, const std::string& maps, const std::string& delta) {
  const FieldElement d = A.field().parse(delta);
  const RootDecomposition dec = root_decompose(A, maps_from_json(A.field(), json::parse(maps)), d);
  const SemigroupVerdict v = check_semigroup(dec);
  json j;
  json roots = json::array(), dims = json::array();
  for (std::size_t r = 0; r < dec.roots.size(); ++r) {
    roots.push_back(root_to_string(dec.roots[r]));
    dims.push_back(dec.spaces[r].dim());
  }
  j["roots"] = roots;
  j["dims"] = dims;
  j["verdict"] = v.non_semigroup ? "NonSemigroup" : "SemigroupConsistent";
  if (v.witness)
    j["witness"] = {root_to_string(dec.roots[v.witness->a]), root_to_string(dec.roots[v.witness->b]),
                    root_to_string(dec.roots[v.witness->c]), root_to_string(v.witness->left),
                    root_to_string(v.witness->right)};
  return j.dump();
}

std::string halfring_json(const Algebra& A) {
  const CompositionRing ring = build_composition_ring(solve_delta_derivations(A, A.field().parse("1/2")));
  json j;
  j["dim"] = ring.dim();
  const bool comm = check_commutative(ring).commutative;
  j["commutative"] = comm;
  if (comm) {
    const LocalityReport l = locality_report(ring);
    j["local"] = l.is_local;
    j["nilradical_dim"] = l.nilradical_dim;
  }
  j["zero_divisor_pairs"] = find_zero_divisors(ring).size();
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact δ-derivations of finite-dimensional algebras";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

  py::class_<Algebra>(m, "Algebra")
      .def_static("from_json", [](const std::string& s) { return algebra_from_json(json::parse(s)); })
      .def_static("load", &load_algebra)
      .def("to_json", [](const Algebra& A) { return canonical_dump(algebra_to_json(A)); })
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("flavor", [](const Algebra& A) { return to_string(A.flavor()); })
      .def_property_readonly("names", &Algebra::names)
      .def("is_valid", [](const Algebra& A) { return validate(A, default_law(A)).ok(); })
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
      .def("__repr__", [](const Algebra& A) {
        return "<Algebra dim=" + std::to_string(A.dim()) + " " + to_string(A.flavor()) + " over " +
               A.field().describe() + ">";
      });

  m.def("sl", [](std::size_t n, const std::string& f) { return make_sl(field_of(f), n); }, py::arg("n"),
        py::arg("field") = "Q");
  m.def("abelian", [](std::size_t n, const std::string& f) { return make_abelian(field_of(f), n); }, py::arg("n"),
        py::arg("field") = "Q");
  m.def(
      "witt",
      [](std::vector<long long> elems, std::optional<long long> modulus, const std::string& f) {
        return make_witt_type(field_of(f), WittSupport{std::move(elems), modulus});
      },
      py::arg("elements"), py::arg("modulus") = py::none(), py::arg("field") = "Q");
  m.def("zassenhaus", &make_zassenhaus, py::arg("p"), py::arg("n"));
  m.def("deformed_zassenhaus", &make_deformed_zassenhaus, py::arg("p"), py::arg("n"));
  m.def("divided_powers", &make_divided_powers, py::arg("p"), py::arg("n"));
  m.def("truncated_polynomials", [](std::size_t k, const std::string& f) {
    return make_truncated_polynomials(field_of(f), k);
  }, py::arg("k"), py::arg("field") = "Q");
  m.def("elduque4", [](const std::string& f) { return make_elduque4(field_of(f)); }, py::arg("field") = "Q");
  m.def("osp12", [](const std::string& f) { return make_osp12(field_of(f)); }, py::arg("field") = "Q");
  m.def("current", &make_current, py::arg("lie"), py::arg("commutative"));
  m.def("grassmann_envelope", &make_grassmann_envelope, py::arg("algebra"), py::arg("m"));

  m.def("_solve", &solve_json, py::arg("algebra"), py::arg("kind"), py::arg("delta"), py::arg("parity"));
  m.def("_solve_parametric", &parametric_json);
  m.def("_grade", &grade_json);
  m.def("_halfring", &halfring_json);
  m.def("s4_dim", [](const Algebra& A, bool super) {
    return compute_s4(A, super ? IdentityLaw::Super : IdentityLaw::Ordinary).dim();
  }, py::arg("algebra"), py::arg("super") = false);
}
