#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crepant/cech.hpp"
#include "crepant/cli.hpp"
#include "crepant/geometry.hpp"
#include "crepant/jacobi.hpp"
#include "crepant/kadeishvili.hpp"
#include "crepant/necklace.hpp"

namespace py = pybind11;
using namespace crepant;

namespace {

// {(j, k): "p/q"} -> LambdaTable; values may also be Python ints.
LambdaTable to_table(const py::dict& d) {
  LambdaTable t;
  for (auto item : d) {
    auto key = item.first.cast<std::pair<int, int>>();
    std::string value = py::str(item.second);
    Rational q = parse_rational(value);
    if (q == 0) throw py::value_error("lambda values must be nonzero");
    t.set(key.first, key.second, q);
  }
  return t;
}

py::dict class_dict(const CohomologyClass& c) {
  static const char* kLetters[] = {"1", "xy", "XY", "s"};
  py::dict out;
  if (c.degree < 0 || c.degree > 3) return out;
  for (std::size_t i = 0; i < c.coords.size(); ++i)
    out[py::str(std::string(1, kLetters[c.degree][i]))] = to_string(c.coords[i]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_crepant, m) {
  m.doc() = "Exact computations for (-3,1) curves";

  py::register_exception<SetupError>(m, "SetupError", PyExc_ValueError);

  m.def("necklace", [](int j, int k) { return to_text(necklace_poly(j, k)); }, py::arg("j"), py::arg("k"));
  m.def("necklace_abelian", [](int j, int k) { return to_text(abelianize(necklace_poly(j, k))); }, py::arg("j"),
        py::arg("k"));
  m.def("potential", [](const py::dict& l) { return to_text(potential(to_table(l))); }, py::arg("lambdas"));
  m.def("classify", [](const py::dict& l) { return to_string(classify_normal_bundle(to_table(l))); },
        py::arg("lambdas"));
  m.def(
      "invariants",
      [](const py::dict& l) {
        GeometryInvariants inv = invariants(to_table(l));
        return py::make_tuple(inv.t, inv.r, inv.s);
      },
      py::arg("lambdas"));
  m.def(
      "jacobi_dims",
      [](const py::dict& l, int d, bool abelian) {
        LambdaTable t = to_table(l);
        return (abelian ? comm_quotient_dims(t, d) : nc_quotient_dims(t, d)).per_degree_dims;
      },
      py::arg("lambdas"), py::arg("truncate"), py::arg("abelian") = false);
  m.def(
      "verify_dg",
      [](const py::dict& l, int max_index) {
        CechAlgebra alg(to_table(l));
        py::dict out;
        for (const auto& r : verify_generators(alg, max_index)) out[py::str(r.name)] = r.ok();
        return out;
      },
      py::arg("lambdas"), py::arg("max_index") = 10);
  m.def(
      "minimal_model",
      [](const py::dict& l, int max_arity) {
        AInfinityTable t = minimal_model(to_table(l), max_arity);
        py::dict out;
        for (const auto& [in, cls] : t.nonzero()) out[py::str(in)] = class_dict(cls);
        return out;
      },
      py::arg("lambdas"), py::arg("max_arity") = 8);
  m.def(
      "stasheff_failures",
      [](const py::dict& l, int max_arity) {
        return check_stasheff(minimal_model(to_table(l), max_arity), max_arity).failures;
      },
      py::arg("lambdas"), py::arg("max_arity") = 6);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
