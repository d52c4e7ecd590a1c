#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "cysp/bounds.hpp"
#include "cysp/constructions.hpp"
#include "cysp/json_io.hpp"
#include "cysp/report.hpp"
#include "cysp/sat.hpp"
#include "cysp/search.hpp"

namespace py = pybind11;
using namespace cysp;

namespace {

const Algebra& alg(const std::string& name) { return algebra_by_name(name); }

Coloring make_coloring(int n, const std::vector<Element>& a) {
  return Coloring(AbelianGroup::cyclic(n), a);
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(cysp, m) {
  m.doc() = "Cyclic-group representations of the symmetric integral relation algebras 1_7 ... 7_7";

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def(py::init<std::vector<int>>(), py::arg("factors"))
      .def_static("cyclic", &AbelianGroup::cyclic, py::arg("n"))
      .def_static("parse", &AbelianGroup::parse, py::arg("text"))
      .def_property_readonly("order", &AbelianGroup::order)
      .def_property_readonly("factors", &AbelianGroup::factors)
      .def_property_readonly("name", &AbelianGroup::name)
      .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup('" + g.name() + "')"; });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init([](int n, const std::vector<Element>& a) { return make_coloring(n, a); }),
           py::arg("n"), py::arg("A"))
      .def(py::init<AbelianGroup, std::vector<Element>>(), py::arg("group"), py::arg("A"))
      .def_property_readonly("group", &Coloring::group)
      .def_property_readonly("order", &Coloring::order)
      .def_property_readonly("A", &Coloring::set_a)
      .def_property_readonly("B", &Coloring::set_b)
      .def("scaled", &Coloring::scaled, py::arg("u"))
      .def("to_dict", [](const Coloring& c) { return json_to_py(to_json(c)); })
      .def(py::self == py::self)
      .def("__repr__", [](const Coloring& c) { return "Coloring(" + to_json(c).dump() + ")"; });

  m.def("algebras", [] {
    std::vector<std::string> names;
    for (const Algebra& a : catalog()) names.push_back(a.name());
    return names;
  });

  m.def(
      "verify",
      [](const std::string& algebra, const Coloring& c) {
        py::list out;
        for (const Violation& v : verify(alg(algebra), c))
          out.append(json_to_py(to_json(v, c.group())));
        return out;
      },
      py::arg("algebra"), py::arg("coloring"),
      "Violations as dicts; an empty list means the coloring is a representation.");
  m.def(
      "is_representation",
      [](const std::string& algebra, const Coloring& c) { return is_representation(alg(algebra), c); },
      py::arg("algebra"), py::arg("coloring"));

  m.def(
      "construct",
      [](const std::string& algebra, int n) -> py::object {
        ConstructionResult r = construct(alg(algebra), n);
        if (const Coloring* c = std::get_if<Coloring>(&r)) return py::cast(*c);
        return py::str(std::string(sentinel_name(r)));
      },
      py::arg("algebra"), py::arg("n"),
      "A Coloring, or the string 'NoConstruction' / 'NoClosedForm'.");
  m.def(
      "construct_4_7_abelian", &construct_4_7_abelian, py::arg("group"));
  m.def(
      "abelian_4_7_representable",
      [](const AbelianGroup& g) { return abelian_4_7_representable(g).representable; },
      py::arg("group"));

  m.def(
      "exists", [](const std::string& algebra, int n, int limit) { return exists(alg(algebra), n, limit); },
      py::arg("algebra"), py::arg("n"), py::arg("limit") = kDefaultExhaustiveLimit);
  m.def(
      "find_all",
      [](const std::string& algebra, int n, bool up_to_automorphism, int limit) {
        return find_all(alg(algebra), n, up_to_automorphism, limit);
      },
      py::arg("algebra"), py::arg("n"), py::arg("up_to_automorphism") = false,
      py::arg("limit") = kDefaultExhaustiveLimit);
  m.def(
      "find_representation",
      [](const std::string& algebra, const AbelianGroup& g) {
        return find_representation(alg(algebra), g);
      },
      py::arg("algebra"), py::arg("group"));
  m.def(
      "spectrum",
      [](const std::string& algebra, int lo, int hi, int limit) {
        return spectrum(alg(algebra), lo, hi, limit);
      },
      py::arg("algebra"), py::arg("lo"), py::arg("hi"), py::arg("limit") = kDefaultExhaustiveLimit);
  m.def(
      "random_search",
      [](const std::string& algebra, int n, long long max_iters, std::uint64_t seed) {
        py::gil_scoped_release release;
        return random_search(alg(algebra), n, max_iters, seed);
      },
      py::arg("algebra"), py::arg("n"), py::arg("max_iters"), py::arg("seed"));
  m.def("max_sumfree_size", &max_sumfree_size, py::arg("n"));

  m.def(
      "encode_dimacs",
      [](const std::string& algebra, int n, bool symmetry_break) {
        auto [f, vm] = encode(alg(algebra), n, {symmetry_break});
        return emit_dimacs(f, &vm);
      },
      py::arg("algebra"), py::arg("n"), py::arg("symmetry_break") = false);
  m.def(
      "solve_dimacs",
      [](const std::string& text) -> std::optional<std::vector<bool>> {
        auto model = solve(parse_dimacs(text));
        if (!model) return std::nullopt;
        return std::vector<bool>(model->values.begin() + 1, model->values.end());
      },
      py::arg("text"), "Values of variables 1..V, or None when unsatisfiable.");
  m.def(
      "sat_solve",
      [](const std::string& algebra, int n) -> std::optional<Coloring> {
        auto [f, vm] = encode(alg(algebra), n);
        auto model = solve(f);
        if (!model) return std::nullopt;
        return decode(*model, vm);
      },
      py::arg("algebra"), py::arg("n"));

  m.def(
      "union_bound",
      [](int n) {
        BoundReport r = union_bound(n);
        return py::make_tuple(r.p_value, r.below_one);
      },
      py::arg("n"), "(3(n-1)(3/4)^((n-2)/2), exact below-one decision)");
  m.def("union_bound_threshold", &union_bound_threshold);
  m.def("check_sumfree_lemma", &check_sumfree_lemma, py::arg("n"));

  m.def(
      "expected_cyclic_spec",
      [](const std::string& algebra, int n) { return expected_cyclic_spec(alg(algebra), n); },
      py::arg("algebra"), py::arg("n"));
  m.def(
      "report",
      [](int lo, int hi, int limit, std::uint64_t seed, long long iters) {
        ReportOptions options;
        options.limit = limit;
        options.sat_limit = std::max(options.sat_limit, limit);
        options.seed = seed;
        options.iters = iters;
        return json_to_py(to_json(build_report(lo, hi, options)));
      },
      py::arg("lo") = 3, py::arg("hi") = 40, py::arg("limit") = kDefaultExhaustiveLimit,
      py::arg("seed") = 1, py::arg("iters") = 10000);
}
