#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "csf/canonical.hpp"
#include "csf/closed_forms.hpp"
#include "csf/enumerate.hpp"
#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/graph_io.hpp"
#include "csf/inference.hpp"
#include "csf/json_io.hpp"
#include "csf/lambda_words.hpp"
#include "csf/psum_oracle.hpp"
#include "csf/star_engine.hpp"

namespace py = pybind11;
using namespace csf;

namespace {

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

py::tuple key(const Partition& p) { return py::cast(p.parts()); }

template <class Basis>
py::dict to_dict(const BasisExpansion<Basis>& x) {
  py::dict out;
  for (const auto& [p, c] : x.coeffs()) out[key(p)] = to_py(c);
  return out;
}

StarExpansion from_dict(const py::dict& d) {
  std::optional<StarExpansion> x;
  for (auto [k, v] : d) {
    auto p = Partition::from_sequence(k.cast<std::vector<int>>());
    if (!x) x = StarExpansion(p.size());
    x->add(p, from_py(v));
  }
  if (!x) throw DomainError("empty expansion");
  return *x;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chromatic symmetric functions in the star basis";

  py::register_exception<Error>(m, "CsfError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &edge_pairs)
      .def("has_edge", py::overload_cast<int, int>(&Graph::has_edge, py::const_))
      .def("degree", &Graph::degree)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("parse", [](const std::string& s) { return parse_graph(s); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("path", &families::path);
  m.def("cycle", &families::cycle);
  m.def("pan", &families::pan);
  m.def("paw", &families::paw);
  m.def("star", &families::star);
  m.def("complete", &families::complete);
  m.def("cuttlefish", &families::cuttlefish, py::arg("c"), py::arg("t"));
  m.def("bicyclic", [](const std::string& type, int s, int t, int ell) {
    if (type == "typeI") return families::bicyclic_type_one(s, t, ell);
    if (type == "typeII") return families::bicyclic_type_two(s, t, ell);
    throw DomainError("type must be typeI or typeII");
  });

  m.def("canonical_form", [](const Graph& g) { return code_to_hex(canonical_form(g)); });

  m.def(
      "star_expand",
      [](const Graph& g, bool memoize) {
        StarOptions opts;
        opts.memoize = memoize;
        if (!memoize) opts.policy = EdgePolicy::LowestIndex;
        py::gil_scoped_release release;
        auto x = star_expand(g, opts);
        py::gil_scoped_acquire acquire;
        return to_dict(x);
      },
      py::arg("graph"), py::arg("memoize") = true);
  m.def("leading_term", [](const py::dict& x) {
    auto lt = leading_term(from_dict(x));
    return py::make_tuple(key(lt.partition), to_py(lt.coefficient));
  });
  m.def("expansion_json", [](const py::dict& x) { return expansion_to_json(from_dict(x)).dump(); });
  m.def("parse_expansion", [](const std::string& s) { return to_dict(parse_expansion(s)); });
  m.def("power_sum", [](const Graph& g) { return to_dict(csf_power_sum(g)); });
  m.def("power_sum_to_star", [](const py::dict& d) {
    std::optional<PowerSumExpansion> x;
    for (auto [k, v] : d) {
      auto p = Partition::from_sequence(k.cast<std::vector<int>>());
      if (!x) x = PowerSumExpansion(p.size());
      x->add(p, from_py(v));
    }
    if (!x) throw DomainError("empty expansion");
    return to_dict(to_star_basis(*x));
  });

  m.def("infer_json", [](const py::dict& x) { return report_to_json(infer(from_dict(x))).dump(); });

  m.def("tree_hook_coeff", [](int k, int m1) { return to_py(tree_hook_coeff(k, m1)); });
  m.def(
      "unicyclic_hook_coeff",
      [](int n, int c, int k, int r, int m1) { return to_py(unicyclic_hook_coeff({n, c, k, r, m1})); },
      py::arg("n"), py::arg("c"), py::arg("k"), py::arg("r"), py::arg("m1"));
  m.def("count_lambda_words", [](const std::string& family, int n, const std::vector<int>& lam) {
    return count_lambda_words(parse_word_family(family), n, Partition::from_sequence(lam));
  });

  m.def(
      "enumerate_unicyclic",
      [](int n, std::optional<int> c) {
        std::vector<std::string> out;
        for_each_unicyclic(n, c, [&](const Graph& g) { out.push_back(to_graph6(g)); });
        return out;
      },
      py::arg("n"), py::arg("c") = py::none());
  m.def(
      "collisions_json",
      [](int n, int c, int jobs) {
        SearchOptions opts;
        opts.jobs = jobs;
        py::gil_scoped_release release;
        auto report = collision_search(n, c, opts);
        return collision_report_to_json(report).dump();
      },
      py::arg("n"), py::arg("c"), py::arg("jobs") = 1);
  m.def(
      "verify_json",
      [](int n_max, int jobs) {
        VerifyOptions opts;
        opts.jobs = jobs;
        py::gil_scoped_release release;
        auto report = verify_theorems(n_max, opts);
        return verify_report_to_json(report).dump();
      },
      py::arg("n_max"), py::arg("jobs") = 1);
}
