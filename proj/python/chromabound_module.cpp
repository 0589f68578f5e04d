#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "chromabound/bounds.hpp"
#include "chromabound/chromatic.hpp"
#include "chromabound/cycles.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/harness.hpp"
#include "chromabound/report.hpp"

namespace py = pybind11;
namespace cb = chromabound;

namespace {

py::object to_py(const cb::BigInt& x) {
  const std::string digits = x.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::list to_py(std::span<const cb::BigInt> xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::object to_py(const cb::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

cb::Graph make_graph(int vertex_count,
                     const std::vector<std::pair<int, int>>& edges) {
  return cb::Graph::from_pairs(vertex_count, edges);
}

py::dict lemma2_dict(const cb::Lemma2Report& r) {
  py::dict d;
  d["edge"] = r.edge;
  d["triangle_case"] = r.triangle_case();
  d["counts_match"] = r.counts_match;
  d["deleted"] = py::make_tuple(r.deleted_vertices, r.deleted_edges);
  d["contracted"] = py::make_tuple(r.contracted_vertices, r.contracted_edges);
  d["predicted_contracted_edges"] = r.predicted_contracted_edges;
  py::list rows;
  for (const auto& row : r.rows) {
    py::dict x;
    x["n"] = row.length;
    x["measured_deleted"] = row.measured_deleted;
    x["predicted_deleted"] = row.predicted_deleted;
    x["measured_contracted"] = row.measured_contracted;
    x["predicted_contracted"] = row.predicted_contracted;
    x["deletion_matches"] = row.deletion_matches;
    x["contraction_matches"] = row.contraction_matches;
    rows.append(x);
  }
  d["rows"] = rows;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact chromatic polynomials, cycle censuses and coefficient bounds";

  static py::exception<cb::Error> error(m, "ChromaboundError",
                                        PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cb::Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<cb::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertex_count"),
           py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("vertex_count", &cb::Graph::vertex_count)
      .def_property_readonly("edge_count", &cb::Graph::edge_count)
      .def_property_readonly("edges",
                             [](const cb::Graph& g) {
                               py::list out;
                               for (const auto& e : g.edges())
                                 out.append(py::make_tuple(e.a, e.b, e.id));
                               return out;
                             })
      .def("edge_between", &cb::Graph::edge_between)
      .def("is_connected", &cb::Graph::is_connected)
      .def("is_simple", &cb::Graph::is_simple)
      .def("to_edge_list",
           [](const cb::Graph& g) { return cb::to_edge_list(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const cb::Graph& g) {
        return "<Graph v=" + std::to_string(g.vertex_count()) +
               " e=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_edge_list",
        [](const std::string& text) { return cb::parse_edge_list(text); });
  m.def("generate",
        [](const std::string& spec, std::optional<std::uint64_t> seed) {
          return cb::generate(spec, seed);
        },
        py::arg("spec"), py::arg("seed") = py::none());
  m.def("normalize_labels", &cb::normalize_labels);
  m.def("delete_edge", &cb::delete_edge);
  m.def("contract_edge", &cb::contract_edge);
  m.def("simplify", &cb::simplify);

  m.def("girth", &cb::girth, "None for a forest");
  m.def("count_cycles", &cb::count_cycles);
  m.def("count_cycles_through_edge", &cb::count_cycles_through_edge);
  m.def("count_cycles_star", &cb::count_cycles_star);
  m.def("verify_lemma2", [](const cb::Graph& g, cb::EdgeId edge,
                            int max_length) {
    return lemma2_dict(cb::verify_lemma2(g, edge, max_length));
  });

  py::class_<cb::ChromaticPolynomial>(m, "ChromaticPolynomial")
      .def_property_readonly("vertex_count",
                             &cb::ChromaticPolynomial::vertex_count)
      .def_property_readonly("magnitudes",
                             [](const cb::ChromaticPolynomial& p) {
                               return to_py(p.magnitudes());
                             })
      .def("evaluate",
           [](const cb::ChromaticPolynomial& p, long long q) {
             return to_py(p.evaluate(q));
           })
      .def(py::self == py::self)
      .def("__str__", &cb::ChromaticPolynomial::to_string)
      .def("__repr__", [](const cb::ChromaticPolynomial& p) {
        return "<ChromaticPolynomial " + p.to_string() + ">";
      });

  m.def("chromatic_polynomial",
        [](const cb::Graph& g, bool memoize) {
          cb::EngineOptions o;
          o.memoize = memoize;
          return cb::chromatic_polynomial(g, o);
        },
        py::arg("graph"), py::arg("memoize") = false);
  m.def("brute_force_colorings",
        [](const cb::Graph& g, int q, double budget) {
          return to_py(cb::brute_force_colorings(g, q, budget));
        },
        py::arg("graph"), py::arg("q"),
        py::arg("budget") = cb::kDefaultColoringBudget);
  m.def("coefficients_via_broken_circuits",
        [](const cb::Graph& g, std::vector<cb::EdgeId> order, int max_edges) {
          return cb::coefficients_via_broken_circuits(g, order, max_edges);
        },
        py::arg("graph"), py::arg("edge_order") = std::vector<cb::EdgeId>{},
        py::arg("max_edges") = cb::kDefaultBrokenCircuitEdgeBudget);
  m.def("verify_additivity", [](const cb::Graph& g, cb::EdgeId edge) {
    const auto r = cb::verify_additivity(g, edge);
    py::list rows;
    for (const auto& row : r.rows)
      rows.append(py::make_tuple(row.r, to_py(row.a), to_py(row.a_deleted),
                                 to_py(row.a_contracted), row.holds));
    py::dict d;
    d["holds"] = r.holds();
    d["rows"] = rows;
    return d;
  });
  m.def("check_proposition1",
        [](const cb::ChromaticPolynomial& p, int edge_count) {
          const auto r = cb::check_proposition1(p, edge_count);
          py::dict d;
          d["nondecreasing_chain"] = r.nondecreasing_chain;
          d["value_at_one"] = to_py(r.value_at_one);
          d["peak_positions"] = r.peak_positions;
          d["consistent"] = r.consistent();
          return d;
        });

  m.def("binom", [](long long a, long long b) { return to_py(cb::binom(a, b)); });
  m.def("lemma1_sides", [](long long a, long long b, long long c) {
    const auto s = cb::lemma1_sides(a, b, c);
    return py::make_tuple(to_py(s.left), to_py(s.right));
  });
  m.def("leading_coefficient", [](long long e, long long v, long long g,
                                  long long kg, long long r) -> py::object {
    auto x = cb::leading_coefficient(e, v, g, kg, r);
    return x ? to_py(*x) : py::none();
  });

  py::class_<cb::BoundParams>(m, "BoundParams")
      .def(py::init([](long long e, long long v, long long g, long long kg,
                       long long lg, long long lgp1star, long long r) {
             return cb::BoundParams{e, v, g, kg, lg, lgp1star, r};
           }),
           py::arg("e"), py::arg("v"), py::arg("g"), py::arg("kg"),
           py::arg("lg"), py::arg("lgp1star") = 0, py::arg("r") = 1)
      .def_readwrite("e", &cb::BoundParams::e)
      .def_readwrite("v", &cb::BoundParams::v)
      .def_readwrite("g", &cb::BoundParams::g)
      .def_readwrite("kg", &cb::BoundParams::kg)
      .def_readwrite("lg", &cb::BoundParams::lg)
      .def_readwrite("lgp1star", &cb::BoundParams::lgp1star)
      .def_readwrite("r", &cb::BoundParams::r);

  m.def("li_tian_bound",
        [](const cb::BoundParams& p) { return to_py(cb::li_tian_bound(p)); });
  m.def("s_term", [](const cb::BoundParams& p) { return to_py(cb::s_term(p)); });
  m.def("triangle_correction", [](const cb::BoundParams& p) {
    return to_py(cb::triangle_correction(p));
  });
  m.def("improved_bound",
        [](const cb::BoundParams& p) { return to_py(cb::improved_bound(p)); });
  m.def("improved_bound_alt", [](const cb::BoundParams& p) {
    return to_py(cb::improved_bound_alt(p));
  });

  m.def("select_edge",
        [](const cb::Graph& g, int r, const std::string& mode) {
          const auto census = cb::CycleCensus::compute(g);
          return to_py(cb::to_json(
              cb::select_edge(g, census, r, cb::parse_edge_mode(mode))));
        },
        py::arg("graph"), py::arg("r"), py::arg("mode") = "per-r");
  m.def("bound_report",
        [](const cb::Graph& g, const std::string& mode,
           std::optional<cb::EdgeId> edge, const std::string& format) {
          cb::BoundReportOptions o;
          o.mode = cb::parse_edge_mode(mode);
          o.edge_override = edge;
          const auto report = cb::bound_report(g, o);
          if (format == "csv") return py::object(py::str(cb::to_csv(report)));
          return to_py(cb::to_json(report));
        },
        py::arg("graph"), py::arg("mode") = "per-r",
        py::arg("edge") = py::none(), py::arg("format") = "json");

  m.def("suite_names", &cb::suite_names);
  m.def("run_suite",
        [](const std::string& suite, const std::string& corpus) {
          const auto spec = cb::CorpusSpec::by_name(corpus);
          cb::SuiteOptions o;
          o.budgets = spec.budgets;
          return to_py(cb::run_suite(suite, spec.expand(), o).to_json());
        },
        py::arg("suite"), py::arg("corpus") = "default");
}
