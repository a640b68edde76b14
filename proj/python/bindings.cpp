#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "factorspec/cli.hpp"
#include "factorspec/conditions.hpp"
#include "factorspec/error.hpp"
#include "factorspec/extremal.hpp"
#include "factorspec/graph.hpp"
#include "factorspec/harness.hpp"
#include "factorspec/oracle.hpp"
#include "factorspec/spectral.hpp"

namespace py = pybind11;
using namespace factorspec;

namespace {

std::vector<Vertex> members(const VertexSet &s) { return s.members(); }

VertexSet to_set(std::size_t n, const std::vector<Vertex> &v) {
  return VertexSet(n, std::span<const Vertex>(v));
}

DegreeBounds bounds(int a, int b) { return DegreeBounds{a, b}; }

py::object as_dict(const nlohmann::json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<Vertex>> parts_of(const ExtremalGraph &e) {
  std::vector<std::vector<Vertex>> out;
  for (const auto &p : e.parts)
    out.push_back(p.members());
  return out;
}

} // namespace

PYBIND11_MODULE(_factorspec, m) {
  m.doc() = "Spectral and combinatorial tests for [a,b]-factors";

  auto base = py::register_exception<Error>(m, "Error");
  auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", input.ptr());
  auto format = py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<UnsupportedSizeError>(m, "UnsupportedSizeError", format.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge> &edges) {
             return from_edge_list(n, std::span<const Edge>(edges));
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("graph6", [](const Graph &g) { return to_graph6(g); })
      .def("__eq__", [](const Graph &x, const Graph &y) { return x == y; })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph &g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph6", [](const std::string &s) { return parse_graph6(s); });
  m.def("to_graph6", &to_graph6);
  m.def("empty_graph", &empty_graph);
  m.def("complete", &complete);
  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);
  m.def("is_connected", &is_connected);

  py::class_<SpectralResult>(m, "SpectralResult")
      .def_readonly("rho", &SpectralResult::rho)
      .def_readonly("residual", &SpectralResult::residual)
      .def_readonly("iterations", &SpectralResult::iterations);
  m.def("spectral_radius", &spectral_radius, py::arg("g"), py::arg("tol") = kDefaultSpectralTol);
  m.def("hong_bound", &hong_bound);
  m.def(
      "quotient_matrix",
      [](const Graph &g, const std::vector<std::vector<Vertex>> &parts) {
        std::vector<VertexSet> sets;
        for (const auto &p : parts)
          sets.push_back(to_set(g.order(), p));
        const auto q = quotient_matrix(g, sets);
        std::vector<std::vector<double>> rows(q.k);
        for (std::size_t i = 0; i < q.k; ++i)
          for (std::size_t j = 0; j < q.k; ++j)
            rows[i].push_back(q.at(i, j));
        return py::make_tuple(rows, q.equitable, leading_eigenvalue(q));
      },
      "Returns (rows, equitable, leading eigenvalue).");

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("verdict", &ConditionReport::verdict)
      .def_readonly("min_value", &ConditionReport::min_value)
      .def_readonly("threshold", &ConditionReport::threshold)
      .def_property_readonly("witness_s",
                             [](const ConditionReport &r) { return members(r.witness_s); })
      .def_property_readonly("witness_t",
                             [](const ConditionReport &r) -> std::optional<std::vector<Vertex>> {
                               if (!r.witness_t)
                                 return std::nullopt;
                               return members(*r.witness_t);
                             })
      .def_readonly("pairs_examined", &ConditionReport::pairs_examined)
      .def("to_dict", [](const ConditionReport &r) { return as_dict(to_json(r)); })
      .def("__bool__", [](const ConditionReport &r) { return r.verdict; });

  m.def("delta", [](const Graph &g, int a, int b, const std::vector<Vertex> &s,
                    const std::vector<Vertex> &t) {
    return delta(g, bounds(a, b), to_set(g.order(), s), to_set(g.order(), t));
  });
  m.def("theta", [](const Graph &g, int a, int b, const std::vector<Vertex> &s) {
    auto [value, t] = theta(g, bounds(a, b), to_set(g.order(), s));
    return py::make_tuple(value, members(t));
  });
  m.def("has_all_ab_factors",
        [](const Graph &g, int a, int b) { return has_all_ab_factors(g, bounds(a, b)); });
  m.def("has_all_fractional_ab_factors", [](const Graph &g, int a, int b) {
    return has_all_fractional_ab_factors(g, bounds(a, b));
  });
  m.def("has_gf_factor", [](const Graph &g, std::vector<int> lo, std::vector<int> hi) {
    return has_gf_factor(g, DegreeFunctions{std::move(lo), std::move(hi)});
  });
  m.def("has_all_gf_factors", [](const Graph &g, std::vector<int> lo, std::vector<int> hi) {
    return has_all_gf_factors(g, DegreeFunctions{std::move(lo), std::move(hi)});
  });
  m.def("has_fractional_gf_factor", [](const Graph &g, std::vector<int> lo, std::vector<int> hi) {
    return anstee_fractional_gf(g, DegreeFunctions{std::move(lo), std::move(hi)});
  });
  m.def("has_all_fractional_gf_factors",
        [](const Graph &g, std::vector<int> lo, std::vector<int> hi) {
          return lu_all_fractional_gf(g, DegreeFunctions{std::move(lo), std::move(hi)});
        });

  m.def(
      "perfect_matching",
      [](const Graph &g) -> std::optional<std::vector<Edge>> {
        auto pm = perfect_matching(g);
        if (!pm)
          return std::nullopt;
        return pm->edges;
      },
      "Edges of a perfect matching, or None.");
  m.def(
      "h_factor",
      [](const Graph &g, std::vector<int> h) { return has_h_factor(g, DemandFunction{std::move(h)}).factor; },
      "A spanning subgraph with degree h(v) at every v, or None.");

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("holds", &OracleResult::holds)
      .def_readonly("demands_checked", &OracleResult::demands_checked)
      .def_property_readonly("counterexample",
                             [](const OracleResult &r) -> std::optional<std::vector<int>> {
                               if (!r.counterexample)
                                 return std::nullopt;
                               return r.counterexample->values;
                             });
  m.def(
      "all_ab_factors_oracle",
      [](const Graph &g, int a, int b, std::uint64_t budget) {
        return all_ab_factors_oracle(g, bounds(a, b), {budget});
      },
      py::arg("g"), py::arg("a"), py::arg("b"), py::arg("budget") = OracleLimits{}.demand_budget);
  m.def(
      "all_fractional_oracle",
      [](const Graph &g, int a, int b, std::uint64_t budget) {
        return all_fractional_oracle(g, bounds(a, b), {budget});
      },
      py::arg("g"), py::arg("a"), py::arg("b"), py::arg("budget") = OracleLimits{}.demand_budget);

  m.def(
      "build_hnb", [](std::size_t n, std::size_t b) { return build_hnb(n, b).graph; });
  m.def(
      "build_g1", [](int a, int b, std::size_t n) { return build_g1(a, b, n).graph; });
  m.def("build_g2", [](int b, std::size_t n) { return build_g2(b, n).graph; });
  m.def(
      "build_k1_join", [](std::size_t n, std::size_t r) { return build_k1_join(n, r).graph; });
  m.def("hnb_parts", [](std::size_t n, std::size_t b) { return parts_of(build_hnb(n, b)); });
  m.def("rho_hnb", &rho_hnb);
  m.def(
      "threshold_n",
      [](int a, int b, const std::string &mode) { return threshold_n(a, b, parse_factor_mode(mode)); },
      py::arg("a"), py::arg("b"), py::arg("mode") = "integer");
  m.def(
      "hnb_witness",
      [](std::size_t n, int b, const std::string &mode, int a) {
        return lemma24_witness(n, b, parse_factor_mode(mode), a);
      },
      py::arg("n"), py::arg("b"), py::arg("mode") = "integer", py::arg("a") = 1);
  m.def("g1_g2_check", [](int a, int b, std::optional<std::int64_t> n) {
    const auto c = g1g2_check(a, b, n.value_or(g1g2_order(a, b)));
    py::dict d;
    d["n"] = c.n;
    d["c"] = c.c;
    d["f_n_minus_2"] = c.f_n_minus_2;
    d["f_n_minus_3"] = c.f_n_minus_3;
    d["f_n_minus_2_closed"] = c.f_n_minus_2_closed;
    d["f_n_minus_3_closed"] = c.f_n_minus_3_closed;
    d["rho_g1"] = c.rho_g1;
    d["rho_g2"] = c.rho_g2;
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("n") = py::none());

  m.def(
      "mine",
      [](const std::vector<Graph> &graphs, int a, int b, const std::string &mode,
         std::size_t workers) {
        MineOptions options;
        options.workers = workers;
        py::gil_scoped_release release;
        auto r = mine_extremal(graphs, bounds(a, b), parse_factor_mode(mode), options);
        py::gil_scoped_acquire acquire;
        return as_dict(to_json(r));
      },
      py::arg("graphs"), py::arg("a"), py::arg("b"), py::arg("mode") = "integer",
      py::arg("workers") = 0);
  m.def(
      "suite",
      [](const std::vector<Graph> &graphs, std::size_t n_max,
         const std::vector<std::pair<int, int>> &grid, const std::string &mode,
         std::size_t workers) {
        SuiteOptions options;
        options.n_max = n_max;
        options.mode = parse_suite_mode(mode);
        options.workers = workers;
        options.grid.clear();
        for (auto [a, b] : grid)
          options.grid.push_back(bounds(a, b));
        py::gil_scoped_release release;
        auto r = equivalence_suite(graphs, options);
        py::gil_scoped_acquire acquire;
        return as_dict(to_json(r));
      },
      py::arg("graphs"), py::arg("n_max") = 7,
      py::arg("grid") = std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}},
      py::arg("mode") = "integer", py::arg("workers") = 0);
  m.def("read_catalog", [](const std::string &path, bool lenient) {
    return read_catalog_file(path, lenient);
  }, py::arg("path"), py::arg("lenient") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
