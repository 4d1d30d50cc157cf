#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitsteiner/dispatch.hpp"
#include "splitsteiner/domination.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/generate.hpp"
#include "splitsteiner/instance_io.hpp"
#include "splitsteiner/oracle.hpp"

namespace py = pybind11;
using namespace splitsteiner;

namespace {

py::object to_python(const nlohmann::ordered_json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

DominationVariant parse_variant(const std::string& name) {
  if (name == "ds") return DominationVariant::Dominating;
  if (name == "cds") return DominationVariant::Connected;
  if (name == "tds") return DominationVariant::Total;
  throw InvalidParameter("variant must be ds, cds or tds");
}

Side parse_side(const std::string& s) {
  if (s == "K") return Side::Clique;
  if (s == "I") return Side::Independent;
  throw InvalidParameter("side must be K or I");
}

}  // namespace

PYBIND11_MODULE(splitsteiner, m) {
  m.doc() =
      "Minimum Steiner trees and dominating sets on convex split graphs. Vertex ids are 0-based: "
      "clique vertices first, then independent ones.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<StructureMismatch>(m, "StructureMismatch", base);
  py::register_exception<PartitionViolation>(m, "PartitionViolation", base);
  py::register_exception<Disconnected>(m, "Disconnected", base);
  py::register_exception<InvalidLayout>(m, "InvalidLayout", base);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base);
  py::register_exception<CapExceeded>(m, "CapExceeded", base);
  py::register_exception<Infeasible>(m, "Infeasible", base);

  py::class_<SplitGraph>(m, "SplitGraph")
      .def_static(
          "build",
          [](int k, int i, const std::vector<Edge>& edges) { return SplitGraph::build(k, i, edges); },
          py::arg("clique"), py::arg("independent"), py::arg("edges"))
      .def_static("from_neighborhoods", &SplitGraph::from_neighborhoods, py::arg("clique"),
                  py::arg("independent"), py::arg("neighborhoods"))
      .def_property_readonly("clique_size", &SplitGraph::clique_size)
      .def_property_readonly("independent_size", &SplitGraph::independent_size)
      .def_property_readonly("order", &SplitGraph::order)
      .def("clique", &SplitGraph::clique)
      .def("independent", &SplitGraph::independent)
      .def("adjacent", &SplitGraph::adjacent)
      .def("neighbors", &SplitGraph::neighbors)
      .def("label", &SplitGraph::label)
      .def("is_connected", &SplitGraph::is_connected)
      .def("cross_edges", &SplitGraph::cross_edges)
      .def("__eq__", [](const SplitGraph& a, const SplitGraph& b) { return a == b; })
      .def("__repr__", [](const SplitGraph& g) {
        return "<SplitGraph K=" + std::to_string(g.clique_size()) +
               " I=" + std::to_string(g.independent_size()) + ">";
      });

  py::class_<ConvexStructure>(m, "ConvexStructure")
      .def_static("path",
                  [](const std::string& s, std::vector<Vertex> o) {
                    return ConvexStructure::path(parse_side(s), std::move(o));
                  })
      .def_static("cycle",
                  [](const std::string& s, std::vector<Vertex> o) {
                    return ConvexStructure::cycle(parse_side(s), std::move(o));
                  })
      .def_static("star",
                  [](const std::string& s, Vertex root, std::vector<Vertex> leaves) {
                    return ConvexStructure::star(parse_side(s), root, std::move(leaves));
                  })
      .def_static("comb",
                  [](const std::string& s, std::vector<Vertex> backbone, std::vector<Vertex> teeth) {
                    return ConvexStructure::comb(parse_side(s), std::move(backbone), std::move(teeth));
                  })
      .def_static("triad",
                  [](const std::string& s, Vertex root, std::array<std::vector<Vertex>, 3> legs) {
                    return ConvexStructure::triad(parse_side(s), root, std::move(legs));
                  })
      .def_static("tree",
                  [](const std::string& s, Vertex root, std::vector<Edge> edges) {
                    return ConvexStructure::tree(parse_side(s), root, std::move(edges));
                  })
      .def_static("chordal",
                  [](const std::string& s, std::vector<Vertex> vs, std::vector<Edge> edges) {
                    return ConvexStructure::chordal(parse_side(s), std::move(vs), std::move(edges));
                  })
      .def_property_readonly("kind",
                             [](const ConvexStructure& c) { return std::string(to_string(c.kind())); })
      .def_property_readonly("side",
                             [](const ConvexStructure& c) { return std::string(to_string(c.side())); })
      .def("vertices", &ConvexStructure::vertices);

  py::class_<ProblemInstance>(m, "ProblemInstance")
      .def(py::init([](SplitGraph g, std::optional<ConvexStructure> s, std::optional<VertexSet> r,
                       std::optional<int> budget) {
             ProblemInstance in{std::move(g), std::move(s), {}, budget};
             in.terminals = r ? make_vertex_set(*r) : in.graph.independent();
             validate_instance(in);
             return in;
           }),
           py::arg("graph"), py::arg("structure") = py::none(), py::arg("terminals") = py::none(),
           py::arg("budget") = py::none())
      .def_readwrite("graph", &ProblemInstance::graph)
      .def_readwrite("structure", &ProblemInstance::structure)
      .def_readwrite("terminals", &ProblemInstance::terminals)
      .def_readwrite("budget", &ProblemInstance::budget)
      .def("__eq__", [](const ProblemInstance& a, const ProblemInstance& b) { return a == b; });

  m.def("parse_instance", &parse_instance_string, py::arg("text"));
  m.def("read_instance", &read_instance_file, py::arg("path"));
  m.def("emit_instance", &emit_instance, py::arg("instance"));

  m.def(
      "solve",
      [](const ProblemInstance& in, const std::string& method, int cap, std::optional<int> degree_bound) {
        const SolveResult r = solve(in, parse_method(method), {cap, degree_bound, true});
        return to_python(result_json(in, r, false));
      },
      py::arg("instance"), py::arg("method") = "auto", py::arg("oracle_cap") = 20,
      py::arg("degree_bound") = py::none(),
      "Solve and return the result document (1-based ids, like the CLI's --json).");

  m.def("verify_steiner", &verify_steiner, py::arg("graph"), py::arg("terminals"), py::arg("steiner_set"));
  m.def(
      "verify_convexity",
      [](const SplitGraph& g, const ConvexStructure& s) {
        const auto rep = verify_convexity(g, s);
        std::vector<std::pair<Vertex, std::string>> v;
        for (const auto& x : rep.violations) v.emplace_back(x.vertex, x.reason);
        return py::make_tuple(rep.valid, v);
      },
      py::arg("graph"), py::arg("structure"));

  m.def(
      "oracle_min_steiner",
      [](const SplitGraph& g, const VertexSet& r, int cap) {
        return oracle_min_steiner(g, make_vertex_set(r), {cap}).steiner_set;
      },
      py::arg("graph"), py::arg("terminals"), py::arg("cap") = 20);
  m.def(
      "oracle_min_dominating",
      [](const SplitGraph& g, const std::string& variant, int cap) {
        return oracle_min_dominating(g, parse_variant(variant), {cap});
      },
      py::arg("graph"), py::arg("variant") = "ds", py::arg("cap") = 20);

  m.def(
      "ds_via_stree",
      [](const SplitGraph& g, std::optional<ConvexStructure> s, const std::string& method) {
        const Method mth = parse_method(method);
        const auto d =
            ds_via_stree(g, s, [mth](const ProblemInstance& in) { return solve(in, mth).solution; });
        py::dict out;
        out["set"] = d.set;
        out["connected"] = d.connected;
        out["total"] = d.total;
        out["total_degenerate"] = d.total_degenerate;
        return out;
      },
      py::arg("graph"), py::arg("structure") = py::none(), py::arg("method") = "auto");
  m.def("push_ds_into_clique", &push_ds_into_clique, py::arg("graph"), py::arg("dominating_set"));
  m.def(
      "approx_steiner",
      [](const SplitGraph& g, const VertexSet& r) {
        const auto a = approx_steiner(g, make_vertex_set(r));
        return py::make_tuple(a.solution.steiner_set, a.tree);
      },
      py::arg("graph"), py::arg("terminals"));

  m.def("x3c_example", [] {
    const X3CInstance x = x3c_example();
    return py::make_tuple(x.ground, x.sets);
  });
  m.def(
      "reduce_x3c",
      [](int ground, std::vector<std::array<int, 3>> sets) {
        return reduce_x3c({ground, std::move(sets)}).instance;
      },
      py::arg("ground"), py::arg("sets"));
  m.def(
      "x3c_has_exact_cover",
      [](int ground, std::vector<std::array<int, 3>> sets) {
        return x3c_has_exact_cover({ground, std::move(sets)});
      },
      py::arg("ground"), py::arg("sets"));
  m.def(
      "reduce_vertex_cover",
      [](int n, std::vector<Edge> edges, int k) {
        return reduce_vertex_cover({n, std::move(edges), k}).instance;
      },
      py::arg("vertices"), py::arg("edges"), py::arg("budget"));
  m.def(
      "min_vertex_cover",
      [](int n, std::vector<Edge> edges) { return min_vertex_cover({n, std::move(edges), 0}); },
      py::arg("vertices"), py::arg("edges"));
  m.def(
      "reduce_split_to_chordal_convex",
      [](const SplitGraph& g) { return reduce_split_to_chordal_convex(g).instance; }, py::arg("graph"));

  auto gen = m.def_submodule("generate", "Seeded random instance generators.");
  gen.def(
      "path_convex_I",
      [](std::uint64_t seed, int k, int i) {
        Rng r(seed);
        return random_path_convex_I(r, k, i);
      },
      py::arg("seed"), py::arg("clique"), py::arg("independent"));
  gen.def(
      "circular_convex_I",
      [](std::uint64_t seed, int k, int i) {
        Rng r(seed);
        return random_circular_convex_I(r, k, i);
      },
      py::arg("seed"), py::arg("clique"), py::arg("independent"));
  gen.def(
      "triad_convex_I",
      [](std::uint64_t seed, int k, int leg) {
        Rng r(seed);
        return random_triad_convex_I(r, k, leg);
      },
      py::arg("seed"), py::arg("clique"), py::arg("leg_length"));
  gen.def(
      "star_convex_I",
      [](std::uint64_t seed, int k, int leaves, std::optional<int> d) {
        Rng r(seed);
        return random_star_convex_I(r, k, leaves, d);
      },
      py::arg("seed"), py::arg("clique"), py::arg("leaves"), py::arg("degree_bound") = py::none());
  gen.def(
      "comb_convex_I",
      [](std::uint64_t seed, int k, int l) {
        Rng r(seed);
        return random_comb_convex_I(r, k, l);
      },
      py::arg("seed"), py::arg("clique"), py::arg("backbone"));
  gen.def(
      "tree_convex_K",
      [](std::uint64_t seed, int k, int i) {
        Rng r(seed);
        return random_tree_convex_K(r, k, i);
      },
      py::arg("seed"), py::arg("clique"), py::arg("independent"));
  gen.def(
      "circular_convex_K",
      [](std::uint64_t seed, int k, int i) {
        Rng r(seed);
        return random_circular_convex_K(r, k, i);
      },
      py::arg("seed"), py::arg("clique"), py::arg("independent"));
  gen.def(
      "split_graph",
      [](std::uint64_t seed, int k, int i, double p) {
        Rng r(seed);
        return random_split_graph(r, k, i, p);
      },
      py::arg("seed"), py::arg("clique"), py::arg("independent"), py::arg("density") = 0.3);
}
