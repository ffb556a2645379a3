#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "signedcolor/bench.hpp"
#include "signedcolor/embedding.hpp"
#include "signedcolor/graph.hpp"
#include "signedcolor/instance.hpp"
#include "signedcolor/oracle.hpp"
#include "signedcolor/signature.hpp"
#include "signedcolor/solver.hpp"

namespace py = pybind11;
using namespace signedcolor;

namespace {

Coloring coloring_from_dict(const std::map<VertexId, int>& values) {
    Coloring c;
    for (const auto& [v, color] : values) c.set(v, color);
    return c;
}

py::dict report_to_dict(const ViolationReport& report) {
    py::dict out;
    py::list edges;
    for (const auto& e : report.violating_edges) edges.append(py::make_tuple(e.u, e.v, e.sign));
    out["violating_edges"] = edges;
    out["per_vertex_defect"] = report.per_vertex_defect;
    out["list_violations"] = report.list_violations;
    out["max_defect"] = max_defect(report);
    return out;
}

SignPolicy policy_from_string(const std::string& name) {
    if (name == "always_positive") return SignPolicy::always_positive;
    if (name == "always_negative") return SignPolicy::always_negative;
    if (name == "alternating") return SignPolicy::alternating;
    throw Error(errc::precondition, "unknown sign policy \"" + name + "\"");
}

SwitchSet set_from_list(std::vector<VertexId> members) {
    SwitchSet set{std::move(members)};
    set.normalize();
    return set;
}

SignedGraph graph_from_edges(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<SignedEdge> converted;
    converted.reserve(edges.size());
    for (const auto& [u, v, s] : edges) converted.push_back({u, v, s});
    return SignedGraph(n, std::move(converted));
}

py::dict oracle_to_dict(const OracleResult& result) {
    py::dict out;
    switch (result.status) {
        case OracleStatus::sat: out["status"] = "sat"; break;
        case OracleStatus::unsat: out["status"] = "unsat"; break;
        case OracleStatus::budget_exhausted: out["status"] = "budget_exhausted"; break;
    }
    if (result.witness) {
        out["witness"] = result.witness->values();
    } else {
        out["witness"] = py::none();
    }
    out["nodes_explored"] = result.nodes_explored;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "signed planar graph list coloring: switching, embeddings, extension solvers, "
              "exhaustive oracle";

    py::register_exception<Error>(m, "Error");

    py::class_<SignedGraph>(m, "SignedGraph")
        .def(py::init(&graph_from_edges), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &SignedGraph::vertex_count)
        .def_property_readonly("edge_count", &SignedGraph::edge_count)
        .def("edges",
             [](const SignedGraph& g) {
                 py::list out;
                 for (const auto& e : g.edges()) out.append(py::make_tuple(e.u, e.v, e.sign));
                 return out;
             })
        .def("neighbors",
             [](const SignedGraph& g, VertexId v) {
                 py::list out;
                 for (auto [w, s] : g.neighbors(v)) out.append(py::make_tuple(w, s));
                 return out;
             })
        .def("has_edge", &SignedGraph::has_edge)
        .def("sign", &SignedGraph::sign)
        .def("degree", &SignedGraph::degree)
        .def("__repr__", [](const SignedGraph& g) {
            return "SignedGraph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    py::class_<ListAssignment>(m, "ListAssignment")
        .def(py::init<int>(), py::arg("vertex_count"))
        .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("vertex_count"),
             py::arg("lists"))
        .def("assign", &ListAssignment::assign)
        .def("at", &ListAssignment::at)
        .def("__getitem__", &ListAssignment::at)
        .def_property_readonly("vertex_count", &ListAssignment::vertex_count)
        .def("min_list_size", &ListAssignment::min_list_size);

    py::class_<PlaneGraph>(m, "PlaneGraph")
        .def(py::init<SignedGraph, RotationSystem, std::optional<std::vector<VertexId>>>(),
             py::arg("graph"), py::arg("rotation"), py::arg("outer_face") = std::nullopt)
        .def_property_readonly("graph", &PlaneGraph::graph)
        .def_property_readonly("rotation", &PlaneGraph::rotation)
        .def("faces",
             [](const PlaneGraph& pg) {
                 py::list out;
                 for (const auto& f : pg.faces()) out.append(f.boundary);
                 return out;
             })
        .def_property_readonly("outer_face", &PlaneGraph::outer_face)
        .def("boundary_cycle", [](const PlaneGraph& pg) { return boundary_cycle(pg); })
        .def("with_outer_face", &PlaneGraph::with_outer_face);

    py::class_<InstanceFile>(m, "Instance")
        .def_readonly("vertex_count", &InstanceFile::vertex_count)
        .def_readonly("names", &InstanceFile::names)
        .def("edges",
             [](const InstanceFile& inst) {
                 py::list out;
                 for (const auto& e : inst.edges) out.append(py::make_tuple(e.u, e.v, e.sign));
                 return out;
             })
        .def("graph", &InstanceFile::graph)
        .def("plane_graph", &InstanceFile::plane_graph)
        .def_property_readonly("lists",
                               [](const InstanceFile& inst) -> std::optional<ListAssignment> {
                                   return inst.lists;
                               })
        .def_property_readonly("precoloring",
                               [](const InstanceFile& inst) { return inst.precoloring.values(); });

    m.def("validate_coloring",
          [](const SignedGraph& g, const std::map<VertexId, int>& coloring) {
              return report_to_dict(validate_coloring(g, coloring_from_dict(coloring)));
          },
          py::arg("graph"), py::arg("coloring"));
    m.def("validate_list_coloring",
          [](const SignedGraph& g, const ListAssignment& lists,
             const std::map<VertexId, int>& coloring) {
              auto [ok, report] = validate_list_coloring(g, lists, coloring_from_dict(coloring));
              return py::make_tuple(ok, report_to_dict(report));
          },
          py::arg("graph"), py::arg("lists"), py::arg("coloring"));

    m.def("switch_graph",
          [](const SignedGraph& g, std::vector<VertexId> members) {
              return switch_graph(g, set_from_list(std::move(members)));
          },
          py::arg("graph"), py::arg("switch_set"));
    m.def("negate_all_signs", &negate_all_signs);
    m.def("walk_sign", &walk_sign, py::arg("graph"), py::arg("walk"));
    m.def("cycle_sign", &cycle_sign, py::arg("graph"), py::arg("cycle"));
    m.def("is_balanced",
          [](const SignedGraph& g) {
              BalanceWitness witness = is_balanced(g);
              py::dict out;
              out["balanced"] = witness.balanced;
              if (witness.balanced) {
                  out["balancing_set"] = witness.balancing_set.members;
              } else {
                  out["negative_cycle"] = witness.negative_cycle;
              }
              return out;
          },
          py::arg("graph"));
    m.def("harary_bipartition", &harary_bipartition);
    m.def("is_antibalanced", &is_antibalanced);
    m.def("transport_lists",
          [](const ListAssignment& lists, std::vector<VertexId> members) {
              return transport_lists(lists, set_from_list(std::move(members)));
          },
          py::arg("lists"), py::arg("switch_set"));
    m.def("transport_coloring",
          [](const std::map<VertexId, int>& coloring, std::vector<VertexId> members) {
              return transport_coloring(coloring_from_dict(coloring), set_from_list(std::move(members)))
                  .values();
          },
          py::arg("coloring"), py::arg("switch_set"));

    m.def("trace_faces",
          [](const SignedGraph& g, const RotationSystem& rotation) {
              py::list out;
              for (const auto& f : trace_faces(g, rotation)) out.append(f.boundary);
              return out;
          },
          py::arg("graph"), py::arg("rotation"));
    m.def("validate_plane", &validate_plane, py::arg("graph"), py::arg("rotation"));
    m.def("is_near_triangulation", &is_near_triangulation);
    m.def("triangulate",
          [](const PlaneGraph& pg, const std::string& policy) {
              return triangulate(pg, policy_from_string(policy));
          },
          py::arg("plane_graph"), py::arg("sign_policy") = "always_positive");
    m.def("find_chord", &find_chord);
    m.def("fan_neighbors", &fan_neighbors, py::arg("plane_graph"), py::arg("vp"), py::arg("v1"),
          py::arg("vprev"));

    m.def("extend_precoloring",
          [](const PlaneGraph& pg, const ListAssignment& lists, VertexId v1, int c1, VertexId v2,
             int c2) { return extend_precoloring({pg, lists, v1, c1, v2, c2}).values(); },
          py::arg("plane_graph"), py::arg("lists"), py::arg("v1"), py::arg("c1"), py::arg("v2"),
          py::arg("c2"));
    m.def("five_list_color",
          [](const PlaneGraph& pg, const ListAssignment& lists, const std::string& policy) {
              return five_list_color(pg, lists, policy_from_string(policy)).values();
          },
          py::arg("plane_graph"), py::arg("lists"), py::arg("sign_policy") = "always_positive");
    m.def("two_vertex_extension",
          [](const PlaneGraph& pg, VertexId u, VertexId v, int cu, int cv,
             const ListAssignment& lists) {
              return two_vertex_extension(pg, u, v, cu, cv, lists).values();
          },
          py::arg("plane_graph"), py::arg("u"), py::arg("v"), py::arg("cu"), py::arg("cv"),
          py::arg("lists"));
    m.def("symmetric_five_color",
          [](const PlaneGraph& pg) { return symmetric_five_color(pg).values(); },
          py::arg("plane_graph"));
    m.def("outerplanar_three_list_color",
          [](const PlaneGraph& pg, const ListAssignment& lists) {
              return outerplanar_three_list_color(pg, lists).values();
          },
          py::arg("plane_graph"), py::arg("lists"));
    m.def("degeneracy", &degeneracy);
    m.def("degeneracy_greedy_color",
          [](const SignedGraph& g, const ListAssignment& lists) {
              return degeneracy_greedy_color(g, lists).values();
          },
          py::arg("graph"), py::arg("lists"));
    m.def("defective_four_list_color",
          [](const PlaneGraph& pg, const ListAssignment& lists) {
              return defective_four_list_color(pg, lists).values();
          },
          py::arg("plane_graph"), py::arg("lists"));

    m.def("brute_force_l_coloring",
          [](const SignedGraph& g, const ListAssignment& lists, const std::string& mode,
             long long budget) {
              OracleMode oracle_mode = OracleMode::signed_all;
              if (mode == "positive_only") {
                  oracle_mode = OracleMode::positive_only;
              } else if (mode != "signed") {
                  throw Error(errc::precondition, "oracle mode must be signed or positive_only");
              }
              return oracle_to_dict(brute_force_l_coloring(g, lists, oracle_mode, budget));
          },
          py::arg("graph"), py::arg("lists"), py::arg("mode") = "signed",
          py::arg("node_budget") = 0);
    m.def("check_choosability",
          [](const SignedGraph& g, int k, const std::vector<int>& universe) {
              ChoosabilityResult result = check_choosability(g, k, universe);
              py::dict out;
              out["choosable"] = result.choosable;
              out["assignments_checked"] = result.assignments_checked;
              if (result.refutation) {
                  py::list lists;
                  for (VertexId v = 0; v < result.refutation->vertex_count(); ++v) {
                      lists.append(result.refutation->at(v));
                  }
                  out["refutation"] = lists;
              } else {
                  out["refutation"] = py::none();
              }
              return out;
          },
          py::arg("graph"), py::arg("k"), py::arg("universe"));
    m.def("sandwich_check", &sandwich_check, py::arg("graph"), py::arg("lists"));

    m.def("parse_instance", &parse_instance, py::arg("text"));
    m.def("serialize_instance", &serialize_instance, py::arg("instance"));
    m.def("parse_coloring",
          [](const std::string& text) { return parse_coloring(text).values(); }, py::arg("text"));
    m.def("serialize_coloring",
          [](const std::map<VertexId, int>& coloring) {
              return serialize_coloring(coloring_from_dict(coloring));
          },
          py::arg("coloring"));
    m.def("gen_stacked_triangulation", &gen_stacked_triangulation, py::arg("n"), py::arg("seed"),
          py::arg("negative_probability"));
    m.def("gen_outerplanar", &gen_outerplanar, py::arg("n"), py::arg("seed"),
          py::arg("negative_probability"));
    m.def("gen_lists",
          [](const InstanceFile& inst, const std::string& profile, int uniform_size, int color_lo,
             int color_hi, std::uint64_t seed) {
              ListProfile lp = profile == "thomassen" ? ListProfile::thomassen()
                                                      : ListProfile::uniform(uniform_size);
              if (profile != "thomassen" && profile != "uniform") {
                  throw Error(errc::precondition, "profile must be uniform or thomassen");
              }
              return gen_lists(inst, lp, color_lo, color_hi, seed);
          },
          py::arg("instance"), py::arg("profile") = "uniform", py::arg("uniform_size") = 5,
          py::arg("color_lo") = -10, py::arg("color_hi") = 10, py::arg("seed") = 0);

    m.attr("__version__") = "0.1.0";
}
