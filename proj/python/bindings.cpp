#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayleykit/json_io.hpp"
#include "cayleykit/lift.hpp"

namespace py = pybind11;
using namespace ck;

namespace {

std::string ball_json_str(const Ball& b) { return ball_json(b).dump(); }

Labelling labelling_from_str(const std::string& s) { return labelling_from_json(Json::parse(s)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cayley-graph ball, diagram and factor-of-iid local rule workbench";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");

  py::class_<Element>(m, "Element")
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", [](const Element& e) { return hash_value(e); });

  py::class_<MarkedGroup, std::shared_ptr<MarkedGroup>>(m, "MarkedGroup")
      .def_property_readonly("name", [](const MarkedGroup& g) { return g.name; })
      .def_property_readonly("degree", &MarkedGroup::degree)
      .def_property_readonly("generators",
                             [](const MarkedGroup& g) {
                               std::vector<std::string> out;
                               for (const auto& gen : g.gens) out.push_back(gen.label);
                               return out;
                             })
      .def("identity", &MarkedGroup::identity)
      .def("multiply", &MarkedGroup::multiply)
      .def("inverse", &MarkedGroup::inverse)
      .def("canonical", &MarkedGroup::canonical)
      .def("generator", [](const MarkedGroup& g, const std::string& label) {
        int i = g.label_index(label);
        if (i < 0) throw std::invalid_argument("unknown generator label: " + label);
        return g.gens[i].elem;
      })
      .def("semidirect_action", &MarkedGroup::semidirect_action)
      .def("str", &MarkedGroup::str);

  m.def("make_group",
        [](const std::string& desc) { return std::make_shared<MarkedGroup>(make_group(desc)); });
  m.def("preset_names", &preset_names);

  py::class_<Ball, std::shared_ptr<Ball>>(m, "Ball")
      .def_property_readonly("radius", [](const Ball& b) { return b.radius; })
      .def_property_readonly("size", &Ball::size)
      .def_property_readonly("depth", [](const Ball& b) { return b.depth; })
      .def_property_readonly("adjacency", [](const Ball& b) { return b.adj; })
      .def_property_readonly("words", [](const Ball& b) { return b.words; })
      .def("edge_label", [](const Ball& b, int u, int v) {
        int gi = b.edge_label(u, v);
        return gi < 0 ? std::string() : b.group->gens[gi].label;
      })
      .def("json", &ball_json_str)
      .def("dot", &ball_dot);

  m.def(
      "ball",
      [](GroupPtr G, int n, std::size_t cap) {
        return std::make_shared<Ball>(ball(G, n, cap));
      },
      py::arg("group"), py::arg("n"), py::arg("max_vertices") = kDefaultVertexCap);
  m.def("diestel_leader_ball",
        [](int n) { return std::make_shared<Ball>(diestel_leader_ball(n)); });

  py::class_<BallMap>(m, "BallMap")
      .def_property_readonly("map", [](const BallMap& m_) { return m_.map; });

  m.def(
      "ball_automorphisms",
      [](std::shared_ptr<Ball> b, bool root_fixing) { return ball_automorphisms(*b, root_fixing); },
      py::arg("ball"), py::arg("root_fixing") = true);
  m.def(
      "ball_isomorphic",
      [](std::shared_ptr<Ball> a, std::shared_ptr<Ball> b, bool root) {
        auto r = ball_isomorphic(*a, *b, root);
        return r.has_value();
      },
      py::arg("a"), py::arg("b"), py::arg("root_to_root") = true);
  m.def(
      "extendable_count",
      [](GroupPtr G, int n, int k) { return extendable_automorphisms(G, n, k).size(); },
      py::arg("group"), py::arg("n"), py::arg("k") = 2);

  py::class_<Constraint>(m, "Constraint")
      .def_property_readonly("name", [](const Constraint& c) { return c.name; })
      .def_property_readonly("radius", [](const Constraint& c) { return c.radius; })
      .def_property_readonly("arity", [](const Constraint& c) { return c.arity; })
      .def_property_readonly("alphabet", [](const Constraint& c) { return c.alphabet; });
  m.def("parse_constraint", &parse_constraint);
  m.def("proper_coloring", &proper_coloring);
  m.def("orientation_constraint", &orientation_constraint);
  m.def("cayley_constraint", &cayley_constraint);

  py::class_<Labelling>(m, "Labelling")
      .def("json", [](const Labelling& f) { return labelling_json(f).dump(); });
  m.def("labelling_from_json", &labelling_from_str);

  m.def("meets_at", &meets_at);
  m.def("defect_set", [](const Ball& host, const Labelling& f, const Constraint& c) {
    return defect_json(defect_set(host, f, c)).dump();
  });
  m.def("solve_decoration", [](const Ball& host, const Constraint& c, std::size_t budget) {
    auto r = solve_decoration(host, c, budget);
    Json j;
    j["status"] = r.status == SolveResult::Status::Found
                      ? "found"
                      : r.status == SolveResult::Status::Absent ? "absent" : "unknown";
    if (r.labelling) j["labelling"] = labelling_json(*r.labelling);
    return j.dump();
  }, py::arg("host"), py::arg("constraint"), py::arg("budget") = 2000000);

  py::class_<Diagram>(m, "Diagram")
      .def("json", [](const Diagram& d) { return diagram_json(d, "").dump(); })
      .def_static("standard", [](std::shared_ptr<Ball> b) {
        return Diagram::standard(std::const_pointer_cast<const Ball>(b));
      });
  m.def("enumerate_diagrams", [](std::shared_ptr<Ball> b, int i) {
    return enumerate_diagrams(std::const_pointer_cast<const Ball>(b), i);
  });
  m.def("verify_diagram", [](const Diagram& d, int i) {
    return defect_json(verify_diagram(d, i)).dump();
  });

  py::class_<SimReport>(m, "SimReport")
      .def_property_readonly("samples", [](const SimReport& r) { return r.samples; })
      .def_property_readonly("failure_estimate", &SimReport::estimate)
      .def_property_readonly("half_width", &SimReport::half_width)
      .def("json", [](const SimReport& r) { return simreport_json(r).dump(); });

  m.def("make_rule", &make_rule);
  m.def(
      "simulate",
      [](GroupPtr G, const std::string& rule, int R, const std::string& constraint, int samples,
         uint64_t seed) {
        LocalRule lr = make_rule(rule, G);
        Constraint c;
        if (constraint.rfind("cayley:", 0) == 0) {
          c = cayley_constraint(G, std::stoi(constraint.substr(7)));
        } else if (constraint.rfind("proper:", 0) == 0) {
          c = proper_coloring(std::stoi(constraint.substr(7)));
        } else if (constraint == "orientation") {
          c = orientation_constraint();
        } else {
          c = parse_constraint(constraint);
        }
        return simulate(G, lr, R, c, samples, seed);
      },
      py::arg("group"), py::arg("rule"), py::arg("R"), py::arg("constraint"), py::arg("samples"),
      py::arg("seed"));
  m.def("invariance_check", [](const std::string& rule, GroupPtr G, std::shared_ptr<Ball> b,
                               int trials, uint64_t seed) {
    return invariance_json(invariance_check(make_rule(rule, G), *b, trials, seed)).dump();
  });
  m.def("lift_simulate", [](GroupPtr G, const std::string& dr, const std::string& gr, int R,
                            int i, int samples, uint64_t seed) {
    LocalRule lifted = lift_rule(make_rule(dr, G), make_rule(gr, G), G);
    return simulate(G, lifted, R, cayley_constraint(G, i), samples, seed);
  });

  m.def("color_augment", [](int n, int rounds, int samples, uint64_t seed) {
    auto G = make_group_ptr("preset:gamma");
    Ball host = ball(G, n);
    Json out = Json::array();
    for (int s = 0; s < samples; ++s) {
      SeedMatrix seeds = draw_seeds(host.size(), 1, seed, static_cast<uint64_t>(s));
      auto rep = augmenting_3coloring(host, seeds, rounds);
      Json j;
      j["missed_fraction"] = rep.missed_fraction;
      j["invariants_ok"] = rep.invariants_ok;
      out.push_back(std::move(j));
    }
    return out.dump();
  });

  m.attr("__version__") = "0.1.0";
}
