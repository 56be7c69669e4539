#include "cayleykit/json_io.hpp"

#include <sstream>

namespace ck {

Json ball_json(const Ball& b) {
  Json j;
  j["root"] = b.root;
  j["radius"] = b.radius;
  Json verts = Json::array();
  for (int v = 0; v < b.size(); ++v) {
    Json jv;
    jv["id"] = v;
    jv["word"] = v < static_cast<int>(b.words.size()) ? b.words[v] : "";
    jv["depth"] = b.depth[v];
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (int u = 0; u < b.size(); ++u) {
    for (std::size_t p = 0; p < b.adj[u].size(); ++p) {
      int v = b.adj[u][p];
      if (v < u) continue;
      Json je;
      je["u"] = u;
      je["v"] = v;
      int gi = b.elabel[u][p];
      je["label"] = gi >= 0 && b.group ? b.group->gens[gi].label : "";
      edges.push_back(std::move(je));
    }
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string ball_dot(const Ball& b) {
  std::ostringstream os;
  os << "graph ball {\n";
  for (int v = 0; v < b.size(); ++v) {
    os << "  " << v << " [label=\"" << v << " d" << b.depth[v] << "\"];\n";
  }
  for (int u = 0; u < b.size(); ++u) {
    for (std::size_t p = 0; p < b.adj[u].size(); ++p) {
      int v = b.adj[u][p];
      if (v < u) continue;
      os << "  " << u << " -- " << v;
      int gi = b.elabel[u][p];
      if (gi >= 0 && b.group) os << " [label=\"" << b.group->gens[gi].label << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Json defect_json(const DefectReport& r) {
  Json j;
  j["checked"] = r.checked;
  j["defective"] = r.defective;
  j["fraction"] = r.fraction();
  return j;
}

Json diagram_json(const Diagram& d, const std::string& host_ref) {
  Json j;
  j["host_ref"] = host_ref;
  Json labels = Json::array();
  const Ball& b = *d.host;
  for (int u = 0; u < b.size(); ++u) {
    for (std::size_t p = 0; p < b.adj[u].size(); ++p) {
      Json je;
      je["u"] = u;
      je["v"] = b.adj[u][p];
      je["label"] = b.group->gens[d.labels[u][p]].label;
      labels.push_back(std::move(je));
    }
  }
  j["labels"] = std::move(labels);
  return j;
}

Json labelling_json(const Labelling& f) {
  Json j;
  j["arity"] = f.arity;
  j["alphabet"] = f.alphabet;
  if (f.arity == 1) {
    Json vs = Json::array();
    for (std::size_t v = 0; v < f.vertex_vals.size(); ++v) {
      if (f.vertex_vals[v] >= 0) {
        Json jv;
        jv["id"] = v;
        jv["label"] = f.alphabet[f.vertex_vals[v]];
        vs.push_back(std::move(jv));
      }
    }
    j["vertices"] = std::move(vs);
  } else {
    std::vector<std::pair<int, int>> keys;
    for (const auto& [k, a] : f.edge_vals) {
      keys.emplace_back(static_cast<int>(k >> 31), static_cast<int>(k & 0x7fffffff));
    }
    std::sort(keys.begin(), keys.end());
    Json es = Json::array();
    for (auto [u, v] : keys) {
      Json je;
      je["u"] = u;
      je["v"] = v;
      je["label"] = f.alphabet[f.edge(u, v)];
      es.push_back(std::move(je));
    }
    j["edges"] = std::move(es);
  }
  return j;
}

Labelling labelling_from_json(const Json& j) {
  Labelling f;
  f.arity = j.at("arity").get<int>();
  f.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  if (f.arity == 1) {
    for (const auto& jv : j.at("vertices")) {
      int a = f.label_index(jv.at("label").get<std::string>());
      if (a < 0) throw std::invalid_argument("labelling json: label outside the alphabet");
      f.set_vertex(jv.at("id").get<int>(), a);
    }
  } else {
    for (const auto& je : j.at("edges")) {
      int a = f.label_index(je.at("label").get<std::string>());
      if (a < 0) throw std::invalid_argument("labelling json: label outside the alphabet");
      f.set_edge(je.at("u").get<int>(), je.at("v").get<int>(), a);
    }
  }
  return f;
}

Json simreport_json(const SimReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["root_failures"] = r.root_failures;
  j["failure_estimate"] = r.estimate();
  j["half_width"] = r.half_width();
  j["per_sample_defect"] = r.per_sample_defect;
  return j;
}

Json epsilon_json(const EpsilonDefects& e) {
  Json j;
  j["checked"] = e.checked;
  j["preimage"] = e.preimage;
  j["distortion"] = e.distortion;
  j["composition"] = e.composition;
  return j;
}

Json parity_json(const ParityReport& r) {
  Json j;
  j["checked_orbits"] = r.checked_orbits;
  j["values_pm1"] = r.values_pm1;
  j["orbit_constant"] = r.orbit_constant;
  j["adjacent_differ"] = r.adjacent_differ;
  j["quotient_proper_2coloring"] = r.quotient_proper_2coloring;
  j["agreement_by_distance"] = r.agreement_by_distance;
  return j;
}

Json invariance_json(const InvarianceReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["trials"] = r.trials;
  j["autos_checked"] = r.autos_checked;
  j["sampled"] = r.sampled;
  j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace ck
