// cayleykit: batch workbench for marked groups, Cayley-graph balls, local
// constraints, Cayley diagrams and factor-of-iid local rules.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cayleykit/json_io.hpp"
#include "cayleykit/lift.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

void print_header() {
  std::cout << "{\"cayleykit\":\"" << kVersion << "\"}\n";
}

std::size_t default_cap() {
  if (const char* env = std::getenv("CAYLEYKIT_MAX_VERTICES")) {
    return static_cast<std::size_t>(std::stoull(env));
  }
  return ck::kDefaultVertexCap;
}

ck::Constraint parse_constraint_spec(const std::string& spec, const ck::GroupPtr& G) {
  if (spec.rfind("@", 0) == 0) {
    std::ifstream in(spec.substr(1));
    if (!in) throw std::invalid_argument("cannot open constraint file: " + spec.substr(1));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return ck::parse_constraint(text);
  }
  if (spec.rfind("cayley:", 0) == 0) {
    if (!G) throw std::invalid_argument("cayley:<i> constraint needs a group");
    return ck::cayley_constraint(G, std::stoi(spec.substr(7)));
  }
  if (spec.rfind("proper:", 0) == 0) return ck::proper_coloring(std::stoi(spec.substr(7)));
  if (spec == "orientation") return ck::orientation_constraint();
  if (spec == "perfect-matching") return ck::perfect_matching_constraint();
  throw std::invalid_argument("unknown constraint spec: " + spec);
}

ck::Labelling parse_labelling_spec(const std::string& spec, const ck::Ball& host) {
  if (spec == "standard") {
    return ck::Diagram::standard(std::make_shared<ck::Ball>(host)).as_labelling();
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open labelling file: " + spec);
  ck::Json j;
  in >> j;
  return ck::labelling_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cayleykit: Cayley-graph ball, diagram and local-rule workbench"};
  app.require_subcommand(1);
  std::size_t cap = default_cap();
  app.add_option("--max-vertices", cap, "resource cap on ball vertex counts");

  // ball
  auto* cball = app.add_subcommand("ball", "emit a Cayley ball");
  std::string ball_group, ball_format = "json";
  int ball_n = 1;
  cball->add_option("--group", ball_group, "group descriptor")->required();
  cball->add_option("--n", ball_n, "radius")->required();
  cball->add_option("--format", ball_format, "json|dot");

  // aut
  auto* caut = app.add_subcommand("aut", "ball automorphisms / extendable counts");
  std::string aut_group;
  int aut_n = 1, aut_k = -1;
  bool aut_root = false, aut_list = false;
  caut->add_option("--group", aut_group)->required();
  caut->add_option("--n", aut_n)->required();
  caut->add_option("--k", aut_k, "margin: count extendable automorphisms instead");
  caut->add_flag("--root-fixing", aut_root);
  caut->add_flag("--list", aut_list, "emit the maps, one JSON object per line");

  // grr
  auto* cgrr = app.add_subcommand("grr", "extendable-count table vs n,k");
  std::string grr_group;
  int grr_n = 1, grr_k = 2;
  cgrr->add_option("--group", grr_group)->required();
  cgrr->add_option("--n", grr_n)->required();
  cgrr->add_option("--k", grr_k)->required();

  // iso
  auto* ciso = app.add_subcommand("iso", "ball isomorphism test");
  std::string iso_a, iso_b;
  int iso_n = 1;
  bool iso_free = false;
  ciso->add_option("--a", iso_a)->required();
  ciso->add_option("--b", iso_b)->required();
  ciso->add_option("--n", iso_n)->required();
  ciso->add_flag("--free", iso_free, "do not pin root to root");

  // dl
  auto* cdl = app.add_subcommand("dl", "Diestel-Leader ball (+ lamplighter check)");
  int dl_n = 1;
  bool dl_check = false;
  std::string dl_format = "json";
  cdl->add_option("--n", dl_n)->required();
  cdl->add_flag("--check-lamplighter", dl_check);
  cdl->add_option("--format", dl_format, "json|dot");

  // constraint check|solve
  auto* ccon = app.add_subcommand("constraint", "check or solve a local constraint");
  ccon->require_subcommand(1);
  auto* ccheck = ccon->add_subcommand("check", "defect report of a labelling");
  auto* csolve = ccon->add_subcommand("solve", "search for a decoration");
  std::string con_group, con_spec, con_labelling = "standard";
  int con_n = 2;
  std::size_t solve_budget = 2000000;
  for (auto* sc : {ccheck, csolve}) {
    sc->add_option("--group", con_group)->required();
    sc->add_option("--n", con_n)->required();
    sc->add_option("--constraint", con_spec)->required();
  }
  ccheck->add_option("--labelling", con_labelling, "json file or 'standard'");
  csolve->add_option("--budget", solve_budget);

  // diagrams enumerate|verify
  auto* cdia = app.add_subcommand("diagrams", "enumerate or verify Cayley diagrams");
  cdia->require_subcommand(1);
  auto* cenum = cdia->add_subcommand("enumerate", "stream all diagrams, one per line");
  auto* cver = cdia->add_subcommand("verify", "defect report of an edge labelling");
  std::string dia_group, dia_labelling = "standard";
  int dia_n = 2, dia_i = 2;
  for (auto* sc : {cenum, cver}) {
    sc->add_option("--group", dia_group)->required();
    sc->add_option("--n", dia_n)->required();
    sc->add_option("--i", dia_i)->required();
  }
  cver->add_option("--labelling", dia_labelling);

  // simulate
  auto* csim = app.add_subcommand("simulate", "Monte-Carlo local-rule simulation");
  std::string sim_group, sim_rule, sim_constraint;
  int sim_R = 3, sim_samples = 100;
  uint64_t sim_seed = 0;
  bool sim_seed_set = false;
  csim->add_option("--group", sim_group)->required();
  csim->add_option("--rule", sim_rule)->required();
  csim->add_option("--constraint", sim_constraint)->required();
  csim->add_option("--R", sim_R)->required();
  csim->add_option("--samples", sim_samples)->required();
  csim->add_option("--seed", sim_seed)->each([&](const std::string&) { sim_seed_set = true; });

  // lift
  auto* clift = app.add_subcommand("lift", "simulate a lifted rule");
  std::string lift_group, lift_dr, lift_gr, lift_constraint;
  int lift_R = 4, lift_samples = 100;
  uint64_t lift_seed = 0;
  bool lift_seed_set = false;
  clift->add_option("--group", lift_group)->required();
  clift->add_option("--diagram-rule", lift_dr)->required();
  clift->add_option("--gamma-rule", lift_gr)->required();
  clift->add_option("--constraint", lift_constraint)->required();
  clift->add_option("--R", lift_R)->required();
  clift->add_option("--samples", lift_samples)->required();
  clift->add_option("--seed", lift_seed)->each([&](const std::string&) { lift_seed_set = true; });

  // parity
  auto* cpar = app.add_subcommand("parity", "parity analysis of a 3-coloring on delta");
  int par_n = 2;
  std::string par_labelling;
  cpar->add_option("--n", par_n)->required();
  cpar->add_option("--labelling", par_labelling, "json file with the coloring")->required();

  // color-augment
  auto* caug = app.add_subcommand("color-augment", "augmenting-chain 3-coloring on gamma");
  int aug_n = 5, aug_rounds = 5, aug_samples = 1;
  uint64_t aug_seed = 0;
  bool aug_seed_set = false, aug_csv = false;
  caug->add_option("--n", aug_n)->required();
  caug->add_option("--rounds", aug_rounds)->required();
  caug->add_option("--samples", aug_samples);
  caug->add_option("--seed", aug_seed)->each([&](const std::string&) { aug_seed_set = true; });
  caug->add_flag("--csv", aug_csv, "emit per-round missed fractions as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cball) {
      auto G = ck::make_group_ptr(ball_group);
      ck::Ball b = ck::ball(G, ball_n, cap);
      print_header();
      if (ball_format == "dot") {
        std::cout << ck::ball_dot(b);
      } else {
        std::cout << ck::ball_json(b).dump() << "\n";
      }
    } else if (*caut) {
      auto G = ck::make_group_ptr(aut_group);
      print_header();
      if (aut_k >= 0) {
        auto maps = ck::extendable_automorphisms(G, aut_n, aut_k, {}, cap);
        ck::Json j;
        j["group"] = aut_group;
        j["n"] = aut_n;
        j["k"] = aut_k;
        j["extendable_count"] = maps.size();
        std::cout << j.dump() << "\n";
        if (aut_list) {
          for (const auto& m : maps) std::cout << ck::Json(m.map).dump() << "\n";
        }
      } else {
        ck::Ball b = ck::ball(G, aut_n, cap);
        auto maps = ck::ball_automorphisms(b, aut_root);
        ck::Json j;
        j["group"] = aut_group;
        j["n"] = aut_n;
        j["root_fixing"] = aut_root;
        j["count"] = maps.size();
        std::cout << j.dump() << "\n";
        if (aut_list) {
          for (const auto& m : maps) std::cout << ck::Json(m.map).dump() << "\n";
        }
      }
    } else if (*cgrr) {
      auto G = ck::make_group_ptr(grr_group);
      print_header();
      for (int n = 1; n <= grr_n; ++n) {
        auto maps = ck::extendable_automorphisms(G, n, grr_k, {}, cap);
        ck::Json j;
        j["n"] = n;
        j["k"] = grr_k;
        j["extendable_count"] = maps.size();
        j["grr_evidence"] = maps.size() == 1;
        std::cout << j.dump() << "\n";
      }
    } else if (*ciso) {
      auto GA = ck::make_group_ptr(iso_a);
      auto GB = ck::make_group_ptr(iso_b);
      ck::Ball a = ck::ball(GA, iso_n, cap);
      ck::Ball b = ck::ball(GB, iso_n, cap);
      auto m = ck::ball_isomorphic(a, b, !iso_free);
      print_header();
      ck::Json j;
      j["a"] = iso_a;
      j["b"] = iso_b;
      j["n"] = iso_n;
      j["isomorphic"] = m.has_value();
      std::cout << j.dump() << "\n";
    } else if (*cdl) {
      ck::Ball b = ck::diestel_leader_ball(dl_n);
      print_header();
      if (dl_format == "dot") {
        std::cout << ck::ball_dot(b);
      } else {
        std::cout << ck::ball_json(b).dump() << "\n";
      }
      if (dl_check) {
        auto L = ck::make_group_ptr("preset:lamplighter-DL");
        ck::Ball lb = ck::ball(L, dl_n, cap);
        auto m = ck::ball_isomorphic(b, lb, true);
        ck::Json j;
        j["lamplighter_isomorphic"] = m.has_value();
        std::cout << j.dump() << "\n";
      }
    } else if (*ccon) {
      auto G = ck::make_group_ptr(con_group);
      ck::Ball host = ck::ball(G, con_n, cap);
      ck::Constraint c = parse_constraint_spec(con_spec, G);
      print_header();
      if (*ccheck) {
        ck::Labelling f = parse_labelling_spec(con_labelling, host);
        auto rep = ck::defect_set(host, f, c);
        std::cout << ck::defect_json(rep).dump() << "\n";
      } else {
        auto res = ck::solve_decoration(host, c, solve_budget);
        ck::Json j;
        j["status"] = res.status == ck::SolveResult::Status::Found
                          ? "found"
                          : res.status == ck::SolveResult::Status::Absent ? "absent" : "unknown";
        std::cout << j.dump() << "\n";
        if (res.labelling) std::cout << ck::labelling_json(*res.labelling).dump() << "\n";
      }
    } else if (*cdia) {
      auto G = ck::make_group_ptr(dia_group);
      auto host = std::make_shared<const ck::Ball>(ck::ball(G, dia_n, cap));
      print_header();
      if (*cenum) {
        auto list = ck::enumerate_diagrams(host, dia_i);
        ck::Json head;
        head["count"] = list.size();
        std::cout << head.dump() << "\n";
        std::string ref = dia_group + "/B" + std::to_string(dia_n);
        for (const auto& d : list) std::cout << ck::diagram_json(d, ref).dump() << "\n";
      } else {
        ck::Labelling f = parse_labelling_spec(dia_labelling, *host);
        auto d = ck::Diagram::from_labelling(host, f);
        auto rep = ck::verify_diagram(d, dia_i);
        std::cout << ck::defect_json(rep).dump() << "\n";
      }
    } else if (*csim) {
      if (!sim_seed_set) {
        std::cerr << "simulate: --seed is required\n";
        return 2;
      }
      auto G = ck::make_group_ptr(sim_group);
      ck::LocalRule rule = ck::make_rule(sim_rule, G);
      ck::Constraint c = parse_constraint_spec(sim_constraint, G);
      auto rep = ck::simulate(G, rule, sim_R, c, sim_samples, sim_seed, cap);
      print_header();
      std::cout << ck::simreport_json(rep).dump() << "\n";
    } else if (*clift) {
      if (!lift_seed_set) {
        std::cerr << "lift: --seed is required\n";
        return 2;
      }
      auto G = ck::make_group_ptr(lift_group);
      ck::LocalRule dr = ck::make_rule(lift_dr, G);
      ck::LocalRule gr = ck::make_rule(lift_gr, G);
      ck::LocalRule lifted = ck::lift_rule(dr, gr, G);
      ck::Constraint c = parse_constraint_spec(lift_constraint, G);
      auto rep = ck::simulate(G, lifted, lift_R, c, lift_samples, lift_seed, cap);
      print_header();
      std::cout << ck::simreport_json(rep).dump() << "\n";
    } else if (*cpar) {
      auto G = ck::make_group_ptr("preset:delta");
      ck::Ball host = ck::ball(G, par_n, cap);
      ck::Labelling f = parse_labelling_spec(par_labelling, host);
      auto rep = ck::parity_analysis(host, f);
      print_header();
      std::cout << ck::parity_json(rep).dump() << "\n";
    } else if (*caug) {
      if (!aug_seed_set) {
        std::cerr << "color-augment: --seed is required\n";
        return 2;
      }
      auto G = ck::make_group_ptr("preset:gamma");
      ck::Ball host = ck::ball(G, aug_n, cap);
      print_header();
      if (aug_csv) std::cout << "sample,round,missed_fraction\n";
      for (int s = 0; s < aug_samples; ++s) {
        ck::SeedMatrix seeds = ck::draw_seeds(host.size(), 1, aug_seed, static_cast<uint64_t>(s));
        auto rep = ck::augmenting_3coloring(host, seeds, aug_rounds);
        if (aug_csv) {
          for (std::size_t r = 0; r < rep.missed_fraction.size(); ++r) {
            std::cout << s << "," << r << "," << rep.missed_fraction[r] << "\n";
          }
        } else {
          ck::Json j;
          j["sample"] = s;
          j["missed_fraction"] = rep.missed_fraction;
          j["set_sizes"] = rep.set_sizes;
          j["measured_orbits"] = rep.measured_orbits;
          j["invariants_ok"] = rep.invariants_ok;
          std::cout << j.dump() << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
