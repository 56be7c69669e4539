#include "cayleykit/simulate.hpp"

#include <sstream>

namespace ck {

Labelling assemble_labelling(const Ball& host, const LocalRule& rule, const SeedMatrix& seeds,
                             const void* prep, int* eval_depth) {
  Labelling f;
  f.arity = rule.out_arity;
  f.alphabet = rule.alphabet;
  if (f.arity == 1) f.vertex_vals.assign(host.size(), -1);
  int depth_cap = rule.radius == kWholeHostRadius ? host.radius : host.radius - rule.radius;
  if (eval_depth) *eval_depth = depth_cap;
  for (int v = 0; v < host.size(); ++v) {
    if (host.depth[v] > depth_cap) continue;
    RuleOutput out = rule.evaluate(host, v, seeds, prep);
    if (!out.ok) continue;
    if (rule.out_arity == 1) {
      f.set_vertex(v, out.root_label);
    } else {
      for (std::size_t p = 0; p < host.adj[v].size(); ++p) {
        if (out.edge_labels[p] >= 0) f.set_edge(v, host.adj[v][p], out.edge_labels[p]);
      }
    }
  }
  return f;
}

SimReport simulate_on(const Ball& host, const LocalRule& rule, const Constraint& c, int samples,
                      uint64_t seed) {
  if (rule.radius != kWholeHostRadius && host.radius < rule.radius + c.radius) {
    throw std::invalid_argument("simulate: host radius must be >= rule.radius + constraint.radius");
  }
  if (rule.out_arity != c.arity) {
    throw std::invalid_argument("simulate: rule output arity does not match the constraint");
  }
  std::shared_ptr<const void> prep;
  if (rule.prepare) prep = rule.prepare(host);
  SimReport rep;
  rep.samples = samples;
  Region root_rg = make_region(host, host.root, c.radius);
  for (int s = 0; s < samples; ++s) {
    SeedMatrix seeds = draw_seeds(host.size(), rule.seed_layers, seed, static_cast<uint64_t>(s));
    int eval_depth = 0;
    Labelling f = assemble_labelling(host, rule, seeds, prep.get(), &eval_depth);
    if (!c.accept(host, f, root_rg)) ++rep.root_failures;
    int checked = 0, bad = 0;
    for (int x = 0; x < host.size(); ++x) {
      if (host.depth[x] + c.radius > eval_depth) continue;
      ++checked;
      Region rg = make_region(host, x, c.radius);
      if (!c.accept(host, f, rg)) ++bad;
    }
    rep.per_sample_defect.push_back(checked == 0 ? 0.0 : static_cast<double>(bad) / checked);
  }
  return rep;
}

SimReport simulate(GroupPtr G, const LocalRule& rule, int R, const Constraint& c, int samples,
                   uint64_t seed, std::size_t max_vertices) {
  Ball host = ball(G, R, max_vertices);
  return simulate_on(host, rule, c, samples, seed);
}

namespace {

SeedMatrix pull_seeds(const SeedMatrix& s, const BallMap& sigma_inv) {
  SeedMatrix out;
  out.layers = s.layers;
  out.vals.resize(s.vals.size());
  int n = static_cast<int>(sigma_inv.map.size());
  for (int v = 0; v < n; ++v) {
    for (int l = 0; l < s.layers; ++l) {
      out.vals[static_cast<std::size_t>(v) * s.layers + l] = s.at(sigma_inv.map[v], l);
    }
  }
  return out;
}

bool outputs_match(const Ball& b, const LocalRule& rule, const RuleOutput& base,
                   const RuleOutput& moved, const BallMap& sigma, std::string* why) {
  if (base.ok != moved.ok) {
    *why = "ok flag differs";
    return false;
  }
  if (!base.ok) return true;
  if (rule.out_arity == 1) {
    if (base.root_label != moved.root_label) {
      *why = "root label differs";
      return false;
    }
    return true;
  }
  // moved(root -> n) must equal base(root -> sigma^-1(n))
  BallMap inv = sigma.inverse();
  int root = b.root;
  for (std::size_t p = 0; p < b.adj[root].size(); ++p) {
    int n = b.adj[root][p];
    int pre = inv.map[n];
    int q = b.adj_pos(root, pre);
    if (q < 0 || base.edge_labels[q] != moved.edge_labels[p]) {
      std::ostringstream os;
      os << "edge label to neighbour " << n << " differs";
      *why = os.str();
      return false;
    }
  }
  return true;
}

}  // namespace

InvarianceReport invariance_check(const LocalRule& rule, const Ball& b, int trials, uint64_t seed) {
  if (rule.diagram_aware) {
    throw std::invalid_argument("invariance_check: rule is diagram-aware (mode error)");
  }
  if (rule.radius != kWholeHostRadius && b.radius < rule.radius) {
    throw std::invalid_argument("invariance_check: ball radius below the rule radius");
  }
  std::shared_ptr<const void> prep;
  if (rule.prepare) prep = rule.prepare(b);
  InvarianceReport rep;
  rep.trials = trials;
  auto all = try_enumerate_automorphisms(b, true, rule.order_aware, 512);
  rep.sampled = !all.has_value();
  for (int t = 0; t < trials && rep.ok; ++t) {
    SeedMatrix seeds = draw_seeds(b.size(), rule.seed_layers, seed, static_cast<uint64_t>(t) | (1ull << 40));
    RuleOutput base = rule.evaluate(b, b.root, seeds, prep.get());
    std::vector<BallMap> autos;
    if (all) {
      autos = *all;
    } else {
      for (int k = 0; k < 8; ++k) {
        auto sigma = random_root_fixing_automorphism(b, seed ^ (t * 977 + k + 1), rule.order_aware);
        if (sigma) autos.push_back(*sigma);
      }
    }
    for (const auto& sigma : autos) {
      BallMap inv = sigma.inverse();
      SeedMatrix moved_seeds = pull_seeds(seeds, inv);
      RuleOutput moved = rule.evaluate(b, b.root, moved_seeds, prep.get());
      ++rep.autos_checked;
      std::string why;
      if (!outputs_match(b, rule, base, moved, sigma, &why)) {
        rep.ok = false;
        std::ostringstream os;
        os << "trial " << t << ": " << why;
        rep.counterexample = os.str();
        break;
      }
    }
  }
  return rep;
}

}  // namespace ck
