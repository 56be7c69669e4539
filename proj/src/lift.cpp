#include "cayleykit/lift.hpp"

#include <deque>

namespace ck {

namespace {

struct LiftPrep {
  std::shared_ptr<const void> dr_prep;
  BallPtr tmpl;  // standard ball of the gamma rule's radius
  std::shared_ptr<const void> gr_prep_on_tmpl;
  std::unordered_map<Element, int, ElementHash> tmpl_index;
};

struct LiftCtx {
  LocalRule dr, gr;
  GroupPtr G;
};

}  // namespace

LocalRule lift_rule(const LocalRule& diagram_rule, const LocalRule& gamma_rule, GroupPtr G) {
  if (diagram_rule.diagram_aware) {
    throw std::invalid_argument("lift_rule: the diagram rule must be diagram-oblivious");
  }
  if (!gamma_rule.diagram_aware) {
    throw std::invalid_argument("lift_rule: the gamma rule must be diagram-aware");
  }
  if (diagram_rule.radius == kWholeHostRadius || gamma_rule.radius == kWholeHostRadius) {
    throw std::invalid_argument("lift_rule: both rules need fixed radii");
  }
  if (diagram_rule.out_arity != 2) {
    throw std::invalid_argument("lift_rule: the diagram rule must emit edge labels");
  }
  auto ctx = std::make_shared<LiftCtx>(LiftCtx{diagram_rule, gamma_rule, G});
  LocalRule r;
  r.name = "lift(" + diagram_rule.name + "," + gamma_rule.name + ")";
  r.radius = diagram_rule.radius + gamma_rule.radius;
  r.out_arity = gamma_rule.out_arity;
  r.alphabet = gamma_rule.alphabet;
  r.seed_layers = diagram_rule.seed_layers + gamma_rule.seed_layers;
  r.prepare = [ctx](const Ball& host) -> std::shared_ptr<const void> {
    auto prep = std::make_shared<LiftPrep>();
    if (ctx->dr.prepare) prep->dr_prep = ctx->dr.prepare(host);
    prep->tmpl = std::make_shared<const Ball>(ball(ctx->G, ctx->gr.radius));
    if (ctx->gr.prepare) prep->gr_prep_on_tmpl = ctx->gr.prepare(*prep->tmpl);
    for (int v = 0; v < prep->tmpl->size(); ++v) prep->tmpl_index.emplace(prep->tmpl->elems[v], v);
    return prep;
  };
  r.eval = [ctx](const Ball& host, int x, const SeedMatrix& s, const void* pv) {
    const auto& prep = *static_cast<const LiftPrep*>(pv);
    const auto& G = *ctx->G;
    RuleOutput out;
    int rgr = ctx->gr.radius;
    Region rg = make_region(host, x, rgr);

    // seeds split into two independent layers; layer 1 drives the diagram
    SeedMatrix s1;
    s1.layers = ctx->dr.seed_layers;
    s1.vals.resize(static_cast<std::size_t>(host.size()) * s1.layers);
    SeedMatrix s2;
    s2.layers = ctx->gr.seed_layers;
    s2.vals.resize(static_cast<std::size_t>(host.size()) * s2.layers);
    for (int v = 0; v < host.size(); ++v) {
      for (int l = 0; l < s1.layers; ++l) s1.vals[v * s1.layers + l] = s.at(v, l);
      for (int l = 0; l < s2.layers; ++l) s2.vals[v * s2.layers + l] = s.at(v, s1.layers + l);
    }

    // (i) diagram labels over the inner ball
    std::unordered_map<int64_t, int> dlab;
    for (int v : rg.verts) {
      RuleOutput o = ctx->dr.evaluate(host, v, s1, prep.dr_prep.get());
      if (!o.ok) {
        out.why = "diagram rule failed at an inner vertex";
        return out;
      }
      for (std::size_t p = 0; p < host.adj[v].size(); ++p) {
        int w = host.adj[v][p];
        if (rg.contains(w) && o.edge_labels[p] >= 0) {
          dlab[Labelling::ekey(v, w)] = o.edge_labels[p];
        }
      }
    }
    auto label_of = [&](int u, int v) -> int {
      auto it = dlab.find(Labelling::ekey(u, v));
      return it == dlab.end() ? -1 : it->second;
    };

    // (ii) holonomy over the inner ball, base = x
    std::vector<Element> hval(host.size());
    std::vector<char> have(host.size(), 0);
    hval[x] = G.identity();
    have[x] = 1;
    std::deque<int> q{x};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : host.adj[u]) {
        if (!rg.contains(w) || have[w]) continue;
        int a = label_of(u, w);
        if (a < 0) {
          out.why = "missing diagram label in the inner ball";
          return out;
        }
        hval[w] = G.multiply(hval[u], G.gens[a].elem);
        have[w] = 1;
        q.push_back(w);
      }
    }
    for (int u : rg.verts) {
      for (int w : host.adj[u]) {
        if (!rg.contains(w)) continue;
        int a = label_of(u, w);
        if (a < 0 || !(G.multiply(hval[u], G.gens[a].elem) == hval[w])) {
          out.why = "holonomy inconsistent within the needed radius";
          return out;
        }
      }
    }

    // (iii) pull layer-2 seeds to the template along the holonomy vertex map
    const Ball& tmpl = *prep.tmpl;
    std::vector<int> from_tmpl(tmpl.size(), -1);
    for (int u : rg.verts) {
      auto it = prep.tmpl_index.find(hval[u]);
      if (it == prep.tmpl_index.end() || from_tmpl[it->second] != -1) {
        out.why = "holonomy vertex map is not a bijection onto the template";
        return out;
      }
      from_tmpl[it->second] = u;
    }
    for (int p = 0; p < tmpl.size(); ++p) {
      if (from_tmpl[p] < 0) {
        out.why = "holonomy image misses a template vertex";
        return out;
      }
    }
    SeedMatrix pulled;
    pulled.layers = s2.layers;
    pulled.vals.resize(static_cast<std::size_t>(tmpl.size()) * s2.layers);
    for (int p = 0; p < tmpl.size(); ++p) {
      for (int l = 0; l < s2.layers; ++l) {
        pulled.vals[p * s2.layers + l] = s2.at(from_tmpl[p], l);
      }
    }

    // (iv) the gamma rule at the template root, (v) push back through h^-1
    RuleOutput inner = ctx->gr.evaluate(tmpl, 0, pulled, prep.gr_prep_on_tmpl.get());
    if (!inner.ok) {
      out.why = "gamma rule failed: " + inner.why;
      return out;
    }
    if (ctx->gr.out_arity == 1) {
      out.root_label = inner.root_label;
      out.ok = true;
      return out;
    }
    out.edge_labels.assign(host.adj[x].size(), -1);
    for (std::size_t p = 0; p < tmpl.adj[0].size(); ++p) {
      int qv = tmpl.adj[0][p];
      int hv = from_tmpl[qv];
      int pos = host.adj_pos(x, hv);
      if (pos < 0) {
        out.why = "holonomy map does not respect root edges";
        return out;
      }
      out.edge_labels[pos] = inner.edge_labels[p];
    }
    out.ok = true;
    return out;
  };
  return r;
}

HolonomyIdentityReport holonomy_identity_test(const Diagram& d, int trials, uint64_t seed) {
  const Ball& b = *d.host;
  const auto& G = *b.group;
  Holonomy h = holonomy(d);
  if (!h.consistent) throw std::invalid_argument("holonomy_identity_test needs a consistent diagram");
  HolonomyIdentityReport rep;
  uint64_t s = seed ? seed : 1;
  auto rnd = [&]() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  // identity (1): h(w) = h(u) * h_u(w), including the degenerate u = w = root
  for (int t = 0; t < trials; ++t) {
    int u = t == 0 ? 0 : static_cast<int>(rnd() % b.size());
    int w = t == 0 ? 0 : static_cast<int>(rnd() % b.size());
    Holonomy hu = holonomy(d, u);
    if (!hu.consistent) continue;
    ++rep.cocycle_checked;
    if (!(G.multiply(h.values[u], hu.values[w]) == h.values[w])) ++rep.cocycle_failed;
  }
  // identity (2): shifting by a root-fixing automorphism rebases the holonomy
  for (int t = 0; t < trials; ++t) {
    auto sigma = random_root_fixing_automorphism(b, rnd());
    if (!sigma) break;
    Diagram ds = shift_diagram(d, *sigma);
    Holonomy hs = holonomy(ds);
    BallMap inv = sigma->inverse();
    ++rep.shift_checked;
    bool good = hs.consistent;
    for (int v = 0; v < b.size() && good; ++v) {
      if (!(hs.values[v] == h.values[inv.map[v]])) good = false;
    }
    if (!good) ++rep.shift_failed;
  }
  return rep;
}

}  // namespace ck
