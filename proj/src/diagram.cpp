#include "cayleykit/diagram.hpp"

#include <algorithm>
#include <deque>

namespace ck {

namespace {

// Products of up to i generators tracked as vertex ids of B_i(e); a walk of
// length <= i can never leave the table.
struct ProductTable {
  Ball ball_i;
  std::vector<std::vector<int>> step;  // step[state][gen] -> state, -1 impossible

  ProductTable(const MarkedGroup& G, GroupPtr Gp, int i) : ball_i(ball(Gp, i)) {
    int n = ball_i.size();
    step.assign(n, std::vector<int>(G.degree(), -1));
    std::unordered_map<Element, int, ElementHash> idx;
    for (int v = 0; v < n; ++v) idx.emplace(ball_i.elems[v], v);
    for (int v = 0; v < n; ++v) {
      for (int gi = 0; gi < G.degree(); ++gi) {
        Element w = G.multiply(ball_i.elems[v], G.gens[gi].elem);
        auto it = idx.find(w);
        if (it != idx.end()) step[v][gi] = it->second;
      }
    }
  }
};

struct CayleyData {
  GroupPtr G;
  int i = 0;
  std::shared_ptr<ProductTable> table;
};

// walk DFS from `start` over labelled region edges; false on any closed walk
// with nontrivial product or open walk with trivial product
bool walks_ok_from(const Ball& host, const Labelling& f, const Region& rg, const CayleyData& cd,
                   int start, bool* saw_unset) {
  struct Frame {
    int v;
    int state;
    int len;
  };
  std::vector<Frame> stack{{start, 0, 0}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.len > 0) {
      bool closed = fr.v == start;
      bool trivial = fr.state == 0;
      if (closed != trivial) return false;
    }
    if (fr.len == cd.i) continue;
    for (int w : host.adj[fr.v]) {
      if (!rg.contains(w)) continue;
      int a = f.edge(fr.v, w);
      if (a < 0) {
        if (saw_unset) *saw_unset = true;
        continue;
      }
      int ns = cd.table->step[fr.state][a];
      if (ns < 0) throw std::logic_error("walk product left the table ball");
      stack.push_back({w, ns, fr.len + 1});
    }
  }
  return true;
}

bool cayley_accept_region(const Ball& host, const Labelling& f, const Region& rg,
                          const CayleyData& cd, bool require_total) {
  int nlab = cd.G->degree();
  // (1) injectivity over region edges, plus totality when asked
  for (int u : rg.verts) {
    std::vector<char> seen(nlab, 0);
    for (int w : host.adj[u]) {
      if (!rg.contains(w)) continue;
      int a = f.edge(u, w);
      if (a < 0) {
        if (require_total) return false;
        continue;
      }
      if (seen[a]) return false;
      seen[a] = 1;
    }
  }
  // (2) full-degree vertices see every label
  for (int u : rg.verts) {
    int deg_in_region = 0;
    for (int w : host.adj[u]) {
      if (rg.contains(w)) ++deg_in_region;
    }
    if (deg_in_region != nlab || static_cast<int>(host.adj[u].size()) != nlab) continue;
    std::vector<char> seen(nlab, 0);
    int cnt = 0;
    for (int w : host.adj[u]) {
      int a = f.edge(u, w);
      if (a >= 0 && !seen[a]) {
        seen[a] = 1;
        ++cnt;
      }
    }
    if (cnt != nlab) return false;
  }
  // (3) walk closure
  for (int u : rg.verts) {
    if (!walks_ok_from(host, f, rg, cd, u, nullptr)) return false;
  }
  return true;
}

}  // namespace

Constraint cayley_constraint(GroupPtr G, int i) {
  if (i < 1) throw std::invalid_argument("cayley_constraint needs i >= 1");
  auto cd = std::make_shared<CayleyData>();
  cd->G = G;
  cd->i = i;
  cd->table = std::make_shared<ProductTable>(*G, G, i);
  Constraint c;
  c.name = "cayley-diagram:" + std::to_string(i);
  c.radius = i;
  c.arity = 2;
  for (const auto& gen : G->gens) c.alphabet.push_back(gen.label);
  c.data = cd;
  c.accept = [cd](const Ball& host, const Labelling& f, const Region& rg) {
    return cayley_accept_region(host, f, rg, *cd, true);
  };
  c.partial_violated = [cd](const Ball& host, const Labelling& f, const Region& rg) {
    return !cayley_accept_region(host, f, rg, *cd, false);
  };
  return c;
}

int Diagram::label(int u, int v) const {
  int p = host->adj_pos(u, v);
  if (p < 0) throw std::invalid_argument("diagram label: not an edge");
  return labels[u][p];
}

Labelling Diagram::as_labelling() const {
  Labelling f;
  f.arity = 2;
  for (const auto& gen : host->group->gens) f.alphabet.push_back(gen.label);
  for (int u = 0; u < host->size(); ++u) {
    for (std::size_t p = 0; p < host->adj[u].size(); ++p) {
      f.set_edge(u, host->adj[u][p], labels[u][p]);
    }
  }
  return f;
}

Diagram Diagram::standard(BallPtr host) {
  if (!host->group) throw std::invalid_argument("standard diagram needs a group ball");
  Diagram d;
  d.host = host;
  d.labels = host->elabel;
  for (const auto& row : d.labels) {
    for (int a : row) {
      if (a < 0) throw std::invalid_argument("host ball lacks generator edge labels");
    }
  }
  return d;
}

Diagram Diagram::from_label_table(BallPtr host, std::vector<std::vector<int>> labels) {
  if (!host->group) throw std::invalid_argument("diagram needs a group ball");
  Diagram d;
  d.host = host;
  d.labels = std::move(labels);
  const auto& G = *host->group;
  for (int u = 0; u < host->size(); ++u) {
    if (d.labels[u].size() != host->adj[u].size()) {
      throw std::invalid_argument("diagram label table shape mismatch");
    }
    for (std::size_t p = 0; p < host->adj[u].size(); ++p) {
      int v = host->adj[u][p];
      int a = d.labels[u][p];
      if (a < 0 || a >= G.degree()) throw std::invalid_argument("diagram label out of range");
      if (d.label(v, u) != G.inverse_pair[a]) {
        throw std::invalid_argument("diagram labels are not inverse-paired");
      }
    }
  }
  return d;
}

Diagram Diagram::from_labelling(BallPtr host, const Labelling& f) {
  std::vector<std::vector<int>> tab(host->size());
  for (int u = 0; u < host->size(); ++u) {
    tab[u].reserve(host->adj[u].size());
    for (int v : host->adj[u]) {
      int a = f.edge(u, v);
      if (a < 0) throw std::invalid_argument("diagram labelling must be total on host edges");
      tab[u].push_back(a);
    }
  }
  return from_label_table(host, std::move(tab));
}

DefectReport verify_diagram(const Diagram& d, int i) {
  auto c = cayley_constraint(d.host->group, i);
  return defect_set(*d.host, d.as_labelling(), c);
}

Element path_product(const Diagram& d, const std::vector<int>& path) {
  const auto& G = *d.host->group;
  Element acc = G.identity();
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    int p = d.host->adj_pos(path[k], path[k + 1]);
    if (p < 0) throw std::invalid_argument("path_product: consecutive vertices not adjacent");
    acc = G.multiply(acc, G.gens[d.labels[path[k]][p]].elem);
  }
  return acc;
}

Holonomy holonomy(const Diagram& d, int base) {
  const auto& G = *d.host->group;
  const Ball& b = *d.host;
  Holonomy h;
  h.base = base;
  h.values.assign(b.size(), G.identity());
  std::vector<char> vis(b.size(), 0);
  vis[base] = 1;
  std::deque<int> q{base};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (std::size_t p = 0; p < b.adj[u].size(); ++p) {
      int v = b.adj[u][p];
      if (!vis[v]) {
        vis[v] = 1;
        h.values[v] = G.multiply(h.values[u], G.gens[d.labels[u][p]].elem);
        q.push_back(v);
      }
    }
  }
  h.consistent = true;
  for (int u = 0; u < b.size() && h.consistent; ++u) {
    if (!vis[u]) {
      h.consistent = false;  // disconnected host
      break;
    }
    for (std::size_t p = 0; p < b.adj[u].size(); ++p) {
      int v = b.adj[u][p];
      if (!(G.multiply(h.values[u], G.gens[d.labels[u][p]].elem) == h.values[v])) {
        h.consistent = false;
        break;
      }
    }
  }
  return h;
}

std::vector<std::array<int, 3>> triangles_of(const Ball& b) {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < b.size(); ++u) {
    for (int v : b.adj[u]) {
      if (v <= u) continue;
      for (int w : b.adj[v]) {
        if (w <= v) continue;
        if (b.adjacent(u, w)) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

namespace {

struct EnumState {
  BallPtr host;
  const Ball& b;
  const MarkedGroup& G;
  CayleyData cd;
  std::vector<std::pair<int, int>> edges;  // undirected, u < v
  Labelling f;
  std::vector<Diagram>* out;
  const SearchLimits* lim;
  std::size_t nodes = 0;
  Region whole;

  bool inj_ok(int u) const {
    std::vector<char> seen(G.degree(), 0);
    for (int w : b.adj[u]) {
      int a = f.edge(u, w);
      if (a < 0) continue;
      if (seen[a]) return false;
      seen[a] = 1;
    }
    return true;
  }

  bool final_ok() {
    return cayley_accept_region(b, f, whole, cd, true);
  }

  void go(std::size_t k) {
    if (++nodes > lim->max_nodes) throw ResourceLimitError("enumerate_diagrams node budget exceeded");
    if (k == edges.size()) {
      if (final_ok()) {
        if (out->size() >= lim->max_results) {
          throw ResourceLimitError("enumerate_diagrams result cap exceeded");
        }
        std::vector<std::vector<int>> tab(b.size());
        for (int u = 0; u < b.size(); ++u) {
          for (int v : b.adj[u]) tab[u].push_back(f.edge(u, v));
        }
        out->push_back(Diagram::from_label_table(host, std::move(tab)));
      }
      return;
    }
    auto [u, v] = edges[k];
    for (int a = 0; a < G.degree(); ++a) {
      f.set_edge(u, v, a);
      f.set_edge(v, u, G.inverse_pair[a]);
      if (inj_ok(u) && inj_ok(v) && walks_ok_from(b, f, whole, cd, u, nullptr) &&
          walks_ok_from(b, f, whole, cd, v, nullptr)) {
        go(k + 1);
      }
    }
    f.set_edge(u, v, -1);
    f.set_edge(v, u, -1);
  }
};

}  // namespace

std::vector<Diagram> enumerate_diagrams(BallPtr host, int i, const SearchLimits& lim) {
  if (!host->group) throw std::invalid_argument("enumerate_diagrams needs a group ball");
  if (i < 1) throw std::invalid_argument("enumerate_diagrams needs i >= 1");
  const auto& G = *host->group;
  CayleyData cd;
  cd.G = host->group;
  cd.i = i;
  cd.table = std::make_shared<ProductTable>(G, host->group, i);
  std::vector<Diagram> out;
  Region whole;
  whole.center = 0;
  whole.radius = host->radius;
  whole.dist = host->depth;
  for (int v = 0; v < host->size(); ++v) whole.verts.push_back(v);
  EnumState st{host, *host, G, cd, {}, {}, &out, &lim, 0, whole};
  for (int u = 0; u < host->size(); ++u) {
    for (int v : host->adj[u]) {
      if (u < v) st.edges.emplace_back(u, v);
    }
  }
  st.f.arity = 2;
  for (const auto& gen : G.gens) st.f.alphabet.push_back(gen.label);
  // i >= 2 forces inverse pairing through the 2-walk condition; for i == 1 we
  // keep paired domains so the output remains a Diagram list (monotone
  // supersets of any larger i hold either way).
  st.go(0);
  return out;
}

Diagram shift_diagram(const Diagram& d, const BallMap& f) {
  const Ball& b = *d.host;
  if (static_cast<int>(f.map.size()) != b.size()) {
    throw std::invalid_argument("shift_diagram: map size mismatch");
  }
  // verify f is an automorphism of the host
  BallMap inv = f.inverse();
  for (int u = 0; u < b.size(); ++u) {
    for (int v : b.adj[u]) {
      if (!b.adjacent(f.map[u], f.map[v])) {
        throw std::invalid_argument("shift_diagram: map is not an automorphism");
      }
    }
  }
  std::vector<std::vector<int>> tab(b.size());
  for (int u = 0; u < b.size(); ++u) {
    for (int v : b.adj[u]) {
      tab[u].push_back(d.label(inv.map[u], inv.map[v]));
    }
  }
  return Diagram::from_label_table(d.host, std::move(tab));
}

EpsilonDefects epsilon_action_defects(const Diagram& d) {
  const Ball& b = *d.host;
  const auto& G = *b.group;
  int nlab = G.degree();
  // a(gamma, x): unique y with labels(x,y) = gamma
  auto step = [&](int gi, int x) -> int {
    int found = -1;
    for (std::size_t p = 0; p < b.adj[x].size(); ++p) {
      if (d.labels[x][p] == gi) {
        if (found >= 0) return -2;  // non-unique
        found = b.adj[x][p];
      }
    }
    return found;
  };
  std::vector<int> interior;
  for (int v = 0; v < b.size(); ++v) {
    if (b.depth[v] + 2 <= b.radius) interior.push_back(v);
  }
  EpsilonDefects out;
  out.checked = static_cast<int>(interior.size());
  if (interior.empty()) return out;
  std::vector<char> is_interior(b.size(), 0);
  for (int v : interior) is_interior[v] = 1;

  // (1) preimage counts and (2) singleton distortion
  double worst_pre = 0, worst_dist = 0;
  for (int gi = 0; gi < nlab; ++gi) {
    std::vector<int> incount(b.size(), 0);
    for (int x = 0; x < b.size(); ++x) {
      int y = step(gi, x);
      if (y >= 0) ++incount[y];
    }
    int bad = 0;
    int worst_single = 0;
    for (int v : interior) {
      if (incount[v] != 1) ++bad;
      worst_single = std::max<int>(worst_single, std::abs(1 - incount[v]));
    }
    worst_pre = std::max(worst_pre, static_cast<double>(bad) / out.checked);
    worst_dist = std::max(worst_dist, static_cast<double>(worst_single) / out.checked);
  }
  out.preimage = worst_pre;
  out.distortion = worst_dist;

  // (3) composition: a(delta, x) vs a(gamma, a(gamma', x)) with delta the
  // canonical product gamma' * gamma of the right-multiplication steps.
  // Precompute, for every ordered generator pair, whether the product is the
  // identity, a generator, or a distance-2 element with its factorizations.
  struct PairInfo {
    bool is_identity = false;
    int gen = -1;
    std::vector<std::pair<int, int>> factorizations;  // (first step, second step)
  };
  std::vector<std::vector<PairInfo>> pinfo(nlab, std::vector<PairInfo>(nlab));
  std::unordered_map<Element, std::vector<std::pair<int, int>>, ElementHash> by_product;
  for (int h1 = 0; h1 < nlab; ++h1) {
    for (int h2 = 0; h2 < nlab; ++h2) {
      by_product[G.multiply(G.gens[h1].elem, G.gens[h2].elem)].emplace_back(h1, h2);
    }
  }
  for (int g1 = 0; g1 < nlab; ++g1) {
    for (int g2 = 0; g2 < nlab; ++g2) {
      Element delta = G.multiply(G.gens[g1].elem, G.gens[g2].elem);
      auto& pi = pinfo[g1][g2];
      if (delta == G.identity()) {
        pi.is_identity = true;
      } else if (int di = G.element_index(delta); di >= 0) {
        pi.gen = di;
      } else {
        pi.factorizations = by_product.at(delta);
      }
    }
  }
  int bad = 0;
  for (int x : interior) {
    bool defect = false;
    for (int g1 = 0; g1 < nlab && !defect; ++g1) {    // gamma'
      int mid = step(g1, x);
      for (int g2 = 0; g2 < nlab && !defect; ++g2) {  // gamma
        int rhs = mid < 0 ? -1 : step(g2, mid);
        if (rhs < 0) {
          defect = true;
          break;
        }
        const auto& pi = pinfo[g1][g2];
        if (pi.is_identity) {
          if (rhs != x) defect = true;
        } else if (pi.gen >= 0) {
          if (step(pi.gen, x) != rhs) defect = true;
        } else {
          for (auto [h1, h2] : pi.factorizations) {
            int m2 = step(h1, x);
            int lhs = m2 < 0 ? -1 : step(h2, m2);
            if (lhs != rhs) {
              defect = true;
              break;
            }
          }
        }
      }
    }
    if (defect) ++bad;
  }
  out.composition = static_cast<double>(bad) / out.checked;
  return out;
}

}  // namespace ck
