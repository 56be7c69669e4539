#include "cayleykit/rules.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ck {

namespace {

inline uint64_t splitmix(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double to_unit(uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

SeedMatrix draw_seeds(int n_vertices, int layers, uint64_t seed, uint64_t sample) {
  SeedMatrix m;
  m.layers = layers;
  m.vals.resize(static_cast<std::size_t>(n_vertices) * layers);
  uint64_t s = seed ^ (0x61c8864680b583ebULL * (sample + 1));
  splitmix(s);
  for (auto& v : m.vals) v = to_unit(splitmix(s));
  return m;
}

// ---------------------------------------------------------------------------
// triangle orientation on c2*c3-shaped hosts
// ---------------------------------------------------------------------------

namespace {

struct TrianglePrep {
  // per vertex, parallel to adj: third triangle vertex or -1
  std::vector<std::vector<int>> tri;
};

struct TriangleLabels {
  int a = -1;   // involution label
  int b = -1;   // forward order-3 label
  int bi = -1;  // its inverse
};

TriangleLabels pick_triangle_labels(const MarkedGroup& G) {
  TriangleLabels t;
  if (G.degree() != 3) throw std::invalid_argument("triangle rule needs a degree-3 marking");
  for (int i = 0; i < 3; ++i) {
    if (G.inverse_pair[i] == i) {
      t.a = i;
    } else if (t.b < 0) {
      t.b = i;
      t.bi = G.inverse_pair[i];
    }
  }
  if (t.a < 0 || t.b < 0 || t.bi == t.b) {
    throw std::invalid_argument("triangle rule needs one involution and one order-3 pair");
  }
  return t;
}

}  // namespace

LocalRule rule_triangle_orientation(GroupPtr c2c3) {
  TriangleLabels tl = pick_triangle_labels(*c2c3);
  LocalRule r;
  r.name = "triangle-orientation";
  r.radius = 1;
  r.out_arity = 2;
  for (const auto& g : c2c3->gens) r.alphabet.push_back(g.label);
  r.prepare = [](const Ball& host) -> std::shared_ptr<const void> {
    auto prep = std::make_shared<TrianglePrep>();
    prep->tri.resize(host.size());
    for (int u = 0; u < host.size(); ++u) {
      prep->tri[u].assign(host.adj[u].size(), -1);
      for (std::size_t p = 0; p < host.adj[u].size(); ++p) {
        int v = host.adj[u][p];
        for (int w : host.adj[u]) {
          if (w != v && host.adjacent(v, w)) {
            prep->tri[u][p] = w;
            break;
          }
        }
      }
    }
    return prep;
  };
  r.eval = [tl](const Ball& host, int x, const SeedMatrix& s, const void* pv) {
    const auto& prep = *static_cast<const TrianglePrep*>(pv);
    RuleOutput out;
    out.edge_labels.assign(host.adj[x].size(), -1);
    for (std::size_t p = 0; p < host.adj[x].size(); ++p) {
      int y = host.adj[x][p];
      int z = prep.tri[x][p];
      if (z < 0) {
        out.edge_labels[p] = tl.a;
        continue;
      }
      double sx = s.at(x), sy = s.at(y), sz = s.at(z);
      if (sx == sy || sy == sz || sx == sz) {
        out.why = "seed tie in a triangle";
        return out;
      }
      // orient from the minimum-seed vertex toward its smaller-seed neighbour
      int ids[3] = {x, y, z};
      double sd[3] = {sx, sy, sz};
      int mi = 0;
      for (int k = 1; k < 3; ++k) {
        if (sd[k] < sd[mi]) mi = k;
      }
      int o1 = (mi + 1) % 3, o2 = (mi + 2) % 3;
      int next = sd[o1] < sd[o2] ? o1 : o2;   // min -> next -> last -> min
      int last = sd[o1] < sd[o2] ? o2 : o1;
      // does the cycle traverse x -> y forward?
      bool forward = (ids[mi] == x && ids[next] == y) || (ids[next] == x && ids[last] == y) ||
                     (ids[last] == x && ids[mi] == y);
      out.edge_labels[p] = forward ? tl.b : tl.bi;
    }
    out.ok = true;
    return out;
  };
  return r;
}

// ---------------------------------------------------------------------------
// heisenberg fiber-swap diagram
// ---------------------------------------------------------------------------

namespace {

struct HeisCenter {
  int twin = -1;                       // center's fiber partner (window id)
  std::vector<int> nbr_twin;           // per adj position, host id of twin
  std::vector<std::array<int, 2>> lab; // per adj position, label for bit 0/1
  bool ok = false;
};

struct HeisPrep {
  std::vector<HeisCenter> centers;  // indexed by host vertex (empty if boundary)
};

struct HeisRef {
  // canonical WL color of each root neighbour pair -> the two labels
  std::map<int, std::array<int, 2>> color_labels;
};

// root twin: the unique non-adjacent vertex with the same neighbourhood
int find_twin_of_root(const Ball& b, const std::vector<int>& to_host, int host_root) {
  std::vector<int> root_nb = b.adj[0];
  int found = -1;
  for (int v = 1; v < b.size(); ++v) {
    if (b.adjacent(0, v)) continue;
    if (b.adj[v] == root_nb) {
      if (found >= 0) return -1;
      found = v;
    }
  }
  (void)to_host;
  (void)host_root;
  return found;
}

HeisRef build_heis_reference(GroupPtr G) {
  Ball ref = ball(G, 2);
  auto col = wl_colors(ref);
  HeisRef out;
  std::map<int, std::vector<int>> cls;
  for (std::size_t p = 0; p < ref.adj[0].size(); ++p) cls[col[ref.adj[0][p]]].push_back(static_cast<int>(p));
  for (auto& [c, ps] : cls) {
    if (ps.size() != 2) throw std::logic_error("heisenberg reference: neighbour colors do not pair");
    std::array<int, 2> labs{-1, -1};
    for (int p : ps) {
      int gi = ref.elabel[0][p];
      const auto& bit = std::get<int64_t>(std::get<TupleElt>(G->gens[gi].elem.rep).parts[0].rep);
      labs[bit] = gi;
    }
    if (labs[0] < 0 || labs[1] < 0) throw std::logic_error("heisenberg reference: pair bits collide");
    out.color_labels[c] = labs;
  }
  if (out.color_labels.size() != ref.adj[0].size() / 2) {
    throw std::logic_error("heisenberg reference: WL colors do not separate the fibers");
  }
  return out;
}

}  // namespace

LocalRule rule_heisenberg_diagram(GroupPtr G) {
  auto ref = std::make_shared<HeisRef>(build_heis_reference(G));
  LocalRule r;
  r.name = "heisenberg-diagram";
  r.radius = 2;
  r.out_arity = 2;
  for (const auto& g : G->gens) r.alphabet.push_back(g.label);
  r.prepare = [ref](const Ball& host) -> std::shared_ptr<const void> {
    auto prep = std::make_shared<HeisPrep>();
    prep->centers.resize(host.size());
    for (int x = 0; x < host.size(); ++x) {
      if (host.depth[x] + 2 > host.radius) continue;
      std::vector<int> to_host;
      Ball local = induced_ball(host, x, 2, &to_host);
      auto col = wl_colors(local);
      HeisCenter c;
      int tw = find_twin_of_root(local, to_host, x);
      if (tw < 0) continue;
      c.twin = to_host[tw];
      std::map<int, std::vector<int>> cls;
      for (std::size_t p = 0; p < local.adj[0].size(); ++p) {
        cls[col[local.adj[0][p]]].push_back(static_cast<int>(p));
      }
      bool good = true;
      c.nbr_twin.assign(local.adj[0].size(), -1);
      c.lab.assign(local.adj[0].size(), {-1, -1});
      for (auto& [color, ps] : cls) {
        auto it = ref->color_labels.find(color);
        if (ps.size() != 2 || it == ref->color_labels.end()) {
          good = false;
          break;
        }
        int n0 = local.adj[0][ps[0]], n1 = local.adj[0][ps[1]];
        if (local.adjacent(n0, n1)) {
          good = false;
          break;
        }
        c.nbr_twin[ps[0]] = to_host[n1];
        c.nbr_twin[ps[1]] = to_host[n0];
        c.lab[ps[0]] = it->second;
        c.lab[ps[1]] = it->second;
      }
      if (!good) continue;
      c.ok = true;
      // local adj[0] order matches host adj[x] order (both sorted, same set)
      prep->centers[x] = std::move(c);
    }
    return prep;
  };
  r.eval = [](const Ball& host, int x, const SeedMatrix& s, const void* pv) {
    const auto& prep = *static_cast<const HeisPrep*>(pv);
    RuleOutput out;
    if (x >= static_cast<int>(prep.centers.size()) || !prep.centers[x].ok) {
      out.why = "fiber identification ambiguous (host too small)";
      return out;
    }
    const auto& c = prep.centers[x];
    auto bitsum = [&](int v, int tw) {
      int y = (s.at(v) >= 0.5) + (s.at(tw) >= 0.5);   // thresholded pair sum
      int rho = s.at(v) > s.at(tw) ? 1 : 0;           // seed-representative gauge
      return (y + rho) & 1;
    };
    if (s.at(x) == s.at(c.twin)) {
      out.why = "seed tie in a fiber";
      return out;
    }
    int bx = bitsum(x, c.twin);
    out.edge_labels.assign(host.adj[x].size(), -1);
    for (std::size_t p = 0; p < host.adj[x].size(); ++p) {
      int n = host.adj[x][p];
      int tw = c.nbr_twin[p];
      if (s.at(n) == s.at(tw)) {
        out.why = "seed tie in a fiber";
        return out;
      }
      int bit = (bx + bitsum(n, tw)) & 1;
      out.edge_labels[p] = c.lab[p][bit];
    }
    out.ok = true;
    return out;
  };
  return r;
}

// ---------------------------------------------------------------------------
// lamplighter order diagram
// ---------------------------------------------------------------------------

namespace {

struct LampQuad {
  // K_{2,2} between two lower and two upper vertices (host ids)
  std::array<int, 2> lower{-1, -1};
  std::array<int, 2> upper{-1, -1};
  bool ok = false;
};

struct LampCenterPrep {
  LampQuad ascending;   // center is a lower vertex
  LampQuad descending;  // center is an upper vertex
  std::vector<int> up_pos;    // adj positions of the two up-neighbours
  std::vector<int> down_pos;
  bool ok = false;
};

struct LampPrep {
  std::vector<LampCenterPrep> centers;
};

struct LampLabels {
  int up_a = -1, up_b = -1;      // the two ascending labels ((1,{}) and (1,{0}))
  int down_a = -1, down_b = -1;  // their inverses
};

LampLabels pick_lamp_labels(const MarkedGroup& G) {
  LampLabels out;
  if (G.degree() != 4) throw std::invalid_argument("lamplighter rule needs the 4 DL generators");
  std::vector<int> ups;
  for (int i = 0; i < 4; ++i) {
    const auto& l = std::get<LampElt>(G.gens[i].elem.rep);
    if (l.shift == 1) ups.push_back(i);
  }
  if (ups.size() != 2) throw std::invalid_argument("lamplighter rule: expected two ascending generators");
  out.up_a = ups[0];
  out.up_b = ups[1];
  out.down_a = G.inverse_pair[ups[0]];
  out.down_b = G.inverse_pair[ups[1]];
  return out;
}

// quadruple above a lower vertex z: its two up-neighbours plus their common
// other lower neighbour
LampQuad quad_above(const Ball& host, int z, const std::vector<int>& ups) {
  LampQuad q;
  if (ups.size() != 2) return q;
  int u1 = ups[0], u2 = ups[1];
  std::vector<int> common;
  for (int w : host.adj[u1]) {
    if (w != z && (*host.height)[w] == (*host.height)[z] && host.adjacent(u2, w)) common.push_back(w);
  }
  if (common.size() != 1) return q;
  q.lower = {z, common[0]};
  q.upper = {u1, u2};
  q.ok = true;
  return q;
}

}  // namespace

LocalRule rule_lamplighter_order_diagram(GroupPtr G) {
  LampLabels ll = pick_lamp_labels(*G);
  LocalRule r;
  r.name = "lamplighter-order-diagram";
  r.radius = 2;
  r.out_arity = 2;
  r.order_aware = true;
  for (const auto& g : G->gens) r.alphabet.push_back(g.label);
  r.prepare = [](const Ball& host) -> std::shared_ptr<const void> {
    auto prep = std::make_shared<LampPrep>();
    if (!host.height) return prep;
    prep->centers.resize(host.size());
    for (int z = 0; z < host.size(); ++z) {
      if (host.depth[z] + 2 > host.radius) continue;
      LampCenterPrep c;
      std::vector<int> ups, downs;
      for (std::size_t p = 0; p < host.adj[z].size(); ++p) {
        int w = host.adj[z][p];
        if ((*host.height)[w] == (*host.height)[z] + 1) {
          ups.push_back(w);
          c.up_pos.push_back(static_cast<int>(p));
        } else {
          downs.push_back(w);
          c.down_pos.push_back(static_cast<int>(p));
        }
      }
      if (ups.size() != 2 || downs.size() != 2) continue;
      c.ascending = quad_above(host, z, ups);
      // descending quadruple: z is an upper vertex of the quadruple above
      // either down-neighbour
      {
        // the other upper vertex: common upper neighbour of both downs
        std::vector<int> common;
        for (int w : host.adj[downs[0]]) {
          if (w != z && (*host.height)[w] == (*host.height)[z] && host.adjacent(downs[1], w)) {
            common.push_back(w);
          }
        }
        if (common.size() == 1) {
          c.descending.lower = {downs[0], downs[1]};
          c.descending.upper = {z, common[0]};
          c.descending.ok = true;
        }
      }
      c.ok = c.ascending.ok && c.descending.ok;
      prep->centers[z] = std::move(c);
    }
    return prep;
  };
  r.eval = [ll](const Ball& host, int z, const SeedMatrix& s, const void* pv) {
    const auto& prep = *static_cast<const LampPrep*>(pv);
    RuleOutput out;
    if (prep.centers.empty() || !prep.centers[z].ok) {
      out.why = "order structure unavailable at this vertex";
      return out;
    }
    const auto& c = prep.centers[z];
    // the ascending edge (lo, up) gets label up_a iff it lies in the matching
    // containing (argmax-seed lower, argmax-seed upper)
    auto asc_label = [&](const LampQuad& q, int lo, int up) -> int {
      double l0 = s.at(q.lower[0]), l1 = s.at(q.lower[1]);
      double u0 = s.at(q.upper[0]), u1 = s.at(q.upper[1]);
      if (l0 == l1 || u0 == u1) return -1;
      int lstar = l0 > l1 ? q.lower[0] : q.lower[1];
      int ustar = u0 > u1 ? q.upper[0] : q.upper[1];
      bool in_star_matching = (lo == lstar) == (up == ustar);
      return in_star_matching ? ll.up_a : ll.up_b;
    };
    out.edge_labels.assign(host.adj[z].size(), -1);
    for (int p : c.up_pos) {
      int lab = asc_label(c.ascending, z, host.adj[z][p]);
      if (lab < 0) {
        out.why = "seed tie in a quadruple";
        return out;
      }
      out.edge_labels[p] = lab;
    }
    for (int p : c.down_pos) {
      int lab = asc_label(c.descending, host.adj[z][p], z);
      if (lab < 0) {
        out.why = "seed tie in a quadruple";
        return out;
      }
      out.edge_labels[p] = lab == ll.up_a ? ll.down_a : ll.down_b;
    }
    out.ok = true;
    return out;
  };
  return r;
}

// ---------------------------------------------------------------------------
// colorings
// ---------------------------------------------------------------------------

namespace {

struct GreedyCache {
  std::mutex mu;
  const void* host = nullptr;
  const void* seeds = nullptr;
  std::vector<int> colors;
};

std::vector<int> greedy_colors(const Ball& host, const SeedMatrix& s, int k) {
  std::vector<int> order(host.size());
  for (int i = 0; i < host.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return s.at(a) < s.at(b); });
  std::vector<int> col(host.size(), -1);
  for (int v : order) {
    std::vector<char> used(k + 1, 0);
    for (int w : host.adj[v]) {
      if (col[w] >= 0 && col[w] <= k) used[col[w]] = 1;
    }
    int c = 0;
    while (c < k && used[c]) ++c;
    col[v] = c;  // k means overflow (never on degree < k hosts)
  }
  return col;
}

}  // namespace

LocalRule rule_greedy_color(int k) {
  LocalRule r;
  r.name = "greedy-color:" + std::to_string(k);
  r.radius = kWholeHostRadius;
  r.out_arity = 1;
  for (int i = 0; i < k; ++i) r.alphabet.push_back(std::to_string(i));
  auto cache = std::make_shared<GreedyCache>();
  r.eval = [k, cache](const Ball& host, int x, const SeedMatrix& s, const void*) {
    RuleOutput out;
    std::lock_guard<std::mutex> lk(cache->mu);
    if (cache->host != &host || cache->seeds != &s) {
      cache->colors = greedy_colors(host, s, k);
      cache->host = &host;
      cache->seeds = &s;
    }
    if (cache->colors[x] >= k) {
      out.why = "greedy needed more colors";
      return out;
    }
    out.root_label = cache->colors[x];
    out.ok = true;
    return out;
  };
  return r;
}

LocalRule rule_constant_color(int k, int color) {
  LocalRule r;
  r.name = "constant-color:" + std::to_string(color);
  r.radius = 1;
  r.out_arity = 1;
  for (int i = 0; i < k; ++i) r.alphabet.push_back(std::to_string(i));
  r.eval = [color](const Ball&, int, const SeedMatrix&, const void*) {
    RuleOutput out;
    out.root_label = color;
    out.ok = true;
    return out;
  };
  return r;
}

LocalRule rule_edge_echo(GroupPtr G) {
  LocalRule r;
  r.name = "edge-echo";
  r.radius = 1;
  r.out_arity = 2;
  r.diagram_aware = true;
  for (const auto& g : G->gens) r.alphabet.push_back(g.label);
  r.eval = [](const Ball& host, int x, const SeedMatrix&, const void*) {
    RuleOutput out;
    out.edge_labels = host.elabel[x];
    for (int a : out.edge_labels) {
      if (a < 0) {
        out.why = "host has no generator edge labels";
        return out;
      }
    }
    out.ok = true;
    return out;
  };
  return r;
}

LocalRule make_rule(const std::string& name, GroupPtr G) {
  if (name == "triangle-orientation") return rule_triangle_orientation(G);
  if (name == "heisenberg-diagram") return rule_heisenberg_diagram(G);
  if (name == "lamplighter-order-diagram") return rule_lamplighter_order_diagram(G);
  if (name == "edge-echo") return rule_edge_echo(G);
  if (name.rfind("greedy-color:", 0) == 0) return rule_greedy_color(std::stoi(name.substr(13)));
  if (name.rfind("constant-color:", 0) == 0) {
    auto rest = name.substr(15);
    auto comma = rest.find(',');
    if (comma == std::string::npos) return rule_constant_color(std::stoi(rest) + 1, std::stoi(rest));
    return rule_constant_color(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown rule: " + name);
}

}  // namespace ck
