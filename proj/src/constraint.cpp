#include "cayleykit/constraint.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "cayleykit/automorphism.hpp"
#include "cayleykit/diagram.hpp"

namespace ck {

Region make_region(const Ball& host, int center, int radius) {
  Region r;
  r.center = center;
  r.radius = radius;
  r.dist.assign(host.size(), -1);
  r.dist[center] = 0;
  r.verts.push_back(center);
  std::deque<int> q{center};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (r.dist[u] == radius) continue;
    for (int v : host.adj[u]) {
      if (r.dist[v] == -1) {
        r.dist[v] = r.dist[u] + 1;
        r.verts.push_back(v);
        q.push_back(v);
      }
    }
  }
  std::sort(r.verts.begin(), r.verts.end(), [&](int a, int b) {
    return std::pair(r.dist[a], a) < std::pair(r.dist[b], b);
  });
  return r;
}

Constraint proper_coloring(int k) {
  if (k < 1) throw std::invalid_argument("proper-coloring needs k >= 1");
  Constraint c;
  c.name = "proper-coloring:" + std::to_string(k);
  c.radius = 1;
  c.arity = 1;
  for (int i = 0; i < k; ++i) c.alphabet.push_back(std::to_string(i));
  c.accept = [](const Ball& host, const Labelling& f, const Region& rg) {
    int fx = f.vertex(rg.center);
    if (fx < 0) return false;
    for (int y : host.adj[rg.center]) {
      if (!rg.contains(y)) continue;
      int fy = f.vertex(y);
      if (fy < 0 || fy == fx) return false;
    }
    return true;
  };
  c.partial_violated = [](const Ball& host, const Labelling& f, const Region& rg) {
    int fx = f.vertex(rg.center);
    if (fx < 0) return false;
    for (int y : host.adj[rg.center]) {
      if (rg.contains(y) && f.vertex(y) == fx) return true;
    }
    return false;
  };
  return c;
}

Constraint orientation_constraint() {
  Constraint c;
  c.name = "orientation";
  c.radius = 1;
  c.arity = 2;
  c.alphabet = {"0", "1"};
  c.accept = [](const Ball& host, const Labelling& f, const Region& rg) {
    for (int y : host.adj[rg.center]) {
      if (!rg.contains(y)) continue;
      int a = f.edge(rg.center, y), b = f.edge(y, rg.center);
      if (a < 0 || b < 0 || a + b != 1) return false;
    }
    return true;
  };
  c.partial_violated = [](const Ball& host, const Labelling& f, const Region& rg) {
    for (int y : host.adj[rg.center]) {
      if (!rg.contains(y)) continue;
      int a = f.edge(rg.center, y), b = f.edge(y, rg.center);
      if (a >= 0 && b >= 0 && a + b != 1) return true;
    }
    return false;
  };
  return c;
}

Constraint perfect_matching_constraint() {
  Constraint c;
  c.name = "perfect-matching";
  c.radius = 1;
  c.arity = 2;
  c.alphabet = {"0", "1"};
  c.accept = [](const Ball& host, const Labelling& f, const Region& rg) {
    int ones = 0;
    for (int y : host.adj[rg.center]) {
      if (!rg.contains(y)) continue;
      int a = f.edge(rg.center, y), b = f.edge(y, rg.center);
      if (a < 0 || b < 0 || a != b) return false;
      ones += a;
    }
    return ones == 1;
  };
  c.partial_violated = [](const Ball& host, const Labelling& f, const Region& rg) {
    int ones = 0, unset = 0;
    for (int y : host.adj[rg.center]) {
      if (!rg.contains(y)) continue;
      int a = f.edge(rg.center, y), b = f.edge(y, rg.center);
      if (a >= 0 && b >= 0 && a != b) return true;
      if (a < 0) ++unset; else ones += a;
    }
    return ones > 1 || (unset == 0 && ones != 1);
  };
  return c;
}

bool meets_at(const Ball& host, const Labelling& f, int x, const Constraint& c) {
  if (x < 0 || x >= host.size()) throw std::invalid_argument("meets_at: vertex out of range");
  if (host.depth[x] + c.radius > host.radius) {
    throw std::invalid_argument("meets_at: vertex too close to the ball boundary");
  }
  Region rg = make_region(host, x, c.radius);
  return c.accept(host, f, rg);
}

DefectReport defect_set(const Ball& host, const Labelling& f, const Constraint& c) {
  DefectReport rep;
  for (int x = 0; x < host.size(); ++x) {
    if (host.depth[x] + c.radius > host.radius) continue;
    ++rep.checked;
    Region rg = make_region(host, x, c.radius);
    if (!c.accept(host, f, rg)) rep.defective.push_back(x);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// extensional constraints and the parser
// ---------------------------------------------------------------------------

namespace {

struct ExtensionalData {
  Ball pattern;
  std::vector<std::pair<int, int>> dedges;  // directed pattern edges, sorted
  // each allowed labelling flattened: vertex values then directed-edge values
  std::set<std::vector<int>> allow;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  std::ostringstream os;
  os << "constraint parse error at line " << line;
  if (col > 0) os << ", column " << col;
  os << ": " << msg;
  throw ParseError(os.str());
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::map<std::string, std::string> kv_args(const std::string& rest) {
  std::map<std::string, std::string> out;
  std::stringstream ss(rest);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      out[tok] = "";
    } else {
      out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  return out;
}

Constraint extensional_constraint(int radius, int arity, std::vector<std::string> alphabet,
                                  Ball pattern,
                                  std::vector<std::set<std::vector<int>>::value_type> raw_allow) {
  auto data = std::make_shared<ExtensionalData>();
  data->pattern = std::move(pattern);
  for (int u = 0; u < data->pattern.size(); ++u) {
    for (int v : data->pattern.adj[u]) data->dedges.emplace_back(u, v);
  }
  std::sort(data->dedges.begin(), data->dedges.end());
  // close the allow-set under root-fixing automorphisms of the pattern
  auto autos = ball_automorphisms(data->pattern, true);
  for (const auto& flat : raw_allow) {
    for (const auto& sigma : autos) {
      std::vector<int> moved(flat.size());
      if (arity == 1) {
        // (sigma . L)(v) = L(sigma^-1(v))
        auto inv = sigma.inverse();
        for (std::size_t v = 0; v < flat.size(); ++v) moved[v] = flat[inv.map[v]];
      } else {
        auto inv = sigma.inverse();
        for (std::size_t i = 0; i < data->dedges.size(); ++i) {
          auto [u, v] = data->dedges[i];
          auto it = std::lower_bound(data->dedges.begin(), data->dedges.end(),
                                     std::pair(inv.map[u], inv.map[v]));
          moved[i] = flat[it - data->dedges.begin()];
        }
      }
      data->allow.insert(std::move(moved));
    }
  }
  Constraint c;
  c.name = "extensional";
  c.radius = radius;
  c.arity = arity;
  c.alphabet = std::move(alphabet);
  int ar = arity;
  c.accept = [data, ar](const Ball& host, const Labelling& f, const Region& rg) {
    std::vector<int> to_host;
    Ball local = induced_ball(host, rg.center, rg.radius, &to_host);
    auto iso = ball_isomorphic(data->pattern, local, true);
    if (!iso) return false;
    std::vector<int> flat;
    if (ar == 1) {
      for (int p = 0; p < data->pattern.size(); ++p) {
        int val = f.vertex(to_host[iso->map[p]]);
        if (val < 0) return false;
        flat.push_back(val);
      }
    } else {
      for (auto [u, v] : data->dedges) {
        int val = f.edge(to_host[iso->map[u]], to_host[iso->map[v]]);
        if (val < 0) return false;
        flat.push_back(val);
      }
    }
    return data->allow.count(flat) > 0;
  };
  c.partial_violated = [](const Ball&, const Labelling&, const Region&) { return false; };
  return c;
}

}  // namespace

Constraint parse_constraint(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::stringstream ss(text);
    std::string l;
    while (std::getline(ss, l)) lines.push_back(l);
  }
  int radius = -1, arity = -1;
  std::vector<std::string> alphabet;
  std::size_t i = 0;
  auto next_content = [&]() -> int {
    while (i < lines.size()) {
      auto t = trim(lines[i]);
      if (!t.empty() && t[0] != '#') return static_cast<int>(i);
      ++i;
    }
    return -1;
  };
  int li = next_content();
  if (li < 0) fail(1, 0, "empty constraint source");
  {
    auto t = trim(lines[li]);
    if (t.rfind("constraint", 0) != 0) fail(li + 1, 1, "expected 'constraint' header");
    auto args = kv_args(t.substr(10));
    if (!args.count("radius")) fail(li + 1, 1, "header needs radius=<n>");
    if (!args.count("arity")) fail(li + 1, 1, "header needs arity=<1|2>");
    if (!args.count("alphabet")) fail(li + 1, 1, "header needs alphabet=<comma list>");
    radius = std::stoi(args["radius"]);
    arity = std::stoi(args["arity"]);
    if (radius < 1) fail(li + 1, 1, "radius must be >= 1");
    if (arity != 1 && arity != 2) fail(li + 1, 1, "arity must be 1 or 2");
    std::stringstream as(args["alphabet"]);
    std::string item;
    while (std::getline(as, item, ',')) {
      if (item.empty()) fail(li + 1, 1, "empty alphabet letter");
      alphabet.push_back(item);
    }
    std::set<std::string> uni(alphabet.begin(), alphabet.end());
    if (uni.size() != alphabet.size()) fail(li + 1, 1, "duplicate alphabet letters");
    ++i;
  }
  li = next_content();
  if (li < 0) fail(static_cast<int>(lines.size()), 0, "missing constraint body");
  auto body = trim(lines[li]);

  if (body.rfind("builtin", 0) == 0) {
    auto rest = trim(body.substr(7));
    std::string name = rest.substr(0, rest.find(' '));
    auto args = kv_args(rest.size() > name.size() ? rest.substr(name.size()) : "");
    Constraint c;
    if (name == "proper-coloring") {
      if (!args.count("k")) fail(li + 1, 1, "proper-coloring needs k=<int>");
      int k = std::stoi(args["k"]);
      c = proper_coloring(k);
      if (static_cast<int>(alphabet.size()) != k) fail(li + 1, 1, "alphabet mismatch: expected k letters");
      c.alphabet = alphabet;
    } else if (name == "orientation") {
      c = orientation_constraint();
      if (alphabet.size() != 2) fail(li + 1, 1, "alphabet mismatch: orientation needs 2 letters");
      if (arity != 2) fail(li + 1, 1, "orientation is arity 2");
      c.alphabet = alphabet;
    } else if (name == "perfect-matching") {
      c = perfect_matching_constraint();
      if (alphabet.size() != 2) fail(li + 1, 1, "alphabet mismatch: perfect-matching needs 2 letters");
      if (arity != 2) fail(li + 1, 1, "perfect-matching is arity 2");
      c.alphabet = alphabet;
    } else if (name == "cayley-diagram") {
      if (!args.count("i")) fail(li + 1, 1, "cayley-diagram needs i=<int>");
      if (!args.count("group")) fail(li + 1, 1, "cayley-diagram needs group=<descriptor>");
      auto G = make_group_ptr(args["group"]);
      c = cayley_constraint(G, std::stoi(args["i"]));
      if (alphabet != c.alphabet) fail(li + 1, 1, "alphabet mismatch: expected the generator labels");
    } else {
      fail(li + 1, 1, "unknown builtin '" + name + "'");
    }
    if (c.radius != radius) fail(li + 1, 1, "radius mismatch between header and builtin");
    if (c.arity != arity) fail(li + 1, 1, "arity mismatch between header and builtin");
    return c;
  }

  if (body.rfind("pattern edges:", 0) != 0) fail(li + 1, 1, "expected 'builtin' or 'pattern edges:'");
  // pattern edges: (u,v),(u,v),...
  std::vector<std::pair<int, int>> edges;
  {
    auto rest = trim(body.substr(14));
    std::size_t p = 0;
    while (p < rest.size()) {
      if (rest[p] == ',' || rest[p] == ' ') {
        ++p;
        continue;
      }
      if (rest[p] != '(') fail(li + 1, static_cast<int>(p + 15), "expected '('");
      auto close = rest.find(')', p);
      if (close == std::string::npos) fail(li + 1, static_cast<int>(p + 15), "unclosed edge pair");
      auto inner = rest.substr(p + 1, close - p - 1);
      auto comma = inner.find(',');
      if (comma == std::string::npos) fail(li + 1, static_cast<int>(p + 15), "edge pair needs a comma");
      int u = std::stoi(inner.substr(0, comma));
      int v = std::stoi(inner.substr(comma + 1));
      if (u == v) fail(li + 1, static_cast<int>(p + 15), "loops are not allowed");
      edges.emplace_back(u, v);
      p = close + 1;
    }
    if (edges.empty()) fail(li + 1, 1, "pattern has no edges");
  }
  int nverts = 0;
  for (auto [u, v] : edges) nverts = std::max({nverts, u + 1, v + 1});
  Ball pattern;
  pattern.radius = radius;
  pattern.adj.assign(nverts, {});
  for (auto [u, v] : edges) {
    if (!pattern.adjacent(u, v)) {
      pattern.adj[u].push_back(v);
      pattern.adj[v].push_back(u);
      std::sort(pattern.adj[u].begin(), pattern.adj[u].end());
      std::sort(pattern.adj[v].begin(), pattern.adj[v].end());
    }
  }
  pattern.elabel.assign(nverts, {});
  for (int u = 0; u < nverts; ++u) pattern.elabel[u].assign(pattern.adj[u].size(), -1);
  {
    Region rg = make_region(pattern, 0, radius);
    pattern.depth.assign(nverts, -1);
    for (int v = 0; v < nverts; ++v) {
      if (!rg.contains(v)) fail(li + 1, 1, "pattern vertex " + std::to_string(v) +
                                               " is outside radius " + std::to_string(radius) +
                                               " of the root");
      pattern.depth[v] = rg.dist[v];
    }
  }
  ++i;

  // allow blocks
  std::vector<std::vector<int>> raw;
  auto lab_idx = [&](const std::string& s) {
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      if (alphabet[k] == s) return static_cast<int>(k);
    }
    return -1;
  };
  std::vector<std::pair<int, int>> dedges;
  for (int u = 0; u < nverts; ++u) {
    for (int v : pattern.adj[u]) dedges.emplace_back(u, v);
  }
  std::sort(dedges.begin(), dedges.end());
  while ((li = next_content()) >= 0) {
    auto t = trim(lines[li]);
    if (t != "allow:") fail(li + 1, 1, "expected 'allow:'");
    ++i;
    std::vector<int> vvals(nverts, -1);
    std::map<std::pair<int, int>, int> evals;
    while ((li = next_content()) >= 0) {
      auto s = trim(lines[li]);
      if (s == "allow:") break;
      std::stringstream ls(s);
      std::string kind;
      ls >> kind;
      if (kind == "vertex") {
        if (arity != 1) fail(li + 1, 1, "vertex line in an arity-2 constraint");
        int v;
        std::string eq, lab;
        if (!(ls >> v >> eq >> lab) || eq != "=") fail(li + 1, 1, "expected 'vertex <id> = <label>'");
        if (v < 0 || v >= nverts) fail(li + 1, 8, "vertex id out of range");
        int a = lab_idx(lab);
        if (a < 0) fail(li + 1, 1, "label '" + lab + "' not in the alphabet");
        vvals[v] = a;
      } else if (kind == "edge") {
        if (arity != 2) fail(li + 1, 1, "edge line in an arity-1 constraint");
        int u, v;
        std::string eq, lab;
        if (!(ls >> u >> v >> eq >> lab) || eq != "=") fail(li + 1, 1, "expected 'edge <u> <v> = <label>'");
        if (!std::binary_search(dedges.begin(), dedges.end(), std::pair(u, v))) {
          fail(li + 1, 6, "pair is not a pattern edge");
        }
        int a = lab_idx(lab);
        if (a < 0) fail(li + 1, 1, "label '" + lab + "' not in the alphabet");
        evals[{u, v}] = a;
      } else {
        fail(li + 1, 1, "expected 'vertex', 'edge' or 'allow:'");
      }
      ++i;
    }
    if (arity == 1) {
      for (int v = 0; v < nverts; ++v) {
        if (vvals[v] < 0) fail(li < 0 ? static_cast<int>(lines.size()) : li + 1, 1,
                               "allow block misses vertex " + std::to_string(v));
      }
      raw.push_back(vvals);
    } else {
      std::vector<int> flat;
      for (auto& e : dedges) {
        auto it = evals.find(e);
        if (it == evals.end()) {
          fail(li < 0 ? static_cast<int>(lines.size()) : li + 1, 1,
               "allow block misses edge (" + std::to_string(e.first) + "," +
                   std::to_string(e.second) + ")");
        }
        flat.push_back(it->second);
      }
      raw.push_back(flat);
    }
  }
  if (raw.empty()) fail(static_cast<int>(lines.size()), 0, "extensional constraint needs allow blocks");
  return extensional_constraint(radius, arity, alphabet, std::move(pattern), std::move(raw));
}

// ---------------------------------------------------------------------------
// solver
// ---------------------------------------------------------------------------

SolveResult solve_decoration(const Ball& host, const Constraint& c, std::size_t node_budget) {
  // sites
  struct Site {
    int u, v;  // v = -1 for vertex sites
  };
  std::vector<Site> sites;
  if (c.arity == 1) {
    for (int v = 0; v < host.size(); ++v) sites.push_back({v, -1});
  } else {
    for (int u = 0; u < host.size(); ++u) {
      for (int v : host.adj[u]) sites.push_back({u, v});
    }
  }
  std::vector<int> checkable;
  std::vector<Region> regions;
  std::vector<std::vector<int>> region_of_vertex(host.size());
  for (int x = 0; x < host.size(); ++x) {
    if (host.depth[x] + c.radius > host.radius) continue;
    Region rg = make_region(host, x, c.radius);
    for (int v : rg.verts) region_of_vertex[v].push_back(static_cast<int>(regions.size()));
    checkable.push_back(x);
    regions.push_back(std::move(rg));
  }
  std::vector<int> sites_left_in_region(regions.size(), 0);
  // which regions a site belongs to
  std::vector<std::vector<int>> site_regions(sites.size());
  for (std::size_t s = 0; s < sites.size(); ++s) {
    const auto& st = sites[s];
    std::set<int> rs;
    for (int ri : region_of_vertex[st.u]) {
      if (st.v < 0 || regions[ri].contains(st.v)) rs.insert(ri);
    }
    site_regions[s].assign(rs.begin(), rs.end());
    for (int ri : site_regions[s]) ++sites_left_in_region[ri];
  }

  Labelling f;
  f.arity = c.arity;
  f.alphabet = c.alphabet;
  if (c.arity == 1) f.vertex_vals.assign(host.size(), -1);

  std::vector<char> assigned(sites.size(), 0);
  std::size_t nodes = 0;
  int nlab = static_cast<int>(c.alphabet.size());

  auto set_site = [&](const Site& st, int a) {
    if (st.v < 0) {
      f.set_vertex(st.u, a);
    } else {
      f.set_edge(st.u, st.v, a);
    }
  };

  // check partial violation / completed regions after assigning site s
  auto ok_after = [&](std::size_t s) {
    for (int ri : site_regions[s]) {
      if (c.partial_violated && c.partial_violated(host, f, regions[ri])) return false;
      if (sites_left_in_region[ri] == 0 && !c.accept(host, f, regions[ri])) return false;
    }
    return true;
  };

  std::function<int()> pick = [&]() -> int {
    int best = -1, best_count = nlab + 1;
    for (std::size_t s = 0; s < sites.size(); ++s) {
      if (assigned[s]) continue;
      int cnt = 0;
      for (int ri : site_regions[s]) --sites_left_in_region[ri];
      for (int a = 0; a < nlab; ++a) {
        set_site(sites[s], a);
        if (ok_after(s)) ++cnt;
      }
      set_site(sites[s], -1);
      for (int ri : site_regions[s]) ++sites_left_in_region[ri];
      if (cnt < best_count) {
        best_count = cnt;
        best = static_cast<int>(s);
        if (cnt == 0) break;
      }
    }
    return best;
  };

  bool budget_hit = false;
  std::function<bool(int)> go = [&](int remaining) -> bool {
    if (++nodes > node_budget) {
      budget_hit = true;
      return false;
    }
    if (remaining == 0) {
      for (std::size_t ri = 0; ri < regions.size(); ++ri) {
        if (!c.accept(host, f, regions[ri])) return false;
      }
      return true;
    }
    int s = pick();
    if (s < 0) return false;
    assigned[s] = 1;
    for (int ri : site_regions[s]) --sites_left_in_region[ri];
    for (int a = 0; a < nlab; ++a) {
      set_site(sites[s], a);
      if (ok_after(s) && go(remaining - 1)) return true;
      if (budget_hit) break;
    }
    set_site(sites[s], -1);
    assigned[s] = 0;
    for (int ri : site_regions[s]) ++sites_left_in_region[ri];
    return false;
  };

  SolveResult res;
  if (go(static_cast<int>(sites.size()))) {
    res.status = SolveResult::Status::Found;
    res.labelling = std::move(f);
  } else {
    res.status = budget_hit ? SolveResult::Status::Unknown : SolveResult::Status::Absent;
  }
  return res;
}

// ---------------------------------------------------------------------------
// edge -> vertex coding
// ---------------------------------------------------------------------------

namespace {

struct CodingInfo {
  Constraint inner;
  GroupPtr G;
  int base = 0;    // |A|
  int slots = 0;   // |E| + 1
  int digit(int value, int slot) const {
    for (int k = 0; k < slot; ++k) value /= base;
    return value % base;
  }
};

std::shared_ptr<const CodingInfo> coding_info(const Constraint& coded) {
  auto info = std::static_pointer_cast<const CodingInfo>(coded.data);
  if (!info || coded.name.rfind("coded:", 0) != 0) {
    throw std::invalid_argument("constraint was not produced by edge_to_vertex_coding");
  }
  return info;
}

}  // namespace

Constraint edge_to_vertex_coding(const Constraint& c, GroupPtr G) {
  if (c.arity != 2) throw std::invalid_argument("edge_to_vertex_coding needs an arity-2 constraint");
  auto info = std::make_shared<CodingInfo>();
  info->inner = c;
  info->G = G;
  info->base = static_cast<int>(c.alphabet.size());
  info->slots = G->degree() + 1;
  Constraint out;
  out.name = "coded:" + c.name;
  out.radius = c.radius + 1;
  out.arity = 1;
  int total = 1;
  for (int k = 0; k < info->slots; ++k) total *= info->base;
  for (int v = 0; v < total; ++v) {
    std::string name;
    int val = v;
    for (int k = 0; k < info->slots; ++k) {
      if (k) name += ".";
      name += c.alphabet[val % info->base];
      val /= info->base;
    }
    out.alphabet.push_back(name);
  }
  auto data = std::shared_ptr<const CodingInfo>(info);
  out.data = data;
  out.accept = [data](const Ball& host, const Labelling& h, const Region& rg) {
    // decode the inner-ball edge labelling through the generator addresses
    Labelling f;
    f.arity = 2;
    f.alphabet = data->inner.alphabet;
    int inner_r = data->inner.radius;
    for (int u : rg.verts) {
      if (rg.dist[u] > inner_r) continue;
      int hv = h.vertex(u);
      if (hv < 0) return false;
      for (std::size_t p = 0; p < host.adj[u].size(); ++p) {
        int v = host.adj[u][p];
        if (!rg.contains(v) || rg.dist[v] > inner_r) continue;
        int gi = host.elabel[u][p];
        if (gi < 0) throw std::invalid_argument("coded constraint needs generator edge labels");
        f.set_edge(u, v, data->digit(hv, 1 + gi));
      }
    }
    Region inner_rg = make_region(host, rg.center, inner_r);
    return data->inner.accept(host, f, inner_rg);
  };
  out.partial_violated = [](const Ball&, const Labelling&, const Region&) { return false; };
  return out;
}

Labelling code_encode(const Ball& host, const Labelling& edge_f, const Constraint& coded) {
  auto info = coding_info(coded);
  Labelling h;
  h.arity = 1;
  h.alphabet = coded.alphabet;
  h.vertex_vals.assign(host.size(), -1);
  for (int u = 0; u < host.size(); ++u) {
    int value = 0;
    int mult = info->base;  // slot 0 left as letter 0
    for (int gi = 0; gi < info->G->degree(); ++gi) {
      int digit = 0;
      for (std::size_t p = 0; p < host.adj[u].size(); ++p) {
        if (host.elabel[u][p] == gi) {
          int a = edge_f.edge(u, host.adj[u][p]);
          if (a >= 0) digit = a;
          break;
        }
      }
      value += digit * mult;
      mult *= info->base;
    }
    h.vertex_vals[u] = value;
  }
  return h;
}

Labelling code_decode(const Ball& host, const Labelling& vertex_h, const Constraint& coded) {
  auto info = coding_info(coded);
  Labelling f;
  f.arity = 2;
  f.alphabet = info->inner.alphabet;
  for (int u = 0; u < host.size(); ++u) {
    int hv = vertex_h.vertex(u);
    if (hv < 0) continue;
    for (std::size_t p = 0; p < host.adj[u].size(); ++p) {
      int gi = host.elabel[u][p];
      if (gi < 0) throw std::invalid_argument("coded constraint needs generator edge labels");
      f.set_edge(u, host.adj[u][p], info->digit(hv, 1 + gi));
    }
  }
  return f;
}

}  // namespace ck
