#include "cayleykit/coloring.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ck {

OrbitStructure orbit_structure(const Ball& b) {
  if (!b.group) throw std::invalid_argument("orbit_structure needs a group ball");
  const auto& G = *b.group;
  // the b-direction: a non-involutive generator (order 3 in gamma/delta)
  int bgen = -1;
  for (int i = 0; i < G.degree(); ++i) {
    if (G.inverse_pair[i] != i) {
      bgen = i;
      break;
    }
  }
  if (bgen < 0) throw std::invalid_argument("orbit_structure: no order-3 generator");
  std::unordered_map<Element, int, ElementHash> idx;
  for (int v = 0; v < b.size(); ++v) idx.emplace(b.elems[v], v);
  OrbitStructure os;
  os.b_gen = bgen;
  os.orbit_of.assign(b.size(), -1);
  for (int v = 0; v < b.size(); ++v) {
    if (os.orbit_of[v] >= 0) continue;
    std::array<int, 3> mem{v, -1, -1};
    Element x = b.elems[v];
    for (int k = 1; k < 3; ++k) {
      x = G.multiply(x, G.gens[bgen].elem);
      auto it = idx.find(x);
      mem[k] = it == idx.end() ? -1 : it->second;
    }
    // smallest member should own the orbit; skip if an earlier member exists
    bool owned = true;
    for (int k = 1; k < 3; ++k) {
      if (mem[k] >= 0 && os.orbit_of[mem[k]] >= 0) owned = false;
    }
    if (!owned) continue;
    int oid = static_cast<int>(os.orbit_members.size());
    bool full = true;
    for (int m : mem) {
      if (m >= 0) {
        os.orbit_of[m] = oid;
      } else {
        full = false;
      }
    }
    os.orbit_members.push_back(mem);
    os.full.push_back(full ? 1 : 0);
  }
  // catch stragglers (clipped orbits whose base element starts outside)
  for (int v = 0; v < b.size(); ++v) {
    if (os.orbit_of[v] < 0) {
      os.orbit_of[v] = static_cast<int>(os.orbit_members.size());
      os.orbit_members.push_back({v, -1, -1});
      os.full.push_back(0);
    }
  }
  os.orbit_adj.assign(os.orbit_members.size(), {});
  std::set<std::pair<int, int>> seen;
  for (int u = 0; u < b.size(); ++u) {
    for (int v : b.adj[u]) {
      int ou = os.orbit_of[u], ov = os.orbit_of[v];
      if (ou != ov && seen.insert({std::min(ou, ov), std::max(ou, ov)}).second) {
        os.orbit_adj[ou].push_back(ov);
        os.orbit_adj[ov].push_back(ou);
      }
    }
  }
  for (auto& a : os.orbit_adj) std::sort(a.begin(), a.end());
  return os;
}

namespace {

struct AugState {
  const Ball& b;
  const OrbitStructure& os;
  const SeedMatrix& s;
  std::vector<char> in_A;
  std::vector<int> hit;  // orbit -> vertex in A, -1 if missed
  bool invariants_ok = true;

  bool independent_at(int v) const {
    for (int w : b.adj[v]) {
      if (in_A[w]) return false;
    }
    return true;
  }

  void add(int v) {
    in_A[v] = 1;
    hit[os.orbit_of[v]] = v;
  }

  void swap_in(int orbit, int out_v, int in_v) {
    in_A[out_v] = 0;
    in_A[in_v] = 1;
    hit[orbit] = in_v;
  }

  void check_invariants() {
    for (int v = 0; v < b.size(); ++v) {
      if (!in_A[v]) continue;
      for (int w : b.adj[v]) {
        if (in_A[w]) invariants_ok = false;
      }
    }
    std::vector<int> per_orbit(os.orbit_members.size(), 0);
    for (int v = 0; v < b.size(); ++v) {
      if (in_A[v]) ++per_orbit[os.orbit_of[v]];
    }
    for (std::size_t k = 0; k < per_orbit.size(); ++k) {
      if (per_orbit[k] > 1) invariants_ok = false;
      if (per_orbit[k] == 1 && hit[k] < 0) invariants_ok = false;
    }
  }

  void greedy() {
    std::vector<int> order(b.size());
    for (int i = 0; i < b.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return s.at(x) > s.at(y); });
    for (int v : order) {
      int k = os.orbit_of[v];
      if (!os.full[k] || hit[k] >= 0) continue;
      if (independent_at(v)) add(v);
    }
  }

  int set_size() const {
    int c = 0;
    for (char f : in_A) c += f;
    return c;
  }
};

}  // namespace

AugmentReport augmenting_3coloring(const Ball& b, const SeedMatrix& seeds, int rounds) {
  if (rounds < 1) throw std::invalid_argument("augmenting_3coloring needs rounds >= 1");
  OrbitStructure os = orbit_structure(b);
  const auto& G = *b.group;
  AugState st{b, os, seeds, std::vector<char>(b.size(), 0),
              std::vector<int>(os.orbit_members.size(), -1)};

  std::vector<int> measured;
  for (std::size_t k = 0; k < os.orbit_members.size(); ++k) {
    if (!os.full[k]) continue;
    bool interior = true;
    for (int m : os.orbit_members[k]) {
      if (b.depth[m] + 1 > b.radius) interior = false;
    }
    if (interior) measured.push_back(static_cast<int>(k));
  }

  AugmentReport rep;
  rep.measured_orbits = static_cast<int>(measured.size());
  auto missed_frac = [&]() {
    if (measured.empty()) return 0.0;
    int miss = 0;
    for (int k : measured) {
      if (st.hit[k] < 0) ++miss;
    }
    return static_cast<double>(miss) / measured.size();
  };

  st.greedy();
  st.check_invariants();
  rep.missed_fraction.push_back(missed_frac());
  rep.set_sizes.push_back(st.set_size());

  for (int rnd = 1; rnd <= rounds; ++rnd) {
    // candidate chains between one missed full orbit and any A-free orbit,
    // through hit orbits, quotient path length <= rnd + 1
    struct Chain {
      double priority;
      std::vector<int> orbit_path;
      int x;  // insertion vertex
    };
    std::vector<Chain> chains;
    for (std::size_t k0 = 0; k0 < os.orbit_members.size(); ++k0) {
      if (!os.full[k0] || st.hit[k0] >= 0) continue;
      std::vector<int> prev(os.orbit_members.size(), -2);
      std::vector<int> dist(os.orbit_members.size(), -1);
      prev[k0] = -1;
      dist[k0] = 0;
      std::deque<int> q{static_cast<int>(k0)};
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (dist[u] >= rnd + 1) continue;
        for (int w : os.orbit_adj[u]) {
          if (prev[w] != -2) continue;
          prev[w] = u;
          dist[w] = dist[u] + 1;
          bool a_free = true;
          for (int m : os.orbit_members[w]) {
            if (m >= 0 && st.in_A[m]) a_free = false;
          }
          if (st.hit[w] >= 0 || !a_free) {
            if (st.hit[w] >= 0) q.push_back(w);  // traverse hit orbits only
            continue;
          }
          // w is a missed terminal; reconstruct the orbit path
          std::vector<int> path{w};
          while (path.back() != static_cast<int>(k0)) path.push_back(prev[path.back()]);
          std::reverse(path.begin(), path.end());
          if (path.size() < 3) continue;
          int v1 = st.hit[path[1]];
          int x = -1;
          for (int m : os.orbit_members[k0]) {
            if (m >= 0 && b.adjacent(m, v1)) x = m;
          }
          if (x < 0) continue;
          chains.push_back({seeds.at(x), path, x});
        }
      }
    }
    std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& c) {
      if (a.priority != c.priority) return a.priority > c.priority;
      return a.orbit_path < c.orbit_path;
    });
    std::vector<char> used_orbit(os.orbit_members.size(), 0);
    for (const auto& ch : chains) {
      bool overlap = false;
      for (int k : ch.orbit_path) {
        if (used_orbit[k]) overlap = true;
      }
      if (overlap || st.hit[ch.orbit_path.front()] >= 0) continue;
      {
        bool terminal_free = true;
        for (int m : os.orbit_members[ch.orbit_path.back()]) {
          if (m >= 0 && st.in_A[m]) terminal_free = false;
        }
        if (!terminal_free) continue;
      }
      // pigeonhole insertion first
      int free_pt = -1;
      double best = -1;
      for (int m : os.orbit_members[ch.orbit_path.front()]) {
        if (m >= 0 && st.independent_at(m) && seeds.at(m) > best) {
          best = seeds.at(m);
          free_pt = m;
        }
      }
      if (free_pt >= 0) {
        st.add(free_pt);
        for (int k : ch.orbit_path) used_orbit[k] = 1;
        continue;
      }
      // swap cascade: insert x, push the conflict down the chain
      struct Swap {
        int orbit, out_v, in_v;
      };
      std::vector<Swap> plan;
      int cur = ch.x;
      bool ok = true;
      std::set<int> path_orbits(ch.orbit_path.begin(), ch.orbit_path.end());
      for (std::size_t i = 1; i + 1 < ch.orbit_path.size(); ++i) {
        int k = ch.orbit_path[i];
        int vi = st.hit[k];
        if (!b.adjacent(cur, vi)) break;
        int best_w = -1;
        double best_s = -1;
        for (int w : os.orbit_members[k]) {
          if (w < 0 || w == vi || b.adjacent(cur, w)) continue;
          bool clean = true;
          for (int z : b.adj[w]) {
            if (st.in_A[z] && z != vi && !path_orbits.count(os.orbit_of[z])) clean = false;
            if (st.in_A[z] && z != vi && path_orbits.count(os.orbit_of[z])) {
              // conflict with a not-yet-swapped chain member ahead of us
              bool planned = false;
              for (const auto& sw : plan) {
                if (sw.out_v == z) planned = true;
              }
              if (!planned && os.orbit_of[z] != (i + 2 <= ch.orbit_path.size() - 1
                                                     ? ch.orbit_path[i + 1]
                                                     : -1)) {
                clean = false;
              }
            }
          }
          if (clean && seeds.at(w) > best_s) {
            best_s = seeds.at(w);
            best_w = w;
          }
        }
        if (best_w < 0) {
          ok = false;
          break;
        }
        plan.push_back({k, vi, best_w});
        cur = best_w;
      }
      if (!ok) continue;
      st.add(ch.x);
      for (const auto& sw : plan) st.swap_in(sw.orbit, sw.out_v, sw.in_v);
      // a cascade may leave a conflict if the plan's last swap touches the
      // next chain vertex; verify and roll back on violation
      bool still_independent = true;
      for (int v = 0; v < b.size() && still_independent; ++v) {
        if (!st.in_A[v]) continue;
        for (int w : b.adj[v]) {
          if (st.in_A[w]) still_independent = false;
        }
      }
      if (!still_independent) {
        for (auto it = plan.rbegin(); it != plan.rend(); ++it) st.swap_in(it->orbit, it->in_v, it->out_v);
        st.in_A[ch.x] = 0;
        st.hit[os.orbit_of[ch.x]] = -1;
        continue;
      }
      for (int k : ch.orbit_path) used_orbit[k] = 1;
    }
    st.greedy();
    st.check_invariants();
    rep.missed_fraction.push_back(missed_frac());
    rep.set_sizes.push_back(st.set_size());
  }

  rep.invariants_ok = st.invariants_ok;
  for (int v = 0; v < b.size(); ++v) {
    if (st.in_A[v]) rep.independent_set.push_back(v);
  }
  // c(v) = min{i : v b^i in A}
  rep.coloring.arity = 1;
  rep.coloring.alphabet = {"0", "1", "2"};
  rep.coloring.vertex_vals.assign(b.size(), -1);
  std::unordered_map<Element, int, ElementHash> idx;
  for (int v = 0; v < b.size(); ++v) idx.emplace(b.elems[v], v);
  for (int v = 0; v < b.size(); ++v) {
    Element x = b.elems[v];
    for (int i = 0; i < 3; ++i) {
      auto it = idx.find(x);
      if (it != idx.end() && st.in_A[it->second]) {
        rep.coloring.vertex_vals[v] = i;
        break;
      }
      x = G.multiply(x, G.gens[os.b_gen].elem);
    }
  }
  return rep;
}

ParityReport parity_analysis(const Ball& b, const Labelling& f) {
  OrbitStructure os = orbit_structure(b);
  const auto& G = *b.group;
  std::unordered_map<Element, int, ElementHash> idx;
  for (int v = 0; v < b.size(); ++v) idx.emplace(b.elems[v], v);
  auto b_next = [&](int v) -> int {
    auto it = idx.find(G.multiply(b.elems[v], G.gens[os.b_gen].elem));
    return it == idx.end() ? -1 : it->second;
  };
  ParityReport rep;
  rep.orbit_cf.assign(os.orbit_members.size(), -1);
  // checked orbits: full, all members labelled
  std::vector<int> checked;
  for (std::size_t k = 0; k < os.orbit_members.size(); ++k) {
    if (!os.full[k]) continue;
    bool lab = true;
    for (int m : os.orbit_members[k]) {
      if (f.vertex(m) < 0) lab = false;
    }
    if (lab) checked.push_back(static_cast<int>(k));
  }
  rep.checked_orbits = static_cast<int>(checked.size());
  std::vector<char> is_checked(os.orbit_members.size(), 0);
  for (int k : checked) is_checked[k] = 1;
  // precondition: f proper on checked orbits and their labelled neighbours
  for (int k : checked) {
    for (int m : os.orbit_members[k]) {
      for (int w : b.adj[m]) {
        if (f.vertex(w) >= 0 && f.vertex(w) == f.vertex(m)) {
          throw std::invalid_argument("parity_analysis: coloring improper at orbit " +
                                      std::to_string(k));
        }
      }
    }
  }
  for (int k : checked) {
    std::set<int> vals;
    for (int m : os.orbit_members[k]) {
      int nm = b_next(m);
      if (nm < 0) continue;
      int cf = ((f.vertex(nm) - f.vertex(m)) % 3 + 3) % 3;
      if (cf == 0) rep.values_pm1 = false;
      vals.insert(cf);
    }
    if (vals.size() > 1) rep.orbit_constant = false;
    if (!vals.empty()) rep.orbit_cf[k] = *vals.begin();
  }
  for (int k : checked) {
    for (int k2 : os.orbit_adj[k]) {
      if (k2 > k && is_checked[k2] && rep.orbit_cf[k] == rep.orbit_cf[k2]) {
        rep.adjacent_differ = false;
        rep.quotient_proper_2coloring = false;
      }
    }
  }
  // agreement statistics over the orbit quotient, per distance
  if (!checked.empty()) {
    int base = checked[0];
    std::vector<int> dist(os.orbit_members.size(), -1);
    dist[base] = 0;
    std::deque<int> q{base};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : os.orbit_adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
      }
    }
    int maxd = 0;
    for (int k : checked) maxd = std::max(maxd, dist[k]);
    std::vector<int> eq(maxd + 1, 0), tot(maxd + 1, 0);
    for (int k : checked) {
      if (dist[k] < 0) continue;
      ++tot[dist[k]];
      if (rep.orbit_cf[k] == rep.orbit_cf[base]) ++eq[dist[k]];
    }
    for (int d = 0; d <= maxd; ++d) {
      rep.agreement_by_distance.push_back(tot[d] == 0 ? -1.0 : static_cast<double>(eq[d]) / tot[d]);
    }
  }
  return rep;
}

}  // namespace ck
