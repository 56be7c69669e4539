#include "cayleykit/automorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ck {

BallMap BallMap::inverse() const {
  BallMap r;
  r.map.assign(map.size(), -1);
  for (int v = 0; v < static_cast<int>(map.size()); ++v) r.map[map[v]] = v;
  return r;
}

BallMap BallMap::compose_after(const BallMap& inner) const {
  BallMap r;
  r.map.resize(inner.map.size());
  for (std::size_t v = 0; v < inner.map.size(); ++v) r.map[v] = map[inner.map[v]];
  return r;
}

namespace {

// Joint iterated refinement over one or two graphs with canonical naming:
// fresh colour ids are assigned by sorted signature order each round.
struct Refiner {
  static void round(const std::vector<std::vector<int>>& adjA,
                    const std::vector<std::vector<int>>& adjB, std::vector<int>& colA,
                    std::vector<int>& colB, bool& changed) {
    using Sig = std::pair<int, std::vector<int>>;
    auto sig_of = [](const std::vector<std::vector<int>>& adj, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      nb.reserve(adj[v].size());
      for (int u : adj[v]) nb.push_back(col[u]);
      std::sort(nb.begin(), nb.end());
      return Sig{col[v], std::move(nb)};
    };
    std::vector<Sig> sa(adjA.size()), sb(adjB.size());
    std::map<Sig, int> names;
    for (std::size_t v = 0; v < adjA.size(); ++v) names.emplace(sa[v] = sig_of(adjA, colA, v), 0);
    for (std::size_t v = 0; v < adjB.size(); ++v) names.emplace(sb[v] = sig_of(adjB, colB, v), 0);
    int next = 0;
    for (auto& [sig, id] : names) id = next++;
    changed = false;
    for (std::size_t v = 0; v < adjA.size(); ++v) {
      int c = names[sa[v]];
      if (c != colA[v]) changed = true;
      colA[v] = c;
    }
    for (std::size_t v = 0; v < adjB.size(); ++v) {
      int c = names[sb[v]];
      if (c != colB[v]) changed = true;
      colB[v] = c;
    }
  }

  static void run(const std::vector<std::vector<int>>& adjA,
                  const std::vector<std::vector<int>>& adjB, std::vector<int>& colA,
                  std::vector<int>& colB) {
    // canonicalize the seed colours first
    std::map<int, int> seed;
    for (int c : colA) seed.emplace(c, 0);
    for (int c : colB) seed.emplace(c, 0);
    int next = 0;
    for (auto& [c, id] : seed) id = next++;
    for (int& c : colA) c = seed[c];
    for (int& c : colB) c = seed[c];
    bool changed = true;
    while (changed) round(adjA, adjB, colA, colB, changed);
  }
};

std::vector<int> seed_colors(const Ball& b, bool use_depth, bool use_height) {
  std::vector<int> col(b.size(), 0);
  if (use_depth) {
    for (int v = 0; v < b.size(); ++v) col[v] = b.depth[v];
  } else {
    for (int v = 0; v < b.size(); ++v) col[v] = static_cast<int>(b.adj[v].size());
  }
  if (use_height && b.height) {
    std::map<std::pair<int, int64_t>, int> names;
    for (int v = 0; v < b.size(); ++v) names.emplace(std::pair{col[v], (*b.height)[v]}, 0);
    int next = 0;
    for (auto& [k, id] : names) id = next++;
    for (int v = 0; v < b.size(); ++v) col[v] = names[{col[v], (*b.height)[v]}];
  }
  return col;
}

struct AdjMatrix {
  int n = 0;
  std::vector<uint64_t> bits;
  void build(const Ball& b) {
    n = b.size();
    std::size_t stride = (n + 63) / 64;
    bits.assign(stride * n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v : b.adj[u]) bits[u * stride + v / 64] |= 1ull << (v % 64);
    }
  }
  bool at(int u, int v) const {
    std::size_t stride = (n + 63) / 64;
    return bits[u * stride + v / 64] >> (v % 64) & 1;
  }
};

struct Searcher {
  const Ball& A;
  const Ball& B;
  AdjMatrix am, bm;
  std::vector<int> colA, colB;
  std::vector<int> mapping, inv;
  std::vector<char> used;
  std::size_t nodes = 0;
  SearchLimits lim;
  uint64_t rng_state = 0;  // nonzero enables shuffled candidate order

  Searcher(const Ball& a, const Ball& b) : A(a), B(b) {
    am.build(a);
    bm.build(b);
  }

  bool prepare(bool rooted, bool height_preserving) {
    colA = seed_colors(A, rooted, height_preserving);
    colB = seed_colors(B, rooted, height_preserving);
    if (A.size() != B.size()) return false;
    Refiner::run(A.adj, B.adj, colA, colB);
    std::vector<int> ha = colA, hb = colB;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    mapping.assign(A.size(), -1);
    inv.assign(B.size(), -1);
    used.assign(B.size(), 0);
    return true;
  }

  bool consistent(int v, int w) const {
    if (colA[v] != colB[w]) return false;
    for (int u : A.adj[v]) {
      if (mapping[u] != -1 && !bm.at(w, mapping[u])) return false;
    }
    for (int u : B.adj[w]) {
      if (inv[u] != -1 && !am.at(v, inv[u])) return false;
    }
    return true;
  }

  uint64_t next_rand() {
    uint64_t z = (rng_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::vector<int> candidates(int v) {
    std::vector<int> cs;
    for (int w = 0; w < B.size(); ++w) {
      if (!used[w] && consistent(v, w)) cs.push_back(w);
    }
    if (rng_state) {
      for (std::size_t i = cs.size(); i > 1; --i) std::swap(cs[i - 1], cs[next_rand() % i]);
    }
    return cs;
  }

  // DFS that stops after the first full solution; returns success.
  bool extend_exists(int i) {
    if (++nodes > lim.max_nodes) throw ResourceLimitError("automorphism search node budget exceeded");
    if (i == A.size()) return true;
    for (int w : candidates(i)) {
      mapping[i] = w;
      used[w] = 1;
      inv[w] = i;
      bool ok = extend_exists(i + 1);
      mapping[i] = -1;
      used[w] = 0;
      inv[w] = -1;
      if (ok) return true;
    }
    return false;
  }

  // Enumerate every full solution into out.
  void enumerate_all(int i, std::vector<BallMap>& out) {
    if (++nodes > lim.max_nodes) throw ResourceLimitError("automorphism search node budget exceeded");
    if (i == A.size()) {
      if (out.size() >= lim.max_results) throw ResourceLimitError("automorphism count exceeds cap");
      out.push_back(BallMap{mapping});
      return;
    }
    for (int w : candidates(i)) {
      mapping[i] = w;
      used[w] = 1;
      inv[w] = i;
      enumerate_all(i + 1, out);
      mapping[i] = -1;
      used[w] = 0;
      inv[w] = -1;
    }
  }

  // Collect distinct restrictions to the id-prefix [0, m) that extend to a
  // full solution; prunes each already-recorded prefix subtree.
  void prefix_restrictions(int i, int m, std::set<std::vector<int>>& out) {
    if (++nodes > lim.max_nodes) throw ResourceLimitError("automorphism search node budget exceeded");
    if (i == m) {
      std::vector<int> pref(mapping.begin(), mapping.begin() + m);
      if (out.count(pref)) return;
      if (extend_exists(m)) {
        if (out.size() >= lim.max_results) throw ResourceLimitError("restriction count exceeds cap");
        out.insert(std::move(pref));
      }
      return;
    }
    for (int w : candidates(i)) {
      mapping[i] = w;
      used[w] = 1;
      inv[w] = i;
      prefix_restrictions(i + 1, m, out);
      mapping[i] = -1;
      used[w] = 0;
      inv[w] = -1;
    }
  }
};

}  // namespace

std::vector<int> wl_colors(const Ball& b, std::vector<int> init) {
  std::vector<int> col = init.empty() ? seed_colors(b, true, false) : std::move(init);
  std::vector<int> dummy;
  std::vector<std::vector<int>> empty;
  Refiner::run(b.adj, empty, col, dummy);
  return col;
}

std::vector<BallMap> ball_automorphisms(const Ball& b, bool root_fixing, const SearchLimits& lim) {
  Searcher s(b, b);
  s.lim = lim;
  if (!s.prepare(root_fixing, false)) return {};
  std::vector<BallMap> out;
  s.enumerate_all(0, out);
  return out;
}

std::optional<BallMap> ball_isomorphic(const Ball& a, const Ball& b, bool root_to_root) {
  Searcher s(a, b);
  if (!s.prepare(root_to_root, false)) return std::nullopt;
  if (!s.extend_exists(0)) return std::nullopt;
  return BallMap{s.mapping};
}

std::vector<BallMap> extendable_automorphisms(GroupPtr G, int n, int k, const SearchLimits& lim,
                                              std::size_t max_vertices) {
  if (n < 0 || k < 0) throw std::invalid_argument("extendable_automorphisms needs n, k >= 0");
  Ball big = ball(G, n + k, max_vertices);
  int m = 0;
  while (m < big.size() && big.depth[m] <= n) ++m;
  Searcher s(big, big);
  s.lim = lim;
  if (!s.prepare(true, false)) return {};
  std::set<std::vector<int>> prefixes;
  s.prefix_restrictions(0, m, prefixes);
  std::vector<BallMap> out;
  out.reserve(prefixes.size());
  for (const auto& p : prefixes) out.push_back(BallMap{p});
  return out;
}

std::optional<BallMap> random_root_fixing_automorphism(const Ball& b, uint64_t seed,
                                                       bool height_preserving) {
  Searcher s(b, b);
  if (!s.prepare(true, height_preserving)) return std::nullopt;
  s.rng_state = seed ? seed : 1;
  if (!s.extend_exists(0)) return std::nullopt;
  return BallMap{s.mapping};
}

std::optional<std::vector<BallMap>> try_enumerate_automorphisms(const Ball& b, bool root_fixing,
                                                                bool height_preserving,
                                                                std::size_t cap) {
  Searcher s(b, b);
  s.lim.max_results = cap;
  if (!s.prepare(root_fixing, height_preserving)) return std::vector<BallMap>{};
  std::vector<BallMap> out;
  try {
    s.enumerate_all(0, out);
  } catch (const ResourceLimitError&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace ck
