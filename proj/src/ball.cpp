#include "cayleykit/ball.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace ck {

bool Ball::adjacent(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Ball::adj_pos(int u, int v) const {
  auto it = std::lower_bound(adj[u].begin(), adj[u].end(), v);
  if (it == adj[u].end() || *it != v) return -1;
  return static_cast<int>(it - adj[u].begin());
}

int Ball::edge_label(int u, int v) const {
  int p = adj_pos(u, v);
  return p < 0 ? -1 : elabel[u][p];
}

std::size_t Ball::edge_count() const {
  std::size_t s = 0;
  for (const auto& a : adj) s += a.size();
  return s / 2;
}

Ball ball(GroupPtr G, int n, std::size_t max_vertices) {
  if (n < 0) throw std::invalid_argument("ball radius must be >= 0");
  Ball b;
  b.group = G;
  b.radius = n;
  std::unordered_map<Element, int, ElementHash> idx;
  b.elems.push_back(G->identity());
  b.depth.push_back(0);
  idx.emplace(b.elems[0], 0);
  std::deque<int> q{0};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (b.depth[u] == n) continue;
    for (const auto& gen : G->gens) {
      Element v = G->multiply(b.elems[u], gen.elem);
      if (idx.find(v) == idx.end()) {
        if (b.elems.size() >= max_vertices) {
          throw ResourceLimitError("ball exceeds vertex cap of " + std::to_string(max_vertices));
        }
        int id = static_cast<int>(b.elems.size());
        idx.emplace(v, id);
        b.elems.push_back(std::move(v));
        b.depth.push_back(b.depth[u] + 1);
        q.push_back(id);
      }
    }
  }
  int sz = static_cast<int>(b.elems.size());
  b.adj.assign(sz, {});
  b.elabel.assign(sz, {});
  for (int u = 0; u < sz; ++u) {
    std::vector<std::pair<int, int>> nb;  // (neighbour, label)
    for (int gi = 0; gi < G->degree(); ++gi) {
      Element v = G->multiply(b.elems[u], G->gens[gi].elem);
      auto it = idx.find(v);
      if (it != idx.end()) nb.emplace_back(it->second, gi);
    }
    std::sort(nb.begin(), nb.end());
    for (auto& [v, gi] : nb) {
      b.adj[u].push_back(v);
      b.elabel[u].push_back(gi);
    }
  }
  b.words.reserve(sz);
  for (const auto& e : b.elems) b.words.push_back(G->str(e));
  // order channel for lamplighter-flavoured groups
  const auto& d = G->desc;
  if (d.kind == GroupDesc::Kind::Lamplighter) {
    std::vector<int64_t> h(sz);
    for (int i = 0; i < sz; ++i) h[i] = std::get<LampElt>(b.elems[i].rep).shift;
    b.height = std::move(h);
  }
  return b;
}

namespace {

// One lazily grown height-graded 3-regular tree: each vertex has one parent
// one level down and two children one level up.
struct GradedTree {
  std::vector<int64_t> h{0};
  std::vector<int> parent{-1};
  std::vector<std::vector<int>> children{{}};

  int parent_of(int v) {
    if (parent[v] == -1) {
      int p = static_cast<int>(h.size());
      h.push_back(h[v] - 1);
      parent.push_back(-1);
      children.push_back({v});
      parent[v] = p;
    }
    return parent[v];
  }
  std::vector<int> children_of(int v) {
    while (children[v].size() < 2) {
      int c = static_cast<int>(h.size());
      h.push_back(h[v] + 1);
      parent.push_back(v);
      children.push_back({});
      children[v].push_back(c);
    }
    return children[v];
  }
  bool tree_adjacent(int a, int b) const { return parent[a] == b || parent[b] == a; }
};

}  // namespace

Ball diestel_leader_ball(int n) {
  if (n < 0) throw std::invalid_argument("ball radius must be >= 0");
  GradedTree t1, t2;
  Ball b;
  b.radius = n;
  std::unordered_map<int64_t, int> idx;
  std::vector<std::pair<int, int>> verts{{0, 0}};
  auto key = [](int v, int w) { return (static_cast<int64_t>(v) << 32) | static_cast<uint32_t>(w); };
  idx.emplace(key(0, 0), 0);
  b.depth.push_back(0);
  std::deque<int> q{0};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (b.depth[u] == n) continue;
    auto [v, w] = verts[u];
    std::vector<std::pair<int, int>> nb;
    int pw = t2.parent_of(w);
    for (int c : t1.children_of(v)) nb.emplace_back(c, pw);
    int pv = t1.parent_of(v);
    for (int c : t2.children_of(w)) nb.emplace_back(pv, c);
    for (auto [x, y] : nb) {
      if (idx.find(key(x, y)) == idx.end()) {
        int id = static_cast<int>(verts.size());
        idx.emplace(key(x, y), id);
        verts.emplace_back(x, y);
        b.depth.push_back(b.depth[u] + 1);
        q.push_back(id);
      }
    }
  }
  int sz = static_cast<int>(verts.size());
  b.adj.assign(sz, {});
  b.elabel.assign(sz, {});
  std::vector<int64_t> hcol(sz);
  for (int i = 0; i < sz; ++i) hcol[i] = t1.h[verts[i].first];
  for (int i = 0; i < sz; ++i) {
    for (int j = i + 1; j < sz; ++j) {
      if (t1.tree_adjacent(verts[i].first, verts[j].first) &&
          t2.tree_adjacent(verts[i].second, verts[j].second)) {
        b.adj[i].push_back(j);
        b.adj[j].push_back(i);
      }
    }
  }
  for (int i = 0; i < sz; ++i) {
    std::sort(b.adj[i].begin(), b.adj[i].end());
    b.elabel[i].assign(b.adj[i].size(), -1);
  }
  b.words.reserve(sz);
  for (int i = 0; i < sz; ++i) {
    b.words.push_back("(" + std::to_string(verts[i].first) + "," + std::to_string(verts[i].second) + ")");
  }
  b.height = std::move(hcol);
  return b;
}

Ball induced_ball(const Ball& host, int center, int r, std::vector<int>* to_host) {
  if (center < 0 || center >= host.size()) throw std::invalid_argument("center out of range");
  std::vector<int> dist(host.size(), -1);
  std::vector<int> order;
  dist[center] = 0;
  order.push_back(center);
  std::deque<int> q{center};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (dist[u] == r) continue;
    for (int v : host.adj[u]) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        order.push_back(v);
        q.push_back(v);
      }
    }
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int bb) { return std::pair(dist[a], a) < std::pair(dist[bb], bb); });
  std::vector<int> local(host.size(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) local[order[i]] = i;
  Ball b;
  b.group = host.group;
  b.radius = r;
  int sz = static_cast<int>(order.size());
  b.adj.assign(sz, {});
  b.elabel.assign(sz, {});
  b.depth.resize(sz);
  if (!host.elems.empty()) b.elems.resize(sz);
  if (!host.words.empty()) b.words.resize(sz);
  if (host.height) b.height.emplace(sz);
  for (int i = 0; i < sz; ++i) {
    int hu = order[i];
    b.depth[i] = dist[hu];
    if (!host.elems.empty()) b.elems[i] = host.elems[hu];
    if (!host.words.empty()) b.words[i] = host.words[hu];
    if (host.height) (*b.height)[i] = (*host.height)[hu];
    for (std::size_t p = 0; p < host.adj[hu].size(); ++p) {
      int hv = host.adj[hu][p];
      if (local[hv] >= 0) {
        b.adj[i].push_back(local[hv]);
        b.elabel[i].push_back(host.elabel[hu][p]);
      }
    }
    // host adj sorted by host id; local ids are monotone in (layer, host id),
    // not host id alone, so re-sort pairwise
    std::vector<std::pair<int, int>> nb;
    for (std::size_t p = 0; p < b.adj[i].size(); ++p) nb.emplace_back(b.adj[i][p], b.elabel[i][p]);
    std::sort(nb.begin(), nb.end());
    for (std::size_t p = 0; p < nb.size(); ++p) {
      b.adj[i][p] = nb[p].first;
      b.elabel[i][p] = nb[p].second;
    }
  }
  if (to_host) *to_host = order;
  return b;
}

}  // namespace ck
