#ifndef CAYLEYKIT_BALL_HPP_
#define CAYLEYKIT_BALL_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayleykit/group.hpp"

namespace ck {

// Raised when a construction or search would exceed its resource cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVertexCap = 200000;

// Rooted induced ball. Vertex 0 is the root; ids follow BFS layers with
// generator order inside a layer, so construction is reproducible
// bit-for-bit. adj lists are sorted by neighbour id; elabel runs parallel
// to adj and holds generator indices (-1 when the ball has no group
// structure, as for the Diestel-Leader ball).
struct Ball {
  GroupPtr group;  // null for plain graphs
  int radius = 0;
  int root = 0;
  std::vector<Element> elems;
  std::vector<std::string> words;
  std::vector<int> depth;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> elabel;
  std::optional<std::vector<int64_t>> height;  // order channel (lamplighter / DL)

  int size() const { return static_cast<int>(adj.size()); }
  bool adjacent(int u, int v) const;
  // position of v in adj[u], or -1
  int adj_pos(int u, int v) const;
  // generator index of (u,v), or -1
  int edge_label(int u, int v) const;
  std::size_t edge_count() const;
};

Ball ball(GroupPtr G, int n, std::size_t max_vertices = kDefaultVertexCap);

// Radius-n ball of the Diestel-Leader graph around a fixed base point; built
// from two height-graded 3-regular trees. No group structure, no edge labels.
Ball diestel_leader_ball(int n);

// Induced ball of radius r around `center` inside `host`, re-rooted at local
// id 0. Local ids follow BFS layer then host id. to_host (optional) receives
// the local -> host vertex table.
Ball induced_ball(const Ball& host, int center, int r, std::vector<int>* to_host = nullptr);

}  // namespace ck

#endif  // CAYLEYKIT_BALL_HPP_
