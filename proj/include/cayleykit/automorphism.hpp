#ifndef CAYLEYKIT_AUTOMORPHISM_HPP_
#define CAYLEYKIT_AUTOMORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "cayleykit/ball.hpp"

namespace ck {

// Vertex bijection between two balls (source id -> target id).
struct BallMap {
  std::vector<int> map;
  int operator()(int v) const { return map[v]; }
  BallMap inverse() const;
  BallMap compose_after(const BallMap& inner) const;  // this(inner(v))
  bool operator==(const BallMap&) const = default;
};

struct SearchLimits {
  std::size_t max_results = 1u << 21;
  std::size_t max_nodes = 1ull << 34;
};

// Iterated neighbourhood refinement with canonical colour naming: colours of
// isomorphic inputs with canonical seeds coincide. Seeds default to depth.
std::vector<int> wl_colors(const Ball& b, std::vector<int> init = {});

// Complete list of graph automorphisms, root-fixing when flagged.
std::vector<BallMap> ball_automorphisms(const Ball& b, bool root_fixing,
                                        const SearchLimits& lim = {});

// Some isomorphism if one exists; deterministic given the vertex orderings.
std::optional<BallMap> ball_isomorphic(const Ball& a, const Ball& b, bool root_to_root);

// Restrictions to B_n(e) of root-fixing automorphisms of B_{n+k}(e),
// deduplicated; the finite proxy for Aut_e(G).
std::vector<BallMap> extendable_automorphisms(GroupPtr G, int n, int k,
                                              const SearchLimits& lim = {},
                                              std::size_t max_vertices = kDefaultVertexCap);

// One uniformly-shuffled root-fixing automorphism (identity included in the
// sample space); height_preserving additionally pins the order channel.
std::optional<BallMap> random_root_fixing_automorphism(const Ball& b, uint64_t seed,
                                                       bool height_preserving = false);

// All root-fixing automorphisms, or std::nullopt when more than `cap` exist.
std::optional<std::vector<BallMap>> try_enumerate_automorphisms(const Ball& b, bool root_fixing,
                                                                bool height_preserving,
                                                                std::size_t cap);

}  // namespace ck

#endif  // CAYLEYKIT_AUTOMORPHISM_HPP_
