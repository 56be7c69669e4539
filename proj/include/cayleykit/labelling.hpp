#ifndef CAYLEYKIT_LABELLING_HPP_
#define CAYLEYKIT_LABELLING_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace ck {

// Partial labelling of a host ball: vertices (arity 1) or ordered adjacent
// pairs (arity 2) over a finite alphabet, stored as indices; -1 means unset.
struct Labelling {
  int arity = 1;
  std::vector<std::string> alphabet;
  std::vector<int> vertex_vals;
  std::unordered_map<int64_t, int> edge_vals;

  static int64_t ekey(int u, int v) {
    return (static_cast<int64_t>(u) << 31) | static_cast<int64_t>(v);
  }

  int vertex(int v) const {
    return v < static_cast<int>(vertex_vals.size()) ? vertex_vals[v] : -1;
  }
  int edge(int u, int v) const {
    auto it = edge_vals.find(ekey(u, v));
    return it == edge_vals.end() ? -1 : it->second;
  }
  void set_vertex(int v, int a) {
    if (v >= static_cast<int>(vertex_vals.size())) vertex_vals.resize(v + 1, -1);
    vertex_vals[v] = a;
  }
  void set_edge(int u, int v, int a) {
    if (a < 0) {
      edge_vals.erase(ekey(u, v));
    } else {
      edge_vals[ekey(u, v)] = a;
    }
  }
  int label_index(const std::string& s) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == s) return static_cast<int>(i);
    }
    return -1;
  }
};

}  // namespace ck

#endif  // CAYLEYKIT_LABELLING_HPP_
