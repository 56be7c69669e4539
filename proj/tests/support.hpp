#ifndef CAYLEYKIT_TESTS_SUPPORT_HPP_
#define CAYLEYKIT_TESTS_SUPPORT_HPP_

// Shared test-only helpers: independent oracles and deterministic sampling.
// Everything here is deliberately written against the public contracts only,
// so the oracles stay independent of the library implementation paths.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cayleykit/group.hpp"

namespace cktest {

// splitmix64: tiny deterministic rng for property tests
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
};

inline std::vector<std::string> random_word(const ck::MarkedGroup& g, Rng& rng, int max_len) {
  int len = rng.below(max_len + 1);
  std::vector<std::string> w;
  for (int i = 0; i < len; ++i) w.push_back(g.gens[rng.below(g.degree())].label);
  return w;
}

inline ck::Element random_element(const ck::MarkedGroup& g, Rng& rng, int max_len) {
  return g.canonical(random_word(g, rng, max_len));
}

// 3x3 integer matrix oracle for the Heisenberg group.
using Mat3 = std::array<std::array<int64_t, 3>, 3>;

inline Mat3 heis_matrix(int64_t a, int64_t b, int64_t c) {
  return {{{1, a, b}, {0, 1, c}, {0, 0, 1}}};
}

inline Mat3 mat_mul(const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int64_t s = 0;
      for (int k = 0; k < 3; ++k) s += x[i][k] * y[k][j];
      r[i][j] = s;
    }
  return r;
}

// Naive ball oracle: enumerate all generator words of length <= n,
// canonicalize, deduplicate.
inline std::vector<ck::Element> naive_ball_elements(const ck::MarkedGroup& g, int n) {
  std::vector<ck::Element> layer{g.identity()};
  std::vector<ck::Element> all{g.identity()};
  std::set<std::string> seen{g.str(g.identity())};
  for (int step = 0; step < n; ++step) {
    std::vector<ck::Element> next;
    for (const auto& x : layer) {
      for (const auto& gen : g.gens) {
        ck::Element y = g.multiply(x, gen.elem);
        auto key = g.str(y);
        if (seen.insert(key).second) {
          next.push_back(y);
          all.push_back(y);
        }
      }
    }
    layer = std::move(next);
  }
  return all;
}

inline std::size_t naive_ball_edges(const ck::MarkedGroup& g, int n) {
  auto elems = naive_ball_elements(g, n);
  std::set<std::string> keys;
  for (const auto& x : elems) keys.insert(g.str(x));
  std::size_t cnt = 0;
  for (const auto& x : elems) {
    for (const auto& gen : g.gens) {
      if (keys.count(g.str(g.multiply(x, gen.elem)))) ++cnt;
    }
  }
  return cnt / 2;
}

}  // namespace cktest

#endif
