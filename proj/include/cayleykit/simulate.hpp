#ifndef CAYLEYKIT_SIMULATE_HPP_
#define CAYLEYKIT_SIMULATE_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "cayleykit/rules.hpp"

namespace ck {

struct SimReport {
  int samples = 0;
  int root_failures = 0;
  std::vector<double> per_sample_defect;
  double estimate() const { return samples == 0 ? 0.0 : static_cast<double>(root_failures) / samples; }
  double half_width() const {
    if (samples == 0) return 0.0;
    double p = estimate();
    return 1.96 * std::sqrt(p * (1.0 - p) / samples);
  }
};

// Draw seeds on B_R(e), evaluate the rule at every vertex with a full
// radius-r neighbourhood, test the constraint at the root per sample.
SimReport simulate(GroupPtr G, const LocalRule& rule, int R, const Constraint& c, int samples,
                   uint64_t seed, std::size_t max_vertices = kDefaultVertexCap);

// Same loop over a prebuilt host (lets DL balls and tests reuse hosts).
SimReport simulate_on(const Ball& host, const LocalRule& rule, const Constraint& c, int samples,
                      uint64_t seed);

// Assemble the rule's outputs over one sample into a labelling; vertices
// where the rule fails stay unset. eval_depth receives the deepest evaluated
// layer when non-null.
Labelling assemble_labelling(const Ball& host, const LocalRule& rule, const SeedMatrix& seeds,
                             const void* prep, int* eval_depth = nullptr);

struct InvarianceReport {
  bool ok = true;
  int trials = 0;
  int autos_checked = 0;
  bool sampled = false;  // automorphism group too large, sampled instead
  std::string counterexample;
};

// Equivariance of a diagram-oblivious rule at the root under root-fixing
// automorphisms of the seeded ball: evaluate(seeds o sigma^-1) must equal
// the sigma-pushforward of evaluate(seeds). Order-aware rules quantify over
// height-preserving automorphisms.
InvarianceReport invariance_check(const LocalRule& rule, const Ball& b, int trials, uint64_t seed);

}  // namespace ck

#endif  // CAYLEYKIT_SIMULATE_HPP_
