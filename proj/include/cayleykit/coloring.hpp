#ifndef CAYLEYKIT_COLORING_HPP_
#define CAYLEYKIT_COLORING_HPP_

#include <vector>

#include "cayleykit/labelling.hpp"
#include "cayleykit/rules.hpp"

namespace ck {

// C3 orbits {x, xb, xb^2} of a gamma/delta-shaped ball, identified from the
// graph's triangle structure with the group's b-direction for the coloring
// offsets. Orbits are "full" when all three members lie in the ball.
struct OrbitStructure {
  std::vector<std::array<int, 3>> orbit_members;  // -1 padded when clipped
  std::vector<int> orbit_of;                      // vertex -> orbit id
  std::vector<std::vector<int>> orbit_adj;        // quotient adjacency
  std::vector<char> full;
  int b_gen = -1;                                 // forward b generator index
};

OrbitStructure orbit_structure(const Ball& b);

struct AugmentReport {
  std::vector<double> missed_fraction;  // after greedy, then after each round
  std::vector<int> set_sizes;           // |A| matching missed_fraction entries
  std::vector<int> independent_set;
  Labelling coloring;                   // c(v) = i with v b^i in A, where defined
  int measured_orbits = 0;
  bool invariants_ok = true;            // independence and <=1 hit per orbit throughout
};

// Seed-prioritized augmenting-chain construction of an independent set
// meeting C3 orbits, plus the induced 3-coloring.
AugmentReport augmenting_3coloring(const Ball& b, const SeedMatrix& seeds, int rounds);

struct ParityReport {
  int checked_orbits = 0;
  bool values_pm1 = true;        // c_f in {+1, -1}
  bool orbit_constant = true;
  bool adjacent_differ = true;
  std::vector<int> orbit_cf;     // per orbit: 1 or 2, -1 unchecked
  // fraction of checked orbit pairs at each quotient distance with equal c_f
  std::vector<double> agreement_by_distance;
  bool quotient_proper_2coloring = true;
};

// Verifies the parity-obstruction properties of a proper 3-coloring on full
// orbits of a delta ball; throws when f is improper on a checked orbit.
ParityReport parity_analysis(const Ball& b, const Labelling& f);

}  // namespace ck

#endif  // CAYLEYKIT_COLORING_HPP_
