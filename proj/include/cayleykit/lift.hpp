#ifndef CAYLEYKIT_LIFT_HPP_
#define CAYLEYKIT_LIFT_HPP_

#include "cayleykit/simulate.hpp"

namespace ck {

// Composition of a diagram-oblivious rule emitting diagram labels with a
// diagram-aware rule: run the diagram rule over the inner ball on layer-1
// seeds, take the holonomy h from the center, pull layer-2 seeds to a
// standard template ball along h, run the aware rule there, and push its
// output back through h^-1. Fails at the center when the emitted diagram is
// inconsistent within the needed radius.
LocalRule lift_rule(const LocalRule& diagram_rule, const LocalRule& gamma_rule, GroupPtr G);

struct HolonomyIdentityReport {
  int cocycle_checked = 0;
  int cocycle_failed = 0;
  int shift_checked = 0;
  int shift_failed = 0;
  bool ok() const { return cocycle_failed == 0 && shift_failed == 0; }
};

// Exact checks of the holonomy identities on a consistent diagram:
// (1) rebasing: h(w) = h(u) * h_u(w) for random vertex pairs, and
// (2) shifts: holonomy(sigma . d)(v) = h(sigma^-1 v) for random root-fixing
//     ball automorphisms sigma.
HolonomyIdentityReport holonomy_identity_test(const Diagram& d, int trials, uint64_t seed);

}  // namespace ck

#endif  // CAYLEYKIT_LIFT_HPP_
