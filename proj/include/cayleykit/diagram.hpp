#ifndef CAYLEYKIT_DIAGRAM_HPP_
#define CAYLEYKIT_DIAGRAM_HPP_

#include <array>
#include <memory>
#include <vector>

#include "cayleykit/automorphism.hpp"
#include "cayleykit/constraint.hpp"

namespace ck {

using BallPtr = std::shared_ptr<const Ball>;

// Total edge labelling of a group ball by generators, with labels(u,v) and
// labels(v,u) inverse-paired (checked at construction).
struct Diagram {
  BallPtr host;
  std::vector<std::vector<int>> labels;  // parallel to host->adj

  int label(int u, int v) const;
  Labelling as_labelling() const;

  static Diagram standard(BallPtr host);
  static Diagram from_label_table(BallPtr host, std::vector<std::vector<int>> labels);
  static Diagram from_labelling(BallPtr host, const Labelling& f);
};

// phi_i: (1) per-vertex label injectivity, (2) full-degree vertices see every
// label, (3) length-<=i walk products equal the identity exactly on closed
// walks. Arity 2, radius i, alphabet = generator labels.
Constraint cayley_constraint(GroupPtr G, int i);

DefectReport verify_diagram(const Diagram& d, int i);

Element path_product(const Diagram& d, const std::vector<int>& path);

// Label products along a BFS tree from the base; consistent iff every edge
// satisfies values(u) * label(u,v) = values(v).
struct Holonomy {
  int base = 0;
  std::vector<Element> values;
  bool consistent = false;
};

Holonomy holonomy(const Diagram& d, int base = 0);

// All total edge labellings satisfying the phi_i conditions read over the
// whole host (injectivity everywhere, surjectivity at full-degree vertices,
// walk closure for all host walks of length <= i). Deterministic order.
std::vector<Diagram> enumerate_diagrams(BallPtr host, int i,
                                        const SearchLimits& lim = {});

// f . d = d o f^-1
Diagram shift_diagram(const Diagram& d, const BallMap& f);

// Finite analogues of the epsilon-action defect quantities.
struct EpsilonDefects {
  int checked = 0;
  double preimage = 0;     // worst gamma: interior x with |a(gamma,.)^-1(x)| != 1
  double distortion = 0;   // worst singleton measure distortion
  double composition = 0;  // interior x violating a(gamma'gamma, x) = a(gamma, a(gamma', x))
};

EpsilonDefects epsilon_action_defects(const Diagram& d);

// All 3-cliques of a ball, each listed once with u < v < w.
std::vector<std::array<int, 3>> triangles_of(const Ball& b);

}  // namespace ck

#endif  // CAYLEYKIT_DIAGRAM_HPP_
