#ifndef CAYLEYKIT_RULES_HPP_
#define CAYLEYKIT_RULES_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cayleykit/diagram.hpp"

namespace ck {

// Per-sample i.i.d. uniforms on ball vertices, vertex-major; reproducible
// from (seed, sample) and the ball ordering via splitmix64.
struct SeedMatrix {
  int layers = 1;
  std::vector<double> vals;
  double at(int v, int l = 0) const { return vals[static_cast<std::size_t>(v) * layers + l]; }
};

SeedMatrix draw_seeds(int n_vertices, int layers, uint64_t seed, uint64_t sample);

inline constexpr int kWholeHostRadius = -1;

struct RuleOutput {
  bool ok = false;
  int root_label = -1;           // arity 1
  std::vector<int> edge_labels;  // arity 2; parallel to host.adj[center]
  std::string why;               // failure note
};

// Pure local rule evaluated at a center vertex of a host ball. Rules read
// only the radius-r window around the center (spot-checked by perturbation
// tests). Diagram-oblivious rules must not read host edge labels;
// order-aware rules additionally read the ball's height channel.
struct LocalRule {
  std::string name;
  int radius = 1;  // kWholeHostRadius reads the whole host
  bool diagram_aware = false;
  bool order_aware = false;
  int out_arity = 2;
  std::vector<std::string> alphabet;
  int seed_layers = 1;
  std::function<std::shared_ptr<const void>(const Ball&)> prepare;
  std::function<RuleOutput(const Ball&, int, const SeedMatrix&, const void*)> eval;

  RuleOutput evaluate(const Ball& host, int center, const SeedMatrix& seeds,
                      const void* prep) const {
    return eval(host, center, seeds, prep);
  }
};

// Orients each 3-cycle by a seed-symmetric statistic and labels the cycle
// edges with the order-3 generator pair; bridge edges get the involution.
LocalRule rule_triangle_orientation(GroupPtr c2c3);

// Fiber-swap diagram on C2 x H3(Z): thresholded seed bits choose twin swaps,
// fibers and quotient labels are identified graph-theoretically.
LocalRule rule_heisenberg_diagram(GroupPtr heis_c2);

// Proper label choice on each ascending edge quadruple of the Diestel-Leader
// order structure, by a uniform seed-symmetric coin per quadruple.
LocalRule rule_lamplighter_order_diagram(GroupPtr lamp_dl);

// color = smallest color unused by lower-seed neighbours, run to fixpoint
// over the whole visible window.
LocalRule rule_greedy_color(int k);

LocalRule rule_constant_color(int k, int color);

// Diagram-aware echo: emits exactly the generator labels of the host edges.
LocalRule rule_edge_echo(GroupPtr G);

// CLI-facing registry: triangle-orientation, heisenberg-diagram,
// lamplighter-order-diagram, greedy-color(k), constant-color(k,c), edge-echo.
LocalRule make_rule(const std::string& name, GroupPtr G);

}  // namespace ck

#endif  // CAYLEYKIT_RULES_HPP_
