#ifndef CAYLEYKIT_CONSTRAINT_HPP_
#define CAYLEYKIT_CONSTRAINT_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayleykit/ball.hpp"
#include "cayleykit/labelling.hpp"

namespace ck {

// Local region handed to constraint predicates: the vertices of B_r(x)
// inside the host, with host-relative distances from x.
struct Region {
  int center = 0;
  int radius = 0;
  std::vector<int> verts;        // host ids, (distance, id)-sorted
  std::vector<int> dist;         // host-sized, -1 outside region
  bool contains(int v) const { return v >= 0 && v < static_cast<int>(dist.size()) && dist[v] >= 0; }
};

Region make_region(const Ball& host, int center, int radius);

// Radius-n local constraint over a finite alphabet, arity 1 (vertices) or
// 2 (ordered edges). `accept` assumes the region is the exact ball of the
// constraint radius; totality of the labelling over the region is part of
// acceptance. `partial_violated` may give an early negative on partial
// labellings (used by the solver); it must never reject extendable states.
struct Constraint {
  std::string name;
  int radius = 1;
  int arity = 1;
  std::vector<std::string> alphabet;
  std::function<bool(const Ball&, const Labelling&, const Region&)> accept;
  std::function<bool(const Ball&, const Labelling&, const Region&)> partial_violated;
  std::shared_ptr<const void> data;  // builtin-specific payload
};

struct DefectReport {
  int checked = 0;
  std::vector<int> defective;
  double fraction() const { return checked == 0 ? 0.0 : static_cast<double>(defective.size()) / checked; }
};

Constraint proper_coloring(int k);
Constraint orientation_constraint();
Constraint perfect_matching_constraint();

// Parses the line-oriented constraint format; throws std::invalid_argument
// with a "line L[, column C]" position on malformed input.
Constraint parse_constraint(const std::string& text);

// True iff f meets c at x. Throws when B_radius(x) pokes outside the host.
bool meets_at(const Ball& host, const Labelling& f, int x, const Constraint& c);

// Defect report over all checkable vertices (full constraint ball inside).
DefectReport defect_set(const Ball& host, const Labelling& f, const Constraint& c);

struct SolveResult {
  enum class Status { Found, Absent, Unknown } status = Status::Absent;
  std::optional<Labelling> labelling;
};

// Backtracking search for a total labelling meeting c at every checkable
// vertex; most-constrained-site-first, label order fixed by the alphabet.
SolveResult solve_decoration(const Ball& host, const Constraint& c,
                             std::size_t node_budget = 2000000);

// Lemma-style edge->vertex coding: turns an arity-2 constraint into an
// arity-1 constraint of radius n+1 over the tuple alphabet A^(E u {0});
// hosts must supply generator edge labels as addresses.
Constraint edge_to_vertex_coding(const Constraint& c, GroupPtr G);

// T-coding helpers for the constraint produced above.
Labelling code_encode(const Ball& host, const Labelling& edge_f, const Constraint& coded);
Labelling code_decode(const Ball& host, const Labelling& vertex_h, const Constraint& coded);

}  // namespace ck

#endif  // CAYLEYKIT_CONSTRAINT_HPP_
