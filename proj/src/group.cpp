#include "cayleykit/group.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ck {

bool TupleElt::operator==(const TupleElt& o) const { return parts == o.parts; }

namespace {

inline std::size_t hash_mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

std::size_t hash_value(const Element& e) {
  std::size_t h = e.rep.index() * 0x9e3779b9ULL;
  switch (e.rep.index()) {
    case 0:
      return hash_mix(h, std::hash<int64_t>{}(std::get<int64_t>(e.rep)));
    case 1: {
      const auto& w = std::get<WordElt>(e.rep);
      for (const auto& [f, x] : w.syl) {
        h = hash_mix(h, std::hash<int64_t>{}((static_cast<int64_t>(f) << 40) ^ x));
      }
      return h;
    }
    case 2: {
      const auto& m = std::get<HeisElt>(e.rep);
      h = hash_mix(h, std::hash<int64_t>{}(m.a));
      h = hash_mix(h, std::hash<int64_t>{}(m.b));
      return hash_mix(h, std::hash<int64_t>{}(m.c));
    }
    case 3: {
      const auto& l = std::get<LampElt>(e.rep);
      h = hash_mix(h, std::hash<int64_t>{}(l.shift));
      for (int64_t a : l.lamps) h = hash_mix(h, std::hash<int64_t>{}(a));
      return h;
    }
    default: {
      const auto& t = std::get<TupleElt>(e.rep);
      for (const auto& p : t.parts) h = hash_mix(h, hash_value(p));
      return h;
    }
  }
}

GroupDesc GroupDesc::free_group(int rank) {
  GroupDesc d;
  d.kind = Kind::Free;
  d.rank = rank;
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  return d;
}

GroupDesc GroupDesc::cyclic(int64_t order) {
  GroupDesc d;
  d.kind = Kind::Cyclic;
  d.order = order;
  if (order < 2) throw std::invalid_argument("cyclic order must be >= 2");
  return d;
}

GroupDesc GroupDesc::free_product(std::vector<int64_t> orders) {
  GroupDesc d;
  d.kind = Kind::FreeProduct;
  if (orders.size() < 2) throw std::invalid_argument("free product needs >= 2 factors");
  for (int64_t k : orders) {
    if (k != 0 && k < 2) throw std::invalid_argument("free product factor order must be 0 (Z) or >= 2");
  }
  d.factor_orders = std::move(orders);
  return d;
}

GroupDesc GroupDesc::direct(GroupDesc left, GroupDesc right) {
  GroupDesc d;
  d.kind = Kind::Direct;
  d.sub.push_back(std::move(left));
  d.sub.push_back(std::move(right));
  return d;
}

GroupDesc GroupDesc::semidirect(GroupDesc normal, GroupDesc acting, Action a) {
  GroupDesc d;
  d.kind = Kind::Semidirect;
  d.sub.push_back(std::move(normal));
  d.sub.push_back(std::move(acting));
  d.action = a;
  if (a == Action::None) throw std::invalid_argument("semidirect needs an action");
  if (a == Action::InvertNormal) {
    const auto& n = d.sub[0];
    bool abelian = n.kind == Kind::Cyclic || (n.kind == Kind::Free && n.rank == 1);
    if (!abelian) throw std::invalid_argument("invert-normal action needs an abelian normal part");
  }
  if (a == Action::LampFlip && d.sub[0].kind != Kind::Lamplighter) {
    throw std::invalid_argument("lamp-flip action needs a lamplighter normal part");
  }
  return d;
}

GroupDesc GroupDesc::heisenberg() {
  GroupDesc d;
  d.kind = Kind::Heisenberg;
  return d;
}

GroupDesc GroupDesc::lamplighter() {
  GroupDesc d;
  d.kind = Kind::Lamplighter;
  return d;
}

namespace {

int64_t norm_exp(int64_t e, int64_t order) {
  if (order == 0) return e;
  e %= order;
  if (e < 0) e += order;
  return e;
}

// Append syllable with reduction against the tail.
void push_syl(std::vector<std::pair<int32_t, int64_t>>& out, int32_t f, int64_t e,
              const std::vector<int64_t>& orders) {
  int64_t order = orders.empty() ? 0 : orders[f];
  e = norm_exp(e, order);
  if (e == 0) return;
  if (!out.empty() && out.back().first == f) {
    int64_t m = norm_exp(out.back().second + e, order);
    out.pop_back();
    if (m != 0) out.emplace_back(f, m);
  } else {
    out.emplace_back(f, e);
  }
}

std::vector<int64_t> word_orders(const GroupDesc& d) {
  if (d.kind == GroupDesc::Kind::Free) return std::vector<int64_t>(d.rank, 0);
  return d.factor_orders;
}

Element word_mul(const GroupDesc& d, const WordElt& x, const WordElt& y) {
  auto orders = word_orders(d);
  WordElt r;
  r.syl.reserve(x.syl.size() + y.syl.size());
  for (const auto& [f, e] : x.syl) push_syl(r.syl, f, e, orders);
  for (const auto& [f, e] : y.syl) push_syl(r.syl, f, e, orders);
  return Element(std::move(r));
}

Element word_inv(const GroupDesc& d, const WordElt& x) {
  auto orders = word_orders(d);
  WordElt r;
  for (auto it = x.syl.rbegin(); it != x.syl.rend(); ++it) push_syl(r.syl, it->first, -it->second, orders);
  return Element(std::move(r));
}

Element lamp_mul(const LampElt& x, const LampElt& y) {
  LampElt r;
  r.shift = x.shift + y.shift;
  // symmetric difference of x.lamps and (x.shift + y.lamps), both sorted
  std::vector<int64_t> shifted;
  shifted.reserve(y.lamps.size());
  for (int64_t a : y.lamps) shifted.push_back(a + x.shift);
  std::set_symmetric_difference(x.lamps.begin(), x.lamps.end(), shifted.begin(), shifted.end(),
                                std::back_inserter(r.lamps));
  return Element(std::move(r));
}

Element lamp_inv(const LampElt& x) {
  LampElt r;
  r.shift = -x.shift;
  r.lamps.reserve(x.lamps.size());
  for (int64_t a : x.lamps) r.lamps.push_back(a - x.shift);
  std::sort(r.lamps.begin(), r.lamps.end());
  return Element(std::move(r));
}

// theta for the lamplighter extension: the automorphism inverting every
// Diestel-Leader generator, (n, A) -> (-n, {-1-a : a in A}).
Element lamp_flip(const LampElt& x) {
  LampElt r;
  r.shift = -x.shift;
  for (int64_t a : x.lamps) r.lamps.push_back(-1 - a);
  std::sort(r.lamps.begin(), r.lamps.end());
  return Element(std::move(r));
}

// Parity character of the acting component (homomorphism onto C2).
int parity(const GroupDesc& d, const Element& x) {
  switch (d.kind) {
    case GroupDesc::Kind::Cyclic: {
      if (d.order % 2 != 0) throw std::invalid_argument("no parity character on odd cyclic group");
      return static_cast<int>(std::get<int64_t>(x.rep) % 2);
    }
    case GroupDesc::Kind::FreeProduct: {
      for (int64_t k : d.factor_orders) {
        if (k != 2) throw std::invalid_argument("parity character needs C2 free-product factors");
      }
      return static_cast<int>(std::get<WordElt>(x.rep).syl.size() % 2);
    }
    default:
      throw std::invalid_argument("no parity character for this acting group");
  }
}

Element apply_theta(const GroupDesc& d, const Element& x) {
  const GroupDesc& normal = d.sub[0];
  switch (d.action) {
    case GroupDesc::Action::InvertNormal:
      return group_inverse(normal, x);
    case GroupDesc::Action::LampFlip:
      return lamp_flip(std::get<LampElt>(x.rep));
    default:
      throw std::logic_error("semidirect descriptor without action");
  }
}

}  // namespace

Element group_identity(const GroupDesc& d) {
  switch (d.kind) {
    case GroupDesc::Kind::Cyclic:
      return Element(int64_t{0});
    case GroupDesc::Kind::Free:
    case GroupDesc::Kind::FreeProduct:
      return Element(WordElt{});
    case GroupDesc::Kind::Heisenberg:
      return Element(HeisElt{});
    case GroupDesc::Kind::Lamplighter:
      return Element(LampElt{});
    case GroupDesc::Kind::Direct: {
      TupleElt t;
      t.parts.push_back(group_identity(d.sub[0]));
      t.parts.push_back(group_identity(d.sub[1]));
      return Element(std::move(t));
    }
    case GroupDesc::Kind::Semidirect: {
      // components stored (acting, normal)
      TupleElt t;
      t.parts.push_back(group_identity(d.sub[1]));
      t.parts.push_back(group_identity(d.sub[0]));
      return Element(std::move(t));
    }
  }
  throw std::logic_error("unreachable");
}

Element group_multiply(const GroupDesc& d, const Element& x, const Element& y) {
  switch (d.kind) {
    case GroupDesc::Kind::Cyclic:
      return Element(norm_exp(std::get<int64_t>(x.rep) + std::get<int64_t>(y.rep), d.order));
    case GroupDesc::Kind::Free:
    case GroupDesc::Kind::FreeProduct:
      return word_mul(d, std::get<WordElt>(x.rep), std::get<WordElt>(y.rep));
    case GroupDesc::Kind::Heisenberg: {
      const auto& u = std::get<HeisElt>(x.rep);
      const auto& v = std::get<HeisElt>(y.rep);
      return Element(HeisElt{u.a + v.a, u.b + v.b + u.a * v.c, u.c + v.c});
    }
    case GroupDesc::Kind::Lamplighter:
      return lamp_mul(std::get<LampElt>(x.rep), std::get<LampElt>(y.rep));
    case GroupDesc::Kind::Direct: {
      const auto& u = std::get<TupleElt>(x.rep);
      const auto& v = std::get<TupleElt>(y.rep);
      TupleElt t;
      t.parts.push_back(group_multiply(d.sub[0], u.parts[0], v.parts[0]));
      t.parts.push_back(group_multiply(d.sub[1], u.parts[1], v.parts[1]));
      return Element(std::move(t));
    }
    case GroupDesc::Kind::Semidirect: {
      // (a, x)(b, y) = (ab, theta^parity(b)(x) y), elements written actor*normal
      const auto& u = std::get<TupleElt>(x.rep);
      const auto& v = std::get<TupleElt>(y.rep);
      const GroupDesc& normal = d.sub[0];
      const GroupDesc& acting = d.sub[1];
      TupleElt t;
      t.parts.push_back(group_multiply(acting, u.parts[0], v.parts[0]));
      Element nx = u.parts[1];
      if (parity(acting, v.parts[0]) == 1) nx = apply_theta(d, nx);
      t.parts.push_back(group_multiply(normal, nx, v.parts[1]));
      return Element(std::move(t));
    }
  }
  throw std::logic_error("unreachable");
}

Element group_inverse(const GroupDesc& d, const Element& x) {
  switch (d.kind) {
    case GroupDesc::Kind::Cyclic:
      return Element(norm_exp(-std::get<int64_t>(x.rep), d.order));
    case GroupDesc::Kind::Free:
    case GroupDesc::Kind::FreeProduct:
      return word_inv(d, std::get<WordElt>(x.rep));
    case GroupDesc::Kind::Heisenberg: {
      const auto& m = std::get<HeisElt>(x.rep);
      return Element(HeisElt{-m.a, m.a * m.c - m.b, -m.c});
    }
    case GroupDesc::Kind::Lamplighter:
      return lamp_inv(std::get<LampElt>(x.rep));
    case GroupDesc::Kind::Direct: {
      const auto& u = std::get<TupleElt>(x.rep);
      TupleElt t;
      t.parts.push_back(group_inverse(d.sub[0], u.parts[0]));
      t.parts.push_back(group_inverse(d.sub[1], u.parts[1]));
      return Element(std::move(t));
    }
    case GroupDesc::Kind::Semidirect: {
      const auto& u = std::get<TupleElt>(x.rep);
      const GroupDesc& normal = d.sub[0];
      const GroupDesc& acting = d.sub[1];
      TupleElt t;
      t.parts.push_back(group_inverse(acting, u.parts[0]));
      Element ni = group_inverse(normal, u.parts[1]);
      if (parity(acting, u.parts[0]) == 1) ni = apply_theta(d, ni);
      t.parts.push_back(std::move(ni));
      return Element(std::move(t));
    }
  }
  throw std::logic_error("unreachable");
}

bool group_valid(const GroupDesc& d, const Element& x) {
  switch (d.kind) {
    case GroupDesc::Kind::Cyclic:
      return std::holds_alternative<int64_t>(x.rep) && std::get<int64_t>(x.rep) >= 0 &&
             std::get<int64_t>(x.rep) < d.order;
    case GroupDesc::Kind::Free:
    case GroupDesc::Kind::FreeProduct: {
      if (!std::holds_alternative<WordElt>(x.rep)) return false;
      const auto& w = std::get<WordElt>(x.rep);
      auto orders = word_orders(d);
      int32_t prev = -1;
      for (const auto& [f, e] : w.syl) {
        if (f < 0 || f >= static_cast<int32_t>(orders.size()) || f == prev) return false;
        if (orders[f] == 0 ? e == 0 : (e <= 0 || e >= orders[f])) return false;
        prev = f;
      }
      return true;
    }
    case GroupDesc::Kind::Heisenberg:
      return std::holds_alternative<HeisElt>(x.rep);
    case GroupDesc::Kind::Lamplighter: {
      if (!std::holds_alternative<LampElt>(x.rep)) return false;
      const auto& l = std::get<LampElt>(x.rep);
      return std::is_sorted(l.lamps.begin(), l.lamps.end()) &&
             std::adjacent_find(l.lamps.begin(), l.lamps.end()) == l.lamps.end();
    }
    case GroupDesc::Kind::Direct: {
      if (!std::holds_alternative<TupleElt>(x.rep)) return false;
      const auto& t = std::get<TupleElt>(x.rep);
      return t.parts.size() == 2 && group_valid(d.sub[0], t.parts[0]) && group_valid(d.sub[1], t.parts[1]);
    }
    case GroupDesc::Kind::Semidirect: {
      if (!std::holds_alternative<TupleElt>(x.rep)) return false;
      const auto& t = std::get<TupleElt>(x.rep);
      return t.parts.size() == 2 && group_valid(d.sub[1], t.parts[0]) && group_valid(d.sub[0], t.parts[1]);
    }
  }
  return false;
}

std::string element_str(const GroupDesc& d, const Element& x) {
  std::ostringstream os;
  switch (d.kind) {
    case GroupDesc::Kind::Cyclic:
      os << std::get<int64_t>(x.rep);
      break;
    case GroupDesc::Kind::Free:
    case GroupDesc::Kind::FreeProduct: {
      const auto& w = std::get<WordElt>(x.rep);
      if (w.syl.empty()) {
        os << "e";
        break;
      }
      bool first = true;
      for (const auto& [f, e] : w.syl) {
        if (!first) os << ".";
        first = false;
        os << "x" << f;
        if (e != 1) os << "^" << e;
      }
      break;
    }
    case GroupDesc::Kind::Heisenberg: {
      const auto& m = std::get<HeisElt>(x.rep);
      os << "(" << m.a << "," << m.b << "," << m.c << ")";
      break;
    }
    case GroupDesc::Kind::Lamplighter: {
      const auto& l = std::get<LampElt>(x.rep);
      os << "(" << l.shift << ",{";
      for (std::size_t i = 0; i < l.lamps.size(); ++i) {
        if (i) os << ",";
        os << l.lamps[i];
      }
      os << "})";
      break;
    }
    case GroupDesc::Kind::Direct: {
      const auto& t = std::get<TupleElt>(x.rep);
      os << "(" << element_str(d.sub[0], t.parts[0]) << "|" << element_str(d.sub[1], t.parts[1]) << ")";
      break;
    }
    case GroupDesc::Kind::Semidirect: {
      const auto& t = std::get<TupleElt>(x.rep);
      os << "[" << element_str(d.sub[1], t.parts[0]) << ";" << element_str(d.sub[0], t.parts[1]) << "]";
      break;
    }
  }
  return os.str();
}

Element MarkedGroup::multiply(const Element& x, const Element& y) const {
  return group_multiply(desc, x, y);
}

Element MarkedGroup::inverse(const Element& x) const { return group_inverse(desc, x); }

Element MarkedGroup::canonical(const std::vector<std::string>& word) const {
  Element acc = identity();
  for (const auto& l : word) {
    int i = label_index(l);
    if (i < 0) throw std::invalid_argument("unknown generator label: " + l);
    acc = multiply(acc, gens[i].elem);
  }
  return acc;
}

Element MarkedGroup::semidirect_action(const Element& actor, const Element& target) const {
  if (desc.kind != GroupDesc::Kind::Semidirect) {
    throw std::invalid_argument("semidirect_action: group is not a semidirect product");
  }
  if (!group_valid(desc.sub[1], actor)) throw std::invalid_argument("actor not in the acting part");
  if (!group_valid(desc.sub[0], target)) throw std::invalid_argument("target not in the normal part");
  if (parity(desc.sub[1], actor) == 0) return target;
  return apply_theta(desc, target);
}

int MarkedGroup::label_index(const std::string& label) const {
  auto it = label_idx_.find(label);
  return it == label_idx_.end() ? -1 : it->second;
}

int MarkedGroup::element_index(const Element& e) const {
  auto it = elem_idx_.find(e);
  return it == elem_idx_.end() ? -1 : it->second;
}

MarkedGroup make_group(const GroupDesc& desc, std::vector<Generator> gens, std::string name) {
  MarkedGroup g;
  g.desc = desc;
  g.name = std::move(name);
  Element id = group_identity(desc);
  // close under inverses with derived labels
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Element inv = group_inverse(desc, gens[i].elem);
    bool found = false;
    for (const auto& h : gens) {
      if (h.elem == inv) {
        found = true;
        break;
      }
    }
    if (!found) gens.push_back({gens[i].label + "^-1", inv});
  }
  for (const auto& gen : gens) {
    if (gen.elem == id) throw std::invalid_argument("generator equals identity: " + gen.label);
    if (!group_valid(desc, gen.elem)) throw std::invalid_argument("non-canonical generator: " + gen.label);
  }
  g.gens = std::move(gens);
  for (int i = 0; i < static_cast<int>(g.gens.size()); ++i) {
    if (!g.label_idx_.emplace(g.gens[i].label, i).second) {
      throw std::invalid_argument("duplicate generator label: " + g.gens[i].label);
    }
    if (!g.elem_idx_.emplace(g.gens[i].elem, i).second) {
      throw std::invalid_argument("duplicate generator element under label: " + g.gens[i].label);
    }
  }
  g.inverse_pair.assign(g.gens.size(), -1);
  for (int i = 0; i < static_cast<int>(g.gens.size()); ++i) {
    Element inv = group_inverse(desc, g.gens[i].elem);
    int j = g.element_index(inv);
    if (j < 0) throw std::invalid_argument("generating set not symmetric at " + g.gens[i].label);
    g.inverse_pair[i] = j;
  }
  // validate semidirect action on generators: involution and homomorphism
  if (desc.kind == GroupDesc::Kind::Semidirect) {
    const GroupDesc& normal = desc.sub[0];
    std::vector<Element> probes;
    for (const auto& gen : g.gens) {
      const auto& t = std::get<TupleElt>(gen.elem.rep);
      if (!(t.parts[1] == group_identity(normal))) probes.push_back(t.parts[1]);
    }
    probes.push_back(group_identity(normal));
    for (const auto& p : probes) {
      Element tp = apply_theta(desc, p);
      if (!group_valid(normal, tp)) throw std::invalid_argument("action leaves the normal part");
      if (!(apply_theta(desc, tp) == p)) throw std::invalid_argument("semidirect action is not involutive");
      for (const auto& q : probes) {
        Element lhs = apply_theta(desc, group_multiply(normal, p, q));
        Element rhs = group_multiply(normal, tp, apply_theta(desc, q));
        if (!(lhs == rhs)) throw std::invalid_argument("semidirect action is not an automorphism");
      }
    }
  }
  return g;
}

namespace {

Element word1(int factor, int64_t exp) {
  WordElt w;
  w.syl.emplace_back(factor, exp);
  return Element(std::move(w));
}

Element pair_elt(Element a, Element b) {
  TupleElt t;
  t.parts.push_back(std::move(a));
  t.parts.push_back(std::move(b));
  return Element(std::move(t));
}

MarkedGroup preset_c2c3() {
  auto d = GroupDesc::free_product({2, 3});
  std::vector<Generator> gens{{"a", word1(0, 1)}, {"b", word1(1, 1)}};
  return make_group(d, std::move(gens), "c2*c3");
}

MarkedGroup preset_gamma() {
  auto d = GroupDesc::direct(GroupDesc::free_product({2, 2, 2}), GroupDesc::cyclic(3));
  Element e3 = group_identity(d.sub[1]);
  Element ew = group_identity(d.sub[0]);
  std::vector<Generator> gens;
  for (int i = 0; i < 3; ++i) {
    gens.push_back({"a" + std::to_string(i + 1), pair_elt(word1(i, 1), e3)});
  }
  gens.push_back({"b", pair_elt(ew, Element(int64_t{1}))});
  return make_group(d, std::move(gens), "gamma");
}

MarkedGroup preset_delta() {
  auto d = GroupDesc::semidirect(GroupDesc::cyclic(3), GroupDesc::free_product({2, 2, 2}),
                                 GroupDesc::Action::InvertNormal);
  Element e3 = group_identity(d.sub[0]);
  Element ew = group_identity(d.sub[1]);
  std::vector<Generator> gens;
  for (int i = 0; i < 3; ++i) {
    gens.push_back({"a" + std::to_string(i + 1), pair_elt(word1(i, 1), e3)});
  }
  gens.push_back({"b", pair_elt(ew, Element(int64_t{1}))});
  return make_group(d, std::move(gens), "delta");
}

MarkedGroup preset_dinf() {
  // D_inf = <r, s : s^2 = e, srs = r^-1>, marked with {r, s, rs, r^-2 s}.
  auto d = GroupDesc::semidirect(GroupDesc::free_group(1), GroupDesc::cyclic(2),
                                 GroupDesc::Action::InvertNormal);
  Element er = group_identity(d.sub[0]);
  Element e2 = group_identity(d.sub[1]);
  Element r = pair_elt(e2, word1(0, 1));
  Element s = pair_elt(Element(int64_t{1}), er);
  auto mul = [&](const Element& x, const Element& y) { return group_multiply(d, x, y); };
  Element rs = mul(r, s);
  Element rm2s = mul(mul(group_inverse(d, r), group_inverse(d, r)), s);
  std::vector<Generator> gens{{"r", r}, {"s", s}, {"rs", rs}, {"r^-2s", rm2s}};
  return make_group(d, std::move(gens), "dinf-grr");
}

MarkedGroup preset_f2() {
  auto d = GroupDesc::free_group(2);
  Element a = word1(0, 1), b = word1(1, 1);
  auto mul = [&](const Element& x, const Element& y) { return group_multiply(d, x, y); };
  std::vector<Generator> gens{{"a", a},
                              {"b", b},
                              {"ab", mul(a, b)},
                              {"ba", mul(b, a)},
                              {"baa", mul(mul(b, a), a)}};
  return make_group(d, std::move(gens), "f2-grr");
}

MarkedGroup preset_heis_c2() {
  auto d = GroupDesc::direct(GroupDesc::cyclic(2), GroupDesc::heisenberg());
  Element A(HeisElt{1, 0, 0});
  Element B(HeisElt{0, 0, 1});
  auto hd = GroupDesc::heisenberg();
  auto mul = [&](const Element& x, const Element& y) { return group_multiply(hd, x, y); };
  std::vector<std::pair<std::string, Element>> f{
      {"A", A}, {"B", B}, {"A2", mul(A, A)}, {"A2B", mul(mul(A, A), B)}, {"B2", mul(B, B)}};
  std::vector<std::pair<std::string, Element>> s = f;
  for (const auto& [n, x] : f) s.push_back({n + "i", group_inverse(hd, x)});
  std::vector<Generator> gens;
  for (int bit = 0; bit < 2; ++bit) {
    for (const auto& [n, x] : s) {
      gens.push_back({std::to_string(bit) + "_" + n, pair_elt(Element(int64_t{bit}), x)});
    }
  }
  return make_group(d, std::move(gens), "heis-c2");
}

Element lamp_elt(int64_t n, std::vector<int64_t> lamps) {
  LampElt l;
  l.shift = n;
  std::sort(lamps.begin(), lamps.end());
  l.lamps = std::move(lamps);
  return Element(std::move(l));
}

MarkedGroup preset_lamplighter_dl() {
  auto d = GroupDesc::lamplighter();
  std::vector<Generator> gens{{"m", lamp_elt(-1, {})},
                              {"p", lamp_elt(1, {})},
                              {"p0", lamp_elt(1, {0})},
                              {"m1", lamp_elt(-1, {-1})}};
  return make_group(d, std::move(gens), "lamplighter-DL");
}

MarkedGroup preset_lamplighter_ext() {
  auto d = GroupDesc::semidirect(GroupDesc::lamplighter(), GroupDesc::cyclic(2),
                                 GroupDesc::Action::LampFlip);
  Element e2 = group_identity(d.sub[1]);
  Element t(int64_t{1});
  std::vector<Generator> gens{
      {"m", pair_elt(e2, lamp_elt(-1, {}))},   {"p", pair_elt(e2, lamp_elt(1, {}))},
      {"p0", pair_elt(e2, lamp_elt(1, {0}))},  {"m1", pair_elt(e2, lamp_elt(-1, {-1}))},
      {"t", pair_elt(t, lamp_elt(0, {}))},     {"tp", pair_elt(t, lamp_elt(1, {}))},
      {"tp0", pair_elt(t, lamp_elt(1, {0}))}};
  return make_group(d, std::move(gens), "lamplighter-ext");
}

std::vector<Generator> mechanical_gens(const GroupDesc& d) {
  std::vector<Generator> gens;
  switch (d.kind) {
    case GroupDesc::Kind::Free:
      for (int i = 0; i < d.rank; ++i) {
        std::string l = d.rank <= 3 ? std::string(1, static_cast<char>('a' + i))
                                    : "g" + std::to_string(i + 1);
        gens.push_back({l, word1(i, 1)});
      }
      break;
    case GroupDesc::Kind::Cyclic:
      gens.push_back({"g", Element(int64_t{1})});
      break;
    case GroupDesc::Kind::FreeProduct:
      for (std::size_t i = 0; i < d.factor_orders.size(); ++i) {
        gens.push_back({"g" + std::to_string(i + 1), word1(static_cast<int>(i), 1)});
      }
      break;
    case GroupDesc::Kind::Heisenberg:
      gens.push_back({"A", Element(HeisElt{1, 0, 0})});
      gens.push_back({"B", Element(HeisElt{0, 0, 1})});
      break;
    case GroupDesc::Kind::Lamplighter:
      gens.push_back({"m", lamp_elt(-1, {})});
      gens.push_back({"p", lamp_elt(1, {})});
      gens.push_back({"p0", lamp_elt(1, {0})});
      gens.push_back({"m1", lamp_elt(-1, {-1})});
      break;
    case GroupDesc::Kind::Direct: {
      auto lg = mechanical_gens(d.sub[0]);
      auto rg = mechanical_gens(d.sub[1]);
      Element le = group_identity(d.sub[0]);
      Element re = group_identity(d.sub[1]);
      for (auto& gen : lg) gens.push_back({"1:" + gen.label, pair_elt(gen.elem, re)});
      for (auto& gen : rg) gens.push_back({"2:" + gen.label, pair_elt(le, gen.elem)});
      break;
    }
    case GroupDesc::Kind::Semidirect:
      throw std::invalid_argument("semidirect groups are preset-only");
  }
  return gens;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

GroupDesc parse_desc(const std::string& text);

GroupDesc parse_fp(const std::string& body) {
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw std::invalid_argument("fp descriptor needs [..]: " + body);
  }
  std::vector<int64_t> orders;
  std::stringstream ss(body.substr(1, body.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (item.size() < 2 || (item[0] != 'c' && item[0] != 'f')) {
      throw std::invalid_argument("fp factor must be cN or f1: " + item);
    }
    int64_t v = std::stoll(item.substr(1));
    if (item[0] == 'f') {
      if (v != 1) throw std::invalid_argument("only f1 factors are supported");
      orders.push_back(0);
    } else {
      orders.push_back(v);
    }
  }
  return GroupDesc::free_product(std::move(orders));
}

GroupDesc parse_dp(const std::string& body) {
  // (<desc>)x(<desc>)
  if (body.empty() || body.front() != '(') throw std::invalid_argument("dp descriptor needs (..)x(..)");
  int depth = 0;
  std::size_t i = 0;
  for (; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') {
      --depth;
      if (depth == 0) break;
    }
  }
  if (i + 2 >= body.size() || body[i + 1] != 'x' || body[i + 2] != '(' || body.back() != ')') {
    throw std::invalid_argument("dp descriptor needs (..)x(..)");
  }
  auto left = parse_desc(body.substr(1, i - 1));
  auto right = parse_desc(body.substr(i + 3, body.size() - i - 4));
  return GroupDesc::direct(std::move(left), std::move(right));
}

GroupDesc parse_desc(const std::string& text) {
  auto s = strip(text);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad group descriptor: " + s);
  auto head = s.substr(0, colon);
  auto body = s.substr(colon + 1);
  if (head == "free") {
    if (body.rfind("m=", 0) != 0) throw std::invalid_argument("free descriptor needs m=<int>");
    return GroupDesc::free_group(std::stoi(body.substr(2)));
  }
  if (head == "cyclic") return GroupDesc::cyclic(std::stoll(body));
  if (head == "fp") return parse_fp(body);
  if (head == "dp") return parse_dp(body);
  throw std::invalid_argument("unknown group descriptor kind: " + head);
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"c2*c3",          "gamma",       "delta",           "dinf-grr",
          "f2-grr",         "heis-c2",     "lamplighter-DL",  "lamplighter-ext"};
}

MarkedGroup make_group(const std::string& descriptor) {
  auto s = strip(descriptor);
  if (s.rfind("preset:", 0) == 0) {
    auto nm = s.substr(7);
    if (nm == "c2*c3") return preset_c2c3();
    if (nm == "gamma") return preset_gamma();
    if (nm == "delta") return preset_delta();
    if (nm == "dinf-grr") return preset_dinf();
    if (nm == "f2-grr") return preset_f2();
    if (nm == "heis-c2") return preset_heis_c2();
    if (nm == "lamplighter-DL") return preset_lamplighter_dl();
    if (nm == "lamplighter-ext") return preset_lamplighter_ext();
    throw std::invalid_argument("unknown preset: " + nm);
  }
  auto d = parse_desc(s);
  return make_group(d, mechanical_gens(d), s);
}

GroupPtr make_group_ptr(const std::string& descriptor) {
  return std::make_shared<const MarkedGroup>(make_group(descriptor));
}

}  // namespace ck
