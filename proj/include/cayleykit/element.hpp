#ifndef CAYLEYKIT_ELEMENT_HPP_
#define CAYLEYKIT_ELEMENT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ck {

class Element;

// Reduced word over a factor alphabet: (factor index, exponent) syllables.
// Adjacent syllables have distinct factor indices; exponents are nonzero
// (and lie in 1..k-1 for a cyclic factor of order k).
struct WordElt {
  std::vector<std::pair<int32_t, int64_t>> syl;
  bool operator==(const WordElt&) const = default;
};

// Integer Heisenberg group: the matrix [[1,a,b],[0,1,c],[0,0,1]].
struct HeisElt {
  int64_t a = 0, b = 0, c = 0;
  bool operator==(const HeisElt&) const = default;
};

// Lamplighter element (n, A); lamps kept sorted.
struct LampElt {
  int64_t shift = 0;
  std::vector<int64_t> lamps;
  bool operator==(const LampElt&) const = default;
};

// Component tuple for direct products (left, right) and semidirect
// products (acting, normal).
struct TupleElt {
  std::vector<Element> parts;
  bool operator==(const TupleElt&) const;
};

class Element {
 public:
  using Rep = std::variant<int64_t, WordElt, HeisElt, LampElt, TupleElt>;

  Element() : rep(int64_t{0}) {}
  explicit Element(Rep r) : rep(std::move(r)) {}

  Rep rep;

  bool operator==(const Element& o) const { return rep == o.rep; }
  bool operator!=(const Element& o) const { return !(*this == o); }
};

std::size_t hash_value(const Element& e);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return hash_value(e); }
};

}  // namespace ck

#endif  // CAYLEYKIT_ELEMENT_HPP_
