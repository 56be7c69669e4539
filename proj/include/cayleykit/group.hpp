#ifndef CAYLEYKIT_GROUP_HPP_
#define CAYLEYKIT_GROUP_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayleykit/element.hpp"

namespace ck {

// Structural description of a group on the roster. Semidirect products carry
// an involutive action applied according to the parity character of the
// acting component; the action is validated on generators at construction.
struct GroupDesc {
  enum class Kind { Free, Cyclic, FreeProduct, Direct, Semidirect, Heisenberg, Lamplighter };
  enum class Action { None, InvertNormal, LampFlip };

  Kind kind = Kind::Cyclic;
  int rank = 0;                         // Free
  int64_t order = 0;                    // Cyclic
  std::vector<int64_t> factor_orders;   // FreeProduct; 0 marks a Z factor
  std::vector<GroupDesc> sub;           // Direct: {left,right}; Semidirect: {normal,acting}
  Action action = Action::None;

  static GroupDesc free_group(int rank);
  static GroupDesc cyclic(int64_t order);
  static GroupDesc free_product(std::vector<int64_t> orders);
  static GroupDesc direct(GroupDesc left, GroupDesc right);
  static GroupDesc semidirect(GroupDesc normal, GroupDesc acting, Action a);
  static GroupDesc heisenberg();
  static GroupDesc lamplighter();
};

Element group_identity(const GroupDesc& d);
Element group_multiply(const GroupDesc& d, const Element& x, const Element& y);
Element group_inverse(const GroupDesc& d, const Element& x);
bool group_valid(const GroupDesc& d, const Element& x);
std::string element_str(const GroupDesc& d, const Element& x);

struct Generator {
  std::string label;
  Element elem;
};

// A group together with a finite symmetric labelled generating set.
// Construction closes the set under inverses (derived labels get a ^-1
// suffix), pairs every label with its inverse label, and rejects identity
// or duplicate generators.
class MarkedGroup {
 public:
  GroupDesc desc;
  std::string name;
  std::vector<Generator> gens;
  std::vector<int> inverse_pair;  // generator index -> index of paired label

  Element identity() const { return group_identity(desc); }
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  // Ordered product of named generators; the empty word is the identity.
  Element canonical(const std::vector<std::string>& word) const;
  // Applies the semidirect descriptor's automorphism theta^parity(actor).
  Element semidirect_action(const Element& actor, const Element& target) const;

  int degree() const { return static_cast<int>(gens.size()); }
  int label_index(const std::string& label) const;          // -1 if unknown
  int element_index(const Element& e) const;                // -1 if not a generator
  const std::string& label(int i) const { return gens[i].label; }

  std::string str(const Element& x) const { return element_str(desc, x); }

 private:
  std::unordered_map<std::string, int> label_idx_;
  std::unordered_map<Element, int, ElementHash> elem_idx_;
  friend MarkedGroup make_group(const GroupDesc&, std::vector<Generator>, std::string);
};

MarkedGroup make_group(const GroupDesc& desc, std::vector<Generator> gens,
                       std::string name = "");

// Descriptor strings: preset:<name> | free:m=<int> | cyclic:<int> |
// fp:[c2,c2,c2,f1] | dp:(<desc>)x(<desc>)
MarkedGroup make_group(const std::string& descriptor);

std::vector<std::string> preset_names();

using GroupPtr = std::shared_ptr<const MarkedGroup>;
GroupPtr make_group_ptr(const std::string& descriptor);

}  // namespace ck

#endif  // CAYLEYKIT_GROUP_HPP_
