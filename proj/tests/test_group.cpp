#include "doctest.h"

#include <set>

#include "cayleykit/group.hpp"
#include "support.hpp"

using namespace ck;
using cktest::Rng;

namespace {

Element lamp(int64_t n, std::vector<int64_t> lamps) {
  LampElt l;
  std::sort(lamps.begin(), lamps.end());
  l.shift = n;
  l.lamps = std::move(lamps);
  return Element(std::move(l));
}

std::vector<MarkedGroup> roster() {
  std::vector<MarkedGroup> gs;
  for (const auto& n : preset_names()) gs.push_back(make_group("preset:" + n));
  gs.push_back(make_group("fp:[c2,c2,c2]"));
  gs.push_back(make_group("free:m=2"));
  return gs;
}

}  // namespace

TEST_CASE("preset generator sets") {
  auto dl = make_group("preset:lamplighter-DL");
  REQUIRE(dl.degree() == 4);
  CHECK(dl.gens[0].elem == lamp(-1, {}));
  CHECK(dl.gens[1].elem == lamp(1, {}));
  CHECK(dl.gens[2].elem == lamp(1, {0}));
  CHECK(dl.gens[3].elem == lamp(-1, {-1}));

  // the paper lists four labels; closing under inverses adds r^-1
  auto dinf = make_group("preset:dinf-grr");
  for (const char* l : {"r", "s", "rs", "r^-2s"}) CHECK(dinf.label_index(l) >= 0);
  CHECK(dinf.degree() == 5);

  // C2 x (F u F^-1): the ten Heisenberg parts are distinct (matrix oracle)
  auto hc2 = make_group("preset:heis-c2");
  CHECK(hc2.degree() == 20);
  std::set<std::string> mats;
  for (const auto& gen : hc2.gens) {
    const auto& h = std::get<HeisElt>(std::get<TupleElt>(gen.elem.rep).parts[1].rep);
    auto m = cktest::heis_matrix(h.a, h.b, h.c);
    std::string key;
    for (auto& row : m)
      for (auto v : row) key += std::to_string(v) + ",";
    mats.insert(key);
  }
  CHECK(mats.size() == 10);

  auto lex = make_group("preset:lamplighter-ext");
  CHECK(lex.degree() == 7);

  CHECK_THROWS_AS(make_group("preset:nope"), std::invalid_argument);
}

TEST_CASE("multiply examples") {
  auto dl = make_group("preset:lamplighter-DL");
  CHECK(dl.multiply(lamp(1, {}), lamp(1, {0})) == lamp(2, {1}));

  auto hc = GroupDesc::heisenberg();
  Element A(HeisElt{1, 0, 0}), B(HeisElt{0, 0, 1});
  // matrix oracle
  auto mAB = cktest::mat_mul(cktest::heis_matrix(1, 0, 0), cktest::heis_matrix(0, 0, 1));
  Element AB = group_multiply(hc, A, B);
  const auto& h = std::get<HeisElt>(AB.rep);
  CHECK(h.a == mAB[0][1]);
  CHECK(h.b == mAB[0][2]);
  CHECK(h.c == mAB[1][2]);
  CHECK(AB == Element(HeisElt{1, 1, 1}));
  CHECK(group_multiply(hc, B, A) == Element(HeisElt{1, 0, 1}));

  for (const auto& g : roster()) {
    Rng rng(7);
    Element x = cktest::random_element(g, rng, 6);
    CHECK(g.multiply(x, g.identity()) == x);
    CHECK(g.multiply(g.identity(), x) == x);
  }
}

TEST_CASE("inverse examples") {
  auto dl = make_group("preset:lamplighter-DL");
  CHECK(dl.inverse(lamp(1, {0})) == lamp(-1, {-1}));
  CHECK(dl.inverse(dl.identity()) == dl.identity());

  auto w3 = make_group("fp:[c2,c2,c2]");
  Element a1a2 = w3.canonical({"g1", "g2"});
  Element a2a1 = w3.canonical({"g2", "g1"});
  CHECK(w3.inverse(a1a2) == a2a1);
}

TEST_CASE("canonical word evaluation") {
  auto delta = make_group("preset:delta");
  CHECK(delta.canonical({"b", "a1", "b"}) == delta.canonical({"a1"}));

  auto lex = make_group("preset:lamplighter-ext");
  CHECK(lex.canonical({"t", "t"}) == lex.identity());

  auto hc = GroupDesc::heisenberg();
  auto hg = make_group(hc, {{"A", Element(HeisElt{1, 0, 0})}, {"B", Element(HeisElt{0, 0, 1})}});
  Element comm = hg.canonical({"A", "B", "A^-1", "B^-1"});
  CHECK(comm == Element(HeisElt{0, 1, 0}));
  CHECK(comm != hg.identity());

  CHECK_THROWS_AS(delta.canonical({"zz"}), std::invalid_argument);
}

TEST_CASE("semidirect action") {
  auto lex = make_group("preset:lamplighter-ext");
  Element t(int64_t{1});
  CHECK(lex.semidirect_action(t, lamp(1, {})) == lamp(-1, {}));
  CHECK(lex.semidirect_action(t, lamp(1, {0})) == lamp(-1, {-1}));
  CHECK(lex.semidirect_action(t, lamp(0, {})) == lamp(0, {}));

  // word-expansion oracle: write (2,{0,1}) as a word in D, invert each letter,
  // re-multiply in reverse order to apply theta
  auto dl = make_group("preset:lamplighter-DL");
  // (2,{0,1}) = (1,{0}) * (1,{0}): check, then theta letterwise
  Element target = dl.multiply(lamp(1, {0}), lamp(1, {0}));
  REQUIRE(target == lamp(2, {0, 1}));
  Element oracle = dl.multiply(lex.semidirect_action(t, lamp(1, {0})),
                               lex.semidirect_action(t, lamp(1, {0})));
  CHECK(lex.semidirect_action(t, target) == oracle);
  CHECK(lex.semidirect_action(t, target) == lamp(-2, {-3, -2}));

  CHECK_THROWS_AS(lex.semidirect_action(t, t), std::invalid_argument);
}

TEST_CASE("group axioms on random triples") {
  for (const auto& g : roster()) {
    Rng rng(42);
    for (int it = 0; it < 500; ++it) {
      Element x = cktest::random_element(g, rng, 5);
      Element y = cktest::random_element(g, rng, 5);
      Element z = cktest::random_element(g, rng, 5);
      CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
      CHECK(g.multiply(x, g.inverse(x)) == g.identity());
      CHECK(g.multiply(g.inverse(x), x) == g.identity());
    }
  }
}

TEST_CASE("canonical is a homomorphism of concatenation") {
  for (const auto& g : roster()) {
    Rng rng(99);
    for (int it = 0; it < 200; ++it) {
      auto u = cktest::random_word(g, rng, 6);
      auto v = cktest::random_word(g, rng, 6);
      auto uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(g.canonical(uv) == g.multiply(g.canonical(u), g.canonical(v)));
    }
  }
}

TEST_CASE("lamplighter-ext action is an involutive automorphism") {
  auto lex = make_group("preset:lamplighter-ext");
  auto dl = make_group("preset:lamplighter-DL");
  Element t(int64_t{1});
  Rng rng(5);
  for (int it = 0; it < 500; ++it) {
    Element x = cktest::random_element(dl, rng, 8);
    Element y = cktest::random_element(dl, rng, 8);
    CHECK(lex.semidirect_action(t, lex.semidirect_action(t, x)) == x);
    CHECK(lex.semidirect_action(t, dl.multiply(x, y)) ==
          dl.multiply(lex.semidirect_action(t, x), lex.semidirect_action(t, y)));
  }
}

TEST_CASE("inverse pairing is consistent") {
  for (const auto& g : roster()) {
    for (int i = 0; i < g.degree(); ++i) {
      int j = g.inverse_pair[i];
      REQUIRE(j >= 0);
      CHECK(g.inverse_pair[j] == i);
      CHECK(g.multiply(g.gens[i].elem, g.gens[j].elem) == g.identity());
    }
  }
}

TEST_CASE("descriptor parser") {
  CHECK(make_group("cyclic:6").degree() == 2);       // g and g^-1
  CHECK(make_group("free:m=2").degree() == 4);
  CHECK(make_group("fp:[c2,c3]").degree() == 3);     // g1, g2, g2^-1
  CHECK(make_group("fp:[c2,c2,c2,f1]").degree() == 5);
  auto dp = make_group("dp:(fp:[c2,c2,c2])x(cyclic:3)");
  CHECK(dp.degree() == 5);
  CHECK_THROWS_AS(make_group("nope:1"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("fp:[c1]"), std::invalid_argument);
}
