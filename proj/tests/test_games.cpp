#include "doctest.h"
#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {
const SecurityLattice& L4() { return builtin_l4(); }
LevelId lv(const char* n) { return *L4().find(n); }
}  // namespace

TEST_CASE("flat game denotes one question and its answers") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  const GameView& v = denote(nat, 1, L4());
  REQUIRE(v.size() == 3);
  int q = *v.find("q");
  CHECK(v.moves[q].pol == Pol::O);
  CHECK(v.moves[q].kind == Kind::Q);
  CHECK(v.moves[q].level == lv("bot"));
  CHECK(v.moves[q].initial());
  for (const char* t : {"(a 0)", "(a 1)"}) {
    int m = *v.find(t);
    CHECK(v.moves[m].pol == Pol::P);
    CHECK(v.moves[m].kind == Kind::A);
    CHECK(v.moves[m].justifier == q);
  }
}

TEST_CASE("level monad keeps the move set and joins the level") {
  TypePtr b = flat("B", 1, lv("bot"));
  const GameView& v = denote(monad(lv("a"), b), 1, L4());
  REQUIRE(v.size() == 2);
  for (const MoveInfo& m : v.moves) CHECK(m.level == lv("a"));
  CHECK(v.find("q").has_value());  // tags unchanged under T_l
  // P_{T_l A} = P_A as play sets.
  CHECK(enumerate_plays(monad(lv("a"), b), 6, 1, L4()) ==
        enumerate_plays(b, 6, 1, L4()));
}

TEST_CASE("linear implication copies the domain once per codomain initial") {
  TypePtr x = flat("X", 1, lv("bot")), y = flat("Y", 1, lv("bot"));
  const GameView& v = denote(limp(x, y), 1, L4());
  CHECK(v.size() == 4);  // q_Y, a_Y, and one copy of q_X, a_X
  int d = *v.find("(fa q q)");
  CHECK(v.moves[d].pol == Pol::P);  // domain polarity flips
  CHECK(v.moves[*v.find("(fr q)")].pol == Pol::O);
}

TEST_CASE("erasure replaces guarded parts at or above the level by unit") {
  TypePtr x = flat("X", 1, lv("bot")), y = flat("Y", 1, lv("bot"));
  LevelId h = lv("a");
  CHECK(type_equal(erase_type(monad(h, x), h, L4()), unit_type()));
  CHECK(type_equal(erase_type(x, h, L4()), x));
  CHECK(type_equal(erase_type(limp(monad(h, x), y), h, L4()),
                   limp(unit_type(), y)));
}

TEST_CASE("monad equations collapse under normalize_monads") {
  TypePtr x = flat("X", 1, lv("bot"));
  CHECK(type_equal(normalize_monads(monad(lv("a"), monad(lv("b"), x)), L4()),
                   monad(lv("top"), x)));
  CHECK(type_equal(normalize_monads(monad(lv("bot"), x), L4()), x));
}

TEST_CASE("type parser covers the surface grammar") {
  const SecurityLattice& lat = L4();
  CHECK(type_equal(parse_type("X@bot/2", lat), flat("X", 2, lv("bot"))));
  CHECK(type_equal(parse_type("base X @ bot / 2", lat),
                   flat("X", 2, lv("bot"))));
  CHECK(type_equal(parse_type("I", lat), unit_type()));
  TypePtr x = flat("X", 1, lv("bot")), y = flat("Y", 1, lv("bot"));
  CHECK(type_equal(parse_type("X@bot * Y@bot", lat), tensor(x, y)));
  CHECK(type_equal(parse_type("X@bot & Y@bot", lat), with(x, y)));
  CHECK(type_equal(parse_type("X@bot -o Y@bot", lat), limp(x, y)));
  CHECK(type_equal(parse_type("X@bot -> Y@bot", lat), limp(bang(x), y)));
  CHECK(type_equal(parse_type("![a]X@bot", lat), bang(monad(lv("a"), x))));
  CHECK(type_equal(parse_type("[a]X@bot -o Y@bot -o X@bot", lat),
                   limp(monad(lv("a"), x), limp(y, x))));
  CHECK_THROWS(parse_type("X@nosuchlevel", lat));
  CHECK_THROWS(parse_type("(X@bot", lat));
}

TEST_CASE("monad distributes over the arrow as an identical denotation") {
  TypePtr x = flat("X", 2, lv("bot")), y = flat("Y", 1, lv("b"));
  LevelId l = lv("a");
  const GameView& v1 = denote(monad(l, limp(x, y)), 2, L4());
  const GameView& v2 = denote(limp(monad(l, x), monad(l, y)), 2, L4());
  REQUIRE(v1.size() == v2.size());
  for (int i = 0; i < v1.size(); ++i) {
    CHECK(v1.moves[i].tag->str() == v2.moves[i].tag->str());
    CHECK(v1.moves[i].level == v2.moves[i].level);
    CHECK(v1.moves[i].justifier == v2.moves[i].justifier);
  }
}
