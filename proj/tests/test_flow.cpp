#include "doctest.h"
#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {
const SecurityLattice& L4() { return builtin_l4(); }
LevelId lv(const char* n) { return *L4().find(n); }
const Bounds kBd{2, 8};

TypePtr X() { return flat("X", 1, *L4().find("bot")); }
TypePtr Y() { return flat("Y", 1, *L4().find("bot")); }
}  // namespace

TEST_CASE("the level table matches the denoted initial moves") {
  CHECK(level_of_type(unit_type(), L4()).empty());
  TypePtr arr = limp(monad(lv("a"), X()), monad(lv("b"), Y()));
  CHECK(level_of_type(arr, L4()) == std::set<LevelId>{lv("b")});
  TypePtr pair = tensor(monad(lv("a"), X()), monad(lv("b"), Y()));
  CHECK(level_of_type(pair, L4()) ==
        std::set<LevelId>({lv("a"), lv("b")}));
  // Cross-check against the semantic definition.
  for (const TypePtr& t : {arr, pair, bang(monad(lv("top"), X()))}) {
    std::set<LevelId> sem;
    const GameView& v = denote(t, 2, L4());
    for (int m : v.initials) sem.insert(v.moves[m].level);
    CHECK(sem == level_of_type(t, L4()));
  }
}

TEST_CASE("the no-flow relation compares the two level sets") {
  CHECK(rhd(monad(lv("a"), X()), monad(lv("b"), Y()), L4()));
  CHECK_FALSE(rhd(X(), monad(lv("b"), Y()), L4()));  // bot flows anywhere
  CHECK(rhd(monad(lv("a"), X()), unit_type(), L4()));  // vacuous
}

TEST_CASE("no-flow verdicts carry validated witnesses when flow is possible") {
  Bounds small{1, 6};
  FlowVerdict nf = no_flow(monad(lv("a"), X()), monad(lv("b"), Y()), small,
                           L4());
  CHECK(nf.no_flow);
  CHECK_FALSE(nf.witness.has_value());
  // The enumeration oracle agrees: nothing on (A (x) I) -o B moves in A.
  TypePtr g = limp(tensor(monad(lv("a"), X()), unit_type()),
                   monad(lv("b"), Y()));
  for (const Strategy& s : enumerate_strategies(g, small, L4()))
    CHECK_FALSE(moves_in_component(s, Component::A));

  FlowVerdict fl = no_flow(X(), Y(), small, L4());
  CHECK_FALSE(fl.no_flow);
  REQUIRE(fl.witness.has_value());
  const GameView& wv = fl.witness->view();
  Play expected = play_from_tags(wv, {"(fr q)", "(fa q (tL q))"});
  CHECK(fl.witness->plays.count(expected) == 1);
  CHECK(is_strategy(*fl.witness).ok);
  CHECK(moves_in_component(*fl.witness, Component::A));
}

TEST_CASE("component silence allows factoring out the first component") {
  TypePtr g = limp(tensor(X(), Y()), Y());
  Strategy s = strategy_from_tags(
      g, kBd, L4(), {{}, {"(fr q)", "(fa q (tR q))"}});
  Strategy factored;
  CHECK_FALSE(moves_in_component(s, Component::A, &factored));
  CHECK(moves_in_component(s, Component::C));
  CHECK(type_equal(factored.game, limp(Y(), Y())));
  CHECK(is_strategy(factored).ok);
}

TEST_CASE("protection means every level sits above the guard") {
  CHECK(is_protected(monad(lv("top"), X()), lv("a"), L4()));
  CHECK(is_protected(unit_type(), lv("top"), L4()));
  CHECK_FALSE(is_protected(X(), lv("a"), L4()));
  CHECK_FALSE(is_protected(monad(lv("b"), X()), lv("a"), L4()));
}

TEST_CASE("protected promotion accepts protected codomains and refuses others") {
  TypePtr x = X();
  Strategy sigma = retag_strategy(counit(x, kBd, L4()),
                                  limp(bang(x), monad(lv("a"), x)),
                                  [](const TagPtr& t) { return t; });
  Strategy tau_ok = retag_strategy(counit(x, kBd, L4()),
                                   limp(bang(x), monad(lv("top"), x)),
                                   [](const TagPtr& t) { return t; });
  Strategy got = protected_promotion(sigma, tau_ok, lv("a"));
  CHECK(is_strategy(got).ok);
  CHECK(type_equal(got.game, limp(bang(x), monad(lv("top"), x))));
  Strategy tau_bad = counit(x, kBd, L4());
  CHECK_THROWS_AS(protected_promotion(sigma, tau_bad, lv("a")),
                  ProtectionError);
}

TEST_CASE("strategy enumeration finds the maximal answer strategies") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  auto all = enumerate_strategies(nat, Bounds{1, 4}, L4());
  CHECK(all.size() == 2);  // answer 0 or answer 1
  for (const Strategy& s : all) CHECK(s.plays.size() == 2);
}
