#include "doctest.h"
#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {
const SecurityLattice& L4() { return builtin_l4(); }
LevelId lv(const char* n) { return *L4().find(n); }
const Bounds kBd{2, 8};
}  // namespace

TEST_CASE("composition hides the middle game: constant then successor") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  Strategy const0 = strategy_from_tags(limp(unit_type(), nat), kBd, L4(),
                                       {{}, {"(fr q)", "(fr (a 0))"}});
  Strategy succ = strategy_from_tags(
      limp(nat, nat), kBd, L4(),
      {{},
       {"(fr q)", "(fa q q)"},
       {"(fr q)", "(fa q q)", "(fa q (a 0))", "(fr (a 1))"}});
  Strategy got = compose(const0, succ);
  CHECK(got.plays ==
        strategy_from_tags(limp(unit_type(), nat), kBd, L4(),
                           {{}, {"(fr q)", "(fr (a 1))"}})
            .plays);
  CHECK_FALSE(got.truncated);
}

TEST_CASE("interaction traces show the hidden middle moves") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  Strategy const0 = strategy_from_tags(limp(unit_type(), nat), kBd, L4(),
                                       {{}, {"(fr q)", "(fr (a 0))"}});
  Strategy succ = strategy_from_tags(
      limp(nat, nat), kBd, L4(),
      {{},
       {"(fr q)", "(fa q q)"},
       {"(fr q)", "(fa q q)", "(fa q (a 0))", "(fr (a 1))"}});
  auto traces = interaction_traces(const0, succ);
  REQUIRE_FALSE(traces.empty());
  bool saw_middle = false;
  for (const auto& tr : traces)
    for (const std::string& step : tr) saw_middle |= step[0] == 'B';
  CHECK(saw_middle);
}

TEST_CASE("copycat is an identity for composition") {
  TypePtr x = flat("X", 1, lv("bot")), y = flat("Y", 2, lv("a"));
  for (const Strategy& s : enumerate_strategies(limp(x, y), kBd, L4())) {
    CHECK(compose(copycat(x, kBd, L4()), s).plays == s.plays);
    CHECK(compose(s, copycat(y, kBd, L4())).plays == s.plays);
  }
}

TEST_CASE("curry and uncurry are mutually inverse re-taggings") {
  TypePtr x = flat("X", 1, lv("bot")), y = flat("Y", 1, lv("bot"));
  TypePtr g = limp(tensor(x, y), x);
  for (const Strategy& s : enumerate_strategies(g, Bounds{1, 6}, L4())) {
    Strategy back = uncurry_strategy(curry_strategy(s));
    CHECK(back.plays == s.plays);
  }
}

TEST_CASE("tensor of copycats is the copycat of the tensor") {
  TypePtr x = flat("X", 1, lv("bot")), y = flat("Y", 1, lv("bot"));
  Bounds small{1, 6};
  Strategy lhs = tensor_strategy(copycat(x, small, L4()),
                                 copycat(y, small, L4()));
  Strategy rhs = copycat(tensor(x, y), small, L4());
  CHECK(lhs.plays == rhs.plays);
}

TEST_CASE("promotion then counit recovers the strategy") {
  TypePtr x = flat("X", 1, lv("bot")), y = flat("Y", 2, lv("bot"));
  for (const Strategy& s :
       enumerate_strategies(limp(bang(x), y), kBd, L4(), 3)) {
    Strategy round = compose(promote(s), counit(y, kBd, L4()));
    CHECK(round.plays == s.plays);
  }
}

TEST_CASE("the bang functor preserves copycat") {
  TypePtr x = flat("X", 1, lv("bot"));
  Bounds small{2, 6};
  CHECK(bang_functor(copycat(x, small, L4())).plays ==
        copycat(bang(x), small, L4()).plays);
}

TEST_CASE("the monad unit at bottom is copycat") {
  TypePtr x = flat("X", 1, lv("bot"));
  CHECK(unit_eta(lv("bot"), x, kBd, L4()).plays ==
        copycat(x, kBd, L4()).plays);
}

TEST_CASE("coercions follow the lattice order") {
  TypePtr x = flat("X", 1, lv("bot"));
  Strategy up = coerce(lv("a"), lv("top"), x, kBd, L4());
  CHECK(is_strategy(up).ok);
  CHECK(up.plays.size() > 1);
  CHECK_THROWS_AS(coerce(lv("a"), lv("b"), x, kBd, L4()), CoercionError);
}

TEST_CASE("coercion families are natural when the levels are ordered") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  Strategy s = strategy_from_tags(limp(nat, nat), kBd, L4(),
                                  {{},
                                   {"(fr q)", "(fa q q)"},
                                   {"(fr q)", "(fa q q)", "(fa q (a 0))",
                                    "(fr (a 1))"}});
  Strategy tau = coerce(lv("a"), lv("top"), nat, kBd, L4());
  CHECK(naturality_check(s, tau, tau, lv("a"), lv("top")).ok);
  Strategy idf = copycat(nat, kBd, L4());
  Strategy id_at = retag_strategy(idf, limp(monad(lv("a"), nat),
                                            monad(lv("a"), nat)),
                                  [](const TagPtr& t) { return t; });
  CHECK(naturality_check(s, id_at, id_at, lv("a"), lv("a")).ok);
}

TEST_CASE("erasure restriction deletes the guarded codomain") {
  TypePtr x = flat("X", 1, lv("bot"));
  Strategy eta = unit_eta(lv("a"), x, kBd, L4());
  Strategy erased = restrict_to_erasure(eta, lv("a"));
  CHECK(erased.plays == std::set<Play>{Play{}});
  CHECK(type_equal(erased.game, limp(x, unit_type())));
  CHECK(is_total_bounded(erased, kBd.max_len));
}

TEST_CASE("cantor pairing is injective within the bound and guarded past it") {
  CHECK(cantor_pair(0, 0, 8) == 0);
  CHECK(cantor_pair(1, 0, 8) == 1);
  CHECK(cantor_pair(0, 1, 8) == 2);
  CHECK(cantor_pair(1, 1, 8) == 4);
  CHECK_THROWS_AS(cantor_pair(3, 3, 8), BudgetError);
}
