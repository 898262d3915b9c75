#include "doctest.h"
#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {
const SecurityLattice& L4() { return builtin_l4(); }
LevelId lv(const char* n) { return *L4().find(n); }
const Bounds kBd{2, 8};
}  // namespace

TEST_CASE("the empty strategy saturates to itself") {
  Strategy s = make_strategy(flat("X", 1, lv("bot")), kBd, L4(), {Play{}});
  CHECK(saturate(s).plays == s.plays);
  CHECK(extract_skeleton(s).plays == s.plays);
}

TEST_CASE("saturation closes a bang skeleton under index permutation") {
  TypePtr bx = bang(flat("X", 1, lv("bot")));
  Strategy phi = strategy_from_tags(bx, kBd, L4(),
                                    {{}, {"(! 0 q)", "(! 0 (a 0))"}});
  Strategy sat = saturate(phi);
  const GameView& v = denote(bx, 2, L4());
  Play other = play_from_tags(v, {"(! 1 q)", "(! 1 (a 0))"});
  CHECK(sat.plays.count(other) == 1);
  CHECK(is_strategy(sat).ok);
  CHECK(is_skeleton_of(phi, sat).ok);
}

TEST_CASE("copycat echoes the opponent across the two components") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  Strategy cc = copycat(nat, kBd, L4());
  const GameView& v = cc.view();
  for (const char* n : {"0", "1"}) {
    Play p = play_from_tags(
        v, {"(fr q)", "(fa q q)", std::string("(fa q (a ") + n + "))",
            std::string("(fr (a ") + n + "))"});
    CHECK(cc.plays.count(p) == 1);
  }
  CHECK(copycat(unit_type(), kBd, L4()).plays == std::set<Play>{Play{}});
}

TEST_CASE("strategy checks report the violated law") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  Strategy bad = strategy_from_tags(nat, kBd, L4(),
                                    {{}, {"q", "(a 0)"}, {"q", "(a 1)"}});
  Verdict v = is_strategy(bad);
  CHECK_FALSE(v.ok);  // determinacy: the two answers are not equivalent
  Strategy noeps{nat, kBd, &L4(),
                 {play_from_tags(denote(nat, 2, L4()), {"q", "(a 0)"})}};
  CHECK_FALSE(is_strategy(noeps).ok);  // causal consistency: empty play gone
}

TEST_CASE("singleton strategies are their own skeletons") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  Strategy s = strategy_from_tags(nat, kBd, L4(), {{}, {"q", "(a 0)"}});
  CHECK(extract_skeleton(s).plays == s.plays);
  CHECK(saturate(extract_skeleton(s)).plays == s.plays);
}

TEST_CASE("skeleton preorder: reflexivity, bottom, and mutual skeletons") {
  TypePtr bxx = limp(bang(flat("X", 1, lv("bot"))),
                     flat("X", 1, lv("bot")));
  Strategy cc = counit(flat("X", 1, lv("bot")), kBd, L4());
  Strategy phi = extract_skeleton(cc);
  Strategy bottom = make_strategy(bxx, kBd, L4(), {Play{}});
  CHECK(skeleton_preorder(phi, phi));
  CHECK(skeleton_preorder(bottom, phi));
  Strategy phi2 = extract_skeleton_through(cc, *cc.plays.rbegin());
  CHECK(skeleton_preorder(phi, phi2));
  CHECK(skeleton_preorder(phi2, phi));
  CHECK(skeleton_preorder_direct(phi, phi2) == skeleton_preorder(phi, phi2));
}

TEST_CASE("history-free generators build skeletons move by move") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  HistoryFreeGenerator g{nat, kBd, &L4(), {{"q", "(a 0)"}}};
  Strategy phi = from_generator(g);
  CHECK(phi.plays ==
        strategy_from_tags(nat, kBd, L4(), {{}, {"q", "(a 0)"}}).plays);
  CHECK(history_free_check(phi).ok);
}

TEST_CASE("the swap generator on X -o X yields the copycat") {
  TypePtr x = flat("X", 1, lv("bot"));
  HistoryFreeGenerator g{limp(x, x), kBd, &L4(),
                         {{"(fr q)", "(fa q q)"},
                          {"(fa q (a 0))", "(fr (a 0))"}}};
  CHECK(saturate(from_generator(g)).plays == copycat(x, kBd, L4()).plays);
}

TEST_CASE("a generator answering in the wrong component is rejected") {
  TypePtr x = flat("X", 1, lv("bot"));
  HistoryFreeGenerator g{limp(x, x), kBd, &L4(),
                         {{"(fr q)", "(fa q (a 0))"}}};
  CHECK_THROWS_AS(from_generator(g), GeneratorError);
}

TEST_CASE("bounded totality distinguishes copycat from the empty strategy") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  CHECK(is_total_bounded(copycat(nat, kBd, L4()), kBd.max_len));
  Strategy empty = make_strategy(nat, kBd, L4(), {Play{}});
  Play w;
  CHECK_FALSE(is_total_bounded(empty, kBd.max_len, &w));
  CHECK(w == play_from_tags(denote(nat, 2, L4()), {"q"}));
}

TEST_CASE("saturation agrees with the enumeration oracle on a small game") {
  // Cross-check: the closure of a skeleton equals the set of enumerated
  // valid plays equivalent to some skeleton play.
  TypePtr bx = bang(flat("X", 1, lv("bot")));
  Strategy phi = strategy_from_tags(bx, kBd, L4(),
                                    {{}, {"(! 0 q)", "(! 0 (a 0))"}});
  Strategy sat = saturate(phi);
  std::set<Play> oracle;
  for (const Play& p : enumerate_plays(bx, kBd.max_len, 2, L4())) {
    if (p.size() % 2 != 0) continue;
    for (const Play& s : phi.plays)
      if (p.size() == s.size() && play_equiv(bx, 2, L4(), p, s))
        oracle.insert(p);
  }
  CHECK(sat.plays == oracle);
}
