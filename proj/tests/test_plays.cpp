#include <algorithm>

#include "doctest.h"
#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {
const SecurityLattice& L4() { return builtin_l4(); }
LevelId lv(const char* n) { return *L4().find(n); }

Play mk(const TypePtr& t, int k, const std::vector<std::string>& tags) {
  return play_from_tags(denote(t, k, L4()), tags);
}

bool has_cond(const std::vector<PlayDiagnostic>& ds, Cond c) {
  return std::any_of(ds.begin(), ds.end(),
                     [&](const PlayDiagnostic& d) { return d.cond == c; });
}
}  // namespace

TEST_CASE("answering the opening question is a valid play") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  CHECK(validate_play(nat, 1, L4(), mk(nat, 1, {"q", "(a 1)"})).empty());
}

TEST_CASE("an answer cannot come first") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  auto ds = validate_play(nat, 1, L4(), mk(nat, 1, {"(a 1)", "q"}));
  CHECK(has_cond(ds, Cond::P1));  // P-move opens the play
}

TEST_CASE("a move foreign to the bounded move set is a membership error") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  CHECK_THROWS_AS(validate_play(nat, 1, L4(), Play{99}), MembershipError);
}

TEST_CASE("levels block questions above their justifier") {
  // T_a X -o T_b Y with a, b incomparable: the domain question at level
  // a is justified by the codomain question at level b.
  TypePtr g = limp(monad(lv("a"), flat("X", 1, lv("bot"))),
                   monad(lv("b"), flat("Y", 1, lv("bot"))));
  auto ds = validate_play(g, 1, L4(), mk(g, 1, {"(fr q)", "(fa q q)"}));
  CHECK(has_cond(ds, Cond::P6));
}

TEST_CASE("play equivalence is reflexive and permutes copy indices") {
  TypePtr bx = bang(flat("X", 1, lv("bot")));
  Play p0 = mk(bx, 2, {"(! 0 q)", "(! 0 (a 0))"});
  Play p1 = mk(bx, 2, {"(! 1 q)", "(! 1 (a 0))"});
  CHECK(play_equiv(bx, 2, L4(), p0, p0));
  CHECK(play_equiv(bx, 2, L4(), p0, p1));
}

TEST_CASE("tensor interleavings with different out-sequences differ") {
  TypePtr t = tensor(flat("X", 1, lv("bot")), flat("X", 1, lv("bot")));
  Play lr = mk(t, 1, {"(tL q)", "(tR q)"});
  Play rl = mk(t, 1, {"(tR q)", "(tL q)"});
  CHECK_FALSE(play_equiv_unchecked(t, 1, L4(), lr, rl));
}

TEST_CASE("play enumeration matches the hand-counted small games") {
  TypePtr nat = flat("Nat", 2, lv("bot"));
  auto ps = enumerate_plays(nat, 2, 1, L4());
  CHECK(ps.size() == 4);  // empty, q, q0, q1
  CHECK(enumerate_plays(unit_type(), 10, 1, L4()).size() == 1);
  TypePtr x = flat("X", 1, lv("bot"));
  // empty, q_B, q_B q_A, q_B q_A a_A, q_B q_A a_A a_B
  CHECK(enumerate_plays(limp(x, x), 4, 1, L4()).size() == 6);
}

TEST_CASE("equivalence satisfies the prefix and extension conditions") {
  TypePtr bx = bang(flat("X", 1, lv("bot")));
  auto plays = enumerate_plays(bx, 4, 2, L4());
  for (const Play& s : plays)
    for (const Play& u : plays) {
      if (s.size() != u.size()) continue;
      if (!play_equiv(bx, 2, L4(), s, u)) continue;
      // (e2) equal-length prefixes stay equivalent
      for (size_t n = 0; n < s.size(); ++n) {
        Play sp(s.begin(), s.begin() + n), up(u.begin(), u.begin() + n);
        CHECK(play_equiv(bx, 2, L4(), sp, up));
      }
      // (e3) every extension of s has a matching extension of u
      for (int m : valid_extensions(bx, 2, L4(), s)) {
        Play sm = s;
        sm.push_back(m);
        bool matched = false;
        for (int m2 : valid_extensions(bx, 2, L4(), u)) {
          Play um = u;
          um.push_back(m2);
          matched = matched || play_equiv(bx, 2, L4(), sm, um);
        }
        CHECK(matched);
      }
    }
}
