#include "gamesec/flow.hpp"

#include <deque>

namespace gamesec {

std::set<LevelId> level_of_type(const TypePtr& t, const SecurityLattice& lat) {
  switch (t->k) {
    case GameType::K::Flat:
      return {t->level};
    case GameType::K::Unit:
      return {};
    case GameType::K::Tensor:
    case GameType::K::With: {
      std::set<LevelId> out = level_of_type(t->a, lat);
      for (LevelId l : level_of_type(t->b, lat)) out.insert(l);
      return out;
    }
    case GameType::K::Limp:
      return level_of_type(t->b, lat);
    case GameType::K::Bang:
      return level_of_type(t->a, lat);
    case GameType::K::Monad: {
      std::set<LevelId> out;
      for (LevelId l : level_of_type(t->a, lat))
        out.insert(lat.join(t->level, l));
      return out;
    }
  }
  return {};
}

bool rhd(const TypePtr& a, const TypePtr& b, const SecurityLattice& lat) {
  for (LevelId l : level_of_type(a, lat))
    for (LevelId lp : level_of_type(b, lat))
      if (lat.leq(l, lp)) return false;
  return true;
}

FlowVerdict no_flow(const TypePtr& a, const TypePtr& b, Bounds bd,
                    const SecurityLattice& lat) {
  FlowVerdict out{a, b, rhd(a, b, lat), std::nullopt};
  if (out.no_flow) return out;
  // Flow is possible: some initial move of A sits below some initial
  // move of B, so answering B's prompt inside A is a legal play.
  TypePtr game = limp(tensor(a, unit_type()), b);
  const GameView& av = denote(a, bd.copy_bound, lat);
  const GameView& bv = denote(b, bd.copy_bound, lat);
  const GameView& gv = denote(game, bd.copy_bound, lat);
  for (int mb : bv.initials) {
    for (int ma : av.initials) {
      if (!lat.leq(av.moves[ma].level, bv.moves[mb].level)) continue;
      TagPtr cod = tag_step(Tag::K::Res, bv.moves[mb].tag);
      TagPtr dom = tag_arg(bv.moves[mb].tag,
                           tag_step(Tag::K::TL, av.moves[ma].tag));
      Play p{gv.find(cod).value(), gv.find(dom).value()};
      Strategy w = make_strategy(game, bd, lat, {Play{}, p});
      out.witness = equiv_closure(w);
      return out;
    }
  }
  throw std::logic_error("flow verdict inconsistent with the level sets");
}

bool moves_in_component(const Strategy& sigma, Component c,
                        Strategy* factored) {
  const GameView& v = sigma.view();
  auto component_of = [](const TagPtr& t) {
    if (t->k == Tag::K::Res) return Component::B;
    return t->sub->k == Tag::K::TL ? Component::A : Component::C;
  };
  bool touched = false;
  for (const Play& p : sigma.plays)
    for (int m : p) touched = touched || component_of(v.moves[m].tag) == c;
  if (c == Component::A && !touched && factored) {
    TypePtr game = limp(sigma.game->a->b, sigma.game->b);
    *factored = retag_strategy(sigma, game, [](const TagPtr& t) -> TagPtr {
      if (t->k == Tag::K::Res) return t;
      return tag_arg(t->binit, t->sub->sub);
    });
  }
  return touched;
}

bool is_protected(const TypePtr& t, LevelId l, const SecurityLattice& lat) {
  for (LevelId lp : level_of_type(t, lat))
    if (!lat.leq(l, lp)) return false;
  return true;
}

Strategy protected_promotion(const Strategy& sigma, const Strategy& tau,
                             LevelId l) {
  const SecurityLattice& lat = *sigma.lat;
  TypePtr c = tau.game->b;
  if (!is_protected(c, l, lat)) {
    const GameView& cv = denote(c, sigma.bounds.copy_bound, lat);
    for (int m : cv.initials)
      if (!lat.leq(l, cv.moves[m].level))
        throw ProtectionError("codomain unprotected at " + lat.name(l) +
                              ": initial move " + cv.moves[m].tag->str() +
                              " has level " + lat.name(cv.moves[m].level));
    throw ProtectionError("codomain unprotected at " + lat.name(l));
  }
  TypePtr tb = sigma.game->b;
  if (tb->k != GameType::K::Monad)
    throw std::runtime_error("protected promotion needs a monadic codomain");
  // !T_l B and T_l !B share their move set, so tau rereads directly.
  TypePtr lifted_dom = bang(tb);
  Strategy tau_lifted = retag_strategy(tau, limp(lifted_dom, c),
                                       [](const TagPtr& t) { return t; });
  return compose(promote(sigma), tau_lifted);
}

namespace {

struct Position {
  Play s;
  int a;
};

struct Enumerator {
  const TypePtr& t;
  Bounds bd;
  const SecurityLattice& lat;
  int max_results;
  std::set<std::set<Play>> results;
  long steps = 0;

  bool full() const {
    return static_cast<int>(results.size()) >= max_results;
  }
  void bump() {
    if (++steps > 5'000'000)
      throw BudgetError("strategy enumeration exceeded its step budget");
  }

  std::deque<Position> positions_of(const Play& s) {
    std::deque<Position> out;
    if (static_cast<int>(s.size()) + 2 > bd.max_len) return out;
    for (int a : valid_extensions(t, bd.copy_bound, lat, s))
      out.push_back({s, a});
    return out;
  }

  void go(std::set<Play> plays, std::deque<Position> pending) {
    if (full()) return;
    bump();
    if (pending.empty()) {
      Strategy cand{t, bd, &lat, std::move(plays)};
      Strategy closed = equiv_closure(cand);
      if (is_strategy(closed).ok) results.insert(std::move(closed.plays));
      return;
    }
    Position pos = pending.front();
    pending.pop_front();
    Play sa = pos.s;
    sa.push_back(pos.a);
    std::vector<int> bs;
    for (int b : valid_extensions(t, bd.copy_bound, lat, sa)) bs.push_back(b);
    if (bs.empty()) {
      go(std::move(plays), std::move(pending));
      return;
    }
    for (int b : bs) {
      Play sab = sa;
      sab.push_back(b);
      std::set<Play> next = plays;
      next.insert(sab);
      std::deque<Position> np = pending;
      for (Position& q : positions_of(sab)) np.push_back(q);
      go(std::move(next), std::move(np));
    }
  }
};

}  // namespace

std::vector<Strategy> enumerate_strategies(const TypePtr& t, Bounds bd,
                                           const SecurityLattice& lat,
                                           int max_results) {
  Enumerator e{t, bd, lat, max_results};
  e.go({Play{}}, e.positions_of(Play{}));
  std::vector<Strategy> out;
  for (const std::set<Play>& plays : e.results)
    out.push_back(Strategy{t, bd, &lat, plays});
  return out;
}

}  // namespace gamesec
