#include "gamesec/compose.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace gamesec {

namespace {

TypePtr dom(const Strategy& s) {
  if (s.game->k != GameType::K::Limp)
    throw std::runtime_error("strategy is not on a linear implication");
  return s.game->a;
}
TypePtr cod(const Strategy& s) {
  if (s.game->k != GameType::K::Limp)
    throw std::runtime_error("strategy is not on a linear implication");
  return s.game->b;
}

std::set<Play> prefix_set(const std::set<Play>& plays) {
  std::set<Play> out;
  for (const Play& p : plays)
    for (size_t n = 0; n <= p.size(); ++n)
      out.insert(Play(p.begin(), p.begin() + n));
  return out;
}

}  // namespace

Strategy equiv_closure(const Strategy& sigma) {
  Strategy out = sigma;
  for (const Play& p : sigma.plays)
    for (const Play& q :
         equiv_variants(sigma.game, sigma.bounds.copy_bound, *sigma.lat, p))
      out.plays.insert(q);
  return out;
}

Strategy retag_strategy(const Strategy& sigma, const TypePtr& game,
                        const std::function<TagPtr(const TagPtr&)>& f) {
  const GameView& from = sigma.view();
  const GameView& to = denote(game, sigma.bounds.copy_bound, *sigma.lat);
  std::set<Play> plays;
  for (const Play& p : sigma.plays) {
    Play q;
    for (int m : p) {
      TagPtr t = f(from.moves[m].tag);
      auto id = to.find(t);
      if (!id)
        throw std::runtime_error("re-tagging maps " + from.moves[m].tag->str() +
                                 " outside the target game (" + t->str() + ")");
      q.push_back(*id);
    }
    plays.insert(std::move(q));
  }
  Strategy out = make_strategy(game, sigma.bounds, *sigma.lat, std::move(plays));
  out.truncated = sigma.truncated;
  return out;
}

// ---------------------------------------------------------------------------
// Composition

Strategy compose(const Strategy& sigma, const Strategy& tau) {
  if (!(sigma.bounds == tau.bounds) || sigma.lat != tau.lat)
    throw std::runtime_error("composition requires matching session bounds");
  if (!type_equal(cod(sigma), dom(tau)))
    throw std::runtime_error("composition requires a matching middle game");
  TypePtr A = dom(sigma), C = cod(tau);
  int k = sigma.bounds.copy_bound;
  const SecurityLattice& lat = *sigma.lat;
  TypePtr ext_game = limp(A, C);
  const GameView& W = denote(limp(sigma.game, C), k, lat);
  const GameView& SV = sigma.view();
  const GameView& TV = tau.view();
  const GameView& EV = denote(ext_game, k, lat);

  // Per interaction move: its image in sigma's game, tau's game, and the
  // external game (-1 when the move is hidden from that projection).
  std::vector<int> to_s(W.size(), -1), to_t(W.size(), -1), to_e(W.size(), -1);
  // For an A-move, the C-initial c0 on its wrapper must be the thread in
  // which tau opened the justifying B-initial b0; req_t records tau's
  // image of that B-initial so the interaction can check it was played.
  std::vector<int> req_t(W.size(), -1);
  for (int m = 0; m < W.size(); ++m) {
    const TagPtr& tag = W.moves[m].tag;
    if (tag->k == Tag::K::Res) {  // C-move: (fr c)
      to_t[m] = TV.find(tag).value();
      to_e[m] = EV.find(tag).value();
    } else if (tag->sub->k == Tag::K::Res) {  // B-move: (fa c0 (fr b))
      to_s[m] = SV.find(tag->sub).value();
      to_t[m] = TV.find(tag_arg(tag->binit, tag->sub->sub)).value();
    } else {  // A-move: (fa c0 (fa b0 a))
      to_s[m] = SV.find(tag->sub).value();
      to_e[m] = EV.find(tag_arg(tag->binit, tag->sub->sub)).value();
      req_t[m] = TV.find(tag_arg(tag->binit, tag->sub->binit)).value();
    }
  }

  std::set<Play> spre = prefix_set(sigma.plays);
  std::set<Play> tpre = prefix_set(tau.plays);

  struct State {
    Play s, t, e;  // projections of the interaction sequence
    int len = 0;
  };
  Strategy out{ext_game, sigma.bounds, &lat, {},
               sigma.truncated || tau.truncated};
  const int cap = 3 * sigma.bounds.max_len;
  std::vector<State> frontier{State{}};
  std::set<std::tuple<Play, Play, Play>> seen{{Play{}, Play{}, Play{}}};
  out.plays.insert(Play{});
  while (!frontier.empty()) {
    std::vector<State> next;
    for (const State& st : frontier) {
      for (int m = 0; m < W.size(); ++m) {
        State nx = st;
        nx.len++;
        if (req_t[m] >= 0 &&
            std::find(st.t.begin(), st.t.end(), req_t[m]) == st.t.end())
          continue;
        if (to_s[m] >= 0) {
          nx.s.push_back(to_s[m]);
          if (!spre.count(nx.s)) continue;
        }
        if (to_t[m] >= 0) {
          nx.t.push_back(to_t[m]);
          if (!tpre.count(nx.t)) continue;
        }
        if (to_e[m] >= 0) {
          nx.e.push_back(to_e[m]);
          if (!play_valid(ext_game, k, lat, nx.e)) continue;
        }
        if (st.len >= cap) {
          // A live extension beyond the interaction cap: longer external
          // plays may exist that we will not see.
          out.truncated = true;
          continue;
        }
        if (static_cast<int>(nx.e.size()) > sigma.bounds.max_len) {
          out.truncated = true;
          continue;
        }
        if (!seen.insert({nx.s, nx.t, nx.e}).second) continue;
        if (sigma.plays.count(nx.s) && tau.plays.count(nx.t) &&
            nx.e.size() % 2 == 0)
          out.plays.insert(nx.e);
        next.push_back(std::move(nx));
      }
    }
    frontier = std::move(next);
  }
  for (const Play& p : out.plays) {
    auto diags = validate_play(ext_game, k, lat, p);
    if (!diags.empty())
      throw std::runtime_error("composition produced an invalid play: " +
                               play_str(EV, p) + " (" + diags.front().reason +
                               ")");
  }
  return out;
}

std::vector<std::vector<std::string>> interaction_traces(
    const Strategy& sigma, const Strategy& tau, int max_traces) {
  if (!(sigma.bounds == tau.bounds) || sigma.lat != tau.lat)
    throw std::runtime_error("tracing requires matching session bounds");
  if (!type_equal(cod(sigma), dom(tau)))
    throw std::runtime_error("tracing requires a matching middle game");
  TypePtr A = dom(sigma), C = cod(tau);
  int k = sigma.bounds.copy_bound;
  const SecurityLattice& lat = *sigma.lat;
  TypePtr ext_game = limp(A, C);
  const GameView& W = denote(limp(sigma.game, C), k, lat);
  const GameView& SV = sigma.view();
  const GameView& TV = tau.view();

  std::vector<int> to_s(W.size(), -1), to_t(W.size(), -1);
  std::vector<int> req_t(W.size(), -1);
  std::vector<char> comp(W.size(), 'A');
  std::vector<TagPtr> ext_tag(W.size());
  for (int m = 0; m < W.size(); ++m) {
    const TagPtr& tag = W.moves[m].tag;
    if (tag->k == Tag::K::Res) {
      comp[m] = 'C';
      to_t[m] = TV.find(tag).value();
      ext_tag[m] = tag;
    } else if (tag->sub->k == Tag::K::Res) {
      comp[m] = 'B';
      to_s[m] = SV.find(tag->sub).value();
      to_t[m] = TV.find(tag_arg(tag->binit, tag->sub->sub)).value();
    } else {
      comp[m] = 'A';
      to_s[m] = SV.find(tag->sub).value();
      ext_tag[m] = tag_arg(tag->binit, tag->sub->sub);
      req_t[m] = TV.find(tag_arg(tag->binit, tag->sub->binit)).value();
    }
  }
  std::set<Play> spre = prefix_set(sigma.plays);
  std::set<Play> tpre = prefix_set(tau.plays);

  struct State {
    Play w, s, t, e;
  };
  const int cap = 3 * sigma.bounds.max_len;
  std::vector<std::vector<std::string>> out;
  std::vector<State> stack{State{}};
  while (!stack.empty() && static_cast<int>(out.size()) < max_traces) {
    State st = stack.back();
    stack.pop_back();
    bool extended = false;
    for (int m = W.size() - 1; m >= 0; --m) {
      if (static_cast<int>(st.w.size()) >= cap) break;
      State nx = st;
      nx.w.push_back(m);
      if (req_t[m] >= 0 &&
          std::find(st.t.begin(), st.t.end(), req_t[m]) == st.t.end())
        continue;
      if (to_s[m] >= 0) {
        nx.s.push_back(to_s[m]);
        if (!spre.count(nx.s)) continue;
      }
      if (to_t[m] >= 0) {
        nx.t.push_back(to_t[m]);
        if (!tpre.count(nx.t)) continue;
      }
      if (ext_tag[m]) {
        const GameView& EV = denote(ext_game, k, lat);
        nx.e.push_back(EV.find(ext_tag[m]).value());
        if (!play_valid(ext_game, k, lat, nx.e)) continue;
        if (static_cast<int>(nx.e.size()) > sigma.bounds.max_len) continue;
      }
      extended = true;
      stack.push_back(std::move(nx));
    }
    if (!extended && !st.w.empty()) {
      std::vector<std::string> trace;
      for (int m : st.w)
        trace.push_back(std::string(1, comp[m]) + " " + W.moves[m].tag->str());
      out.push_back(std::move(trace));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Product-style constructions

namespace {

struct Proj {
  const Strategy* st;
  std::function<std::optional<TagPtr>(const TagPtr&)> f;
};

/// Even valid plays of `game` in which every move is claimed by exactly
/// one projection and every projected play belongs to its strategy.
Strategy filter_product(const TypePtr& game, Bounds bd,
                        const SecurityLattice& lat,
                        const std::vector<Proj>& ps) {
  const GameView& v = denote(game, bd.copy_bound, lat);
  std::vector<std::set<Play>> pre;
  for (const Proj& p : ps) pre.push_back(prefix_set(p.st->plays));
  // Precompute each move's owner and projected id (-1: unclaimed).
  std::vector<std::pair<int, int>> owner(v.size(), {-1, -1});
  for (int m = 0; m < v.size(); ++m) {
    for (size_t i = 0; i < ps.size(); ++i) {
      auto t = ps[i].f(v.moves[m].tag);
      if (!t) continue;
      if (auto id = ps[i].st->view().find((*t)->str()))
        owner[m] = {static_cast<int>(i), *id};
      break;  // projections are disjoint: the first claim decides
    }
  }
  struct State {
    Play play;
    std::vector<Play> projs;
  };
  Strategy out{game, bd, &lat, {}};
  bool trunc = false;
  for (const Proj& p : ps) trunc = trunc || p.st->truncated;
  out.truncated = trunc;
  out.plays.insert(Play{});
  std::vector<State> frontier{State{{}, std::vector<Play>(ps.size())}};
  while (!frontier.empty()) {
    std::vector<State> next;
    for (const State& st : frontier) {
      if (static_cast<int>(st.play.size()) >= bd.max_len) continue;
      for (int m : valid_extensions(game, bd.copy_bound, lat, st.play)) {
        auto [who, pid] = owner[m];
        if (who < 0) continue;
        State nx = st;
        nx.play.push_back(m);
        nx.projs[who].push_back(pid);
        if (!pre[who].count(nx.projs[who])) continue;
        if (nx.play.size() % 2 == 0) {
          bool all = true;
          for (size_t i = 0; i < ps.size(); ++i)
            all = all && ps[i].st->plays.count(nx.projs[i]);
          if (all) out.plays.insert(nx.play);
        }
        next.push_back(std::move(nx));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::optional<TagPtr> none() { return std::nullopt; }

}  // namespace

Strategy tensor_strategy(const Strategy& sigma, const Strategy& tau) {
  TypePtr game = limp(tensor(dom(sigma), dom(tau)),
                      tensor(cod(sigma), cod(tau)));
  auto side = [](Tag::K want) {
    return [want](const TagPtr& t) -> std::optional<TagPtr> {
      if (t->k == Tag::K::Res) {
        if (t->sub->k != want) return std::nullopt;
        return tag_step(Tag::K::Res, t->sub->sub);
      }
      if (t->binit->k != want || t->sub->k != want) return std::nullopt;
      return tag_arg(t->binit->sub, t->sub->sub);
    };
  };
  std::vector<Proj> ps{{&sigma, side(Tag::K::TL)}, {&tau, side(Tag::K::TR)}};
  return equiv_closure(filter_product(game, sigma.bounds, *sigma.lat, ps));
}

Strategy pair_with(const Strategy& sigma, const Strategy& tau) {
  if (!type_equal(dom(sigma), dom(tau)))
    throw std::runtime_error("pairing requires a common domain");
  TypePtr game = limp(dom(sigma), with(cod(sigma), cod(tau)));
  auto side = [](Tag::K want) {
    return [want](const TagPtr& t) -> std::optional<TagPtr> {
      if (t->k == Tag::K::Res) {
        if (t->sub->k != want) return std::nullopt;
        return tag_step(Tag::K::Res, t->sub->sub);
      }
      if (t->binit->k != want) return std::nullopt;
      return tag_arg(t->binit->sub, t->sub);
    };
  };
  std::vector<Proj> ps{{&sigma, side(Tag::K::WL)}, {&tau, side(Tag::K::WR)}};
  return equiv_closure(filter_product(game, sigma.bounds, *sigma.lat, ps));
}

Strategy curry_strategy(const Strategy& sigma) {
  TypePtr AB = dom(sigma);
  if (AB->k != GameType::K::Tensor)
    throw std::runtime_error("curry requires a tensor domain");
  TypePtr game = limp(AB->a, limp(AB->b, cod(sigma)));
  return retag_strategy(sigma, game, [](const TagPtr& t) -> TagPtr {
    if (t->k == Tag::K::Res) return tag_step(Tag::K::Res, t);
    if (t->sub->k == Tag::K::TL)
      return tag_arg(tag_step(Tag::K::Res, t->binit), t->sub->sub);
    return tag_step(Tag::K::Res, tag_arg(t->binit, t->sub->sub));
  });
}

Strategy uncurry_strategy(const Strategy& sigma) {
  TypePtr BC = cod(sigma);
  if (BC->k != GameType::K::Limp)
    throw std::runtime_error("uncurry requires an implication codomain");
  TypePtr game = limp(tensor(dom(sigma), BC->a), BC->b);
  return retag_strategy(sigma, game, [](const TagPtr& t) -> TagPtr {
    if (t->k == Tag::K::Res) {
      if (t->sub->k == Tag::K::Res) return t->sub;
      return tag_arg(t->sub->binit, tag_step(Tag::K::TR, t->sub->sub));
    }
    return tag_arg(t->binit->sub, tag_step(Tag::K::TL, t->sub));
  });
}

// ---------------------------------------------------------------------------
// The ! comonad

int cantor_pair(int i, int j, int copy_bound) {
  int p = (i + j) * (i + j + 1) / 2 + j;
  if (p >= copy_bound)
    throw BudgetError("copy index " + std::to_string(p) + " for pair (" +
                      std::to_string(i) + "," + std::to_string(j) +
                      ") exceeds copy_bound " + std::to_string(copy_bound));
  return p;
}

Strategy counit(const TypePtr& t, Bounds b, const SecurityLattice& lat) {
  TypePtr game = limp(bang(t), t);
  const GameView& base = denote(t, b.copy_bound, lat);
  HistoryFreeGenerator g{game, b, &lat, {}};
  for (int i = 0; i < base.size(); ++i) {
    const MoveInfo& m = base.moves[i];
    TagPtr r = base.moves[base.root_initial(i)].tag;
    std::string c = tag_step(Tag::K::Res, m.tag)->str();
    std::string d = tag_arg(r, tag_copy(0, m.tag))->str();
    if (m.pol == Pol::O)
      g.f[c] = d;
    else
      g.f[d] = c;
  }
  return equiv_closure(from_generator(g));
}

Strategy comultiplication(const TypePtr& t, Bounds b,
                          const SecurityLattice& lat) {
  TypePtr game = limp(bang(t), bang(bang(t)));
  const GameView& base = denote(t, b.copy_bound, lat);
  HistoryFreeGenerator g{game, b, &lat, {}};
  bool trunc = false;
  for (int outer = 0; outer < b.copy_bound; ++outer) {
    for (int inner = 0; inner < b.copy_bound; ++inner) {
      int n;
      try {
        n = cantor_pair(inner, outer, b.copy_bound);
      } catch (const BudgetError&) {
        // The pair has no domain index at this bound: its plays are
        // missing, which makes the strategy a truncation of the real one.
        trunc = true;
        continue;
      }
      for (int i = 0; i < base.size(); ++i) {
        const MoveInfo& m = base.moves[i];
        TagPtr r = base.moves[base.root_initial(i)].tag;
        std::string c =
            tag_step(Tag::K::Res, tag_copy(outer, tag_copy(inner, m.tag)))
                ->str();
        std::string d = tag_arg(tag_copy(outer, tag_copy(inner, r)),
                                tag_copy(n, m.tag))
                            ->str();
        if (m.pol == Pol::O)
          g.f[c] = d;
        else
          g.f[d] = c;
      }
    }
  }
  Strategy out = equiv_closure(from_generator(g));
  out.truncated = out.truncated || trunc;
  return out;
}

Strategy bang_functor(const Strategy& sigma) {
  TypePtr game = limp(bang(dom(sigma)), bang(cod(sigma)));
  std::vector<Proj> ps;
  for (int i = 0; i < sigma.bounds.copy_bound; ++i) {
    ps.push_back({&sigma, [i](const TagPtr& t) -> std::optional<TagPtr> {
                    if (t->k == Tag::K::Res) {
                      if (t->sub->idx != i) return std::nullopt;
                      return tag_step(Tag::K::Res, t->sub->sub);
                    }
                    if (t->binit->idx != i || t->sub->idx != i)
                      return std::nullopt;
                    return tag_arg(t->binit->sub, t->sub->sub);
                  }});
  }
  return equiv_closure(filter_product(game, sigma.bounds, *sigma.lat, ps));
}

Strategy promote(const Strategy& sigma) {
  TypePtr A = dom(sigma);
  if (A->k != GameType::K::Bang)
    throw std::runtime_error("promotion requires a !-domain");
  Strategy delta = comultiplication(A->a, sigma.bounds, *sigma.lat);
  return compose(delta, bang_functor(sigma));
}

Strategy kleisli_compose(const Strategy& sigma, const Strategy& tau) {
  return compose(promote(sigma), tau);
}

// ---------------------------------------------------------------------------
// Level monads

Strategy unit_eta(LevelId l, const TypePtr& t, Bounds b,
                  const SecurityLattice& lat) {
  Strategy cc = copycat(t, b, lat);
  return retag_strategy(cc, limp(t, monad(l, t)),
                        [](const TagPtr& tag) { return tag; });
}

Strategy coerce(LevelId l, LevelId lp, const TypePtr& t, Bounds b,
                const SecurityLattice& lat) {
  TypePtr game = limp(monad(l, t), monad(lp, t));
  Strategy cc = copycat(t, b, lat);
  const GameView& from = cc.view();
  const GameView& to = denote(game, b.copy_bound, lat);
  std::set<Play> plays;
  for (const Play& p : cc.plays) {
    Play q;
    for (int m : p) q.push_back(to.find(from.moves[m].tag).value());
    auto diags = validate_play(game, b.copy_bound, lat, q);
    if (!diags.empty())
      throw CoercionError(
          "coercion " + lat.name(l) + " -> " + lat.name(lp) +
          " refused: " + diags.front().reason + " in play " + play_str(to, q));
    plays.insert(std::move(q));
  }
  if (!lat.leq(l, lp))
    throw CoercionError("coercion " + lat.name(l) + " -> " + lat.name(lp) +
                        " refused: levels are not ordered");
  return make_strategy(game, b, lat, std::move(plays));
}

Strategy monad_lift(const Strategy& sigma, LevelId l) {
  TypePtr game = limp(monad(l, dom(sigma)), monad(l, cod(sigma)));
  return retag_strategy(sigma, game, [](const TagPtr& t) { return t; });
}

Verdict naturality_check(const Strategy& sigma, const Strategy& tau_a,
                         const Strategy& tau_b, LevelId l, LevelId lp) {
  Strategy lhs = compose(monad_lift(sigma, l), tau_b);
  Strategy rhs = compose(tau_a, monad_lift(sigma, lp));
  if (lhs.plays == rhs.plays) return {};
  Verdict v{false, "naturality", {}};
  const GameView& view = lhs.view();
  for (const Play& p : lhs.plays)
    if (!rhs.plays.count(p) && v.witnesses.size() < 3)
      v.witnesses.push_back("only left: " + play_str(view, p));
  for (const Play& p : rhs.plays)
    if (!lhs.plays.count(p) && v.witnesses.size() < 3)
      v.witnesses.push_back("only right: " + play_str(view, p));
  return v;
}

Strategy generator_copycat(const TypePtr& game, Bounds bd,
                           const SecurityLattice& lat, const GameView& base,
                           const std::function<TagPtr(const TagPtr&)>& codw,
                           const std::function<TagPtr(const TagPtr&)>& domw) {
  const GameView& v = denote(game, bd.copy_bound, lat);
  HistoryFreeGenerator g{game, bd, &lat, {}};
  for (int i = 0; i < base.size(); ++i) {
    const MoveInfo& m = base.moves[i];
    TagPtr r = base.moves[base.root_initial(i)].tag;
    TagPtr cw = codw(m.tag), cr = codw(r), dw = domw(m.tag);
    if (!cw || !cr || !dw) continue;  // move has no image at this bound
    TagPtr c = tag_step(Tag::K::Res, cw);
    TagPtr d = tag_arg(cr, dw);
    if (!v.find(c) || !v.find(d)) continue;
    if (m.pol == Pol::O)
      g.f[c->str()] = d->str();
    else
      g.f[d->str()] = c->str();
  }
  return equiv_closure(from_generator(g));
}

Strategy restrict_to_erasure(const Strategy& sigma, LevelId l) {
  const SecurityLattice& lat = *sigma.lat;
  TypePtr game =
      limp(erase_type(dom(sigma), l, lat), erase_type(cod(sigma), l, lat));
  const GameView& from = sigma.view();
  const GameView& to = denote(game, sigma.bounds.copy_bound, lat);
  Strategy out{game, sigma.bounds, &lat, {}, sigma.truncated};
  for (const Play& p : sigma.plays) {
    Play q;
    bool ok = true;
    for (int m : p) {
      auto id = to.find(from.moves[m].tag);
      if (!id) {
        ok = false;
        break;
      }
      q.push_back(*id);
    }
    if (ok && play_valid(game, sigma.bounds.copy_bound, lat, q))
      out.plays.insert(std::move(q));
  }
  return out;
}

}  // namespace gamesec
