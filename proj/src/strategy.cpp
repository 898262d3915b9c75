#include "gamesec/strategy.hpp"

#include <algorithm>

namespace gamesec {

namespace {

std::string show(const Strategy& s, const Play& p) {
  return play_str(s.view(), p);
}

bool is_prefix(const Play& p, const Play& s) {
  return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}

bool equiv(const Strategy& st, const Play& a, const Play& b) {
  return play_equiv_unchecked(st.game, st.bounds.copy_bound, *st.lat, a, b);
}

/// Shared conditions: non-empty, even, valid, causally consistent.
bool basic_checks(const Strategy& s, Verdict& v) {
  if (s.plays.empty()) {
    v = {false, "non-empty", {"the play set is empty"}};
    return false;
  }
  for (const Play& p : s.plays) {
    if (p.size() % 2 != 0) {
      v = {false, "even-length", {show(s, p)}};
      return false;
    }
    auto diags = validate_play(s.game, s.bounds.copy_bound, *s.lat, p);
    if (!diags.empty()) {
      v = {false, "valid-plays", {show(s, p), diags.front().reason}};
      return false;
    }
    if (p.size() >= 2) {
      Play parent(p.begin(), p.end() - 2);
      if (!s.plays.count(parent)) {
        v = {false, "causal-consistency", {show(s, p), show(s, parent)}};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Strategy make_strategy(TypePtr game, Bounds b, const SecurityLattice& lat,
                       std::set<Play> plays) {
  Strategy s{std::move(game), b, &lat, std::move(plays)};
  for (const Play& p : s.plays) {
    if (p.size() % 2 != 0)
      throw std::runtime_error("odd-length play in strategy: " + show(s, p));
    auto diags = validate_play(s.game, b.copy_bound, lat, p);
    if (!diags.empty())
      throw std::runtime_error("invalid play in strategy: " + show(s, p) +
                               " (" + diags.front().reason + ")");
  }
  return s;
}

Strategy strategy_from_tags(TypePtr game, Bounds b, const SecurityLattice& lat,
                            const std::vector<std::vector<std::string>>& tps) {
  const GameView& v = denote(game, b.copy_bound, lat);
  std::set<Play> plays;
  for (const auto& tags : tps) plays.insert(play_from_tags(v, tags));
  return make_strategy(std::move(game), b, lat, std::move(plays));
}

Verdict is_strategy(const Strategy& s) {
  Verdict v;
  if (!basic_checks(s, v)) return v;
  for (const Play& p : s.plays) {
    for (const Play& q :
         equiv_variants(s.game, s.bounds.copy_bound, *s.lat, p)) {
      if (!s.plays.count(q))
        return {false, "representation-independence", {show(s, p), show(s, q)}};
    }
  }
  // Determinacy up to ~: equivalent positions get equivalent responses.
  for (const Play& p : s.plays) {
    if (p.size() < 2) continue;
    Play podd(p.begin(), p.end() - 1);
    for (const Play& q : s.plays) {
      if (q.size() != p.size() || q < p) continue;
      Play qodd(q.begin(), q.end() - 1);
      if (equiv(s, podd, qodd) && !equiv(s, p, q))
        return {false, "determinacy", {show(s, p), show(s, q)}};
    }
  }
  return v;
}

Verdict is_skeleton(const Strategy& s) {
  Verdict v;
  if (!basic_checks(s, v)) return v;
  // Functional determinacy: at most one response after each exact position.
  for (const Play& p : s.plays) {
    if (p.size() < 2) continue;
    for (const Play& q : s.plays) {
      if (q.size() != p.size() || q <= p) continue;
      if (std::equal(p.begin(), p.end() - 1, q.begin()) && p.back() != q.back())
        return {false, "functional-determinacy", {show(s, p), show(s, q)}};
    }
  }
  // Representation independence: where the skeleton does respond at an
  // equivalent position, the response must track the equivalence.  A
  // skeleton may stay silent at other variants; saturation fills them in.
  for (const Play& p : s.plays) {
    if (p.size() < 2) continue;
    Play podd(p.begin(), p.end() - 1);
    for (const Play& q : s.plays) {
      if (q.size() != p.size()) continue;
      Play qodd(q.begin(), q.end() - 1);
      if (!equiv(s, podd, qodd)) continue;
      if (!equiv(s, p, q))
        return {false, "representation-independence", {show(s, p), show(s, q)}};
    }
  }
  return v;
}

Verdict is_skeleton_of(const Strategy& phi, const Strategy& sigma) {
  Verdict v = is_skeleton(phi);
  if (!v.ok) return v;
  for (const Play& p : phi.plays)
    if (!sigma.plays.count(p))
      return {false, "containment", {show(phi, p)}};
  for (const Play& t : sigma.plays) {
    bool covered = false;
    for (const Play& p : phi.plays) {
      if (p.size() != t.size()) continue;
      if (equiv(phi, t, p)) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, "covering", {show(sigma, t)}};
  }
  return v;
}

Strategy saturate(const Strategy& phi) {
  Verdict v = is_skeleton(phi);
  if (!v.ok) {
    std::string msg = "not a skeleton (" + v.law + ")";
    for (const auto& w : v.witnesses) msg += "; " + w;
    throw SkeletonError(msg);
  }
  Strategy out = phi;
  for (const Play& p : phi.plays)
    for (const Play& q :
         equiv_variants(phi.game, phi.bounds.copy_bound, *phi.lat, p))
      out.plays.insert(q);
  return out;
}

namespace {

Strategy extract_impl(const Strategy& sigma, const Play* through) {
  Strategy out{sigma.game, sigma.bounds, sigma.lat, {}, sigma.truncated};
  out.plays.insert(Play{});
  std::vector<Play> frontier{Play{}};
  const GameView& view = sigma.view();
  while (!frontier.empty()) {
    std::vector<Play> next;
    // Choices already made at this stage, for coherent tie-breaking.
    std::vector<Play> decided;
    for (const Play& s : frontier) {
      std::map<int, std::vector<int>> responses;  // O-move -> choice set
      for (const Play& p : sigma.plays) {
        if (p.size() != s.size() + 2 || !is_prefix(s, p)) continue;
        responses[p[s.size()]].push_back(p[s.size() + 1]);
      }
      for (auto& [a, bs] : responses) {
        Play sa = s;
        sa.push_back(a);
        int choice = -1;
        if (through && is_prefix(sa, *through))
          for (int b : bs)
            if (b == (*through)[s.size() + 1]) choice = b;
        // Keep equivalent positions functional: reuse a decided response
        // when this position is equivalent to one already handled.
        if (choice < 0) {
          for (const Play& d : decided) {
            Play dodd(d.begin(), d.end() - 1);
            if (!equiv(sigma, sa, dodd)) continue;
            for (int b : bs) {
              Play sab = sa;
              sab.push_back(b);
              if (equiv(sigma, sab, d)) {
                choice = b;
                break;
              }
            }
            if (choice >= 0) break;
          }
        }
        if (choice < 0) {
          choice = bs.front();
          for (int b : bs)
            if (view.moves[b].tag->str() < view.moves[choice].tag->str())
              choice = b;
        }
        Play sab = sa;
        sab.push_back(choice);
        decided.push_back(sab);
        out.plays.insert(sab);
        next.push_back(std::move(sab));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

Strategy extract_skeleton(const Strategy& sigma) {
  return extract_impl(sigma, nullptr);
}

Strategy extract_skeleton_through(const Strategy& sigma, const Play& through) {
  if (!sigma.plays.count(through))
    throw std::runtime_error("play to steer through is not in the strategy");
  return extract_impl(sigma, &through);
}

bool skeleton_preorder(const Strategy& phi, const Strategy& psi) {
  Strategy sp = saturate(phi);
  Strategy tp = saturate(psi);
  return std::includes(tp.plays.begin(), tp.plays.end(), sp.plays.begin(),
                       sp.plays.end());
}

bool skeleton_preorder_direct(const Strategy& phi, const Strategy& psi) {
  for (const Play& s : phi.plays) {
    bool found = false;
    for (const Play& t : psi.plays) {
      if (t.size() != s.size()) continue;
      if (equiv(phi, s, t)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Strategy copycat(const TypePtr& t, Bounds b, const SecurityLattice& lat) {
  TypePtr game = limp(t, t);
  const GameView& v = denote(game, b.copy_bound, lat);
  const GameView& base = denote(t, b.copy_bound, lat);
  Strategy out{game, b, &lat, {}};
  for (const Play& s : enumerate_plays(game, b.max_len, b.copy_bound, lat)) {
    if (s.size() % 2 != 0) continue;
    // A copycat position keeps the two components equivalent at every
    // even stage, not just at the end.
    Play dom, cod;
    bool ok = true;
    for (size_t i = 0; i < s.size() && ok; ++i) {
      const TagPtr& tag = v.moves[s[i]].tag;
      auto id = base.find(tag->sub);
      if (!id) {
        ok = false;
        break;
      }
      (tag->k == Tag::K::Res ? cod : dom).push_back(*id);
      // A domain initial is the copy of the codomain initial played just
      // before it, and must point at exactly that move; restrictions
      // forget the pointer, so check it here.
      if (tag->k == Tag::K::Arg &&
          std::find(base.initials.begin(), base.initials.end(), *id) !=
              base.initials.end()) {
        if (i == 0 || v.moves[s[i - 1]].tag->k != Tag::K::Res ||
            v.moves[s[i - 1]].tag->sub->str() != tag->binit->str()) {
          ok = false;
          break;
        }
      }
      if (i % 2 == 1)
        ok = dom.size() == cod.size() &&
             play_valid(t, b.copy_bound, lat, dom) &&
             play_valid(t, b.copy_bound, lat, cod) &&
             play_equiv_unchecked(t, b.copy_bound, lat, dom, cod);
    }
    if (ok) out.plays.insert(s);
  }
  return out;
}

Strategy from_generator(const HistoryFreeGenerator& g) {
  const GameView& v = denote(g.game, g.bounds.copy_bound, *g.lat);
  Strategy out{g.game, g.bounds, g.lat, {}};
  out.plays.insert(Play{});
  std::vector<Play> frontier{Play{}};
  while (!frontier.empty()) {
    std::vector<Play> next;
    for (const Play& s : frontier) {
      if (static_cast<int>(s.size()) + 2 > g.bounds.max_len) continue;
      for (int a : valid_extensions(g.game, g.bounds.copy_bound, *g.lat, s)) {
        auto it = g.f.find(v.moves[a].tag->str());
        if (it == g.f.end()) continue;
        auto b = v.find(it->second);
        if (!b)
          throw GeneratorError("generator maps " + v.moves[a].tag->str() +
                               " to unknown move " + it->second);
        Play p = s;
        p.push_back(a);
        p.push_back(*b);
        auto diags = validate_play(g.game, g.bounds.copy_bound, *g.lat, p);
        if (!diags.empty())
          throw GeneratorError("generator produces invalid play " +
                               play_str(v, p) + " (" + diags.front().reason +
                               ")");
        if (out.plays.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Verdict history_free_check(const Strategy& phi) {
  Verdict v = is_skeleton(phi);
  if (!v.ok) return v;
  const GameView& view = phi.view();
  // Uniform response: the P-move depends only on the preceding O-move.
  std::map<int, int> resp;
  for (const Play& p : phi.plays) {
    for (size_t i = 0; i + 1 < p.size(); i += 2) {
      auto [it, fresh] = resp.emplace(p[i], p[i + 1]);
      if (!fresh && it->second != p[i + 1])
        return {false, "uniform-response",
                {view.moves[p[i]].tag->str(), view.moves[it->second].tag->str(),
                 view.moves[p[i + 1]].tag->str()}};
    }
  }
  // Closure: wherever the response function applies and yields a valid
  // play, the strategy contains it.
  for (const Play& s : phi.plays) {
    if (static_cast<int>(s.size()) + 2 > phi.bounds.max_len) continue;
    for (int a : valid_extensions(phi.game, phi.bounds.copy_bound, *phi.lat, s)) {
      auto it = resp.find(a);
      if (it == resp.end()) continue;
      Play p = s;
      p.push_back(a);
      p.push_back(it->second);
      if (play_valid(phi.game, phi.bounds.copy_bound, *phi.lat, p) &&
          !phi.plays.count(p))
        return {false, "closure", {show(phi, p)}};
    }
  }
  return v;
}

bool is_total_bounded(const Strategy& s, int L, Play* witness) {
  for (const Play& p : s.plays) {
    if (static_cast<int>(p.size()) >= L) continue;
    for (int a : valid_extensions(s.game, s.bounds.copy_bound, *s.lat, p)) {
      Play pa = p;
      pa.push_back(a);
      bool answered = false;
      for (const Play& q : s.plays) {
        if (q.size() == pa.size() + 1 && is_prefix(pa, q)) {
          answered = true;
          break;
        }
      }
      if (!answered) {
        if (witness) *witness = pa;
        return false;
      }
    }
  }
  return true;
}

}  // namespace gamesec
