#include "gamesec/play.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>

namespace gamesec {

std::string cond_name(Cond c) {
  switch (c) {
    case Cond::P1: return "p1";
    case Cond::P2: return "p2";
    case Cond::P3: return "p3";
    case Cond::P4: return "p4";
    case Cond::P5: return "p5";
    case Cond::P6: return "p6";
    case Cond::Restrict: return "restriction";
  }
  return "?";
}

namespace {

using TagSeq = std::vector<TagPtr>;

void pchecks(const GameView& v, const std::vector<int>& s,
             const SecurityLattice& lat, const std::string& where,
             std::vector<PlayDiagnostic>& out, LevelId lift) {
  auto at = [&](const std::string& msg) { return where.empty() ? msg : where + ": " + msg; };
  std::set<int> seen;
  std::vector<int> pending;  // open questions, innermost last
  for (int i = 0; i < (int)s.size(); ++i) {
    const MoveInfo& m = v.moves[s[i]];
    if (i == 0 && m.pol != Pol::O)
      out.push_back({Cond::P1, 0, at("play starts with a P-move")});
    if (i > 0) {
      const MoveInfo& prev = v.moves[s[i - 1]];
      if (prev.pol == m.pol)
        out.push_back({Cond::P2, i, at("consecutive moves of equal polarity")});
    }
    if (!seen.insert(s[i]).second)
      out.push_back({Cond::P3, i, at("move " + m.tag->str() + " repeated")});
    if (!m.initial() && !seen.count(m.justifier))
      out.push_back({Cond::P5, i,
                     at("justifier of " + m.tag->str() + " not yet played")});
    if (!m.initial()) {
      const MoveInfo& j = v.moves[m.justifier];
      // Surrounding level monads raise the levels of this game's initial
      // moves; apply the accumulated lift when the justifier is initial.
      LevelId jl = j.initial() ? lat.join(j.level, lift) : j.level;
      if (!lat.leq(m.level, jl))
        out.push_back(
            {Cond::P6, i,
             at("level " + lat.name(m.level) + " of " + m.tag->str() +
                " not below level " + lat.name(jl) + " of its justifier")});
    }
    if (m.kind == Kind::Q) {
      pending.push_back(s[i]);
    } else {
      if (pending.empty() || pending.back() != m.justifier)
        out.push_back({Cond::P4, i,
                       at("answer " + m.tag->str() +
                          " does not answer the innermost open question")});
      if (!pending.empty() && pending.back() == m.justifier) pending.pop_back();
    }
  }
}

void rec_validate(const TypePtr& t, int k, const SecurityLattice& lat,
                  const TagSeq& seq, const std::string& where,
                  std::vector<PlayDiagnostic>& out,
                  LevelId lift) {
  const GameView& v = denote(t, k, lat);
  std::vector<int> ids;
  ids.reserve(seq.size());
  for (const auto& tag : seq) {
    auto id = v.find(tag);
    if (!id)
      throw MembershipError("move " + tag->str() +
                            " does not belong to the game" +
                            (where.empty() ? "" : " at " + where));
    ids.push_back(*id);
  }
  pchecks(v, ids, lat, where, out, lift);

  auto strip = [](const TagSeq& in, Tag::K k_) {
    TagSeq r;
    for (const auto& tag : in)
      if (tag->k == k_) r.push_back(tag->sub);
    return r;
  };

  switch (t->k) {
    case GameType::K::Flat:
    case GameType::K::Unit:
      break;
    case GameType::K::Monad:
      rec_validate(t->a, k, lat, seq, where + "T.", out,
                   lat.join(lift, t->level));
      break;
    case GameType::K::Tensor:
      rec_validate(t->a, k, lat, strip(seq, Tag::K::TL), where + "*L.", out,
                   lift);
      rec_validate(t->b, k, lat, strip(seq, Tag::K::TR), where + "*R.", out,
                   lift);
      break;
    case GameType::K::With: {
      bool left = false, right = false;
      for (int i = 0; i < (int)seq.size(); ++i) {
        bool l = seq[i]->k == Tag::K::WL;
        (l ? left : right) = true;
        if (left && right) {
          out.push_back({Cond::Restrict, i,
                         where + "moves from both & components"});
          break;
        }
      }
      rec_validate(t->a, k, lat, strip(seq, Tag::K::WL), where + "&L.", out,
                   lift);
      rec_validate(t->b, k, lat, strip(seq, Tag::K::WR), where + "&R.", out,
                   lift);
      break;
    }
    case GameType::K::Bang: {
      std::map<int, TagSeq> groups;
      for (const auto& tag : seq) groups[tag->idx].push_back(tag->sub);
      for (auto& [i, g] : groups)
        rec_validate(t->a, k, lat, g, where + "!" + std::to_string(i) + ".",
                     out, lift);
      break;
    }
    case GameType::K::Limp: {
      TagSeq res, arg;
      for (const auto& tag : seq)
        (tag->k == Tag::K::Res ? res : arg)
            .push_back(tag->sub);
      // Only the codomain's initial moves are initial in the composite,
      // so the lift flows into the codomain alone.
      rec_validate(t->b, k, lat, res, where + "cod.", out, lift);
      rec_validate(t->a, k, lat, arg, where + "dom.", out,
                   lat.bottom());
      break;
    }
  }
}

TagSeq to_tags(const GameView& v, const Play& s) {
  TagSeq r;
  r.reserve(s.size());
  for (int id : s) {
    if (id < 0 || id >= v.size())
      throw MembershipError("move id " + std::to_string(id) +
                            " out of range for the game");
    r.push_back(v.moves[id].tag);
  }
  return r;
}

// --- equivalence ----------------------------------------------------------

bool equiv_tags(const TypePtr& t, int k, const SecurityLattice& lat,
                const TagSeq& s, const TagSeq& u) {
  if (s.size() != u.size()) return false;
  switch (t->k) {
    case GameType::K::Unit:
      return true;
    case GameType::K::Flat: {
      // Flat equivalence is the identity relation.
      for (size_t i = 0; i < s.size(); ++i)
        if (s[i]->str() != u[i]->str()) return false;
      return true;
    }
    case GameType::K::Monad:
      return equiv_tags(t->a, k, lat, s, u);
    case GameType::K::Tensor: {
      TagSeq sl, sr, ul, ur;
      for (size_t i = 0; i < s.size(); ++i) {
        if ((s[i]->k == Tag::K::TL) != (u[i]->k == Tag::K::TL))
          return false;  // out-sequences differ
        (s[i]->k == Tag::K::TL ? sl : sr).push_back(s[i]->sub);
        (u[i]->k == Tag::K::TL ? ul : ur).push_back(u[i]->sub);
      }
      return equiv_tags(t->a, k, lat, sl, ul) &&
             equiv_tags(t->b, k, lat, sr, ur);
    }
    case GameType::K::With: {
      TagSeq ss, uu;
      for (size_t i = 0; i < s.size(); ++i) {
        if ((s[i]->k == Tag::K::WL) != (u[i]->k == Tag::K::WL)) return false;
        ss.push_back(s[i]->sub);
        uu.push_back(u[i]->sub);
      }
      if (s.empty()) return true;
      return equiv_tags(s[0]->k == Tag::K::WL ? t->a : t->b, k, lat, ss, uu);
    }
    case GameType::K::Bang: {
      // The permutation is forced positionally: pi(idx_s(i)) = idx_u(i).
      std::map<int, int> pi, inv;
      for (size_t i = 0; i < s.size(); ++i) {
        int a = s[i]->idx, b = u[i]->idx;
        auto [it, fresh] = pi.emplace(a, b);
        if (!fresh && it->second != b) return false;
        auto [jt, fresh2] = inv.emplace(b, a);
        if (!fresh2 && jt->second != a) return false;
      }
      std::map<int, TagSeq> gs, gu;
      for (const auto& tag : s) gs[tag->idx].push_back(tag->sub);
      for (const auto& tag : u) gu[tag->idx].push_back(tag->sub);
      for (const auto& [i, grp] : gs)
        if (!equiv_tags(t->a, k, lat, grp, gu[pi[i]])) return false;
      return true;
    }
    case GameType::K::Limp: {
      TagSeq sres, ures;
      std::map<std::string, TagSeq> sarg, uarg;
      for (size_t i = 0; i < s.size(); ++i) {
        if ((s[i]->k == Tag::K::Res) != (u[i]->k == Tag::K::Res)) return false;
        if (s[i]->k == Tag::K::Res) {
          sres.push_back(s[i]->sub);
          ures.push_back(u[i]->sub);
        } else {
          sarg[s[i]->binit->str()].push_back(s[i]->sub);
          uarg[u[i]->binit->str()].push_back(u[i]->sub);
        }
      }
      if (!equiv_tags(t->b, k, lat, sres, ures)) return false;
      std::set<std::string> bs;
      for (const auto& [b, _] : sarg) bs.insert(b);
      for (const auto& [b, _] : uarg) bs.insert(b);
      for (const auto& b : bs)
        if (!equiv_tags(t->a, k, lat, sarg[b], uarg[b])) return false;
      return true;
    }
  }
  return false;
}

// --- budget ---------------------------------------------------------------

struct Budget {
  long long steps = 0;
  long long cap = 50'000'000;
  std::chrono::steady_clock::time_point deadline{};
  bool timed = false;

  Budget() {
    if (const char* ms = std::getenv("GAMESEC_BUDGET_MS")) {
      timed = true;
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(std::atoll(ms));
    }
  }
  void tick(const char* what) {
    ++steps;
    if (steps > cap)
      throw BudgetError(std::string("enumeration budget exceeded in ") + what);
    if (timed && (steps & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > deadline)
      throw BudgetError(std::string("GAMESEC_BUDGET_MS exceeded in ") + what);
  }
};

}  // namespace

std::vector<PlayDiagnostic> validate_play(const TypePtr& t, int k,
                                          const SecurityLattice& lat,
                                          const Play& s) {
  const GameView& v = denote(t, k, lat);
  std::vector<PlayDiagnostic> out;
  rec_validate(t, k, lat, to_tags(v, s), "", out, lat.bottom());
  return out;
}

bool play_valid(const TypePtr& t, int k, const SecurityLattice& lat,
                const Play& s) {
  return validate_play(t, k, lat, s).empty();
}

bool play_equiv_unchecked(const TypePtr& t, int k, const SecurityLattice& lat,
                          const Play& s, const Play& u) {
  const GameView& v = denote(t, k, lat);
  return equiv_tags(t, k, lat, to_tags(v, s), to_tags(v, u));
}

bool play_equiv(const TypePtr& t, int k, const SecurityLattice& lat,
                const Play& s, const Play& u) {
  if (!play_valid(t, k, lat, s) || !play_valid(t, k, lat, u))
    throw std::invalid_argument("play_equiv requires valid plays");
  return play_equiv_unchecked(t, k, lat, s, u);
}

std::vector<int> valid_extensions(const TypePtr& t, int k,
                                  const SecurityLattice& lat, const Play& s) {
  const GameView& v = denote(t, k, lat);
  std::set<int> used(s.begin(), s.end());
  Pol next = s.empty() ? Pol::O : flip(v.moves[s.back()].pol);
  std::vector<int> out;
  Play s2 = s;
  s2.push_back(-1);
  for (int m = 0; m < v.size(); ++m) {
    if (used.count(m)) continue;
    const MoveInfo& mi = v.moves[m];
    if (mi.pol != next) continue;
    if (!mi.initial() && !used.count(mi.justifier)) continue;
    if (!mi.initial() && !lat.leq(mi.level, v.moves[mi.justifier].level))
      continue;
    s2.back() = m;
    if (play_valid(t, k, lat, s2)) out.push_back(m);
  }
  return out;
}

std::vector<Play> enumerate_plays(const TypePtr& t, int max_len, int k,
                                  const SecurityLattice& lat) {
  Budget budget;
  std::vector<Play> out;
  std::vector<Play> frontier{Play{}};
  out.push_back(Play{});
  for (int len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<Play> next;
    for (const Play& s : frontier) {
      budget.tick("enumerate_plays");
      for (int m : valid_extensions(t, k, lat, s)) {
        budget.tick("enumerate_plays");
        Play s2 = s;
        s2.push_back(m);
        out.push_back(s2);
        next.push_back(std::move(s2));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// --- equivalence-class generation -----------------------------------------

namespace {

using PermAssign = std::map<std::string, std::vector<int>>;

void collect_sites(const TagPtr& tag, const std::string& ctx,
                   std::set<std::string>& sites) {
  switch (tag->k) {
    case Tag::K::Q:
    case Tag::K::Ans:
      return;
    case Tag::K::TL: collect_sites(tag->sub, ctx + "1", sites); return;
    case Tag::K::TR: collect_sites(tag->sub, ctx + "2", sites); return;
    case Tag::K::WL: collect_sites(tag->sub, ctx + "3", sites); return;
    case Tag::K::WR: collect_sites(tag->sub, ctx + "4", sites); return;
    case Tag::K::Res: collect_sites(tag->sub, ctx + "r", sites); return;
    case Tag::K::Copy:
      sites.insert(ctx);
      collect_sites(tag->sub, ctx + "!" + std::to_string(tag->idx), sites);
      return;
    case Tag::K::Arg:
      collect_sites(tag->binit, ctx + "r", sites);
      collect_sites(tag->sub, ctx + "a[" + tag->binit->str() + "]", sites);
      return;
  }
}

TagPtr rewrite(const TagPtr& tag, const std::string& ctx,
               const PermAssign& pi) {
  switch (tag->k) {
    case Tag::K::Q:
    case Tag::K::Ans:
      return tag;
    case Tag::K::TL:
      return tag_step(Tag::K::TL, rewrite(tag->sub, ctx + "1", pi));
    case Tag::K::TR:
      return tag_step(Tag::K::TR, rewrite(tag->sub, ctx + "2", pi));
    case Tag::K::WL:
      return tag_step(Tag::K::WL, rewrite(tag->sub, ctx + "3", pi));
    case Tag::K::WR:
      return tag_step(Tag::K::WR, rewrite(tag->sub, ctx + "4", pi));
    case Tag::K::Res:
      return tag_step(Tag::K::Res, rewrite(tag->sub, ctx + "r", pi));
    case Tag::K::Copy: {
      auto it = pi.find(ctx);
      int ni = it == pi.end() ? tag->idx : it->second[tag->idx];
      return tag_copy(
          ni, rewrite(tag->sub, ctx + "!" + std::to_string(tag->idx), pi));
    }
    case Tag::K::Arg: {
      TagPtr b = rewrite(tag->binit, ctx + "r", pi);
      return tag_arg(
          b, rewrite(tag->sub, ctx + "a[" + tag->binit->str() + "]", pi));
    }
  }
  return tag;
}

}  // namespace

std::vector<Play> equiv_variants(const TypePtr& t, int k,
                                 const SecurityLattice& lat, const Play& s) {
  const GameView& v = denote(t, k, lat);
  TagSeq base = to_tags(v, s);

  std::vector<std::vector<int>> perms;  // permutations of 0..k-1
  {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  std::set<Play> cls{s};
  std::vector<Play> frontier{s};
  Budget budget;
  while (!frontier.empty()) {
    Play cur = frontier.back();
    frontier.pop_back();
    TagSeq cur_tags = to_tags(v, cur);

    std::set<std::string> site_set;
    for (const auto& tag : cur_tags) collect_sites(tag, "", site_set);
    std::vector<std::string> sites(site_set.begin(), site_set.end());
    if (sites.empty()) continue;
    if (sites.size() > 12)
      throw BudgetError("too many copy-index sites for saturation");

    std::vector<size_t> choice(sites.size(), 0);
    while (true) {
      budget.tick("equiv_variants");
      PermAssign pi;
      bool identity = true;
      for (size_t i = 0; i < sites.size(); ++i) {
        pi[sites[i]] = perms[choice[i]];
        if (choice[i] != 0) identity = false;
      }
      if (!identity) {
        Play cand;
        bool ok = true;
        for (const auto& tag : cur_tags) {
          auto id = v.find(rewrite(tag, "", pi));
          if (!id) { ok = false; break; }
          cand.push_back(*id);
        }
        if (ok && !cls.count(cand) && play_valid(t, k, lat, cand) &&
            equiv_tags(t, k, lat, base, to_tags(v, cand))) {
          cls.insert(cand);
          frontier.push_back(std::move(cand));
        }
      }
      // next assignment
      size_t d = 0;
      while (d < sites.size() && ++choice[d] == perms.size())
        choice[d++] = 0;
      if (d == sites.size()) break;
    }
  }
  return {cls.begin(), cls.end()};
}

Play play_from_tags(const GameView& v, const std::vector<std::string>& tags) {
  Play s;
  for (const auto& txt : tags) {
    auto id = v.find(parse_tag(txt)->str());
    if (!id)
      throw MembershipError("move " + txt + " does not belong to the game");
    s.push_back(*id);
  }
  return s;
}

std::vector<std::string> play_tags(const GameView& v, const Play& s) {
  std::vector<std::string> out;
  for (int id : s) out.push_back(v.moves.at(id).tag->str());
  return out;
}

std::string play_str(const GameView& v, const Play& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += v.moves.at(s[i]).tag->str();
  }
  return out.empty() ? "<empty>" : out;
}

}  // namespace gamesec
