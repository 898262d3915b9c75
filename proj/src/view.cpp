#include "gamesec/view.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace gamesec {

// ---------------------------------------------------------------------------
// Tags

const std::string& Tag::str() const {
  if (!cache_.empty()) return cache_;
  switch (k) {
    case K::Q:
      cache_ = "q";
      break;
    case K::Ans:
      cache_ = "(a " + std::to_string(idx) + ")";
      break;
    case K::TL:
      cache_ = "(tL " + sub->str() + ")";
      break;
    case K::TR:
      cache_ = "(tR " + sub->str() + ")";
      break;
    case K::WL:
      cache_ = "(wL " + sub->str() + ")";
      break;
    case K::WR:
      cache_ = "(wR " + sub->str() + ")";
      break;
    case K::Copy:
      cache_ = "(! " + std::to_string(idx) + " " + sub->str() + ")";
      break;
    case K::Arg:
      cache_ = "(fa " + binit->str() + " " + sub->str() + ")";
      break;
    case K::Res:
      cache_ = "(fr " + sub->str() + ")";
      break;
  }
  return cache_;
}

TagPtr tag_q() {
  auto t = std::make_shared<Tag>();
  t->k = Tag::K::Q;
  return t;
}
TagPtr tag_ans(int idx) {
  auto t = std::make_shared<Tag>();
  t->k = Tag::K::Ans;
  t->idx = idx;
  return t;
}
TagPtr tag_step(Tag::K k, TagPtr sub) {
  auto t = std::make_shared<Tag>();
  t->k = k;
  t->sub = std::move(sub);
  return t;
}
TagPtr tag_copy(int idx, TagPtr sub) {
  auto t = std::make_shared<Tag>();
  t->k = Tag::K::Copy;
  t->idx = idx;
  t->sub = std::move(sub);
  return t;
}
TagPtr tag_arg(TagPtr binit, TagPtr sub) {
  auto t = std::make_shared<Tag>();
  t->k = Tag::K::Arg;
  t->binit = std::move(binit);
  t->sub = std::move(sub);
  return t;
}

namespace {

struct TagParser {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("bad move tag '" + s + "': " + msg);
  }
  void skip_ws() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  std::string word() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '(' && s[j] != ')') ++j;
    std::string w = s.substr(i, j - i);
    i = j;
    return w;
  }
  int number() {
    std::string w = word();
    if (w.empty()) fail("expected number");
    return std::stoi(w);
  }
  void expect(char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  TagPtr parse() {
    skip_ws();
    if (i < s.size() && s[i] != '(') {
      std::string w = word();
      if (w == "q") return tag_q();
      fail("unknown atom " + w);
    }
    expect('(');
    std::string head = word();
    TagPtr out;
    if (head == "a") {
      out = tag_ans(number());
    } else if (head == "tL" || head == "tR" || head == "wL" || head == "wR" ||
               head == "fr") {
      Tag::K k = head == "tL"   ? Tag::K::TL
                 : head == "tR" ? Tag::K::TR
                 : head == "wL" ? Tag::K::WL
                 : head == "wR" ? Tag::K::WR
                                : Tag::K::Res;
      out = tag_step(k, parse());
    } else if (head == "!") {
      int idx = number();
      out = tag_copy(idx, parse());
    } else if (head == "fa") {
      TagPtr b = parse();
      out = tag_arg(std::move(b), parse());
    } else {
      fail("unknown constructor " + head);
    }
    expect(')');
    return out;
  }
};

}  // namespace

TagPtr parse_tag(const std::string& s) {
  TagParser p{s};
  TagPtr t = p.parse();
  p.skip_ws();
  if (p.i != s.size()) p.fail("trailing input");
  return t;
}

// ---------------------------------------------------------------------------
// Denotation

int GameView::root_initial(int m) const {
  while (moves[m].justifier >= 0) m = moves[m].justifier;
  return m;
}

namespace {

void add_move(GameView& v, MoveInfo m) {
  int id = v.size();
  v.index.emplace(m.tag->str(), id);
  if (m.initial()) v.initials.push_back(id);
  v.moves.push_back(std::move(m));
}

/// Appends the moves of `child`, rewriting each tag with `wrap`,
/// optionally flipping polarity, and rejustifying child-initial moves to
/// `init_justifier` (pass -1 to keep them initial). Returns the id offset
/// of the copied block.
int lift(GameView& v, const GameView& child,
         const std::function<TagPtr(const TagPtr&)>& wrap, bool flip_pol,
         int init_justifier) {
  int base = v.size();
  for (const auto& m : child.moves) {
    MoveInfo n;
    n.tag = wrap(m.tag);
    n.pol = flip_pol ? flip(m.pol) : m.pol;
    n.kind = m.kind;
    n.level = m.level;
    n.justifier = m.initial() ? init_justifier : base + m.justifier;
    add_move(v, std::move(n));
  }
  return base;
}

GameView build(const TypePtr& t, int k, const SecurityLattice& lat) {
  GameView v;
  v.game = t;
  v.copy_bound = k;
  switch (t->k) {
    case GameType::K::Unit:
      break;
    case GameType::K::Flat: {
      add_move(v, {tag_q(), Pol::O, Kind::Q, t->level, -1});
      for (int j = 0; j < t->arity; ++j)
        add_move(v, {tag_ans(j), Pol::P, Kind::A, t->level, 0});
      break;
    }
    case GameType::K::Tensor:
    case GameType::K::With: {
      bool tens = t->k == GameType::K::Tensor;
      const GameView& A = denote(t->a, k, lat);
      const GameView& B = denote(t->b, k, lat);
      Tag::K lk = tens ? Tag::K::TL : Tag::K::WL;
      Tag::K rk = tens ? Tag::K::TR : Tag::K::WR;
      lift(v, A, [&](const TagPtr& s) { return tag_step(lk, s); }, false, -1);
      lift(v, B, [&](const TagPtr& s) { return tag_step(rk, s); }, false, -1);
      break;
    }
    case GameType::K::Bang: {
      const GameView& A = denote(t->a, k, lat);
      for (int i = 0; i < k; ++i)
        lift(v, A, [&](const TagPtr& s) { return tag_copy(i, s); }, false, -1);
      break;
    }
    case GameType::K::Monad: {
      const GameView& A = denote(t->a, k, lat);
      for (const auto& m : A.moves) {
        MoveInfo n = m;
        n.level = lat.join(m.level, t->level);
        add_move(v, std::move(n));
      }
      break;
    }
    case GameType::K::Limp: {
      const GameView& A = denote(t->a, k, lat);
      const GameView& B = denote(t->b, k, lat);
      // Codomain first: its ids coincide with B's, so arg copies can
      // point their initial moves straight at the codomain initial.
      lift(v, B, [&](const TagPtr& s) { return tag_step(Tag::K::Res, s); },
           false, -1);
      for (int b : B.initials) {
        TagPtr btag = B.moves[b].tag;
        lift(v, A,
             [&](const TagPtr& s) { return tag_arg(btag, s); }, true, b);
      }
      break;
    }
  }
  return v;
}

}  // namespace

const GameView& denote(const TypePtr& t, int copy_bound,
                       const SecurityLattice& lat) {
  if (copy_bound < 1) throw std::invalid_argument("copy_bound must be >= 1");
  // Recursive: build() denotes subgames while the lock is held.
  static std::recursive_mutex mu;
  static std::map<std::string, std::unique_ptr<GameView>> cache;
  std::string key = lat.fingerprint() + "#" + std::to_string(copy_bound) +
                    "#" + t->key();
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto v = std::make_unique<GameView>(build(t, copy_bound, lat));
    it = cache.emplace(key, std::move(v)).first;
  }
  return *it->second;
}

}  // namespace gamesec
