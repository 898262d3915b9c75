#include "gamesec/dcc.hpp"

#include <algorithm>
#include <sstream>

namespace gamesec {

// ---------------------------------------------------------------------------
// Terms

namespace {

TermPtr mk(Term t) { return std::make_shared<Term>(std::move(t)); }

}  // namespace

TermPtr var(std::string name) {
  return mk({Term::K::Var, std::move(name), nullptr, 0, nullptr, nullptr, 0});
}
TermPtr lam(std::string name, TypePtr ann, TermPtr body) {
  return mk({Term::K::Lam, std::move(name), std::move(ann), 0, std::move(body),
             nullptr, 0});
}
TermPtr app(TermPtr f, TermPtr arg) {
  return mk({Term::K::App, "", nullptr, 0, std::move(f), std::move(arg), 0});
}
TermPtr eta(LevelId level, TermPtr body) {
  return mk({Term::K::Eta, "", nullptr, level, std::move(body), nullptr, 0});
}
TermPtr bind_term(std::string name, TermPtr bound, TermPtr body) {
  return mk({Term::K::Bind, std::move(name), nullptr, 0, std::move(bound),
             std::move(body), 0});
}
TermPtr constant(std::string base, TypePtr ann, int value) {
  return mk({Term::K::Const, std::move(base), std::move(ann), 0, nullptr,
             nullptr, value});
}

std::string show_term(const TermPtr& t, const SecurityLattice& lat) {
  auto atom = [&](const TermPtr& u, auto&& self) -> std::string {
    std::string s = show_term(u, lat);
    if (u->k == Term::K::Var || u->k == Term::K::Const) return s;
    return "(" + s + ")";
  };
  switch (t->k) {
    case Term::K::Var:
      return t->name;
    case Term::K::Const:
      return t->name + "." + std::to_string(t->value);
    case Term::K::Lam:
      return "\\" + t->name + ":" + show_type(t->ann, lat) + ". " +
             show_term(t->a, lat);
    case Term::K::App: {
      std::string f = show_term(t->a, lat);
      if (t->a->k != Term::K::Var && t->a->k != Term::K::Const &&
          t->a->k != Term::K::App)
        f = "(" + f + ")";
      return f + " " + atom(t->b, atom);
    }
    case Term::K::Eta:
      return "eta<" + lat.name(t->level) + "> " + atom(t->a, atom);
    case Term::K::Bind:
      return "bind " + t->name + " = " + show_term(t->a, lat) + " in " +
             show_term(t->b, lat);
  }
  return "?";
}

namespace {

bool alpha_eq(const TermPtr& a, const TermPtr& b,
              std::vector<std::pair<std::string, std::string>>& env) {
  if (a->k != b->k) return false;
  switch (a->k) {
    case Term::K::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == a->name || it->second == b->name)
          return it->first == a->name && it->second == b->name;
      }
      return a->name == b->name;
    }
    case Term::K::Const:
      return a->name == b->name && a->value == b->value;
    case Term::K::Lam: {
      if (!type_equal(a->ann, b->ann)) return false;
      env.emplace_back(a->name, b->name);
      bool r = alpha_eq(a->a, b->a, env);
      env.pop_back();
      return r;
    }
    case Term::K::App:
      return alpha_eq(a->a, b->a, env) && alpha_eq(a->b, b->b, env);
    case Term::K::Eta:
      return a->level == b->level && alpha_eq(a->a, b->a, env);
    case Term::K::Bind: {
      if (!alpha_eq(a->a, b->a, env)) return false;
      env.emplace_back(a->name, b->name);
      bool r = alpha_eq(a->b, b->b, env);
      env.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

bool term_equal(const TermPtr& a, const TermPtr& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return alpha_eq(a, b, env);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct TermParser {
  const std::string& s;
  const SecurityLattice& lat;
  const BaseEnv* env;
  size_t i = 0;

  [[noreturn]] void fail(size_t at, const std::string& msg) {
    int line = 1, col = 1;
    for (size_t j = 0; j < at && j < s.size(); ++j) {
      if (s[j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("term syntax error at " + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + msg);
  }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) fail(i, "expected '" + std::string(1, c) + "' " + what);
  }
  std::string ident() {
    ws();
    size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
      ++j;
    if (j == i) fail(i, "expected identifier");
    std::string w = s.substr(i, j - i);
    i = j;
    return w;
  }
  bool at_keyword(const std::string& kw) {
    ws();
    if (s.compare(i, kw.size(), kw) != 0) return false;
    size_t j = i + kw.size();
    return j >= s.size() ||
           (!std::isalnum(static_cast<unsigned char>(s[j])) && s[j] != '_');
  }

  LevelId level_name() {
    std::string n = ident();
    auto l = lat.find(n);
    if (!l) fail(i, "unknown level '" + n + "'");
    return *l;
  }

  TypePtr annotation() {
    // Types never contain '.', so the annotation runs to the next dot.
    ws();
    size_t dot = s.find('.', i);
    if (dot == std::string::npos) fail(i, "missing '.' after annotation");
    std::string text = s.substr(i, dot - i);
    TypePtr t;
    try {
      t = parse_type(text, lat, env);
    } catch (const std::exception& ex) {
      fail(i, ex.what());
    }
    i = dot + 1;
    return t;
  }

  bool at_prefix() {
    return peek('\\') || at_keyword("eta") || at_keyword("bind");
  }

  TermPtr prefix() {
    if (eat('\\')) {
      std::string x = ident();
      expect(':', "after lambda binder");
      TypePtr ann = annotation();
      return lam(std::move(x), std::move(ann), expr());
    }
    if (at_keyword("eta")) {
      i += 3;
      expect('<', "after eta");
      LevelId l = level_name();
      expect('>', "after eta level");
      return eta(l, expr());
    }
    // bind
    i += 4;
    std::string x = ident();
    expect('=', "after bind binder");
    TermPtr bound = expr();
    if (!at_keyword("in")) fail(i, "expected 'in'");
    i += 2;
    return bind_term(std::move(x), std::move(bound), expr());
  }

  TermPtr atom() {
    if (eat('(')) {
      TermPtr e = expr();
      expect(')', "to close parenthesis");
      return e;
    }
    std::string w = ident();
    if (eat('.')) {
      ws();
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      if (j == i) fail(i, "expected answer index after '" + w + ".'");
      int v = std::stoi(s.substr(i, j - i));
      i = j;
      if (!env || !env->count(w))
        fail(i, "constant of undeclared base type '" + w + "'");
      const BaseDecl& d = env->at(w);
      if (v >= d.arity)
        fail(i, "constant index " + std::to_string(v) +
                    " out of range for base '" + w + "'");
      return constant(w, flat(w, d.arity, d.level), v);
    }
    return var(std::move(w));
  }

  bool at_atom() {
    ws();
    if (i >= s.size()) return false;
    char c = s[i];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  TermPtr expr() {
    if (at_prefix()) return prefix();
    ws();
    if (!at_atom()) fail(i, "expected a term");
    TermPtr e = atom();
    while (true) {
      if (at_keyword("in")) break;
      if (at_prefix()) {
        // A trailing prefix form is the final argument: f \x:T. e
        e = app(std::move(e), prefix());
        break;
      }
      if (!at_atom()) break;
      e = app(std::move(e), atom());
    }
    return e;
  }
};

}  // namespace

TermPtr parse_term(const std::string& text, const SecurityLattice& lat,
                   const BaseEnv* env) {
  TermParser p{text, lat, env};
  TermPtr e = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail(p.i, "trailing input");
  return e;
}

// ---------------------------------------------------------------------------
// Typing

Derivation typecheck(const TypingContext& ctx, const TermPtr& e,
                     const SecurityLattice& lat) {
  switch (e->k) {
    case Term::K::Var: {
      for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
        if (it->first == e->name)
          return {"var", ctx, e, it->second, {}, ""};
      throw TypeError("var", "unbound variable '" + e->name + "'");
    }
    case Term::K::Const:
      return {"const", ctx, e, e->ann, {}, ""};
    case Term::K::Lam: {
      TypingContext inner = ctx;
      inner.emplace_back(e->name, e->ann);
      Derivation prem = typecheck(inner, e->a, lat);
      TypePtr ty = arrow(e->ann, prem.type);
      return {"lam", ctx, e, ty, {std::move(prem)}, ""};
    }
    case Term::K::App: {
      Derivation pf = typecheck(ctx, e->a, lat);
      if (pf.type->k != GameType::K::Limp ||
          pf.type->a->k != GameType::K::Bang)
        throw TypeError("app", "application of a non-function of type " +
                                   show_type(pf.type, lat));
      TypePtr expected = pf.type->a->a;
      Derivation pa = typecheck(ctx, e->b, lat);
      if (!type_equal(normalize_monads(expected, lat),
                      normalize_monads(pa.type, lat)))
        throw TypeError("app", "argument type " + show_type(pa.type, lat) +
                                   " does not match expected " +
                                   show_type(expected, lat));
      TypePtr ty = pf.type->b;
      return {"app", ctx, e, ty, {std::move(pf), std::move(pa)}, ""};
    }
    case Term::K::Eta: {
      Derivation prem = typecheck(ctx, e->a, lat);
      TypePtr ty = monad(e->level, prem.type);
      return {"eta", ctx, e, ty, {std::move(prem)}, ""};
    }
    case Term::K::Bind: {
      Derivation pe = typecheck(ctx, e->a, lat);
      if (pe.type->k != GameType::K::Monad)
        throw TypeError("bind", "bind over non-monadic type " +
                                    show_type(pe.type, lat));
      LevelId l = pe.type->level;
      TypingContext inner = ctx;
      inner.emplace_back(e->name, pe.type->a);
      Derivation pb = typecheck(inner, e->b, lat);
      if (!is_protected(pb.type, l, lat)) {
        std::string bad;
        for (LevelId lp : level_of_type(pb.type, lat))
          if (!lat.leq(l, lp)) bad = lat.name(lp);
        throw TypeError("bind", "body type " + show_type(pb.type, lat) +
                                    " is not protected at level " +
                                    lat.name(l) + ": level " + bad +
                                    " is not above " + lat.name(l));
      }
      std::string evidence = "protected at " + lat.name(l) + ": levels {";
      bool first = true;
      for (LevelId lp : level_of_type(pb.type, lat)) {
        if (!first) evidence += ", ";
        evidence += lat.name(lp);
        first = false;
      }
      evidence += "} all above " + lat.name(l);
      TypePtr ty = pb.type;
      return {"bind", ctx,      e, ty, {std::move(pe), std::move(pb)},
              evidence};
    }
  }
  throw TypeError("?", "unreachable term form");
}

// ---------------------------------------------------------------------------
// Normalization

std::set<std::string> free_vars(const TermPtr& e) {
  switch (e->k) {
    case Term::K::Var:
      return {e->name};
    case Term::K::Const:
      return {};
    case Term::K::Lam: {
      auto out = free_vars(e->a);
      out.erase(e->name);
      return out;
    }
    case Term::K::App: {
      auto out = free_vars(e->a);
      for (auto& v : free_vars(e->b)) out.insert(v);
      return out;
    }
    case Term::K::Eta:
      return free_vars(e->a);
    case Term::K::Bind: {
      auto out = free_vars(e->b);
      out.erase(e->name);
      for (auto& v : free_vars(e->a)) out.insert(v);
      return out;
    }
  }
  return {};
}

namespace {

TermPtr subst(const TermPtr& e, const std::string& x, const TermPtr& v);

TermPtr subst_binder(const std::string& binder, const TermPtr& body,
                     const std::string& x, const TermPtr& v,
                     std::string* out_binder) {
  if (binder == x) {
    *out_binder = binder;
    return body;
  }
  std::set<std::string> fv = free_vars(v);
  if (!fv.count(binder)) {
    *out_binder = binder;
    return subst(body, x, v);
  }
  // Capture: rename the binder before substituting.
  std::string fresh = binder;
  std::set<std::string> taken = fv;
  for (auto& w : free_vars(body)) taken.insert(w);
  do {
    fresh += "'";
  } while (taken.count(fresh));
  *out_binder = fresh;
  return subst(subst(body, binder, var(fresh)), x, v);
}

TermPtr subst(const TermPtr& e, const std::string& x, const TermPtr& v) {
  switch (e->k) {
    case Term::K::Var:
      return e->name == x ? v : e;
    case Term::K::Const:
      return e;
    case Term::K::Lam: {
      std::string b;
      TermPtr body = subst_binder(e->name, e->a, x, v, &b);
      return lam(std::move(b), e->ann, std::move(body));
    }
    case Term::K::App:
      return app(subst(e->a, x, v), subst(e->b, x, v));
    case Term::K::Eta:
      return eta(e->level, subst(e->a, x, v));
    case Term::K::Bind: {
      TermPtr bound = subst(e->a, x, v);
      std::string b;
      TermPtr body = subst_binder(e->name, e->b, x, v, &b);
      return bind_term(std::move(b), std::move(bound), std::move(body));
    }
  }
  return e;
}

}  // namespace

TermPtr normalize(const TermPtr& e) {
  switch (e->k) {
    case Term::K::Var:
    case Term::K::Const:
      return e;
    case Term::K::Lam:
      return lam(e->name, e->ann, normalize(e->a));
    case Term::K::App: {
      TermPtr f = normalize(e->a);
      if (f->k == Term::K::Lam)
        return normalize(subst(f->a, f->name, e->b));
      return app(std::move(f), normalize(e->b));
    }
    case Term::K::Eta:
      return normalize(e->a);
    case Term::K::Bind:
      return normalize(subst(e->b, e->name, e->a));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Denotation

TypePtr ctx_game(const TypingContext& ctx) {
  TypePtr g = unit_type();
  for (const auto& [n, t] : ctx) g = with(g, t);
  return g;
}

namespace {

/// Diagonal !G -o !G (x) !G, splitting copies to even/odd indices.
Strategy contraction(const TypePtr& G, Bounds bd, const SecurityLattice& lat) {
  TypePtr game = limp(bang(G), tensor(bang(G), bang(G)));
  const GameView& base = denote(G, bd.copy_bound, lat);
  const GameView& v = denote(game, bd.copy_bound, lat);
  HistoryFreeGenerator g{game, bd, &lat, {}};
  bool trunc = false;
  for (int side = 0; side < 2; ++side) {
    Tag::K wrap = side == 0 ? Tag::K::TL : Tag::K::TR;
    for (int i = 0; i < bd.copy_bound; ++i) {
      int n = 2 * i + side;
      if (n >= bd.copy_bound) {
        trunc = true;
        continue;
      }
      for (int mi = 0; mi < base.size(); ++mi) {
        const MoveInfo& m = base.moves[mi];
        TagPtr r = base.moves[base.root_initial(mi)].tag;
        TagPtr c = tag_step(Tag::K::Res, tag_step(wrap, tag_copy(i, m.tag)));
        TagPtr d =
            tag_arg(tag_step(wrap, tag_copy(i, r)), tag_copy(n, m.tag));
        if (!v.find(c) || !v.find(d)) continue;
        if (m.pol == Pol::O)
          g.f[c->str()] = d->str();
        else
          g.f[d->str()] = c->str();
      }
    }
  }
  Strategy out = equiv_closure(from_generator(g));
  out.truncated = out.truncated || trunc;
  return out;
}

}  // namespace

Strategy denote_term(const Derivation& d, Bounds bd,
                     const SecurityLattice& lat) {
  TypePtr G = ctx_game(d.ctx);
  TypePtr dom_game = bang(G);
  if (d.rule == "const") {
    TypePtr game = limp(dom_game, d.type);
    const GameView& v = denote(game, bd.copy_bound, lat);
    int q = v.find(tag_step(Tag::K::Res, tag_q())).value();
    int a = v.find(tag_step(Tag::K::Res, tag_ans(d.term->value))).value();
    return make_strategy(game, bd, lat, {Play{}, Play{q, a}});
  }
  if (d.rule == "var") {
    int n = static_cast<int>(d.ctx.size());
    int idx = -1;
    for (int i = n - 1; i >= 0; --i)
      if (d.ctx[i].first == d.term->name) {
        idx = i;
        break;
      }
    const GameView& base = denote(d.ctx[idx].second, bd.copy_bound, lat);
    int lefts = n - 1 - idx;
    auto domw = [lefts](const TagPtr& m) {
      TagPtr t = tag_step(Tag::K::WR, m);
      for (int j = 0; j < lefts; ++j) t = tag_step(Tag::K::WL, t);
      return tag_copy(0, t);
    };
    return generator_copycat(limp(dom_game, d.type), bd, lat, base,
                             [](const TagPtr& m) { return m; }, domw);
  }
  if (d.rule == "lam") {
    Strategy body = denote_term(d.premises[0], bd, lat);
    TypePtr A = d.term->ann;
    // !(G & A) -o B  ~  (!G (x) !A) -o B through the exponential iso.
    TypePtr mid = limp(tensor(dom_game, bang(A)), d.premises[0].type);
    Strategy re = retag_strategy(body, mid, [](const TagPtr& t) -> TagPtr {
      auto split = [](const TagPtr& u) {
        // (! i (wL m)) -> (tL (! i m)); (! i (wR m)) -> (tR (! i m))
        Tag::K s = u->sub->k == Tag::K::WL ? Tag::K::TL : Tag::K::TR;
        return tag_step(s, tag_copy(u->idx, u->sub->sub));
      };
      if (t->k == Tag::K::Res) return t;
      // The justifier is a codomain tag and is unaffected by the split.
      return tag_arg(t->binit, split(t->sub));
    });
    return curry_strategy(re);
  }
  if (d.rule == "app") {
    Strategy sf = denote_term(d.premises[0], bd, lat);
    Strategy sa = denote_term(d.premises[1], bd, lat);
    TypePtr A = d.premises[0].type->a->a;  // annotated argument type
    Strategy sa_adj = retag_strategy(sa, limp(dom_game, A),
                                     [](const TagPtr& t) { return t; });
    Strategy left = contraction(G, bd, lat);
    Strategy mid =
        tensor_strategy(copycat(dom_game, bd, lat), promote(sa_adj));
    Strategy right = uncurry_strategy(sf);
    return compose(compose(left, mid), right);
  }
  if (d.rule == "eta") {
    Strategy body = denote_term(d.premises[0], bd, lat);
    return retag_strategy(body, limp(dom_game, d.type),
                          [](const TagPtr& t) { return t; });
  }
  if (d.rule == "bind") {
    Strategy se = denote_term(d.premises[0], bd, lat);
    Strategy sb = denote_term(d.premises[1], bd, lat);
    TypePtr tla = d.premises[0].type;  // T_l A
    // Reread the body at !(G & T_l A) -o B; protection makes it valid.
    TypePtr lifted = limp(bang(with(G, tla)), d.type);
    Strategy sb_l =
        retag_strategy(sb, lifted, [](const TagPtr& t) { return t; });
    Strategy paired = pair_with(counit(G, bd, lat), se);
    return compose(promote(paired), sb_l);
  }
  throw std::runtime_error("unknown derivation rule " + d.rule);
}

// ---------------------------------------------------------------------------
// Non-interference

InterferenceReport non_interference_check(const TypingContext& ctx,
                                          const std::string& x,
                                          const TermPtr& e, Bounds bd,
                                          const SecurityLattice& lat) {
  int n = static_cast<int>(ctx.size());
  int idx = -1;
  for (int i = n - 1; i >= 0; --i)
    if (ctx[i].first == x) {
      idx = i;
      break;
    }
  if (idx < 0) throw TypeError("var", "'" + x + "' is not in the context");
  Derivation d = typecheck(ctx, e, lat);
  InterferenceReport r;
  r.var = x;
  r.var_type = ctx[idx].second;
  r.result_type = d.type;
  r.syntactic = free_vars(normalize(e)).count(x) > 0;
  r.static_rhd = rhd(r.var_type, r.result_type, lat);
  Strategy sigma = denote_term(d, bd, lat);
  const GameView& v = sigma.view();
  int lefts = n - 1 - idx;
  auto in_slot = [&](const TagPtr& t) {
    if (t->k != Tag::K::Arg) return false;
    TagPtr u = t->sub->sub;  // below (fa b0 (! i _))
    for (int j = 0; j < lefts; ++j) {
      if (u->k != Tag::K::WL) return false;
      u = u->sub;
    }
    return u->k == Tag::K::WR;
  };
  for (const Play& p : sigma.plays)
    for (int m : p) r.semantic = r.semantic || in_slot(v.moves[m].tag);
  return r;
}

// ---------------------------------------------------------------------------
// Programs

Program parse_program(const std::string& text, const SecurityLattice& lat) {
  Program p;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(ln) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (head == "base") {
      std::istringstream rs(rest);
      std::string name, at, lev;
      if (!(rs >> name >> at >> lev) || at != "@")
        fail("expected: base NAME @ LEVEL [/ ARITY]");
      BaseDecl d;
      auto l = lat.find(lev);
      if (!l) fail("unknown level '" + lev + "'");
      d.level = *l;
      std::string slash;
      if (rs >> slash) {
        if (slash != "/" || !(rs >> d.arity) || d.arity < 1)
          fail("expected: / ARITY");
      }
      p.bases[name] = d;
      p.directives.push_back({Directive::K::Base, ln, name, nullptr, nullptr});
    } else if (head == "assume") {
      auto colon = rest.find(':');
      if (colon == std::string::npos) fail("expected: assume IDENT : TYPE");
      std::istringstream ns(rest.substr(0, colon));
      std::string name;
      if (!(ns >> name)) fail("missing assumption name");
      TypePtr t = parse_type(rest.substr(colon + 1), lat, &p.bases);
      p.assumptions.emplace_back(name, t);
      p.directives.push_back({Directive::K::Assume, ln, name, nullptr, t});
    } else if (head == "check" || head == "noninterference") {
      std::string name;
      if (head == "noninterference") {
        std::istringstream rs(rest);
        std::string in_kw;
        if (!(rs >> name >> in_kw) || in_kw != "in")
          fail("expected: noninterference IDENT in TERM : TYPE");
        std::getline(rs, rest);
      }
      auto colon = rest.rfind(':');
      if (colon == std::string::npos) fail("expected ': TYPE'");
      TermPtr e = parse_term(rest.substr(0, colon), lat, &p.bases);
      TypePtr t = parse_type(rest.substr(colon + 1), lat, &p.bases);
      p.directives.push_back({head == "check" ? Directive::K::Check
                                              : Directive::K::NonInterference,
                              ln, name, e, t});
    } else if (head == "normalize") {
      TermPtr e = parse_term(rest, lat, &p.bases);
      p.directives.push_back({Directive::K::Normalize, ln, "", e, nullptr});
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  return p;
}

std::vector<DirectiveResult> run_program(const Program& p, Bounds bd,
                                         const SecurityLattice& lat,
                                         bool deep) {
  std::vector<DirectiveResult> out;
  for (const Directive& d : p.directives) {
    DirectiveResult r;
    r.line = d.line;
    try {
      switch (d.k) {
        case Directive::K::Base:
          r.kind = "base";
          r.ok = true;
          r.message = "declared " + d.name;
          break;
        case Directive::K::Assume:
          r.kind = "assume";
          r.ok = true;
          r.message = d.name + " : " + show_type(d.type, lat);
          break;
        case Directive::K::Check: {
          r.kind = "check";
          Derivation der = typecheck(p.assumptions, d.term, lat);
          bool match = type_equal(normalize_monads(der.type, lat),
                                  normalize_monads(d.type, lat));
          r.ok = match;
          r.message = "derived type " + show_type(der.type, lat);
          if (!match)
            r.message += " does not match declared " + show_type(d.type, lat);
          if (match && deep) {
            Strategy s = denote_term(der, bd, lat);
            Play w;
            bool total = is_total_bounded(s, bd.max_len, &w);
            r.ok = total;
            r.message += "; denotation has " +
                         std::to_string(s.plays.size()) + " plays, " +
                         (total ? "total" : "not total") + " at L=" +
                         std::to_string(bd.max_len);
          }
          break;
        }
        case Directive::K::Normalize: {
          r.kind = "normalize";
          typecheck(p.assumptions, d.term, lat);
          TermPtr nf = normalize(d.term);
          r.ok = true;
          r.message = show_term(nf, lat);
          break;
        }
        case Directive::K::NonInterference: {
          r.kind = "noninterference";
          Derivation der = typecheck(p.assumptions, d.term, lat);
          if (!type_equal(normalize_monads(der.type, lat),
                          normalize_monads(d.type, lat))) {
            r.ok = false;
            r.message = "derived type " + show_type(der.type, lat) +
                        " does not match declared";
            break;
          }
          if (deep) {
            InterferenceReport rep =
                non_interference_check(p.assumptions, d.name, d.term, bd, lat);
            r.ok = rep.consistent();
            r.message = std::string("syntactic=") +
                        (rep.syntactic ? "free" : "not-free") + " semantic=" +
                        (rep.semantic ? "moves" : "silent") + " rhd=" +
                        (rep.static_rhd ? "yes" : "no");
          } else {
            bool free = free_vars(normalize(d.term)).count(d.name) > 0;
            TypePtr a;
            for (auto it = p.assumptions.rbegin(); it != p.assumptions.rend();
                 ++it)
              if (it->first == d.name) {
                a = it->second;
                break;
              }
            if (!a) throw TypeError("var", "'" + d.name + "' not assumed");
            bool rh = rhd(a, der.type, lat);
            r.ok = true;
            r.message = "assumption '" + d.name + "' " +
                        (free ? "used" : "not used") +
                        " by the normal form; static no-flow " +
                        (rh ? "holds" : "does not hold");
          }
          break;
        }
      }
    } catch (const TypeError& ex) {
      r.ok = false;
      r.message = std::string("type error [") + ex.rule + "]: " + ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gamesec
