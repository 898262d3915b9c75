#include "gamesec/game_type.hpp"

#include <cctype>
#include <vector>

namespace gamesec {

namespace {

TypePtr mk(GameType t) { return std::make_shared<const GameType>(std::move(t)); }

}  // namespace

TypePtr flat(std::string name, int arity, LevelId level) {
  GameType t;
  t.k = GameType::K::Flat;
  t.name = std::move(name);
  t.arity = arity;
  t.level = level;
  return mk(std::move(t));
}

TypePtr unit_type() {
  GameType t;
  t.k = GameType::K::Unit;
  return mk(std::move(t));
}

static TypePtr binary(GameType::K k, TypePtr a, TypePtr b) {
  GameType t;
  t.k = k;
  t.a = std::move(a);
  t.b = std::move(b);
  return mk(std::move(t));
}

TypePtr tensor(TypePtr a, TypePtr b) {
  return binary(GameType::K::Tensor, std::move(a), std::move(b));
}
TypePtr with(TypePtr a, TypePtr b) {
  return binary(GameType::K::With, std::move(a), std::move(b));
}
TypePtr limp(TypePtr a, TypePtr b) {
  return binary(GameType::K::Limp, std::move(a), std::move(b));
}

TypePtr bang(TypePtr a) {
  GameType t;
  t.k = GameType::K::Bang;
  t.a = std::move(a);
  return mk(std::move(t));
}

TypePtr monad(LevelId level, TypePtr a) {
  GameType t;
  t.k = GameType::K::Monad;
  t.level = level;
  t.a = std::move(a);
  return mk(std::move(t));
}

TypePtr arrow(TypePtr a, TypePtr b) { return limp(bang(std::move(a)), std::move(b)); }

std::string GameType::key() const {
  switch (k) {
    case K::Flat:
      return "(f " + name + " " + std::to_string(arity) + " " +
             std::to_string(level) + ")";
    case K::Unit:
      return "I";
    case K::Tensor:
      return "(* " + a->key() + " " + b->key() + ")";
    case K::With:
      return "(& " + a->key() + " " + b->key() + ")";
    case K::Limp:
      return "(-o " + a->key() + " " + b->key() + ")";
    case K::Bang:
      return "(! " + a->key() + ")";
    case K::Monad:
      return "(T " + std::to_string(level) + " " + a->key() + ")";
  }
  return "?";
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  return a->key() == b->key();
}

TypePtr normalize_monads(const TypePtr& t, const SecurityLattice& lat) {
  switch (t->k) {
    case GameType::K::Flat:
    case GameType::K::Unit:
      return t;
    case GameType::K::Tensor:
      return tensor(normalize_monads(t->a, lat), normalize_monads(t->b, lat));
    case GameType::K::With:
      return with(normalize_monads(t->a, lat), normalize_monads(t->b, lat));
    case GameType::K::Limp:
      return limp(normalize_monads(t->a, lat), normalize_monads(t->b, lat));
    case GameType::K::Bang:
      return bang(normalize_monads(t->a, lat));
    case GameType::K::Monad: {
      TypePtr inner = normalize_monads(t->a, lat);
      LevelId l = t->level;
      if (inner->k == GameType::K::Monad) {
        l = lat.join(l, inner->level);
        inner = inner->a;
      }
      if (l == lat.bottom()) return inner;
      return monad(l, inner);
    }
  }
  return t;
}

namespace {

TypePtr erase_rec(const TypePtr& t, LevelId l, LevelId acc,
                  const SecurityLattice& lat) {
  switch (t->k) {
    case GameType::K::Flat:
      if (lat.leq(l, lat.join(acc, t->level))) return unit_type();
      return t;
    case GameType::K::Unit:
      return t;
    case GameType::K::Tensor:
      return tensor(erase_rec(t->a, l, acc, lat), erase_rec(t->b, l, acc, lat));
    case GameType::K::With:
      return with(erase_rec(t->a, l, acc, lat), erase_rec(t->b, l, acc, lat));
    case GameType::K::Limp:
      return limp(erase_rec(t->a, l, acc, lat), erase_rec(t->b, l, acc, lat));
    case GameType::K::Bang:
      return bang(erase_rec(t->a, l, acc, lat));
    case GameType::K::Monad: {
      LevelId guard = lat.join(acc, t->level);
      if (lat.leq(l, guard)) return unit_type();
      return monad(t->level, erase_rec(t->a, l, guard, lat));
    }
  }
  return t;
}

}  // namespace

TypePtr erase_type(const TypePtr& t, LevelId l, const SecurityLattice& lat) {
  return erase_rec(t, l, lat.bottom(), lat);
}

std::string show_type(const TypePtr& t, const SecurityLattice& lat) {
  switch (t->k) {
    case GameType::K::Flat:
      return t->name + "@" + lat.name(t->level) + "/" +
             std::to_string(t->arity);
    case GameType::K::Unit:
      return "I";
    case GameType::K::Tensor:
      return "(" + show_type(t->a, lat) + " * " + show_type(t->b, lat) + ")";
    case GameType::K::With:
      return "(" + show_type(t->a, lat) + " & " + show_type(t->b, lat) + ")";
    case GameType::K::Limp:
      return "(" + show_type(t->a, lat) + " -o " + show_type(t->b, lat) + ")";
    case GameType::K::Bang:
      return "!" + show_type(t->a, lat);
    case GameType::K::Monad:
      return "[" + lat.name(t->level) + "]" + show_type(t->a, lat);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Type parser

namespace {

struct Token {
  enum class K { Ident, Number, Sym, End } k;
  std::string text;
  int pos;
};

struct Lexer {
  std::string src;
  size_t i = 0;
  Token peeked{Token::K::End, "", 0};
  bool has_peek = false;

  explicit Lexer(std::string s) : src(std::move(s)) {}

  [[noreturn]] void fail(const std::string& msg, int pos) {
    throw ParseError("col " + std::to_string(pos + 1) + ": " + msg);
  }

  Token lex() {
    while (i < src.size() && std::isspace((unsigned char)src[i])) ++i;
    int pos = (int)i;
    if (i >= src.size()) return {Token::K::End, "", pos};
    char c = src[i];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum((unsigned char)src[j]) || src[j] == '_'))
        ++j;
      Token t{Token::K::Ident, src.substr(i, j - i), pos};
      i = j;
      return t;
    }
    if (std::isdigit((unsigned char)c)) {
      size_t j = i;
      while (j < src.size() && std::isdigit((unsigned char)src[j])) ++j;
      Token t{Token::K::Number, src.substr(i, j - i), pos};
      i = j;
      return t;
    }
    if (c == '-' && i + 1 < src.size() &&
        (src[i + 1] == 'o' || src[i + 1] == '>')) {
      Token t{Token::K::Sym, src.substr(i, 2), pos};
      i += 2;
      return t;
    }
    static const std::string singles = "@/*&![]()";
    if (singles.find(c) != std::string::npos) {
      Token t{Token::K::Sym, std::string(1, c), pos};
      ++i;
      return t;
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  const Token& peek() {
    if (!has_peek) {
      peeked = lex();
      has_peek = true;
    }
    return peeked;
  }
  Token next() {
    Token t = peek();
    has_peek = false;
    return t;
  }
  bool accept_sym(const std::string& s) {
    if (peek().k == Token::K::Sym && peek().text == s) {
      next();
      return true;
    }
    return false;
  }
  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'", peek().pos);
  }
};

struct TypeParser {
  Lexer lx;
  const SecurityLattice& lat;
  const BaseEnv* env;

  TypeParser(const std::string& s, const SecurityLattice& l, const BaseEnv* e)
      : lx(s), lat(l), env(e) {}

  LevelId parse_level() {
    Token t = lx.next();
    if (t.k != Token::K::Ident) lx.fail("expected level name", t.pos);
    auto r = lat.find(t.text);
    if (!r) lx.fail("unknown lattice element: " + t.text, t.pos);
    return *r;
  }

  TypePtr parse_flat(const std::string& name, int pos) {
    // NAME ['@' LEVEL ['/' ARITY]]; bare names resolve through env.
    if (lx.accept_sym("@")) {
      LevelId lvl = parse_level();
      int arity = 1;
      if (lx.accept_sym("/")) {
        Token n = lx.next();
        if (n.k != Token::K::Number) lx.fail("expected arity", n.pos);
        arity = std::stoi(n.text);
        if (arity < 1) lx.fail("arity must be >= 1", n.pos);
      }
      return flat(name, arity, lvl);
    }
    if (env) {
      auto it = env->find(name);
      if (it != env->end())
        return flat(name, it->second.arity, it->second.level);
    }
    lx.fail("undeclared base type " + name + " (write NAME@LEVEL/ARITY)", pos);
  }

  TypePtr parse_atom() {
    const Token& p = lx.peek();
    if (p.k == Token::K::Sym && p.text == "(") {
      lx.next();
      TypePtr t = parse_limp_level();
      lx.expect_sym(")");
      return t;
    }
    if (p.k == Token::K::Sym && p.text == "!") {
      lx.next();
      return bang(parse_atom());
    }
    if (p.k == Token::K::Sym && p.text == "[") {
      lx.next();
      LevelId l = parse_level();
      lx.expect_sym("]");
      return monad(l, parse_atom());
    }
    if (p.k == Token::K::Ident) {
      Token t = lx.next();
      if (t.text == "I") return unit_type();
      if (t.text == "base") {
        Token n = lx.next();
        if (n.k != Token::K::Ident) lx.fail("expected base name", n.pos);
        return parse_flat(n.text, n.pos);
      }
      return parse_flat(t.text, t.pos);
    }
    lx.fail("expected a type", p.pos);
  }

  TypePtr parse_tensor_level() {
    TypePtr t = parse_atom();
    while (lx.accept_sym("*")) t = tensor(t, parse_atom());
    return t;
  }

  TypePtr parse_with_level() {
    TypePtr t = parse_tensor_level();
    while (lx.accept_sym("&")) t = with(t, parse_tensor_level());
    return t;
  }

  TypePtr parse_limp_level() {
    TypePtr t = parse_with_level();
    if (lx.accept_sym("-o")) return limp(t, parse_limp_level());
    if (lx.accept_sym("->")) return arrow(t, parse_limp_level());
    return t;
  }

  TypePtr parse() {
    TypePtr t = parse_limp_level();
    if (lx.peek().k != Token::K::End)
      lx.fail("trailing input after type", lx.peek().pos);
    return t;
  }
};

}  // namespace

TypePtr parse_type(const std::string& text, const SecurityLattice& lat,
                   const BaseEnv* env) {
  return TypeParser(text, lat, env).parse();
}

}  // namespace gamesec
