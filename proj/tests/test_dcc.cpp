#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {
const SecurityLattice& L4() { return builtin_l4(); }
LevelId lv(const char* n) { return *L4().find(n); }
const Bounds kBd{2, 8};

BaseEnv env_d() {
  BaseEnv env;
  env["D"] = BaseDecl{*L4().find("bot"), 2};
  env["E"] = BaseDecl{*L4().find("bot"), 1};
  return env;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("the term parser covers the grammar") {
  BaseEnv env = env_d();
  TermPtr t = parse_term("\\x:[a]D. bind y = x in eta<a> y", L4(), &env);
  REQUIRE(t->k == Term::K::Lam);
  CHECK(t->a->k == Term::K::Bind);
  CHECK(t->a->b->k == Term::K::Eta);
  CHECK(term_equal(t, parse_term(show_term(t, L4()), L4(), &env)));
  CHECK_THROWS(parse_term("eta<a>", L4(), &env));
  CHECK_THROWS(parse_term("D.5", L4(), &env));  // answer index out of range
  TermPtr c = parse_term("D.1", L4(), &env);
  CHECK(c->k == Term::K::Const);
}

TEST_CASE("typing follows the monadic rules") {
  BaseEnv env = env_d();
  TypePtr D = flat("D", 2, lv("bot"));
  TermPtr id = parse_term("\\x:D. x", L4(), &env);
  Derivation d = typecheck({}, id, L4());
  CHECK(type_equal(d.type, arrow(D, D)));

  TermPtr t = parse_term("\\x:[a]D. bind y = x in eta<a> y", L4(), &env);
  Derivation d2 = typecheck({}, t, L4());
  CHECK(type_equal(d2.type, arrow(monad(lv("a"), D), monad(lv("a"), D))));

  // Unprotected bind body: base level bot is not above a.
  TermPtr bad = parse_term("bind y = x in y", L4(), &env);
  TypingContext ctx{{"x", monad(lv("a"), D)}};
  CHECK_THROWS_AS(typecheck(ctx, bad, L4()), TypeError);
  try {
    typecheck(ctx, bad, L4());
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("not protected") != std::string::npos);
  }
  CHECK_THROWS_AS(typecheck({}, parse_term("y", L4(), &env), L4()),
                  TypeError);
}

TEST_CASE("normalization reduces beta and the monad redexes") {
  BaseEnv env = env_d();
  auto norm = [&](const std::string& s) {
    return show_term(normalize(parse_term(s, L4(), &env)), L4());
  };
  CHECK(norm("(\\x:D. x) D.0") == "D.0");
  CHECK(norm("eta<a> D.0") == "D.0");
  CHECK(norm("bind x = eta<a> D.0 in f x") == "f D.0");
  TermPtr lam_app = parse_term("\\x:D. f x", L4(), &env);
  CHECK(term_equal(normalize(lam_app), lam_app));  // no eta-expansion
}

TEST_CASE("free variables after normalization drive the usage report") {
  BaseEnv env = env_d();
  CHECK(free_vars(parse_term("x", L4(), &env)) ==
        std::set<std::string>{"x"});
  CHECK(free_vars(parse_term("\\x:D. x", L4(), &env)).empty());
  CHECK(free_vars(normalize(parse_term("(\\x:D. D.0) y", L4(), &env))) ==
        std::set<std::string>{});
}

TEST_CASE("denotation of the identity is a curried copycat") {
  BaseEnv env = env_d();
  TermPtr id = parse_term("\\x:D. x", L4(), &env);
  Derivation d = typecheck({}, id, L4());
  Strategy s = denote_term(d, kBd, L4());
  CHECK(is_strategy(s).ok);
  CHECK(is_total_bounded(s, 4));
  // beta-equal terms share their denotation.
  TermPtr expanded = parse_term("\\x:D. (\\y:D. y) x", L4(), &env);
  Strategy s2 = denote_term(typecheck({}, expanded, L4()), kBd, L4());
  CHECK(s.plays == s2.plays);
}

TEST_CASE("non-interference ties syntax to semantics") {
  TypePtr D = flat("D", 2, lv("bot"));
  TypingContext ctx{{"x", monad(lv("a"), D)}};
  InterferenceReport used =
      non_interference_check(ctx, "x", var("x"), kBd, L4());
  CHECK(used.syntactic);
  CHECK(used.semantic);
  CHECK_FALSE(used.static_rhd);
  CHECK(used.consistent());

  InterferenceReport unused = non_interference_check(
      ctx, "x", constant("D", D, 0), kBd, L4());
  CHECK_FALSE(unused.syntactic);
  CHECK_FALSE(unused.semantic);
  CHECK(unused.consistent());
}

TEST_CASE("the deletion example typechecks and uses all three assumptions") {
  SecurityLattice chain = SecurityLattice::parse_file(
      std::string(GAMESEC_TEST_DATA) + "/example1.lat");
  Program p = parse_program(
      slurp(std::string(GAMESEC_TEST_DATA) + "/example1.dcc"), chain);
  auto rs = run_program(p, kBd, chain, /*deep=*/false);
  REQUIRE(!rs.empty());
  for (const DirectiveResult& r : rs) {
    INFO(r.kind << " line " << r.line << ": " << r.message);
    CHECK(r.ok);
  }
  // The three usage reports name every assumption as used.
  int used = 0;
  for (const DirectiveResult& r : rs)
    if (r.kind == "noninterference")
      used += r.message.find("' used") != std::string::npos;
  CHECK(used == 3);
}

TEST_CASE("breaking the level order breaks the bind side condition") {
  SecurityLattice mutated = SecurityLattice::parse_file(
      std::string(GAMESEC_TEST_DATA) + "/example1_mutated.lat");
  Program p = parse_program(
      slurp(std::string(GAMESEC_TEST_DATA) + "/example1.dcc"), mutated);
  auto rs = run_program(p, kBd, mutated, /*deep=*/false);
  bool saw_protection_error = false;
  for (const DirectiveResult& r : rs)
    if (!r.ok && r.message.find("not protected") != std::string::npos &&
        r.message.find("admin") != std::string::npos &&
        r.message.find("bob") != std::string::npos)
      saw_protection_error = true;
  CHECK(saw_protection_error);
}
