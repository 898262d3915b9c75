#pragma once

#include "gamesec/flow.hpp"

namespace gamesec {

struct TypeError : std::runtime_error {
  std::string rule;
  TypeError(std::string r, const std::string& msg)
      : std::runtime_error(msg), rule(std::move(r)) {}
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Core calculus: simply-typed lambda terms with level-monad unit and
/// bind, plus named constants of the flat base types.
struct Term {
  enum class K { Var, Lam, App, Eta, Bind, Const };
  K k;
  std::string name;   // Var / Lam binder / Bind binder / Const base name
  TypePtr ann;        // Lam annotation; Const base type
  LevelId level = 0;  // Eta
  TermPtr a, b;       // Lam body; App fun/arg; Eta body; Bind bound/body
  int value = 0;      // Const answer index
};

TermPtr var(std::string name);
TermPtr lam(std::string name, TypePtr ann, TermPtr body);
TermPtr app(TermPtr f, TermPtr arg);
TermPtr eta(LevelId level, TermPtr body);
TermPtr bind_term(std::string name, TermPtr bound, TermPtr body);
TermPtr constant(std::string base, TypePtr ann, int value);

std::string show_term(const TermPtr& t, const SecurityLattice& lat);
bool term_equal(const TermPtr& a, const TermPtr& b);

/// e ::= IDENT | '\' IDENT ':' T '.' e | e e | 'eta' '<' LEVEL '>' e
///     | 'bind' IDENT '=' e 'in' e | NAME '.' NUMBER
/// Application is left-associative; 'eta' and lambda bodies extend as
/// far right as possible. Constants NAME.j need NAME declared in env.
TermPtr parse_term(const std::string& text, const SecurityLattice& lat,
                   const BaseEnv* env = nullptr);

using TypingContext = std::vector<std::pair<std::string, TypePtr>>;

struct Derivation {
  std::string rule;  // var | lam | app | eta | bind | const
  TypingContext ctx;
  TermPtr term;
  TypePtr type;
  std::vector<Derivation> premises;
  std::string side_condition;  // protection evidence on bind nodes
};

/// Bind reads the syntactic head monad of the bound term's type and
/// demands the body type protected at that level; application compares
/// types up to the level-monad equations.
Derivation typecheck(const TypingContext& ctx, const TermPtr& e,
                     const SecurityLattice& lat);

/// Beta steps plus the monad rules (unit erasure, bind substitution),
/// capture-avoiding; terminates on typed input.
TermPtr normalize(const TermPtr& e);

std::set<std::string> free_vars(const TermPtr& e);

/// Interpretation of the context as an iterated product.
TypePtr ctx_game(const TypingContext& ctx);

/// Strategy on !G -o [type], G = ctx_game(ctx), built through the
/// product/exponential structure of the strategy category.
Strategy denote_term(const Derivation& d, Bounds bd,
                     const SecurityLattice& lat);

struct InterferenceReport {
  std::string var;
  TypePtr var_type, result_type;
  bool syntactic = false;  // free in the normal form
  bool semantic = false;   // the denotation moves in the variable's slot
  bool static_rhd = false; // levels forbid the flow outright
  /// Contract: syntactic == semantic, and static_rhd implies !syntactic.
  bool consistent() const {
    return syntactic == semantic && !(static_rhd && syntactic);
  }
};

InterferenceReport non_interference_check(const TypingContext& ctx,
                                          const std::string& x,
                                          const TermPtr& e, Bounds bd,
                                          const SecurityLattice& lat);

/// Program files: '#' comments and the directives
///   base NAME @ LEVEL [/ ARITY]
///   assume IDENT : T
///   check e : T
///   normalize e
///   noninterference IDENT in e : T
struct Directive {
  enum class K { Base, Assume, Check, Normalize, NonInterference };
  K k;
  int line = 0;
  std::string name;  // Base / Assume / NonInterference variable
  TermPtr term;
  TypePtr type;
};

struct Program {
  BaseEnv bases;
  TypingContext assumptions;
  std::vector<Directive> directives;
};

Program parse_program(const std::string& text, const SecurityLattice& lat);

struct DirectiveResult {
  int line = 0;
  std::string kind;
  bool ok = false;
  std::string message;
};

/// `deep` additionally runs the semantic checks (denotations, movement)
/// behind check/noninterference; otherwise only typing and normal forms.
std::vector<DirectiveResult> run_program(const Program& p, Bounds bd,
                                         const SecurityLattice& lat,
                                         bool deep);

}  // namespace gamesec
