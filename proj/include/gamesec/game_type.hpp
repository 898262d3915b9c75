#pragma once

#include <map>
#include <memory>
#include <string>

#include "gamesec/lattice.hpp"

namespace gamesec {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GameType;
using TypePtr = std::shared_ptr<const GameType>;

/// Syntax tree of object-level types. Every game in the system is the
/// denotation of one of these over flat base games.
struct GameType {
  enum class K { Flat, Unit, Tensor, With, Limp, Bang, Monad };
  K k;
  std::string name;   // Flat
  int arity = 0;      // Flat: number of answers
  LevelId level = 0;  // Flat base level / Monad level
  TypePtr a, b;       // children

  /// Stable structural key; also used as a denotation-cache key.
  std::string key() const;
};

TypePtr flat(std::string name, int arity, LevelId level);
TypePtr unit_type();
TypePtr tensor(TypePtr a, TypePtr b);
TypePtr with(TypePtr a, TypePtr b);
TypePtr limp(TypePtr a, TypePtr b);
TypePtr bang(TypePtr a);
TypePtr monad(LevelId level, TypePtr a);
/// A -> B is sugar for !A -o B.
TypePtr arrow(TypePtr a, TypePtr b);

bool type_equal(const TypePtr& a, const TypePtr& b);

/// Collapses nested monads (T_l T_l' A = T_{l join l'} A) and drops
/// T_bottom. Used when comparing types up to the level-monad equations.
TypePtr normalize_monads(const TypePtr& t, const SecurityLattice& lat);

/// Replaces every part of the type whose accumulated guard level is >= l
/// by the unit type. See flow analysis for the matching play restriction.
TypePtr erase_type(const TypePtr& t, LevelId l, const SecurityLattice& lat);

std::string show_type(const TypePtr& t, const SecurityLattice& lat);

struct BaseDecl {
  LevelId level = 0;
  int arity = 1;
};
using BaseEnv = std::map<std::string, BaseDecl>;

/// Grammar:
///   T ::= ['base'] NAME '@' LEVEL ['/' ARITY] | NAME | 'I'
///       | T '*' T | T '&' T | T '-o' T | T '->' T | '!' T
///       | '[' LEVEL ']' T | '(' T ')'
/// '*' binds tighter than '&'; '-o'/'->' are right-associative and
/// loosest; '!' and '[l]' are prefixes. Bare NAME resolves through env.
TypePtr parse_type(const std::string& text, const SecurityLattice& lat,
                   const BaseEnv* env = nullptr);

}  // namespace gamesec
