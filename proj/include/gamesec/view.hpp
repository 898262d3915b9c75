#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gamesec/game_type.hpp"

namespace gamesec {

struct Tag;
using TagPtr = std::shared_ptr<const Tag>;

/// Structured path into the type tree identifying one move occurrence.
/// Monad nodes contribute no step (their play sets coincide with the
/// underlying game); Bang steps carry a copy index; the argument side of
/// a linear implication carries the initial codomain move it is copied
/// for. Serializes to an S-expression for bit-stable identity.
struct Tag {
  enum class K { Q, Ans, TL, TR, WL, WR, Copy, Arg, Res };
  K k;
  int idx = 0;    // Ans: answer index; Copy: copy index
  TagPtr sub;     // everything except Q/Ans
  TagPtr binit;   // Arg: the codomain initial move (a tag of the codomain)

  const std::string& str() const;  // canonical serialization, cached

private:
  mutable std::string cache_;
};

TagPtr tag_q();
TagPtr tag_ans(int idx);
TagPtr tag_step(Tag::K k, TagPtr sub);            // TL,TR,WL,WR,Res
TagPtr tag_copy(int idx, TagPtr sub);
TagPtr tag_arg(TagPtr binit, TagPtr sub);
TagPtr parse_tag(const std::string& s);           // inverse of str()

enum class Pol { O, P };
enum class Kind { Q, A };

inline Pol flip(Pol p) { return p == Pol::O ? Pol::P : Pol::O; }

struct MoveInfo {
  TagPtr tag;
  Pol pol;
  Kind kind;
  LevelId level;
  int justifier = -1;  // move id, -1 when initial
  bool initial() const { return justifier < 0; }
};

/// Bounded denotation of a GameType: the move set with copy indices below
/// copy_bound, with labelling, levels, and the static justification
/// function. Pure function of (type, copy_bound); cached globally.
struct GameView {
  TypePtr game;
  int copy_bound = 1;
  std::vector<MoveInfo> moves;
  std::map<std::string, int> index;  // tag string -> move id
  std::vector<int> initials;

  int size() const { return static_cast<int>(moves.size()); }
  std::optional<int> find(const TagPtr& t) const {
    auto it = index.find(t->str());
    return it == index.end() ? std::nullopt : std::optional<int>(it->second);
  }
  std::optional<int> find(const std::string& s) const {
    auto it = index.find(s);
    return it == index.end() ? std::nullopt : std::optional<int>(it->second);
  }
  /// Root of the justification chain of m (m itself when initial).
  int root_initial(int m) const;
};

/// copy_bound >= 1 bounds Bang copy indices for enumeration; the
/// mathematical game is unbounded.
const GameView& denote(const TypePtr& t, int copy_bound,
                       const SecurityLattice& lat);

}  // namespace gamesec
