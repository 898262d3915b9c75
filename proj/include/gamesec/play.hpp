#pragma once

#include <string>
#include <vector>

#include "gamesec/view.hpp"

namespace gamesec {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A move that does not belong to the game at the session's bounds.
struct MembershipError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sequence of move ids in the canonical GameView of (game, copy_bound).
using Play = std::vector<int>;

enum class Cond { P1, P2, P3, P4, P5, P6, Restrict };
std::string cond_name(Cond c);

struct PlayDiagnostic {
  Cond cond;
  int pos;  // offending position (within the reported component)
  std::string reason;
};

/// Checks (p1)-(p6) plus the per-construction restriction memberships,
/// recursively on every subgame. Empty result means the play is valid.
/// Throws MembershipError for moves foreign to the bounded move set.
std::vector<PlayDiagnostic> validate_play(const TypePtr& t, int k,
                                          const SecurityLattice& lat,
                                          const Play& s);

bool play_valid(const TypePtr& t, int k, const SecurityLattice& lat,
                const Play& s);

/// Decides s ~ u structurally. Both plays must be valid.
bool play_equiv(const TypePtr& t, int k, const SecurityLattice& lat,
                const Play& s, const Play& u);
/// Same decision without revalidating the inputs.
bool play_equiv_unchecked(const TypePtr& t, int k, const SecurityLattice& lat,
                          const Play& s, const Play& u);

/// All valid plays of length <= max_len over the bounded move set, in a
/// deterministic (length-major, id-lexicographic) order. Includes the
/// empty play. Throws BudgetError when the exploration budget runs out.
std::vector<Play> enumerate_plays(const TypePtr& t, int max_len, int k,
                                  const SecurityLattice& lat);

/// Valid one-move extensions s+m of a valid play, in move-id order.
std::vector<int> valid_extensions(const TypePtr& t, int k,
                                  const SecurityLattice& lat, const Play& s);

/// The equivalence class of s (within the bounded move set), computed by
/// closing under per-site copy-index permutations and filtering with
/// play_equiv. Includes s itself.
std::vector<Play> equiv_variants(const TypePtr& t, int k,
                                 const SecurityLattice& lat, const Play& s);

Play play_from_tags(const GameView& v, const std::vector<std::string>& tags);
std::vector<std::string> play_tags(const GameView& v, const Play& s);
std::string play_str(const GameView& v, const Play& s);

}  // namespace gamesec
