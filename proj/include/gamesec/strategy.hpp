#pragma once

#include <set>

#include "gamesec/play.hpp"

namespace gamesec {

struct SkeletonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Bounds {
  int copy_bound = 2;
  int max_len = 8;
  bool operator==(const Bounds&) const = default;
};

/// Set of even-length valid plays over the bounded move set of `game`.
/// The same carrier serves for strategies (saturated, deterministic up
/// to ~) and skeletons (functional uniformizations); the checks below
/// tell them apart.
struct Strategy {
  TypePtr game;
  Bounds bounds;
  const SecurityLattice* lat = nullptr;
  std::set<Play> plays;
  bool truncated = false;

  const GameView& view() const { return denote(game, bounds.copy_bound, *lat); }
};

struct Verdict {
  bool ok = true;
  std::string law;
  std::vector<std::string> witnesses;
};

/// Builds the carrier, validating every play (throws on invalid input).
Strategy make_strategy(TypePtr game, Bounds b, const SecurityLattice& lat,
                       std::set<Play> plays);
Strategy strategy_from_tags(TypePtr game, Bounds b, const SecurityLattice& lat,
                            const std::vector<std::vector<std::string>>& plays);

/// Exhaustive check of the strategy conditions (causal consistency,
/// representation independence, determinacy up to ~) at the bounds.
Verdict is_strategy(const Strategy& s);
/// Functional determinacy + functional representation independence.
Verdict is_skeleton(const Strategy& s);
/// Uniformization of phi with respect to sigma.
Verdict is_skeleton_of(const Strategy& phi, const Strategy& sigma);

/// ~-closure of a skeleton within bounds. Throws SkeletonError (with
/// witness plays in the message) when phi violates the skeleton laws.
Strategy saturate(const Strategy& phi);

/// Stage-wise choice-set construction with a deterministic tie-break:
/// among candidate responses, the least serialized move tag wins.
Strategy extract_skeleton(const Strategy& sigma);
/// Same, but steers the choices so that `through` ends up in the result.
Strategy extract_skeleton_through(const Strategy& sigma, const Play& through);

/// phi below psi, decided via saturation inclusion.
bool skeleton_preorder(const Strategy& phi, const Strategy& psi);
/// The textbook definition, used to cross-check the saturation route.
bool skeleton_preorder_direct(const Strategy& phi, const Strategy& psi);

/// The identity strategy on t -o t: even plays whose two restrictions
/// are equivalent.
Strategy copycat(const TypePtr& t, Bounds b, const SecurityLattice& lat);

/// Partial function on moves (O-move tag -> P-move tag) generating a
/// history-free skeleton.
struct HistoryFreeGenerator {
  TypePtr game;
  Bounds bounds;
  const SecurityLattice* lat = nullptr;
  std::map<std::string, std::string> f;
};

/// Least play set closed under f-responses along valid plays. Throws
/// GeneratorError when f produces an invalid play.
Strategy from_generator(const HistoryFreeGenerator& g);

/// The two extra conditions singling out history-free skeletons.
Verdict history_free_check(const Strategy& phi);

/// True iff every valid O-extension of every play shorter than L has a
/// response in the strategy.
bool is_total_bounded(const Strategy& s, int L, Play* witness = nullptr);

}  // namespace gamesec
