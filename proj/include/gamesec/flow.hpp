#pragma once

#include <optional>

#include "gamesec/compose.hpp"

namespace gamesec {

struct ProtectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The inductive level table: levels of the initial moves of the denoted
/// game, computed structurally on the type.
std::set<LevelId> level_of_type(const TypePtr& t, const SecurityLattice& lat);

/// A |> B: no level of A is below any level of B.
bool rhd(const TypePtr& a, const TypePtr& b, const SecurityLattice& lat);

struct FlowVerdict {
  TypePtr from, to;
  bool no_flow = false;
  /// On (A (x) I) -o B; present iff flow is possible; the two-move
  /// strategy that copies the initial codomain prompt into A.
  std::optional<Strategy> witness;
};

/// Decides A -/-> B via |>, synthesizing and revalidating a witness
/// strategy when flow is possible.
FlowVerdict no_flow(const TypePtr& a, const TypePtr& b, Bounds bd,
                    const SecurityLattice& lat);

enum class Component { A, C, B };

/// Whether sigma : (A (x) C) -o B ever moves in the given component.
/// When the A component is silent and `factored` is non-null, also
/// produces the factorization of sigma through C -o B.
bool moves_in_component(const Strategy& sigma, Component c,
                        Strategy* factored = nullptr);

/// Every level of t lies above l.
bool is_protected(const TypePtr& t, LevelId l, const SecurityLattice& lat);

/// CoKleisli composition of sigma : !A -o T_l B with tau : !B -o C,
/// rereading tau at T_l !B -o C (= !T_l B -o C). Requires C protected
/// at l; otherwise throws ProtectionError naming the offending initial
/// C-move.
Strategy protected_promotion(const Strategy& sigma, const Strategy& tau,
                             LevelId l);

/// Test oracle: every inclusion-maximal strategy on t at the bounds,
/// built by branching over response choices position by position.
/// Exponential; throws BudgetError past an internal step cap. Stops
/// early once max_results distinct strategies have been found.
std::vector<Strategy> enumerate_strategies(const TypePtr& t, Bounds bd,
                                           const SecurityLattice& lat,
                                           int max_results = 1 << 30);

}  // namespace gamesec
