#pragma once

#include <functional>

#include "gamesec/strategy.hpp"

namespace gamesec {

struct CoercionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Interaction-set composition of sigma : A -o B and tau : B -o C, with
/// the middle-game tags hidden. Interaction sequences are explored to
/// 3 * max_len; if longer interactions could still contribute, the
/// result carries the truncation flag.
Strategy compose(const Strategy& sigma, const Strategy& tau);

/// Maximal interaction sequences of sigma || tau before hiding, rendered
/// one move per entry as "COMPONENT TAG" with the shared middle game
/// marked B. At most max_traces sequences, depth-first order.
std::vector<std::vector<std::string>> interaction_traces(
    const Strategy& sigma, const Strategy& tau, int max_traces = 32);

/// sigma (x) tau : (A (x) C) -o (B (x) D) for sigma : A -o B,
/// tau : C -o D.
Strategy tensor_strategy(const Strategy& sigma, const Strategy& tau);

/// <sigma, tau> : C -o (A & B) for sigma : C -o A, tau : C -o B.
Strategy pair_with(const Strategy& sigma, const Strategy& tau);

/// Monoidal-closure bijections, realized as inverse re-taggings:
/// curry : (A (x) B) -o C  ->  A -o (B -o C).
Strategy curry_strategy(const Strategy& sigma);
Strategy uncurry_strategy(const Strategy& sigma);

/// Comonad data for !: counit plays copycat between A and one copy
/// index; comultiplication pairs copy indices with the Cantor pairing.
/// Index pairs that fall outside copy_bound contribute no plays and set
/// the truncation flag.
Strategy counit(const TypePtr& t, Bounds b, const SecurityLattice& lat);
Strategy comultiplication(const TypePtr& t, Bounds b,
                          const SecurityLattice& lat);

/// Cantor pairing p(i,j) = (i+j)(i+j+1)/2 + j. Throws BudgetError when
/// the result reaches copy_bound.
int cantor_pair(int i, int j, int copy_bound);

/// !sigma : !A -o !B playing sigma between matching copy indices.
Strategy bang_functor(const Strategy& sigma);

/// Promotion of sigma : !A -o B to !A -o !B (comultiplication then
/// !sigma), and Kleisli composition promote(sigma);tau.
Strategy promote(const Strategy& sigma);
Strategy kleisli_compose(const Strategy& sigma, const Strategy& tau);

/// Copycat plays read on A -o T_l A (monad unit) and on
/// T_l A -o T_l' A (coercion, requires l <= l'). A coercion against the
/// lattice order is refused with a level-condition witness play.
Strategy unit_eta(LevelId l, const TypePtr& t, Bounds b,
                  const SecurityLattice& lat);
Strategy coerce(LevelId l, LevelId lp, const TypePtr& t, Bounds b,
                const SecurityLattice& lat);

/// sigma : A -o B reread on T_l A -o T_l B (the functorial action of the
/// level monad keeps the play set).
Strategy monad_lift(const Strategy& sigma, LevelId l);

/// Commutation of one naturality square: T_l sigma ; tau_B versus
/// tau_A ; T_lp sigma, compared as play sets.
Verdict naturality_check(const Strategy& sigma, const Strategy& tau_a,
                         const Strategy& tau_b, LevelId l, LevelId lp);

/// Plays of sigma : A -o B that survive in the level-l erasure
/// A^l -o B^l, as a strategy on the erased game.
Strategy restrict_to_erasure(const Strategy& sigma, LevelId l);

/// Re-tags every move of sigma through `f` (a tag bijection onto the
/// move set of `game`) and revalidates. Helper behind curry/uncurry and
/// the exponential isomorphisms.
Strategy retag_strategy(const Strategy& sigma, const TypePtr& game,
                        const std::function<TagPtr(const TagPtr&)>& f);

/// Union of the ~-classes of the plays (representation-independence
/// closure without skeleton checks).
Strategy equiv_closure(const Strategy& sigma);

/// Copycat-style history-free strategy over an embedded copy of `base`:
/// `codw` places each base move inside the codomain of `game`, `domw`
/// inside the domain. Returns the saturated strategy. Base moves whose
/// images fall outside the bounded move set are skipped.
Strategy generator_copycat(const TypePtr& game, Bounds bd,
                           const SecurityLattice& lat, const GameView& base,
                           const std::function<TagPtr(const TagPtr&)>& codw,
                           const std::function<TagPtr(const TagPtr&)>& domw);

}  // namespace gamesec
