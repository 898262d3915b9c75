"""Justified games with security levels.

Strategies over justified games, composition and the bang comonad,
level monads, the no-flow relation, and a core dependency calculus
with a bounded non-interference checker.
"""

from _gamesec import (
    Bounds,
    BudgetError,
    CoercionError,
    DccTypeError,
    GameType,
    MembershipError,
    ProtectionError,
    SecurityLattice,
    Strategy,
    arrow,
    bang,
    builtin_l4,
    coerce,
    compose,
    copycat,
    counit,
    dcc_normalize,
    dcc_run,
    enumerate_plays,
    enumerate_strategies,
    erase_type,
    extract_skeleton,
    flat,
    is_skeleton,
    is_strategy,
    laws,
    level_of_type,
    limp,
    monad,
    moves,
    no_flow,
    normalize_monads,
    parse_type,
    promote,
    rhd,
    saturate,
    show_type,
    strategy,
    tensor,
    tensor_strategy,
    unit_eta,
    unit_type,
    validate_play,
    with_,
)

__all__ = [name for name in dir() if not name.startswith("_")]
