"""End-to-end smoke tests for the Python bindings."""

import json

import pytest

import gamesec as gs


@pytest.fixture(scope="module")
def lat():
    return gs.builtin_l4()


def test_lattice_basics(lat):
    assert len(lat) == 4
    bot, a, b, top = (lat.find(n) for n in ("bot", "a", "b", "top"))
    assert lat.bottom() == bot
    assert lat.join(a, b) == top
    assert lat.leq(bot, top)
    assert not lat.leq(a, b)


def test_types_and_levels(lat):
    t = gs.parse_type("[a]X@bot/1 -o [b]Y@bot/1", lat)
    assert gs.level_of_type(t, lat) == ["b"]
    assert gs.rhd(gs.parse_type("[a]X@bot/1", lat),
                  gs.parse_type("[b]Y@bot/1", lat), lat)
    nat = gs.flat("Nat", 2, lat.bottom())
    assert t == gs.parse_type("[a]X@bot/1 -o [b]Y@bot/1", lat)
    moves = gs.moves(nat, 1, lat)
    assert [m["tag"] for m in moves] == ["q", "(a 0)", "(a 1)"]
    assert moves[0]["polarity"] == "O"
    assert moves[1]["justifier"] == "q"


def test_plays_and_strategies(lat):
    nat = gs.flat("Nat", 2, lat.bottom())
    bd = gs.Bounds(2, 8)
    plays = gs.enumerate_plays(nat, 2, 1, lat)
    assert len(plays) == 4
    assert gs.validate_play(nat, 1, lat, ["q", "(a 0)"]) == []
    assert gs.validate_play(nat, 1, lat, ["(a 0)", "q"]) != []

    cc = gs.copycat(nat, bd, lat)
    ok, law = gs.is_strategy(cc)
    assert ok, law
    assert gs.compose(cc, cc).plays == cc.plays
    phi = gs.extract_skeleton(cc)
    assert gs.saturate(phi).plays == cc.plays


def test_flow_and_coercion(lat):
    a, b, top = lat.find("a"), lat.find("b"), lat.find("top")
    x = gs.flat("X", 1, lat.bottom())
    verdict = gs.no_flow(gs.monad(a, x), gs.monad(b, x), gs.Bounds(1, 6), lat)
    assert verdict["no_flow"]
    flows = gs.no_flow(x, x, gs.Bounds(1, 6), lat)
    assert not flows["no_flow"]
    with pytest.raises(gs.CoercionError):
        gs.coerce(a, b, x, gs.Bounds(2, 8), lat)
    up = gs.coerce(a, top, x, gs.Bounds(2, 8), lat)
    assert len(up) > 1


def test_dcc_program(lat):
    program = """
base D @ bot / 2
assume f : D -> D
check \\x:D. f x : D -> D
normalize (\\x:D. x) D.0
"""
    results = gs.dcc_run(program, gs.Bounds(2, 8), lat)
    assert all(r["ok"] for r in results)
    norm = [r for r in results if r["kind"] == "normalize"]
    assert norm[0]["message"] == "D.0"
    assert gs.dcc_normalize("eta<a> (\\x:D@bot/2. x) y", lat) == "y"


def test_laws_report_is_deterministic():
    small = gs.Bounds(1, 4)
    r1 = gs.laws(seed=11, bounds=small)
    r2 = gs.laws(seed=11, bounds=small)
    assert r1 == r2
    parsed = json.loads(r1)
    assert {s["suite"] for s in parsed["suites"]} >= {"category", "monad"}
