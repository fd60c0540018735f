import math

import pytest
from hypothesis import given, strategies as st

from hatpuzzles.core import (
    ColorGuess,
    DistinctColors,
    DontKnow,
    EnumerationCapExceeded,
    Know,
    LimitedSupply,
    Palette,
    PuzzleError,
    RepeatedColors,
    Transcript,
    Visibility,
    count_assignments,
    enumerate_assignments,
    is_legal,
    visible_hats,
)

from oracles import supply_worlds

R, B = 0, 1


def test_repeated_two_by_two_has_four():
    assert list(enumerate_assignments(RepeatedColors(2, 2))) == [
        (0, 0), (0, 1), (1, 0), (1, 1)
    ]


def test_distinct_three_has_24():
    hats = list(enumerate_assignments(DistinctColors(3)))
    assert len(hats) == 24 == count_assignments(DistinctColors(3))
    assert hats == sorted(hats)


def test_supply_r3_b2_has_seven():
    spec = LimitedSupply(3, (3, 2))
    hats = list(enumerate_assignments(spec))
    assert hats == supply_worlds(3, (3, 2))
    assert len(hats) == 7
    assert (B, B, B) not in hats


@pytest.mark.parametrize(
    "spec",
    [
        RepeatedColors(4, 3),
        DistinctColors(5),
        LimitedSupply(4, (2, 1, 3)),
        LimitedSupply(3, (3,)),
        LimitedSupply(5, (1, 1, 1, 1, 1)),
    ],
)
def test_enumeration_is_complete_unique_and_legal(spec):
    hats = list(enumerate_assignments(spec))
    assert len(hats) == len(set(hats)) == count_assignments(spec)
    assert hats == sorted(hats)
    assert all(is_legal(spec, h) for h in hats)


@given(st.integers(1, 6), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_supply_count_matches_brute_force(n, counts):
    if sum(counts) < n:
        with pytest.raises(PuzzleError):
            LimitedSupply(n, tuple(counts))
        return
    spec = LimitedSupply(n, tuple(counts))
    assert count_assignments(spec) == len(supply_worlds(n, counts))


@pytest.mark.parametrize("n", range(1, 7))
def test_distinct_leaves_exactly_one_color_unworn(n):
    spec = DistinctColors(n)
    for hats in enumerate_assignments(spec):
        assert len(set(range(n + 1)) - set(hats)) == 1


def test_cap_signals_sampled_mode():
    with pytest.raises(EnumerationCapExceeded, match="sampled"):
        enumerate_assignments(RepeatedColors(30, 2))
    with pytest.raises(EnumerationCapExceeded):
        enumerate_assignments(DistinctColors(4), cap=100)
    assert math.perm(5, 4) == 120


def test_visible_line_forward():
    spec = RepeatedColors(3, 2)
    assert visible_hats(spec, (R, R, B), 2) == {0: R, 1: R}
    assert visible_hats(spec, (B, R, B), 0) == {}


def test_visible_complete():
    spec = LimitedSupply(3, (3, 2), Visibility.COMPLETE)
    assert visible_hats(spec, (R, B, R), 1) == {0: R, 2: R}


def test_visible_out_of_range():
    with pytest.raises(PuzzleError):
        visible_hats(RepeatedColors(3, 2), (0, 0, 0), 3)


@given(st.integers(1, 6), st.data())
def test_visible_never_contains_self(n, data):
    hats = tuple(data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))
    pos = data.draw(st.integers(0, n - 1))
    for vis in Visibility:
        spec = LimitedSupply(n, (n, n, n), vis)
        assert pos not in visible_hats(spec, hats, pos)


@pytest.mark.parametrize(
    "bad",
    [
        lambda: RepeatedColors(0, 2),
        lambda: RepeatedColors(2, 1),
        lambda: DistinctColors(0),
        lambda: LimitedSupply(3, (1, 1)),
        lambda: Palette(0),
        lambda: Palette(2, ("red", "Red")),
        lambda: Palette(3, ("red", "blue")),
    ],
)
def test_invalid_parameters(bad):
    with pytest.raises(PuzzleError):
        bad()


def test_palette_round_trip_text():
    pal = Palette(2)
    assert pal.names == ("red", "blue")
    assert pal.parse_assignment("R,R,B,B,R") == (0, 0, 1, 1, 0)
    assert pal.parse_assignment("red,Blue,1") == (0, 1, 1)
    assert pal.format_assignment((0, 0, 1, 1, 0)) == "R,R,B,B,R"
    with pytest.raises(PuzzleError):
        pal.parse_color("G")
    with pytest.raises(PuzzleError):
        pal.parse_color("7")


def test_palette_falls_back_to_indices_when_initials_clash():
    pal = Palette(2, ("blue", "black"))
    assert pal.symbols == ("0", "1")
    assert pal.parse_assignment("blue,1,black") == (0, 1, 1)


def test_transcript_json_round_trip():
    t = Transcript().then(2, DontKnow()).then(1, Know(0)).then(0, ColorGuess(1))
    pal = Palette(2)
    back, pal2 = Transcript.from_json(t.to_json(pal))
    assert back == t and pal2 == pal
    assert t.guessed_colors() == (1,)


def test_transcript_rejects_repeat_speaker():
    with pytest.raises(PuzzleError):
        Transcript().then(1, DontKnow()).then(1, DontKnow())
