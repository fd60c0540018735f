"""Deterministic guessing strategies for the line puzzles.

Every strategy speaks back to front. ``decide`` receives what the speaker
knows and nothing else: the hats it can see and the public transcript.
For line-forward puzzles ``seen`` is the tuple ``hats[:position]``, which
indexes exactly like the position->color map of visible hats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import DistinctColors, PuzzleError, PuzzleSpec, RepeatedColors, Transcript

RED, BLUE = 0, 1

Decide = Callable[[PuzzleSpec, int, Sequence[int], Transcript], int]


class StrategyError(PuzzleError):
    """Strategy requested for a puzzle it was not designed for."""


@dataclass(frozen=True)
class Strategy:
    id: str
    order: tuple[int, ...]
    decide: Decide
    # documented worst-case number of wrong guesses
    guarantee: int


def back_to_front(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _require_repeated(spec, strategy_id, n=None, colors=None):
    if not isinstance(spec, RepeatedColors):
        raise StrategyError(f"{strategy_id} plays the repeated-colors puzzle, not {spec}")
    if n is not None and spec.n != n:
        raise StrategyError(f"{strategy_id} needs exactly {n} logicians, got {spec.n}")
    if colors is not None and spec.colors != colors:
        raise StrategyError(f"{strategy_id} needs exactly {colors} colors, got {spec.colors}")


def _smallest_unannounced(palette_size, heard):
    taken = set(heard)
    return next(c for c in range(palette_size) if c not in taken)


def _copy_front_decide(spec, position, seen, transcript):
    if position == 1:
        return seen[0]
    return transcript.guessed_colors()[0]


def copy_front(spec: PuzzleSpec) -> Strategy:
    """Back names the front hat; front repeats what it heard."""
    _require_repeated(spec, "copy_front", n=2, colors=2)
    return Strategy("copy_front", back_to_front(2), _copy_front_decide, 1)


def _same_different_decide(spec, position, seen, transcript):
    heard = transcript.guessed_colors()
    if position == 2:
        return RED if seen[0] == seen[1] else BLUE
    same = heard[0] == RED
    if position == 1:
        return seen[0] if same else 1 - seen[0]
    return heard[1] if same else 1 - heard[1]


def same_different(spec: PuzzleSpec) -> Strategy:
    """Back says red for matching front hats, blue otherwise."""
    _require_repeated(spec, "same_different", n=3, colors=2)
    return Strategy("same_different", back_to_front(3), _same_different_decide, 1)


def _parity_decide(spec, position, seen, transcript):
    reds = seen.count(RED) + transcript.guessed_colors().count(RED)
    return RED if reds % 2 == 0 else BLUE


def parity(spec: PuzzleSpec) -> Strategy:
    """Say red iff the reds seen plus reds heard are even.

    For the back logician nothing has been heard yet, so this is the
    parity signal; for everyone else it decodes their own color.
    """
    _require_repeated(spec, "parity", colors=2)
    return Strategy("parity", back_to_front(spec.n), _parity_decide, 1)


def _modular_sum_decide(spec, position, seen, transcript):
    total = sum(seen) + sum(transcript.guessed_colors())
    return -total % spec.colors


def modular_sum(spec: PuzzleSpec) -> Strategy:
    """Everyone assumes the hats (back's announcement included) sum to 0 mod N."""
    _require_repeated(spec, "modular_sum")
    return Strategy("modular_sum", back_to_front(spec.n), _modular_sum_decide, 1)


def _distinct3_decide(spec, position, seen, transcript):
    size = spec.palette_size
    heard = transcript.guessed_colors()
    if position == spec.n - 1:
        return -sum(seen) % size
    c0 = heard[0]
    if position == 0:
        # cannot see the front hat, so heard dodges are taken at face value
        candidate = -sum(heard) % size
        if candidate not in heard:
            return candidate
        return _smallest_unannounced(size, heard)
    front = seen[0]
    # an honest middle guess never equals the front hat; such a guess is a dodge
    decoded = [c0] + [c0 if c == front else c for c in heard[1:]]
    candidate = -(sum(seen) + sum(decoded)) % size
    if candidate not in heard:
        return candidate
    if candidate == c0 and front not in heard:
        return front
    return _smallest_unannounced(size, heard)


def distinct3(spec: PuzzleSpec) -> Strategy:
    """Zero-sum signal rescued for the no-repeat puzzle; at most three wrong.

    The logician whose color the back already called out names the front
    hat instead. Everyone between that logician and the front sees the
    front hat, recognises the substitution and decodes around it. Only the
    back, the substituting logician and the front can be wrong.
    """
    if not isinstance(spec, DistinctColors):
        raise StrategyError(f"distinct3 plays the distinct-colors puzzle, not {spec}")
    return Strategy("distinct3", back_to_front(spec.n), _distinct3_decide, 3)


STRATEGIES: dict[str, Callable[[PuzzleSpec], Strategy]] = {
    "copy_front": copy_front,
    "same_different": same_different,
    "parity": parity,
    "modular_sum": modular_sum,
    "distinct3": distinct3,
}


def get_strategy(strategy_id: str, spec: PuzzleSpec) -> Strategy:
    try:
        factory = STRATEGIES[strategy_id]
    except KeyError:
        raise StrategyError(
            f"unknown strategy {strategy_id!r}; choose from {', '.join(STRATEGIES)}"
        ) from None
    return factory(spec)
