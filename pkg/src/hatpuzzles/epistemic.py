"""Possible-worlds reasoning for "do you know your own hat?" puzzles.

A world is a supply-legal assignment. A logician knows their color in a
world when every remaining world that looks the same to them (same visible
hats) gives them the same color. Announcements are truthful and public:
after logician ``p`` says "I know" or "I don't know", only the worlds in
which ``p`` would have said the same thing survive. Only the know/don't-know
status filters worlds; the color a knower has in mind is not announced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .core import (
    Announcement,
    Assignment,
    DontKnow,
    Know,
    LimitedSupply,
    PuzzleError,
    Transcript,
    Visibility,
    check_assignment,
    enumerate_assignments,
)


class InconsistentHistory(PuzzleError):
    """No world is consistent with the announcements heard."""


@dataclass(frozen=True)
class WorldSet:
    worlds: frozenset[Assignment]

    def __len__(self) -> int:
        return len(self.worlds)

    def __iter__(self) -> Iterator[Assignment]:
        return iter(sorted(self.worlds))

    def __contains__(self, hats) -> bool:
        return tuple(hats) in self.worlds


def initial_worlds(spec: LimitedSupply) -> WorldSet:
    return WorldSet(frozenset(enumerate_assignments(spec)))


def _view(spec: LimitedSupply, hats: Sequence[int], position: int) -> tuple:
    if spec.visibility is Visibility.LINE_FORWARD:
        return tuple(hats[:position])
    return tuple(hats[:position]) + tuple(hats[position + 1:])


def knows_own(spec: LimitedSupply, worlds: WorldSet, actual: Sequence[int], position: int):
    actual = tuple(actual)
    if actual not in worlds:
        raise InconsistentHistory(f"actual world {actual} was already ruled out")
    if not 0 <= position < spec.n:
        raise PuzzleError(f"position {position} out of range for n={spec.n}")
    view = _view(spec, actual, position)
    own = {w[position] for w in worlds.worlds if _view(spec, w, position) == view}
    if len(own) == 1:
        return Know(own.pop())
    return DontKnow()


def _status(decision) -> bool:
    if isinstance(decision, bool):
        return decision
    if isinstance(decision, Know):
        return True
    if isinstance(decision, DontKnow):
        return False
    raise PuzzleError(f"not a know/don't-know announcement: {decision!r}")


def announce(spec: LimitedSupply, worlds: WorldSet, position: int, decision) -> WorldSet:
    """Public update after ``position`` truthfully announces ``decision``.

    ``decision`` may be a Know/DontKnow announcement or a bare bool.
    """
    knows = _status(decision)
    # group once by what the speaker sees instead of re-scanning per world
    own_by_view: dict[tuple, set[int]] = {}
    for w in worlds.worlds:
        own_by_view.setdefault(_view(spec, w, position), set()).add(w[position])
    kept = frozenset(
        w for w in worlds.worlds
        if (len(own_by_view[_view(spec, w, position)]) == 1) == knows
    )
    if not kept:
        raise InconsistentHistory(
            f"no world lets logician at position {position} say "
            f"{'they know' if knows else 'they do not know'}"
        )
    return WorldSet(kept)


def default_order(spec: LimitedSupply) -> tuple[int, ...]:
    return tuple(range(spec.n))


def simulate(
    spec: LimitedSupply, actual: Sequence[int], order: Optional[Sequence[int]] = None
) -> Transcript:
    actual = check_assignment(spec, actual)
    order = default_order(spec) if order is None else tuple(order)
    worlds = initial_worlds(spec)
    transcript = Transcript()
    for pos in order:
        decision = knows_own(spec, worlds, actual, pos)
        worlds = announce(spec, worlds, pos, decision)
        transcript = transcript.then(pos, decision)
    return transcript


def surviving_worlds(
    spec: LimitedSupply,
    statuses: Iterable[Union[Announcement, bool]],
    order: Optional[Sequence[int]] = None,
) -> WorldSet:
    statuses = list(statuses)
    order = default_order(spec) if order is None else tuple(order)
    if len(statuses) > len(order):
        raise PuzzleError(f"{len(statuses)} announcements but only {len(order)} speakers")
    worlds = initial_worlds(spec)
    for pos, status in zip(order, statuses):
        worlds = announce(spec, worlds, pos, status)
    return worlds


def deduce(
    spec: LimitedSupply,
    statuses: Iterable[Union[Announcement, bool]],
    order: Optional[Sequence[int]],
    query: int,
) -> set[int]:
    """Colors ``query`` can wear in worlds consistent with the heard statuses."""
    if not 0 <= query < spec.n:
        raise PuzzleError(f"query position {query} out of range for n={spec.n}")
    worlds = surviving_worlds(spec, statuses, order)
    return {w[query] for w in worlds.worlds}
