"""Search for optimal decision tables on small line puzzles.

A decision table maps an information set (speaker, hats seen, colors heard)
to the color that speaker announces. ``exists_strategy`` looks for a table
under which no assignment has more than ``k`` wrong guesses:

* assignments are played one at a time in lexicographic order;
* the first time play reaches an information set without an entry, the
  search branches on its color, smallest index first;
* as soon as the assignment being played exceeds ``k`` mistakes the most
  recent open choice is advanced (chronological backtracking).

Entries are only created for information sets some assignment reaches, so a
returned table is exactly what the verifier will consult on replay.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import (
    DistinctColors,
    PuzzleError,
    PuzzleSpec,
    RepeatedColors,
    count_assignments,
    enumerate_assignments,
)
from .strategies import Strategy, back_to_front

MAX_ASSIGNMENTS = 1000
MAX_INFOSETS = 10**5
MAX_NODES = 2 * 10**7

InfoSet = tuple[int, tuple[int, ...], tuple[int, ...]]


class SearchLimitExceeded(PuzzleError):
    """Instance or search effort beyond the configured limits."""


@dataclass(frozen=True)
class TableDecide:
    """Decision function backed by a synthesized table."""

    table: tuple[tuple[InfoSet, int], ...]
    _lookup: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.table))

    def __call__(self, spec, position, seen, transcript):
        heard = transcript.guessed_colors()
        key = (position, tuple(seen), heard)
        try:
            return self._lookup[key]
        except KeyError:
            # unreachable under the synthesized play; any legal color will do
            return next(c for c in range(spec.palette_size) if c not in heard)


@dataclass(frozen=True)
class DecisionTable:
    spec: PuzzleSpec
    order: tuple[int, ...]
    entries: tuple[tuple[InfoSet, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def as_strategy(self, guarantee: int) -> Strategy:
        return Strategy("synth", self.order, TableDecide(self.entries), guarantee)

    def to_json(self) -> list[dict]:
        return [
            {"speaker": pos, "seen": list(seen), "heard": list(heard), "announce": color}
            for (pos, seen, heard), color in self.entries
        ]

    @classmethod
    def from_json(cls, spec: PuzzleSpec, rows: list[dict]) -> DecisionTable:
        entries = tuple(
            ((int(r["speaker"]), tuple(r["seen"]), tuple(r["heard"])), int(r["announce"]))
            for r in rows
        )
        return cls(spec, back_to_front(spec.n), entries)


@dataclass(frozen=True)
class SynthesisResult:
    spec: PuzzleSpec
    min_guaranteed_mistakes: int
    witness: DecisionTable
    nodes_explored: int

    def to_json(self) -> dict:
        return {
            "puzzle": self.spec.describe(),
            "minGuaranteedMistakes": self.min_guaranteed_mistakes,
            "nodesExplored": self.nodes_explored,
            "witness": self.witness.to_json(),
        }


def infoset_bound(spec: PuzzleSpec) -> int:
    """Upper bound on reachable information sets for back-to-front play."""
    size = spec.palette_size
    return sum(
        min(size**p, count_assignments(spec)) * size ** (spec.n - 1 - p)
        for p in range(spec.n)
    )


def check_limits(
    spec: PuzzleSpec, max_assignments: int = MAX_ASSIGNMENTS, max_infosets: int = MAX_INFOSETS
) -> None:
    if not isinstance(spec, (RepeatedColors, DistinctColors)):
        raise PuzzleError(f"synthesis covers the line puzzles only, not {spec}")
    total = count_assignments(spec)
    if total > max_assignments:
        raise SearchLimitExceeded(
            f"{total} assignments exceed the synthesis limit of {max_assignments}"
        )
    bound = infoset_bound(spec)
    if bound > max_infosets:
        raise SearchLimitExceeded(
            f"up to {bound} information sets exceed the synthesis limit of {max_infosets}"
        )


def _search(spec, k, max_nodes):
    """Return (table or None, nodes explored)."""
    hats_list = list(enumerate_assignments(spec))
    order = back_to_front(spec.n)
    n, size, no_repeat = spec.n, spec.palette_size, spec.no_repeat
    table: dict[InfoSet, int] = {}
    # open choices: [key, candidates, index, assignment idx, step, heard, mistakes]
    stack: list[list] = []
    a, step, heard, mistakes = 0, 0, (), 0
    nodes = 0
    total = len(hats_list)
    while a < total:
        if step == n:
            a, step, heard, mistakes = a + 1, 0, (), 0
            continue
        hats = hats_list[a]
        pos = order[step]
        key = (pos, hats[:pos], heard)
        color = table.get(key)
        if color is None:
            cands = [c for c in range(size) if not (no_repeat and c in heard)]
            stack.append([key, cands, 0, a, step, heard, mistakes])
            color = table[key] = cands[0]
            nodes += 1
            if nodes > max_nodes:
                raise SearchLimitExceeded(f"search passed {max_nodes} nodes without an answer")
        m = mistakes + (color != hats[pos])
        if m <= k:
            heard, mistakes, step = heard + (color,), m, step + 1
            continue
        while stack:
            frame = stack[-1]
            frame[2] += 1
            if frame[2] < len(frame[1]):
                table[frame[0]] = frame[1][frame[2]]
                nodes += 1
                a, step, heard, mistakes = frame[3], frame[4], frame[5], frame[6]
                break
            del table[frame[0]]
            stack.pop()
        else:
            return None, nodes
    return DecisionTable(spec, order, tuple(sorted(table.items()))), nodes


def exists_strategy(
    spec: PuzzleSpec,
    k: int,
    max_assignments: int = MAX_ASSIGNMENTS,
    max_infosets: int = MAX_INFOSETS,
    max_nodes: int = MAX_NODES,
) -> Optional[DecisionTable]:
    """A decision table with at most ``k`` mistakes on every assignment, or None."""
    check_limits(spec, max_assignments, max_infosets)
    table, _ = _search(spec, k, max_nodes)
    return table


def min_guaranteed_mistakes(
    spec: PuzzleSpec,
    max_k: Optional[int] = None,
    max_assignments: int = MAX_ASSIGNMENTS,
    max_infosets: int = MAX_INFOSETS,
    max_nodes: int = MAX_NODES,
) -> Optional[SynthesisResult]:
    """Smallest achievable worst case, found by trying k = 0, 1, 2, ...

    Returns None when no table reaches ``max_k`` or fewer mistakes.
    """
    check_limits(spec, max_assignments, max_infosets)
    top = spec.n if max_k is None else min(max_k, spec.n)
    explored = 0
    for k in range(top + 1):
        table, nodes = _search(spec, k, max_nodes)
        explored += nodes
        if table is not None:
            return SynthesisResult(spec, k, table, explored)
    return None
