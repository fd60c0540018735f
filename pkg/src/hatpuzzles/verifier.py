"""Run strategies against hat assignments and summarise worst cases.

Reports from disjoint slices of the assignment space combine with
:func:`merge_reports`; the merge is associative and commutative, so a
parallel run gives the same report as a single pass. The counterexample is
always the lexicographically smallest assignment attaining the worst case,
which keeps that true for arbitrary partitions.

Sampled runs draw assignment ``i`` from ``random.Random(f"{seed}:{i}")``.
Each sample depends only on ``(seed, i)``, so samples can be drawn in any
order or by any worker.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import reduce
from typing import Iterable, Optional, Sequence

from .core import (
    DEFAULT_CAP,
    ColorGuess,
    DistinctColors,
    Palette,
    PuzzleError,
    PuzzleSpec,
    RepeatedColors,
    Transcript,
    Visibility,
    check_assignment,
    enumerate_assignments,
    visible_hats,
)
from .strategies import Strategy, StrategyError


@dataclass(frozen=True)
class RunResult:
    transcript: Transcript
    mistakes: frozenset[int]
    violations: int


@dataclass(frozen=True)
class VerificationReport:
    puzzle: PuzzleSpec
    strategy_id: str
    assignments_checked: int
    worst_case_mistakes: int
    guaranteed_correct_positions: frozenset[int]
    counterexample: Optional[tuple[int, ...]]
    violations_total: int
    mode: str = "exhaustive"
    seed: Optional[int] = None
    samples: Optional[int] = None
    elapsed_ms: int = field(default=0, compare=False)

    def to_json(self, palette: Optional[Palette] = None) -> dict:
        palette = palette or Palette(self.puzzle.palette_size)
        cx = self.counterexample
        obj = {
            "puzzle": self.puzzle.describe(),
            "strategyId": self.strategy_id,
            "mode": self.mode,
            "assignmentsChecked": self.assignments_checked,
            "worstCaseMistakes": self.worst_case_mistakes,
            "guaranteedCorrectPositions": sorted(self.guaranteed_correct_positions),
            "counterexample": None if cx is None else palette.format_assignment(cx),
            "violationsTotal": self.violations_total,
            "elapsedMs": self.elapsed_ms,
        }
        if self.mode == "sampled":
            obj["seed"] = self.seed
            obj["samples"] = self.samples
        return obj


def run_transcript(spec: PuzzleSpec, strategy: Strategy, hats: Sequence[int]) -> RunResult:
    hats = check_assignment(spec, hats)
    if sorted(strategy.order) != list(range(spec.n)):
        raise StrategyError(f"speaking order {strategy.order} is not a permutation")
    line = spec.visibility is Visibility.LINE_FORWARD
    transcript = Transcript()
    announced = set()
    mistakes = set()
    violations = 0
    for pos in strategy.order:
        seen = hats[:pos] if line else visible_hats(spec, hats, pos)
        color = strategy.decide(spec, pos, seen, transcript)
        if not isinstance(color, int) or not 0 <= color < spec.palette_size:
            raise StrategyError(
                f"{strategy.id} announced {color!r} outside the palette at position {pos}"
            )
        if spec.no_repeat and color in announced:
            violations += 1
        announced.add(color)
        if color != hats[pos]:
            mistakes.add(pos)
        transcript = transcript.then(pos, ColorGuess(color))
    return RunResult(transcript, frozenset(mistakes), violations)


def verify_over(
    spec: PuzzleSpec,
    strategy: Strategy,
    assignments: Iterable[Sequence[int]],
    mode: str = "exhaustive",
) -> VerificationReport:
    """Aggregate run_transcript over an explicit collection of assignments."""
    start = time.perf_counter()
    checked = 0
    worst = 0
    counterexample = None
    never_wrong = set(range(spec.n))
    violations = 0
    for hats in assignments:
        hats = tuple(hats)
        result = run_transcript(spec, strategy, hats)
        checked += 1
        violations += result.violations
        never_wrong -= result.mistakes
        k = len(result.mistakes)
        if k > worst or (k == worst and k > 0 and hats < counterexample):
            worst, counterexample = k, hats
    elapsed = round((time.perf_counter() - start) * 1000)
    return VerificationReport(
        puzzle=spec,
        strategy_id=strategy.id,
        assignments_checked=checked,
        worst_case_mistakes=worst,
        guaranteed_correct_positions=frozenset(never_wrong),
        counterexample=counterexample,
        violations_total=violations,
        mode=mode,
        elapsed_ms=elapsed,
    )


def merge_reports(a: VerificationReport, b: VerificationReport) -> VerificationReport:
    if (a.puzzle, a.strategy_id, a.mode) != (b.puzzle, b.strategy_id, b.mode):
        raise PuzzleError("can only merge reports of the same puzzle, strategy and mode")
    worst = max(a.worst_case_mistakes, b.worst_case_mistakes)
    candidates = [
        r.counterexample for r in (a, b)
        if r.worst_case_mistakes == worst and r.counterexample is not None
    ]
    return VerificationReport(
        puzzle=a.puzzle,
        strategy_id=a.strategy_id,
        assignments_checked=a.assignments_checked + b.assignments_checked,
        worst_case_mistakes=worst,
        guaranteed_correct_positions=a.guaranteed_correct_positions
        & b.guaranteed_correct_positions,
        counterexample=min(candidates) if candidates else None,
        violations_total=a.violations_total + b.violations_total,
        mode=a.mode,
        seed=a.seed,
        samples=None if a.samples is None else a.samples + (b.samples or 0),
        elapsed_ms=a.elapsed_ms + b.elapsed_ms,
    )


def _verify_chunk(spec, strategy, chunk):
    return verify_over(spec, strategy, chunk)


def verify_exhaustive(
    spec: PuzzleSpec,
    strategy: Strategy,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> VerificationReport:
    """Check the strategy on every legal assignment.

    Raises EnumerationCapExceeded past ``cap``; use verify_sampled then.
    With ``workers > 1`` the assignment list is split into contiguous
    chunks run in separate processes and merged.
    """
    start = time.perf_counter()
    assignments = enumerate_assignments(spec, cap)
    if workers <= 1:
        report = verify_over(spec, strategy, assignments)
    else:
        hats = list(assignments)
        step = max(1, -(-len(hats) // workers))
        chunks = [hats[i:i + step] for i in range(0, len(hats), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_verify_chunk, [spec] * len(chunks), [strategy] * len(chunks), chunks))
        report = reduce(merge_reports, parts)
    elapsed = round((time.perf_counter() - start) * 1000)
    return replace(report, elapsed_ms=elapsed)


def sample_assignment(spec: PuzzleSpec, seed: int, index: int) -> tuple[int, ...]:
    """The ``index``-th sampled assignment for ``seed``, uniform over legal ones."""
    rng = random.Random(f"{seed}:{index}")
    if isinstance(spec, RepeatedColors):
        return tuple(rng.choices(range(spec.colors), k=spec.n))
    if isinstance(spec, DistinctColors):
        return tuple(rng.sample(range(spec.palette_size), spec.n))
    # rejection against the supply keeps the draw uniform over legal worlds
    while True:
        hats = tuple(rng.randrange(spec.palette_size) for _ in range(spec.n))
        if all(hats.count(c) <= k for c, k in enumerate(spec.counts)):
            return hats


def verify_sampled(
    spec: PuzzleSpec, strategy: Strategy, samples: int, seed: int
) -> VerificationReport:
    if samples < 1:
        raise PuzzleError("need at least one sample")
    start = time.perf_counter()
    hats = (sample_assignment(spec, seed, i) for i in range(samples))
    report = verify_over(spec, strategy, hats, mode="sampled")
    elapsed = round((time.perf_counter() - start) * 1000)
    return replace(report, seed=seed, samples=samples, elapsed_ms=elapsed)
