import random

import pytest
from hypothesis import given, settings, strategies as st

from hatpuzzles.core import (
    DistinctColors,
    EnumerationCapExceeded,
    PuzzleError,
    RepeatedColors,
    enumerate_assignments,
)
from hatpuzzles.strategies import Strategy, StrategyError, distinct3, get_strategy, modular_sum, parity
from hatpuzzles.verifier import (
    merge_reports,
    run_transcript,
    sample_assignment,
    verify_exhaustive,
    verify_over,
    verify_sampled,
)

R, B = 0, 1


def test_run_parity_example():
    spec = RepeatedColors(5, 2)
    assert run_transcript(spec, parity(spec), (R, R, B, B, R)).mistakes == set()


def test_run_copy_front_example():
    spec = RepeatedColors(2, 2)
    res = run_transcript(spec, get_strategy("copy_front", spec), (B, R))
    assert res.mistakes == {1}


def test_run_distinct3_example():
    spec = DistinctColors(4)
    res = run_transcript(spec, distinct3(spec), (0, 2, 4, 3))
    assert res.mistakes == {3, 2, 0} and res.violations == 0


def test_run_rejects_out_of_palette_color():
    spec = RepeatedColors(2, 2)
    bad = Strategy("bad", (1, 0), lambda *_: 7, 0)
    with pytest.raises(StrategyError):
        run_transcript(spec, bad, (0, 0))


def test_run_counts_repeat_violations():
    spec = DistinctColors(2)
    always_zero = Strategy("zero", (1, 0), lambda *_: 0, 0)
    res = run_transcript(spec, always_zero, (1, 2))
    assert res.violations == 1


def test_run_rejects_illegal_assignment():
    spec = DistinctColors(3)
    with pytest.raises(PuzzleError):
        run_transcript(spec, distinct3(spec), (0, 0, 1))


def test_exhaustive_parity_n5():
    spec = RepeatedColors(5, 2)
    rep = verify_exhaustive(spec, parity(spec))
    assert rep.assignments_checked == 32
    assert rep.worst_case_mistakes == 1
    assert rep.guaranteed_correct_positions == {0, 1, 2, 3}
    assert rep.counterexample is not None
    assert len(run_transcript(spec, parity(spec), rep.counterexample).mistakes) == 1


def test_exhaustive_modular_n4_n3():
    spec = RepeatedColors(4, 3)
    rep = verify_exhaustive(spec, modular_sum(spec))
    assert rep.assignments_checked == 81
    assert rep.worst_case_mistakes == 1
    assert rep.guaranteed_correct_positions == {0, 1, 2}


def test_exhaustive_distinct3_n5():
    spec = DistinctColors(5)
    rep = verify_exhaustive(spec, distinct3(spec))
    assert rep.assignments_checked == 720
    assert rep.worst_case_mistakes == 3
    assert rep.violations_total == 0


@pytest.mark.parametrize(
    "spec,sid",
    [
        (RepeatedColors(2, 2), "copy_front"),
        (RepeatedColors(3, 2), "same_different"),
        (RepeatedColors(7, 2), "parity"),
        (RepeatedColors(4, 4), "modular_sum"),
        (DistinctColors(4), "distinct3"),
    ],
)
def test_worst_case_equals_direct_recomputation(spec, sid):
    strat = get_strategy(sid, spec)
    runs = [(h, run_transcript(spec, strat, h)) for h in enumerate_assignments(spec)]
    rep = verify_exhaustive(spec, strat)
    worst = max(len(r.mistakes) for _, r in runs)
    assert rep.worst_case_mistakes == worst
    assert rep.counterexample == min(h for h, r in runs if len(r.mistakes) == worst)
    wrong_somewhere = set().union(*(r.mistakes for _, r in runs))
    assert rep.guaranteed_correct_positions == set(range(spec.n)) - wrong_somewhere
    assert rep.violations_total == 0
    if sid != "distinct3":
        assert rep.guaranteed_correct_positions >= set(range(spec.n - 1))


def test_exhaustive_cap():
    spec = RepeatedColors(30, 2)
    with pytest.raises(EnumerationCapExceeded):
        verify_exhaustive(spec, parity(spec))


def test_parallel_workers_match_single_pass():
    spec = DistinctColors(5)
    strat = distinct3(spec)
    assert verify_exhaustive(spec, strat, workers=3) == verify_exhaustive(spec, strat)


def _random_partition_merge(spec, strat, rng, parts):
    hats = list(enumerate_assignments(spec))
    buckets = [[] for _ in range(parts)]
    for h in hats:
        buckets[rng.randrange(parts)].append(h)
    rng.shuffle(buckets)
    reports = [verify_over(spec, strat, b) for b in buckets if b]
    merged = reports[0]
    for r in reports[1:]:
        merged = merge_reports(merged, r)
    return merged


@pytest.mark.parametrize("trial", range(100))
def test_parallel_merge_law(trial):
    rng = random.Random(trial)
    spec, strat = [
        (RepeatedColors(5, 2), parity(RepeatedColors(5, 2))),
        (RepeatedColors(3, 3), modular_sum(RepeatedColors(3, 3))),
        (DistinctColors(4), distinct3(DistinctColors(4))),
    ][trial % 3]
    merged = _random_partition_merge(spec, strat, rng, rng.randint(2, 6))
    assert merged == verify_over(spec, strat, enumerate_assignments(spec))


def test_merge_rejects_mismatched_reports():
    a = verify_exhaustive(RepeatedColors(3, 2), parity(RepeatedColors(3, 2)))
    b = verify_exhaustive(RepeatedColors(3, 3), modular_sum(RepeatedColors(3, 3)))
    with pytest.raises(PuzzleError):
        merge_reports(a, b)


def test_sampled_lone_logician():
    spec = RepeatedColors(1, 2)
    rep = verify_sampled(spec, parity(spec), 10, seed=3)
    assert rep.worst_case_mistakes <= 1
    assert rep.mode == "sampled" and rep.samples == 10 and rep.seed == 3


def test_sampled_is_reproducible():
    spec = DistinctColors(9)
    a = verify_sampled(spec, distinct3(spec), 500, seed=11)
    b = verify_sampled(spec, distinct3(spec), 500, seed=11)
    assert a == b
    assert a.worst_case_mistakes == 3 and a.violations_total == 0


def test_sampled_large_parity_never_two_mistakes():
    spec = RepeatedColors(30, 2)
    rep = verify_sampled(spec, parity(spec), 10**5, seed=42)
    assert rep.worst_case_mistakes <= 1
    assert rep.guaranteed_correct_positions >= set(range(29))


def test_sample_depends_only_on_seed_and_index():
    spec = DistinctColors(6)
    forward = [sample_assignment(spec, 5, i) for i in range(50)]
    backward = [sample_assignment(spec, 5, i) for i in reversed(range(50))][::-1]
    assert forward == backward
    assert all(len(set(h)) == 6 for h in forward)


@settings(max_examples=30)
@given(st.integers(0, 2**32))
def test_sampled_distinct_draws_are_legal(seed):
    spec = DistinctColors(4)
    h = sample_assignment(spec, seed, 0)
    assert len(set(h)) == 4 and all(0 <= c < 5 for c in h)


def test_sampled_needs_samples():
    spec = RepeatedColors(3, 2)
    with pytest.raises(PuzzleError):
        verify_sampled(spec, parity(spec), 0, seed=1)


def test_report_json_fields():
    spec = RepeatedColors(5, 2)
    obj = verify_exhaustive(spec, parity(spec)).to_json()
    assert list(obj) == [
        "puzzle", "strategyId", "mode", "assignmentsChecked", "worstCaseMistakes",
        "guaranteedCorrectPositions", "counterexample", "violationsTotal", "elapsedMs",
    ]
    assert obj["guaranteedCorrectPositions"] == [0, 1, 2, 3]
    assert obj["counterexample"].count(",") == 4
