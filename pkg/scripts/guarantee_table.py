"""Worst-case mistakes of every built-in strategy over a range of sizes."""

import argparse

from hatpuzzles.core import DistinctColors, RepeatedColors
from hatpuzzles.strategies import get_strategy
from hatpuzzles.verifier import verify_exhaustive


def rows(max_n):
    for n in range(1, max_n + 1):
        yield RepeatedColors(n, 2), "parity"
        for colors in (3, 4, 5):
            yield RepeatedColors(n, colors), "modular_sum"
        yield DistinctColors(n), "distinct3"
    yield RepeatedColors(2, 2), "copy_front"
    yield RepeatedColors(3, 2), "same_different"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()
    print(f"{'strategy':<15} {'n':>3} {'N':>3} {'checked':>9} {'worst':>6} {'always right':<20} ms")
    for spec, sid in rows(args.max_n):
        rep = verify_exhaustive(spec, get_strategy(sid, spec))
        right = ",".join(map(str, sorted(rep.guaranteed_correct_positions))) or "-"
        print(f"{sid:<15} {spec.n:>3} {spec.palette_size:>3} {rep.assignments_checked:>9} "
              f"{rep.worst_case_mistakes:>6} {right:<20} {rep.elapsed_ms}")


if __name__ == "__main__":
    main()
