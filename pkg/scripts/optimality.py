"""Smallest achievable worst case on small instances, by exhaustive table search."""

import time

from hatpuzzles.core import DistinctColors, RepeatedColors
from hatpuzzles.synth import min_guaranteed_mistakes
from hatpuzzles.verifier import verify_exhaustive

INSTANCES = [
    RepeatedColors(1, 2), RepeatedColors(2, 2), RepeatedColors(3, 2), RepeatedColors(4, 2),
    RepeatedColors(2, 3), RepeatedColors(3, 3), RepeatedColors(4, 3),
    DistinctColors(1), DistinctColors(2), DistinctColors(3), DistinctColors(4), DistinctColors(5),
]

if __name__ == "__main__":
    print(f"{'instance':<32} {'min':>4} {'rows':>6} {'nodes':>9} {'replay':>7} {'s':>7}")
    for spec in INSTANCES:
        t = time.perf_counter()
        res = min_guaranteed_mistakes(spec)
        k = res.min_guaranteed_mistakes
        replay = verify_exhaustive(spec, res.witness.as_strategy(k)).worst_case_mistakes
        print(f"{str(spec):<32} {k:>4} {len(res.witness):>6} {res.nodes_explored:>9} "
              f"{replay:>7} {time.perf_counter() - t:>7.2f}")
