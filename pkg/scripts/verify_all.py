#!/usr/bin/env python3
"""Full certification run.

Sweeps every half-turn-invariant triangulation up to --max-rank for both
folded types, checks the type-A leg up to rank 5 and the exchange identity up
to rank 4, and prints one line per stage.  Exits nonzero on any mismatch.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from foldmatch import geometry as geo
from foldmatch import oracle as orc
from foldmatch import snake as sn
from foldmatch.errors import UnsupportedTriangulationForB


def folded_sweep(max_rank: int) -> bool:
    ok = True
    for n in range(2, max_rank + 1):
        t0 = time.perf_counter()
        ran_b = skip_b = 0
        for t in geo.theta_invariant_triangulations(n):
            rep = orc.verify_theorems(t, "C")
            if not rep.passed:
                print(f"  MISMATCH (C) at {t.diagonals}")
                ok = False
            try:
                rep = orc.verify_theorems(t, "B")
                ran_b += 1
                if not rep.passed:
                    print(f"  MISMATCH (B) at {t.diagonals}")
                    ok = False
            except UnsupportedTriangulationForB:
                skip_b += 1
        dt = time.perf_counter() - t0
        print(f"rank {n}: C on {comb(2 * n, n)} triangulations x {n * (n + 1)} orbits, "
              f"B on {ran_b} ({skip_b} skipped)  [{dt:.1f}s]")
    return ok


def type_a_leg(max_rank: int) -> bool:
    t0 = time.perf_counter()
    pairs = 0
    for n in range(1, max_rank + 1):
        for tbar in geo.plain_triangulations(n + 3):
            for gamma in geo.all_diagonals(tbar.cfg):
                if gamma in tbar.diagonals:
                    continue
                if orc.oracle_f_and_g_a(tbar, gamma) != sn.f_and_g(gamma, tbar):
                    print(f"  MISMATCH (A) at {tbar.diagonals}, {gamma}")
                    return False
                pairs += 1
    print(f"type-A leg: {pairs} (triangulation, diagonal) pairs up to rank {max_rank}"
          f"  [{time.perf_counter() - t0:.1f}s]")
    return True


def skein_sweep(max_rank: int) -> bool:
    t0 = time.perf_counter()
    checks = 0
    for n in range(1, max_rank + 1):
        m = n + 3
        for tbar in geo.plain_triangulations(m):
            for g1, g2 in itertools.combinations(geo.all_diagonals(tbar.cfg), 2):
                if geo.crosses(g1, g2, m):
                    if not sn.skein_check(g1, g2, tbar):
                        print(f"  SKEIN FAILURE at {tbar.diagonals}: {g1} x {g2}")
                        return False
                    checks += 1
    print(f"exchange identity: {checks} crossing pairs up to rank {max_rank}"
          f"  [{time.perf_counter() - t0:.1f}s]")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=4)
    args = parser.parse_args()
    ok = folded_sweep(args.max_rank)
    ok &= type_a_leg(min(args.max_rank + 1, 5))
    ok &= skein_sweep(min(args.max_rank, 4))
    print("ALL OK" if ok else "FAILURES FOUND")
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
