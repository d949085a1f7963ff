#!/usr/bin/env python3
"""Render the two octagon examples as DOT and TikZ into a target directory."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from foldmatch import folded as fd
from foldmatch import geometry as geo
from foldmatch import render as rd
from foldmatch import snake as sn

EXAMPLES = {
    "octagon_type_b": (
        "B",
        geo.theta_invariant_triangulation(
            3, [(2, 4), (1, 4), (0, 4), (5, 0), (6, 0)], (4, 0)),
        frozenset([(2, 7), (3, 6)]),
    ),
    "octagon_type_c": (
        "C",
        geo.theta_invariant_triangulation(
            3, [(0, 2), (2, 4), (0, 4), (6, 0), (4, 6)], (4, 0)),
        frozenset([(3, 5), (1, 7)]),
    ),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("out"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, (kind, tri, orbit) in EXAMPLES.items():
        g = fd.build_g_ab(orbit, tri, kind)
        pm = sn.minimal_matching(g)
        (args.out / f"{name}.dot").write_text(rd.to_dot(g))
        (args.out / f"{name}.tex").write_text(rd.to_tikz(g))
        (args.out / f"{name}_minimal_matching.dot").write_text(rd.to_dot(g, pm))
        print(f"{name}: F = {sn.f_polynomial(g)}")
        print(f"{name}: g = {list(sn.g_vector(g))}")
    print(f"wrote diagrams under {args.out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
