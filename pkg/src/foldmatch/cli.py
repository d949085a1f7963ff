"""Batch front end: parse instances, expand, verify, render.

Exit codes: 0 success, 1 parse/validation error, 2 unsupported triangulation
for type B, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Tuple

from . import folded as fd
from . import geometry as geo
from . import oracle as orc
from . import render as rd
from . import snake as sn
from .errors import FoldmatchError, ParseError, UnsupportedTriangulationForB, ValidationError
from .geometry import Triangulation
from .polynomials import Polynomial

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNSUPPORTED = 2
EXIT_MISMATCH = 3

_KNOWN_FIELDS = {"rank", "kind", "triangulation", "target", "orbit", "diagonal", "options"}


@dataclass
class Instance:
    rank: int
    kind: str
    triangulation: Triangulation
    target: Optional[Tuple[int, int]]
    options: dict


def parse_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("bad-json", f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("bad-shape", "instance must be a JSON object")
    unknown = set(data) - _KNOWN_FIELDS
    if unknown:
        raise ParseError("unknown-field", f"unknown fields: {sorted(unknown)}")
    rank = data.get("rank")
    if not isinstance(rank, int) or rank < 1:
        raise ParseError("bad-rank", "rank must be a positive integer")
    kind = data.get("kind")
    if kind not in ("A", "B", "C"):
        raise ParseError("bad-kind", "kind must be one of A, B, C")
    raw = data.get("triangulation")
    if not isinstance(raw, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)
            for p in raw):
        raise ParseError("bad-triangulation", "triangulation must be a list of vertex pairs")
    m = 2 * rank + 2 if kind in ("B", "C") else rank + 3
    for a, b in raw:
        if a == b or not (0 <= a < m and 0 <= b < m):
            raise ValidationError("degenerate-diagonal",
                                  f"({a},{b}) is not a chord of the {m}-gon")
        if geo.is_boundary(geo.norm_pair(a, b), m):
            raise ValidationError("boundary-segment",
                                  f"({a},{b}) is a boundary segment of the {m}-gon")
    try:
        if kind in ("B", "C"):
            if len(raw) != 2 * rank - 1:
                raise ValidationError("bad-count",
                                      f"expected {2 * rank - 1} diagonals, got {len(raw)}")
            tail, head = raw[rank - 1]
            tri = geo.theta_invariant_triangulation(
                rank, [geo.norm_pair(*p) for p in raw], (tail, head))
        else:
            tri = geo.plain_triangulation(geo.restricted_polygon(rank),
                                          [geo.norm_pair(*p) for p in raw])
    except FoldmatchError as exc:
        raise ValidationError(type(exc).__name__, str(exc)) from exc
    target = None
    present = [k for k in ("target", "orbit", "diagonal") if k in data]
    if len(present) > 1:
        raise ParseError("duplicate-target", "give at most one of target/orbit/diagonal")
    if present:
        p = data[present[0]]
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)):
            raise ParseError("bad-target", "target must be a vertex pair")
        q = geo.norm_pair(*p)
        if not geo.is_diagonal(q, tri.cfg.vertex_count):
            raise ValidationError("bad-target", f"{geo.format_pair(q)} is not a diagonal")
        target = q
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise ParseError("bad-options", "options must be an object")
    return Instance(rank, kind, tri, target, options)


def _load(path: str) -> Instance:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return parse_instance(text)


def _expand(inst: Instance) -> tuple[Polynomial, Tuple[int, ...]]:
    if inst.target is None:
        raise ValidationError("missing-target", "expand needs a target diagonal or orbit")
    if inst.kind == "A":
        return sn.f_and_g(inst.target, inst.triangulation)
    orbit = geo.orbit_of(inst.target, inst.triangulation.cfg)
    return fd.graph_f_and_g(orbit, inst.triangulation, inst.kind)


def cmd_expand(args) -> int:
    inst = _load(args.instance)
    f, g = _expand(inst)
    print(f"F = {f}")
    print(f"g = [{','.join(str(x) for x in g)}]")
    return EXIT_OK


def _build_graph(inst: Instance) -> sn.TileGraph:
    if inst.target is None:
        raise ValidationError("missing-target", "rendering needs a target diagonal or orbit")
    if inst.kind == "A":
        return sn.build_snake_graph(inst.target, inst.triangulation)
    orbit = geo.orbit_of(inst.target, inst.triangulation.cfg)
    if inst.triangulation.orbit_slot(orbit) is not None:
        raise ValidationError("orbit-in-triangulation",
                              "the orbit lies in the triangulation; nothing to draw")
    return fd.build_g_ab(orbit, inst.triangulation, inst.kind)


def ordered_matchings(g: sn.TileGraph) -> list[sn.Matching]:
    pm = sn.minimal_matching(g)
    def key(p):
        h = sn.height_exponents(g, p, pm)
        return (sum(h), h, tuple(sorted(p)))
    return sorted(sn.enumerate_matchings(g), key=key)


def cmd_render(args) -> int:
    inst = _load(args.instance)
    g = _build_graph(inst)
    overlay = None
    if args.matching is not None:
        ms = ordered_matchings(g)
        if not 0 <= args.matching < len(ms):
            raise ValidationError("bad-matching-index",
                                  f"matching index out of range 0..{len(ms) - 1}")
        overlay = ms[args.matching]
    out = rd.to_dot(g, overlay) if args.format == "dot" else rd.to_tikz(g, overlay)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_matchings(args) -> int:
    inst = _load(args.instance)
    g = _build_graph(inst)
    pm = sn.minimal_matching(g)
    for i, p in enumerate(ordered_matchings(g)):
        mono = Polynomial.monomial(g.nvars, sn.height_exponents(g, p, pm))
        edges = " ".join(f"{g.edges[e].u}-{g.edges[e].v}" for e in sorted(p))
        print(f"{i}: y(P) = {mono} | {edges}")
    return EXIT_OK


def _verify_one(tri: Triangulation, kind: str, corrupt: bool) -> orc.VerifyReport:
    table = None
    if corrupt:
        b0 = orc.fold_exchange_matrix(tri, "C" if kind == "B" else "B")
        table = orc.explore_with_matrix(tri, b0).table
    return orc.verify_theorems(tri, kind, table=table)


def _sweep_args(n: int, kind: str, corrupt: bool):
    return [(t, kind, corrupt) for t in geo.theta_invariant_triangulations(n)]


def _sweep_worker(arg):
    tri, kind, corrupt = arg
    try:
        rep = _verify_one(tri, kind, corrupt)
        return (tuple(tri.diagonals), rep.passed, rep.summary())
    except UnsupportedTriangulationForB:
        return (tuple(tri.diagonals), None, "skipped (type-B hypothesis fails)")


def cmd_verify(args) -> int:
    corrupt = bool(args.corrupt_folding)
    if args.max_rank is not None:
        kind = args.kind or "C"
        all_ok = True
        for n in range(2, args.max_rank + 1):
            if kind == "A":
                ok = _verify_type_a(n)
                total = "all diagonals"
                print(f"rank {n}: type-A leg {'OK' if ok else 'MISMATCH'} ({total})")
                all_ok &= ok
                continue
            jobs = _sweep_args(n, kind, corrupt)
            threads = int(os.environ.get("FOLDMATCH_THREADS", "1"))
            if threads > 1:
                from concurrent.futures import ProcessPoolExecutor
                with ProcessPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(_sweep_worker, jobs))
            else:
                results = [_sweep_worker(j) for j in jobs]
            ran = [r for r in results if r[1] is not None]
            ok = all(r[1] for r in ran)
            all_ok &= ok
            orbits = n * (n + 1)
            skipped = len(results) - len(ran)
            note = f", {skipped} skipped" if skipped else ""
            print(f"rank {n}: {'all' if ok else 'NOT all'} {len(ran)} triangulations"
                  f" x {orbits} orbits OK (kind {kind}{note})")
        return EXIT_OK if all_ok else EXIT_MISMATCH
    inst = _load(args.instance)
    kind = args.kind or inst.kind
    if kind == "A":
        ok = _verify_type_a_single(inst.triangulation)
        print("type-A leg OK" if ok else "type-A leg MISMATCH")
        return EXIT_OK if ok else EXIT_MISMATCH
    rep = _verify_one(inst.triangulation, kind, corrupt)
    if args.json:
        print(json.dumps(rep.as_dict(), indent=2, sort_keys=True))
    else:
        print(rep.summary())
        for row in rep.rows:
            if row.status != "ok":
                print(f"  mismatch at orbit {sorted(row.orbit)}:")
                print(f"    graph   F = {row.f_graph}, g = {list(row.g_graph)}")
                print(f"    formula F = {row.f_formula}")
                print(f"    oracle  F = {row.f_oracle}, g = {list(row.g_oracle)}")
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def _verify_type_a_single(tbar: Triangulation) -> bool:
    for gamma in geo.all_diagonals(tbar.cfg):
        if gamma in tbar.diagonals:
            continue
        if orc.oracle_f_and_g_a(tbar, gamma) != sn.f_and_g(gamma, tbar):
            return False
    return True


def _verify_type_a(n: int) -> bool:
    return all(_verify_type_a_single(tbar)
               for tbar in geo.plain_triangulations(n + 3))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="foldmatch",
        description="Cluster expansions from modified snake graphs for folded polygon types.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print F-polynomial and g-vector of a target")
    p.add_argument("instance", help="instance JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="verify the expansion theorems")
    p.add_argument("instance", nargs="?", default="-",
                   help="instance JSON file ('-' for stdin); ignored with --max-rank")
    p.add_argument("--max-rank", type=int, default=None,
                   help="sweep every invariant triangulation up to this rank")
    p.add_argument("--kind", choices=("A", "B", "C"), default=None)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--corrupt-folding", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="emit the (modified) snake graph")
    p.add_argument("instance")
    p.add_argument("--format", choices=("dot", "tikz"), default="dot")
    p.add_argument("--matching", type=int, default=None,
                   help="overlay the k-th matching (0 = minimal)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("matchings", help="list perfect matchings with height monomials")
    p.add_argument("instance")
    p.set_defaults(func=cmd_matchings)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedTriangulationForB as exc:
        print(f"error[unsupported-for-B]: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except FoldmatchError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
