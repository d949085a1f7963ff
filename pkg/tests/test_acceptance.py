"""Acceptance gate: the certification criteria, all at exact equality.

Each test prints one pass line; runtime bounds follow the stated budgets
(1 s for the single-instance reproductions, 1 min for the rank-2/3 sweep and
the type-A ground truth, 10 min for rank 4).
"""

import itertools
import random
import time
from math import comb

from foldmatch import cli
from foldmatch import folded as fd
from foldmatch import geometry as geo
from foldmatch import oracle as orc
from foldmatch import snake as sn
from foldmatch.errors import UnsupportedTriangulationForB


def _ok(tag, detail=""):
    print(f"[PASS] {tag}{': ' + detail if detail else ''}")


def test_a1_fix_b_reproduction(fix_b):
    t, orbit, f_exp, g_exp = fix_b
    start = time.perf_counter()
    g = fd.build_g_ab_b(orbit, t)
    assert sn.f_polynomial(g) == f_exp
    assert sn.g_vector(g) == g_exp
    table = orc.explore(t, "B").table
    assert table[orbit] == (f_exp, g_exp)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _ok("A1", f"type-B octagon example from graph and oracle ({elapsed:.2f}s)")


def test_a2_fix_c_reproduction(fix_c):
    t, orbit, f_exp, g_exp = fix_c
    start = time.perf_counter()
    g = fd.build_g_ab_c(orbit, t)
    assert sn.f_polynomial(g) == f_exp
    assert sn.g_vector(g) == g_exp
    assert fd.f_c_formula(orbit, t) == f_exp
    assert fd.g_c_formula(orbit, t) == g_exp
    table = orc.explore(t, "C").table
    assert table[orbit] == (f_exp, g_exp)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _ok("A2", f"type-C octagon example from graph, formula and oracle ({elapsed:.2f}s)")


def _sweep(n):
    """Graph vs formula vs oracle for every orbit of every invariant
    triangulation of rank n; returns (#C-runs, #B-runs, #B-skips)."""
    c_runs = b_runs = b_skips = 0
    for t in geo.theta_invariant_triangulations(n):
        rep = orc.verify_theorems(t, "C")
        assert rep.passed, f"type C mismatch at {t.diagonals}"
        c_runs += 1
        try:
            rep = orc.verify_theorems(t, "B")
            assert rep.passed, f"type B mismatch at {t.diagonals}"
            b_runs += 1
        except UnsupportedTriangulationForB:
            b_skips += 1
    return c_runs, b_runs, b_skips


def test_a3_a4_theorem_sweep_rank_2_3():
    start = time.perf_counter()
    totals = {}
    for n in (2, 3):
        totals[n] = _sweep(n)
        assert totals[n][0] == comb(2 * n, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _ok("A3/A4 (n=2,3)",
        f"C on {totals[2][0]}+{totals[3][0]} triangulations, "
        f"B on {totals[2][1]}+{totals[3][1]} ({elapsed:.1f}s)")


def test_a3_a4_theorem_sweep_rank_4():
    start = time.perf_counter()
    c_runs, b_runs, b_skips = _sweep(4)
    elapsed = time.perf_counter() - start
    assert c_runs == 70 and b_runs + b_skips == 70
    assert elapsed < 600.0
    _ok("A3/A4 (n=4)",
        f"C on 70 triangulations x 20 orbits, B on {b_runs} ({elapsed:.1f}s)")


def test_a5_type_a_ground_truth():
    start = time.perf_counter()
    pairs = 0
    for n in range(1, 6):
        for tbar in geo.plain_triangulations(n + 3):
            for gamma in geo.all_diagonals(tbar.cfg):
                if gamma in tbar.diagonals:
                    continue
                assert orc.oracle_f_and_g_a(tbar, gamma) == sn.f_and_g(gamma, tbar)
                pairs += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _ok("A5", f"snake graph equals oracle on {pairs} (triangulation, diagonal) pairs "
        f"up to rank 5 ({elapsed:.1f}s)")


def test_a6_skein_property():
    checks = 0
    for n in range(1, 5):
        m = n + 3
        for tbar in geo.plain_triangulations(m):
            for g1, g2 in itertools.combinations(geo.all_diagonals(tbar.cfg), 2):
                if geo.crosses(g1, g2, m):
                    assert sn.skein_check(g1, g2, tbar)
                    checks += 1
    _ok("A6", f"exchange identity on {checks} crossing pairs up to rank 4")


def test_a7_census_invariants():
    for n in (2, 3, 4):
        census = sum(1 for _ in geo.theta_invariant_triangulations(n))
        assert census == comb(2 * n, n)
        assert len(geo.all_orbits(geo.full_polygon(n))) == n * (n + 1)
        t = next(geo.theta_invariant_triangulations(n))
        res = orc.explore(t, "C")
        assert res.seed_count == comb(2 * n, n)
        assert len(res.table) == n * (n + 1)
        for f, _ in res.table.values():
            assert f.constant_term() == 1
            assert len(f.max_terms()) == 1
    _ok("A7", "censuses, variable counts, exact divisions, F normalization (n=2,3,4)")


def test_a8_matching_enumeration_oracle(fix_b, fix_c):
    tb, ob, _, _ = fix_b
    assert len(sn.enumerate_matchings(fd.build_g_ab_b(ob, tb))) == 11
    tc, oc, _, _ = fix_c
    assert len(sn.enumerate_matchings(fd.build_g_ab_c(oc, tc))) == 4
    rng = random.Random(20260808)
    tris = {n: list(geo.theta_invariant_triangulations(n)) for n in (2, 3)}
    sampled = 0
    while sampled < 50:
        n = rng.choice((2, 3))
        t = rng.choice(tris[n])
        orbit = rng.choice(geo.all_orbits(t.cfg))
        if t.orbit_slot(orbit) is not None:
            continue
        kind = rng.choice(("B", "C"))
        try:
            g = fd.build_g_ab(orbit, t, kind)
        except UnsupportedTriangulationForB:
            continue
        if g.tile_count() > 8 or len(g.alive_edges()) > 16:
            continue
        fast = {frozenset(p) for p in sn.enumerate_matchings(g)}
        slow = {frozenset(p) for p in sn.brute_force_matchings(g)}
        assert fast == slow
        sampled += 1
    _ok("A8", f"backtracking equals edge-subset enumeration on {sampled} sampled graphs")


def test_a9_cli_determinism(tmp_path, capsys):
    import json
    fix_b_json = {"rank": 3, "kind": "B",
                  "triangulation": [[2, 4], [1, 4], [4, 0], [5, 0], [6, 0]],
                  "orbit": [2, 7]}
    fix_c_json = {"rank": 3, "kind": "C",
                  "triangulation": [[0, 2], [2, 4], [4, 0], [6, 0], [4, 6]],
                  "orbit": [3, 5]}
    outs = {}
    for name, payload in (("b", fix_b_json), ("c", fix_c_json)):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(payload))
        runs = []
        for _ in range(2):
            assert cli.main(["expand", str(path)]) == 0
            runs.append(capsys.readouterr().out)
        assert runs[0] == runs[1]
        outs[name] = runs[0]
    assert outs["b"].splitlines()[1] == "g = [1,0,-2]"
    assert outs["c"].splitlines()[1] == "g = [-1,0,0]"
    # render parses as DOT (balanced, well-formed statements)
    path = tmp_path / "b.json"
    assert cli.main(["render", str(path), "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("graph snake {") and dot.rstrip().endswith("}")
    assert dot.count("{") == dot.count("}")
    for line in dot.splitlines()[1:-1]:
        assert line.startswith(("  ", "    "))
    # exit codes
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert cli.main(["expand", str(bad)]) == 1
    capsys.readouterr()
    as_b = tmp_path / "as_b.json"
    as_b.write_text(json.dumps(dict(fix_c_json, kind="B")))
    assert cli.main(["expand", str(as_b)]) == 2
    capsys.readouterr()
    assert cli.main(["verify", str(path), "--corrupt-folding"]) == 3
    capsys.readouterr()
    _ok("A9", "byte-identical outputs, DOT well-formed, exit codes 0/1/2/3")
