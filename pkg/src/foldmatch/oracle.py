"""Independent ground truth via exchange-matrix mutation.

Seeds carry an exchange matrix, its coefficient rows (initially the identity)
and the cluster variables as exact Laurent polynomials; every mutation divides
exactly or the run aborts, which doubles as a correctness guard.  Each seed
also carries a companion triangulation so cluster variables can be attached
to diagonals (type A) or half-turn orbits (types B and C).

The signed adjacency convention is b_ij = +1 when tau_j immediately precedes
tau_i counterclockwise in a shared triangle; together with the exchange rule
below this reproduces the snake-graph F-polynomials of the type-A leg, which
pins all signs before the folded runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Tuple

from . import folded as fd
from . import geometry as geo
from . import snake as sn
from .errors import ClosureBudgetExceeded, NotHomogeneous, UnsupportedTriangulationForB
from .geometry import Orbit, Pair, Triangulation
from .polynomials import LaurentPolynomial, Polynomial

Matrix = Tuple[Tuple[int, ...], ...]
GVector = Tuple[int, ...]


def signed_adjacency(t: Triangulation) -> Matrix:
    """Signed adjacency matrix of the arcs of any triangulation."""
    k = len(t.diagonals)
    b = [[0] * k for _ in range(k)]
    index = {p: i for i, p in enumerate(t.diagonals)}
    for tri in geo.triangles_of(t):
        a_, b_, c_ = tri
        sides = [geo.norm_pair(a_, b_), geo.norm_pair(b_, c_), geo.norm_pair(c_, a_)]
        for s in range(3):
            p, q = sides[s], sides[(s + 1) % 3]
            if p in index and q in index:
                b[index[q]][index[p]] += 1
                b[index[p]][index[q]] -= 1
    return tuple(tuple(row) for row in b)


def fold_exchange_matrix(t: Triangulation, kind: str) -> Matrix:
    """Orbit-folded exchange matrix of a theta-invariant triangulation.

    The type-B algebra uses the folded matrix itself and type C its negative
    transpose; the binding is the one under which the published type-B
    octagon F-polynomial appears in a type-B run (and the type-C one in a
    type-C run).
    """
    n = t.n
    full = signed_adjacency(t)
    index = {p: i for i, p in enumerate(t.diagonals)}
    orbits = t.slot_orbits()
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        rep = index[t.diagonals[i]]
        for j in range(n):
            m[i][j] = sum(full[rep][index[q]] for q in sorted(orbits[j]))
    if kind == "B":
        return tuple(tuple(row) for row in m)
    if kind == "C":
        return tuple(tuple(-m[j][i] for j in range(n)) for i in range(n))
    raise ValueError(f"unknown kind {kind!r}")


def _mutate_matrix(b: Matrix, k: int) -> Matrix:
    size = len(b)
    cols = len(b[0])
    out = [list(row) for row in b]
    for i in range(size):
        for j in range(cols):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = (b[i][j]
                             + max(b[i][k], 0) * max(b[k][j], 0)
                             - max(-b[i][k], 0) * max(-b[k][j], 0))
    return tuple(tuple(row) for row in out)


@dataclass
class Seed:
    n: int
    b: Matrix
    c: Matrix
    xs: Tuple[LaurentPolynomial, ...]
    companion: Triangulation

    @classmethod
    def initial(cls, b0: Matrix, companion: Triangulation) -> "Seed":
        n = len(b0)
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        xs = tuple(LaurentPolynomial.x_var(n, i) for i in range(n))
        return cls(n, b0, ident, xs, companion)


def _exchange_monomials(seed: Seed, k: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    n = seed.n
    pos = LaurentPolynomial.one(n)
    neg = LaurentPolynomial.one(n)
    ypos = [0] * (2 * n)
    yneg = [0] * (2 * n)
    for j in range(n):
        cjk = seed.c[j][k]
        if cjk > 0:
            ypos[n + j] += cjk
        elif cjk < 0:
            yneg[n + j] -= cjk
    pos = pos * LaurentPolynomial.monomial(n, tuple(ypos))
    neg = neg * LaurentPolynomial.monomial(n, tuple(yneg))
    for i in range(n):
        bik = seed.b[i][k]
        if bik > 0:
            pos = pos * seed.xs[i].power(bik)
        elif bik < 0:
            neg = neg * seed.xs[i].power(-bik)
    return pos, neg


def mutate_seed(seed: Seed, slot: int, flip: bool = True) -> Seed:
    """Mutate at a 1-based slot; the companion triangulation flips along."""
    k = slot - 1
    pos, neg = _exchange_monomials(seed, k)
    new_x = (pos + neg).exact_div(seed.xs[k])
    xs = list(seed.xs)
    xs[k] = new_x
    nb = _mutate_matrix(seed.b, k)
    # Coefficient rows mutate by the same rule, stacked under the square part.
    stacked = seed.b + seed.c
    full = _mutate_matrix(stacked, k)
    nc = full[seed.n:]
    companion = seed.companion
    if flip:
        if companion.orientation is not None:
            companion = geo.flip_orbit(companion, slot)
        else:
            companion = geo.flip_diagonal(companion, slot)
    return Seed(seed.n, nb, nc, tuple(xs), companion)


def f_and_g(x: LaurentPolynomial, b0: Matrix) -> tuple[Polynomial, GVector]:
    """F-polynomial and g-vector of a cluster variable under deg y_j = -col_j(b0)."""
    n = x.n
    f = x.specialize_x_to_one()
    deg: Optional[List[int]] = None
    for key in x.terms:
        d = [key[i] - sum(key[n + j] * b0[i][j] for j in range(n)) for i in range(n)]
        if deg is None:
            deg = d
        elif deg != d:
            raise NotHomogeneous(f"mixed degrees {deg} and {d}")
    assert deg is not None
    return f, tuple(deg)


# ---------------------------------------------------------------------------
# Type-A leg
# ---------------------------------------------------------------------------


def oracle_f_and_g_a(tbar: Triangulation, gamma: Pair) -> tuple[Polynomial, GVector]:
    """Oracle values for a diagonal of a plain polygon, by targeted flips."""
    gamma = geo.norm_pair(*gamma)
    n = tbar.n
    if gamma in tbar.diagonals:
        vec = [0] * n
        vec[tbar.diagonals.index(gamma)] = 1
        return Polynomial.one(n), tuple(vec)
    b0 = signed_adjacency(tbar)
    seed = Seed.initial(b0, tbar)
    while gamma not in seed.companion.diagonals:
        slot = sn.crossing_sequence(gamma, seed.companion)[0]
        seed = mutate_seed(seed, slot)
    k = seed.companion.diagonals.index(gamma)
    return f_and_g(seed.xs[k], b0)


# ---------------------------------------------------------------------------
# Folded exploration
# ---------------------------------------------------------------------------


@dataclass
class ExploreResult:
    table: Dict[Orbit, tuple[Polynomial, GVector]]
    seed_count: int


def explore(t: Triangulation, kind: str, budget: Optional[int] = None) -> ExploreResult:
    """BFS closure of the exchange graph; returns the orbit -> (F, g) table."""
    return explore_with_matrix(t, fold_exchange_matrix(t, kind), budget)


def explore_with_matrix(t: Triangulation, b0: Matrix,
                        budget: Optional[int] = None) -> ExploreResult:
    geo.validate(t)
    n = t.n
    seed0 = Seed.initial(b0, t)
    limit = budget if budget is not None else comb(2 * n, n) + 1
    table: Dict[Orbit, tuple[Polynomial, GVector]] = {}

    def record(seed: Seed) -> None:
        for slot, orbit in enumerate(seed.companion.slot_orbits(), start=1):
            val = f_and_g(seed.xs[slot - 1], b0)
            prev = table.get(orbit)
            if prev is None:
                table[orbit] = val
            else:
                assert prev == val, f"inconsistent variable for orbit {sorted(orbit)}"

    key0 = frozenset(t.diagonals)
    seen = {key0}
    record(seed0)
    frontier = [seed0]
    while frontier:
        nxt: List[Seed] = []
        for seed in frontier:
            for slot in range(1, n + 1):
                flipped = geo.flip_orbit(seed.companion, slot)
                key = frozenset(flipped.diagonals)
                if key in seen:
                    continue
                if len(seen) >= limit:
                    raise ClosureBudgetExceeded(f"more than {limit} seeds")
                seen.add(key)
                new_seed = mutate_seed(seed, slot)
                record(new_seed)
                nxt.append(new_seed)
        frontier = nxt
    expected = comb(2 * n, n)
    assert len(seen) == expected, f"seed count {len(seen)} != C(2n,n) = {expected}"
    assert len(table) == n * (n + 1), "every orbit must receive a cluster variable"
    return ExploreResult(table, len(seen))


# ---------------------------------------------------------------------------
# Theorem verification
# ---------------------------------------------------------------------------


@dataclass
class OrbitReport:
    orbit: Orbit
    status: str
    f_graph: Polynomial
    g_graph: GVector
    f_formula: Polynomial
    g_formula: Optional[GVector]
    f_oracle: Polynomial
    g_oracle: GVector

    def as_dict(self) -> dict:
        return {
            "orbit": [list(p) for p in sorted(self.orbit)],
            "status": self.status,
            "F": str(self.f_graph),
            "g": list(self.g_graph),
            "sources": {
                "graph": {"F": str(self.f_graph), "g": list(self.g_graph)},
                "formula": {"F": str(self.f_formula),
                            "g": list(self.g_formula) if self.g_formula else None},
                "oracle": {"F": str(self.f_oracle), "g": list(self.g_oracle)},
            },
        }


@dataclass
class VerifyReport:
    kind: str
    triangulation: Triangulation
    rows: List[OrbitReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "ok" for r in self.rows)

    def summary(self) -> str:
        ok = sum(1 for r in self.rows if r.status == "ok")
        return f"{ok}/{len(self.rows)} orbits OK"

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "triangulation": [list(p) for p in self.triangulation.diagonals],
            "orientation": list(self.triangulation.orientation or ()),
            "passed": self.passed,
            "orbits": [r.as_dict() for r in self.rows],
        }


def verify_theorems(t: Triangulation, kind: str,
                    table: Optional[Dict[Orbit, tuple[Polynomial, GVector]]] = None
                    ) -> VerifyReport:
    """Compare graph, formula and oracle values for every orbit of one seed."""
    if kind == "B" and not geo.hypothesis_b(t):
        raise UnsupportedTriangulationForB(str(t.diagonals))
    if table is None:
        table = explore(t, kind).table
    report = VerifyReport(kind, t)
    for orbit in sorted(geo.all_orbits(t.cfg), key=lambda o: sorted(o)):
        f_graph, g_graph = fd.graph_f_and_g(orbit, t, kind)
        if kind == "B":
            f_formula = fd.f_b_formula(orbit, t)
            g_formula: Optional[GVector] = None
        else:
            f_formula = fd.f_c_formula(orbit, t)
            g_formula = fd.g_c_formula(orbit, t)
        f_oracle, g_oracle = table[orbit]
        ok = (f_graph == f_formula == f_oracle and g_graph == g_oracle
              and (g_formula is None or g_formula == g_graph))
        report.rows.append(OrbitReport(orbit, "ok" if ok else "mismatch",
                                       f_graph, g_graph, f_formula, g_formula,
                                       f_oracle, g_oracle))
    return report
