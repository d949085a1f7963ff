"""Polygon and triangulation combinatorics.

Vertices of an m-gon are the residues 0..m-1 in counterclockwise order.  A
chord is a normalized pair ``(a, b)`` with ``a < b``; boundary segments and
diagonals share this shape and are told apart by adjacency.

Conventions fixed here and relied on everywhere else:

* the half-turn sends v to v + n + 1 (mod 2n + 2);
* a diameter oriented tail -> head has its "right side" equal to the n
  vertices strictly after the tail in counterclockwise order;
* restricted polygons are relabeled so head = 0, tail = n + 1, and the
  collapsed vertex * = n + 2;
* elementary laminations live on a doubled circle: vertex v sits at position
  2v and its clockwise shift v' at 2v - 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, FrozenSet, Iterator, Optional, Sequence, Tuple

from .errors import (
    CrossingDiagonals,
    DiameterNotAtIndexN,
    InvalidOperation,
    NoCommonTriangle,
    NotMaximal,
    NotThetaInvariant,
    OddDiameterCoordinate,
    OrbitInTriangulation,
)

Pair = Tuple[int, int]
Orbit = FrozenSet[Pair]


@dataclass(frozen=True)
class PolygonConfig:
    n: int
    kind: str  # "full" | "restricted"

    def __post_init__(self):
        if self.kind not in ("full", "restricted"):
            raise ValueError(f"unknown polygon kind {self.kind!r}")
        if self.vertex_count < 4:
            raise ValueError("polygon needs at least 4 vertices")

    @property
    def vertex_count(self) -> int:
        return 2 * self.n + 2 if self.kind == "full" else self.n + 3

    @property
    def star(self) -> int:
        if self.kind != "restricted":
            raise InvalidOperation("star vertex exists only in restricted polygons")
        return self.n + 2


def full_polygon(n: int) -> PolygonConfig:
    return PolygonConfig(n, "full")


def restricted_polygon(n: int) -> PolygonConfig:
    return PolygonConfig(n, "restricted")


def theta(v: int, cfg: PolygonConfig) -> int:
    if cfg.kind != "full":
        raise InvalidOperation("theta acts on the full polygon only")
    return (v + cfg.n + 1) % cfg.vertex_count


def norm_pair(a: int, b: int) -> Pair:
    return (a, b) if a <= b else (b, a)


def theta_pair(p: Pair, cfg: PolygonConfig) -> Pair:
    return norm_pair(theta(p[0], cfg), theta(p[1], cfg))


def is_boundary(p: Pair, m: int) -> bool:
    gap = (p[1] - p[0]) % m
    return gap == 1 or gap == m - 1


def is_diagonal(p: Pair, m: int) -> bool:
    return p[0] != p[1] and not is_boundary(p, m)


def is_diameter(p: Pair, cfg: PolygonConfig) -> bool:
    return cfg.kind == "full" and theta(p[0], cfg) == p[1]


def ccw_arc(a: int, b: int, m: int) -> list[int]:
    """Vertices strictly between a and b walking counterclockwise from a."""
    out = []
    v = (a + 1) % m
    while v != b:
        out.append(v)
        v = (v + 1) % m
    return out


def crosses(d1: Pair, d2: Pair, m: int) -> bool:
    """Strict interior crossing; shared endpoints never cross."""
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False
    side = set(ccw_arc(a, b, m))
    return (c in side) != (d in side)


def format_pair(p: Pair) -> str:
    return f"({p[0]},{p[1]})"


def all_diagonals(cfg: PolygonConfig) -> list[Pair]:
    m = cfg.vertex_count
    return [p for p in itertools.combinations(range(m), 2) if is_diagonal(p, m)]


def norm_orbit(o) -> Orbit:
    return frozenset(norm_pair(*p) for p in o)


def orbit_of(p: Pair, cfg: PolygonConfig) -> Orbit:
    p = norm_pair(*p)
    if is_diameter(p, cfg):
        return frozenset([p])
    return frozenset([p, theta_pair(p, cfg)])


def all_orbits(cfg: PolygonConfig) -> list[Orbit]:
    seen = set()
    out = []
    for p in all_diagonals(cfg):
        o = orbit_of(p, cfg)
        if o not in seen:
            seen.add(o)
            out.append(o)
    return out


@dataclass(frozen=True)
class Triangulation:
    """Indexed triangulation; ``diagonals[i]`` is tau_{i+1}.

    Theta-invariant instances carry the oriented diameter as
    ``orientation = (tail, head)`` and are indexed so that slots 1..n-1 hold
    the representatives surviving restriction, slot n the diameter, and slot
    2n-i the half-turn image of slot i.
    """

    cfg: PolygonConfig
    diagonals: Tuple[Pair, ...]
    orientation: Optional[Pair] = None

    @property
    def n(self) -> int:
        return self.cfg.n

    def tau(self, i: int) -> Pair:
        return self.diagonals[i - 1]

    def __contains__(self, p: Pair) -> bool:
        return p in self.diagonals

    def slot_orbits(self) -> list[Orbit]:
        if self.orientation is None:
            raise InvalidOperation("slot orbits need a theta-invariant triangulation")
        n = self.n
        return [orbit_of(self.diagonals[i], self.cfg) for i in range(n)]

    def orbit_slot(self, orbit: Orbit) -> Optional[int]:
        orbit = norm_orbit(orbit)
        for i, o in enumerate(self.slot_orbits(), start=1):
            if o == orbit:
                return i
        return None


def _check_noncrossing_distinct(diagonals: Sequence[Pair], m: int) -> None:
    for p in diagonals:
        if not is_diagonal(p, m):
            raise NotMaximal(f"{format_pair(p)} is not a diagonal of the {m}-gon")
    if len(set(diagonals)) != len(diagonals):
        raise NotMaximal("repeated diagonal")
    for p, q in itertools.combinations(diagonals, 2):
        if crosses(p, q, m):
            raise CrossingDiagonals(f"{format_pair(p)} crosses {format_pair(q)}")


def plain_triangulation(cfg: PolygonConfig, diagonals: Sequence[Pair]) -> Triangulation:
    diagonals = tuple(norm_pair(*p) for p in diagonals)
    t = Triangulation(cfg, diagonals)
    validate(t)
    return t


def _survives_restriction(p: Pair, tail: int, head: int, m: int) -> bool:
    right = set(ccw_arc(tail, head, m))
    a, b = p
    if a in right and b in right:
        return False
    # One endpoint collapsing onto * next to head or tail gives a boundary arc.
    if a in right or b in right:
        kept = b if a in right else a
        if kept == head or kept == tail:
            return False
    return True


def theta_invariant_triangulation(n: int, diagonals: Sequence[Pair],
                                  orientation: Pair) -> Triangulation:
    """Validate and canonically re-index a theta-invariant triangulation.

    The input slot of each orbit among tau_1..tau_n is kept; within an orbit
    the representative surviving restriction is moved to the low slot.
    """
    cfg = full_polygon(n)
    m = cfg.vertex_count
    diagonals = tuple(norm_pair(*p) for p in diagonals)
    if len(diagonals) != 2 * n - 1:
        raise NotMaximal(f"expected {2 * n - 1} diagonals, got {len(diagonals)}")
    _check_noncrossing_distinct(diagonals, m)
    dset = set(diagonals)
    for p in diagonals:
        if theta_pair(p, cfg) not in dset:
            raise NotThetaInvariant(f"half-turn image of {format_pair(p)} missing")
    tail, head = orientation
    if norm_pair(tail, head) != diagonals[n - 1] or not is_diameter(diagonals[n - 1], cfg):
        raise DiameterNotAtIndexN("slot n must hold the oriented diameter")
    for p in diagonals[:n - 1]:
        if is_diameter(p, cfg):
            raise DiameterNotAtIndexN(f"{format_pair(p)} is a second diameter")
    slots = []
    for p in diagonals[:n - 1]:
        q = theta_pair(p, cfg)
        keep = p if _survives_restriction(p, tail, head, m) else q
        if not _survives_restriction(keep, tail, head, m):
            raise NotThetaInvariant(f"orbit of {format_pair(p)} has no surviving side")
        slots.append(keep)
    ordered = tuple(slots) + (diagonals[n - 1],) + tuple(
        theta_pair(p, cfg) for p in reversed(slots))
    t = Triangulation(cfg, ordered, (tail, head))
    validate(t)
    return t


@lru_cache(maxsize=None)
def _triangles(m: int, dset: FrozenSet[Pair]) -> Tuple[Tuple[int, int, int], ...]:
    def present(a: int, b: int) -> bool:
        p = norm_pair(a, b)
        return is_boundary(p, m) or p in dset
    out = []
    for a, b, c in itertools.combinations(range(m), 3):
        if present(a, b) and present(b, c) and present(a, c):
            out.append((a, b, c))
    return tuple(out)


def validate(t: Triangulation) -> list[Tuple[int, int, int]]:
    """Return the triangle decomposition (ccw vertex triples); raise on bad input."""
    m = t.cfg.vertex_count
    _check_noncrossing_distinct(t.diagonals, m)
    if len(t.diagonals) != m - 3:
        raise NotMaximal(f"expected {m - 3} diagonals, got {len(t.diagonals)}")
    if t.orientation is not None:
        cfg = t.cfg
        n = t.n
        dset = set(t.diagonals)
        for i in range(n - 1):
            if theta_pair(t.diagonals[i], cfg) != t.diagonals[2 * n - 2 - i]:
                raise NotThetaInvariant(
                    f"slot {2 * n - 1 - i} is not the half-turn image of slot {i + 1}")
        if theta_pair(t.diagonals[n - 1], cfg) != t.diagonals[n - 1]:
            raise DiameterNotAtIndexN("slot n must hold the diameter")
        tail, head = t.orientation
        if norm_pair(tail, head) != t.diagonals[n - 1]:
            raise DiameterNotAtIndexN("orientation does not match slot n")
        if any(p != t.diagonals[n - 1] and is_diameter(p, cfg) for p in dset):
            raise NotThetaInvariant("more than one diameter")
    tris = _triangles(m, frozenset(t.diagonals))
    assert len(tris) == m - 2
    return list(tris)


def triangles_of(t: Triangulation) -> Tuple[Tuple[int, int, int], ...]:
    return _triangles(t.cfg.vertex_count, frozenset(t.diagonals))


# ---------------------------------------------------------------------------
# Restriction
# ---------------------------------------------------------------------------


def vertex_map(t: Triangulation) -> Callable[[int], int]:
    """Full-polygon vertex -> restricted vertex (head = 0, * = n + 2)."""
    if t.orientation is None:
        raise InvalidOperation("restriction needs an oriented diameter")
    m = t.cfg.vertex_count
    tail, head = t.orientation
    right = set(ccw_arc(tail, head, m))
    star = t.n + 2

    def vmap(v: int) -> int:
        return star if v in right else (v - head) % m

    return vmap


def restrict_chord(p: Pair, t: Triangulation) -> Optional[Pair]:
    """Image of a chord in the restricted polygon, or None when degenerate."""
    vmap = vertex_map(t)
    a, b = vmap(p[0]), vmap(p[1])
    if a == b:
        return None
    q = norm_pair(a, b)
    if is_boundary(q, t.n + 3):
        return None
    return q


def restrict(t: Triangulation) -> tuple[PolygonConfig, Triangulation, Callable[[int], int]]:
    validate(t)
    n = t.n
    cfg_r = restricted_polygon(n)
    images = []
    for i in range(n):
        q = restrict_chord(t.diagonals[i], t)
        if q is None:
            raise NotThetaInvariant(f"slot {i + 1} collapses under restriction")
        images.append(q)
    tbar = Triangulation(cfg_r, tuple(images))
    validate(tbar)
    return cfg_r, tbar, vertex_map(t)


def restrict_orbit(orbit: Orbit, t: Triangulation) -> FrozenSet[Pair]:
    orbit = norm_orbit(orbit)
    if all(p in t.diagonals for p in orbit):
        raise OrbitInTriangulation(f"orbit {sorted(orbit)} lies in the triangulation")
    images = {restrict_chord(p, t) for p in orbit}
    images.discard(None)
    assert 1 <= len(images) <= 2
    return frozenset(images)  # type: ignore[arg-type]


def orbit_crosses_diameter(orbit: Orbit, t: Triangulation) -> bool:
    orbit = norm_orbit(orbit)
    d = t.diagonals[t.n - 1]
    m = t.cfg.vertex_count
    return any(crosses(p, d, m) for p in orbit)


def restricted_crossing_set(p: Pair, tbar: Triangulation) -> FrozenSet[int]:
    m = tbar.cfg.vertex_count
    return frozenset(i + 1 for i, q in enumerate(tbar.diagonals) if crosses(p, q, m))


def companion_without_diameter(crossing: FrozenSet[int], tbar: Triangulation) -> Optional[Pair]:
    """The unique restricted diagonal with the given crossing set, if any.

    Only diagonals outside the triangulation qualify; an empty target set has
    no companion.
    """
    target = frozenset(crossing)
    if not target:
        return None
    for q in all_diagonals(tbar.cfg):
        if q in tbar.diagonals:
            continue
        if restricted_crossing_set(q, tbar) == target:
            return q
    return None


def chirality(t: Triangulation) -> str:
    """Orientation of the diagonal flanking the diameter on the kept side.

    In the kept-side triangle (0, x, n+1) of the restricted polygon, "cw"
    means the side (x, n+1) preceding the diameter counterclockwise is a
    diagonal of the triangulation; "ccw" means only the following side (0, x)
    is.  Calibrated so the worked octagon examples reproduce.
    """
    _, tbar, _ = restrict(t)
    x = _kept_apex(tbar)
    n = t.n
    if norm_pair(x, n + 1) in tbar.diagonals:
        return "cw"
    if norm_pair(0, x) in tbar.diagonals:
        return "ccw"
    raise NoCommonTriangle("no diagonal shares a triangle with the diameter")


def _kept_apex(tbar: Triangulation) -> int:
    n = tbar.n
    d = (0, n + 1)
    for a, b, c in triangles_of(tbar):
        tri = {a, b, c}
        if set(d) <= tri and tbar.cfg.star not in tri:
            return (tri - set(d)).pop()
    raise NoCommonTriangle("diameter has no kept-side triangle")


def cw_neighbor_slot(t: Triangulation) -> Optional[int]:
    """Slot of the diagonal clockwise from the diameter, when it exists."""
    _, tbar, _ = restrict(t)
    x = _kept_apex(tbar)
    p = norm_pair(x, t.n + 1)
    if p in tbar.diagonals:
        return tbar.diagonals.index(p) + 1
    return None


def hypothesis_b(t: Triangulation) -> bool:
    """True when the diameter's triangle has a boundary third side."""
    _, tbar, _ = restrict(t)
    x = _kept_apex(tbar)
    return x == 1 or x == t.n


def special_slot_b(t: Triangulation) -> int:
    """Slot playing the role of tau_{n-1} in the type-B construction."""
    _, tbar, _ = restrict(t)
    x = _kept_apex(tbar)
    n = t.n
    cand = norm_pair(x, n + 1) if norm_pair(x, n + 1) in tbar.diagonals else norm_pair(0, x)
    return tbar.diagonals.index(cand) + 1


def rotated_restrict_orbit(orbit: Orbit, t: Triangulation) -> list[Pair]:
    """Rotated restriction; the first element is the distinguished diagonal."""
    orbit = norm_orbit(orbit)
    if all(p in t.diagonals for p in orbit):
        raise OrbitInTriangulation(f"orbit {sorted(orbit)} lies in the triangulation")
    _, tbar, _ = restrict(t)
    n = t.n
    images = sorted(restrict_orbit(orbit, t))
    if len(orbit) == 1:
        gamma = images[0]
        comp = companion_without_diameter(
            restricted_crossing_set(gamma, tbar) - {n}, tbar)
        return [gamma] + ([comp] if comp is not None else [])
    if not orbit_crosses_diameter(orbit, t):
        assert len(images) == 1
        return images
    # Both images share the star; roles follow the chirality of the
    # triangulation: clockwise puts the endpoint farther from the head first.
    star = t.n + 2
    assert len(images) == 2 and all(p[1] == star for p in images)
    (p_lo, _), (p_hi, _) = images
    gamma1, gamma2 = ((p_hi, t.n + 2), (p_lo, t.n + 2)) if chirality(t) == "cw" \
        else ((p_lo, t.n + 2), (p_hi, t.n + 2))
    comp = companion_without_diameter(
        restricted_crossing_set(gamma2, tbar) - {n}, tbar)
    return [gamma1] + ([comp] if comp is not None else [])


# ---------------------------------------------------------------------------
# Laminations and crossing vectors
# ---------------------------------------------------------------------------


def lamination_of(p: Pair, m: int) -> Pair:
    """Doubled-circle endpoints of the shifted copy of a chord."""
    return ((2 * p[0] - 1) % (2 * m), (2 * p[1] - 1) % (2 * m))


def _interleave(a: Pair, b: Pair, size: int) -> bool:
    lo, hi = a
    span = set()
    v = (lo + 1) % size
    while v != hi:
        span.add(v)
        v = (v + 1) % size
    return (b[0] in span) != (b[1] in span)


def lamination_crosses(lam: Pair, chord: Pair, m: int) -> bool:
    return _interleave(lam, (2 * chord[0], 2 * chord[1]), 2 * m)


def crossing_vector(e: Pair, f: Pair, tbar: Triangulation) -> Tuple[int, ...]:
    """Coordinate i is 1 when the i-th elementary lamination crosses both chords."""
    m = tbar.cfg.vertex_count
    out = []
    for q in tbar.diagonals:
        lam = lamination_of(q, m)
        out.append(int(lamination_crosses(lam, e, m) and lamination_crosses(lam, f, m)))
    return tuple(out)


def rotated_restrict_vector(v: Sequence[int]) -> Tuple[int, ...]:
    if len(v) % 2 == 0:
        raise ValueError("expected a vector of odd length 2n-1")
    n = (len(v) + 1) // 2
    if v[n - 1] % 2:
        raise OddDiameterCoordinate(f"coordinate {n} = {v[n - 1]} is odd")
    return tuple(v[:n - 1]) + (v[n - 1] // 2,)


# ---------------------------------------------------------------------------
# Flips and censuses
# ---------------------------------------------------------------------------


def flip_diagonal(tbar: Triangulation, slot: int) -> Triangulation:
    """Flip one diagonal of a plain triangulation, keeping slot order."""
    p = tbar.tau(slot)
    quad = set()
    for a, b, c in triangles_of(tbar):
        if set(p) <= {a, b, c}:
            quad |= {a, b, c}
    other = tuple(sorted(quad - set(p)))
    assert len(other) == 2
    diags = list(tbar.diagonals)
    diags[slot - 1] = other
    return plain_triangulation(tbar.cfg, diags)


def flip_orbit(t: Triangulation, k: int) -> Triangulation:
    """Replace orbit k by the unique other orbit completing the triangulation."""
    validate(t)
    cfg = t.cfg
    m = cfg.vertex_count
    removed = t.slot_orbits()[k - 1]
    rest = [p for p in t.diagonals if p not in removed]
    replacement = None
    for o in all_orbits(cfg):
        if o == removed:
            continue
        cand = sorted(o)
        if any(q in rest for q in cand):
            continue
        if len(rest) + len(cand) != 2 * t.n - 1:
            continue
        if any(crosses(a, b, m) for a in cand for b in rest):
            continue
        if len(cand) == 2 and crosses(cand[0], cand[1], m):
            continue
        replacement = o
        break
    assert replacement is not None, "flip completion must exist"
    slots = list(t.slot_orbits())
    slots[k - 1] = replacement
    if k == t.n:
        new_d = sorted(replacement)[0]
        orientation = (theta(new_d[0], cfg), new_d[0])  # head = smaller endpoint
    else:
        orientation = t.orientation
    tail, head = orientation  # type: ignore[misc]
    n = t.n
    firsts: list[Pair] = []
    for i, o in enumerate(slots, start=1):
        if i == n:
            firsts.append(sorted(o)[0])
        else:
            reps = sorted(o)
            keep = reps[0] if _survives_restriction(reps[0], tail, head, m) else reps[1]
            firsts.append(keep)
    ordered = tuple(firsts) + tuple(theta_pair(p, cfg) for p in reversed(firsts[: n - 1]))
    return theta_invariant_triangulation(n, ordered, orientation)  # type: ignore[arg-type]


def _triangulation_sets(vs: Sequence[int]) -> Iterator[FrozenSet[Pair]]:
    if len(vs) < 4:
        yield frozenset()
        return
    a, b = vs[0], vs[-1]
    for i in range(1, len(vs) - 1):
        extra = []
        if i >= 2:
            extra.append(norm_pair(a, vs[i]))
        if i <= len(vs) - 3:
            extra.append(norm_pair(vs[i], b))
        for left in _triangulation_sets(vs[: i + 1]):
            for right in _triangulation_sets(vs[i:]):
                yield left | right | frozenset(extra)


def plain_triangulations(m: int) -> Iterator[Triangulation]:
    """All triangulations of the m-gon, slots in sorted order."""
    cfg = restricted_polygon(m - 3)
    for dset in _triangulation_sets(list(range(m))):
        yield Triangulation(cfg, tuple(sorted(dset)))


def theta_invariant_triangulations(n: int) -> Iterator[Triangulation]:
    """All theta-invariant triangulations of the (2n+2)-gon, one orientation each."""
    cfg = full_polygon(n)
    m = cfg.vertex_count
    for head in range(n + 1):
        tail = head + n + 1
        kept = [(head + j) % m for j in range(n + 2)]
        for dset in _triangulation_sets(kept):
            left = sorted(dset)
            ordered = tuple(left) + (norm_pair(tail, head),) + tuple(
                theta_pair(p, cfg) for p in reversed(left))
            yield theta_invariant_triangulation(n, ordered, (tail, head))
