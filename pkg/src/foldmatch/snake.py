"""Snake graphs, perfect matchings, matching polynomials and g-vectors.

A snake graph is built tile by tile along a diagonal.  Each tile is embedded
as a unit square whose removed diagonal runs NW-SE; the first tile puts the
start vertex at SW, the left endpoint of the first crossed diagonal at NW and
the right endpoint at SE, which makes the relative orientation of tile 1
equal to +1 and lets relative orientations alternate along the snake.  The
minimal matching is the boundary matching avoiding the east and west sides of
the first tile; this one binary convention was calibrated against the worked
octagon examples and is what makes the published F-polynomials and g-vectors
come out.

Height monomials are computed from the symmetric difference with the minimal
matching: its cycles are classified combinatorially (flood fill over tile
adjacency away from the cycle walls).  Matchings through the extra arc edge
of a type-B modified graph have no enclosing cycle in the plane; for those the
tiles counted are the ones sharing no edge with ``P \\cap P_-``, the reading
the paper uses to extend heights to modified graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from . import geometry as geo
from .errors import BoundarySegment, DiagonalInTriangulation, NotCrossing
from .geometry import Pair, Triangulation
from .polynomials import Polynomial

Label = Union[int, Pair]
Matching = FrozenSet[int]

# Side names in counterclockwise face order with their corner names.
_SIDE_CORNERS = {
    "S": ("SW", "SE"),
    "E": ("SE", "NE"),
    "N": ("NE", "NW"),
    "W": ("NW", "SW"),
}
_OPPOSITE = {"S": "N", "N": "S", "E": "W", "W": "E"}


@dataclass
class Edge:
    u: int
    v: int
    labels: Tuple[Label, ...]
    tiles: Tuple[int, ...]
    is_arc: bool = False


@dataclass
class TileInstance:
    label: int
    position: int
    component: int
    rel: int
    shape: str = "square"
    corners: Dict[str, int] = field(default_factory=dict)
    sides: Dict[str, List[int]] = field(default_factory=dict)

    def edge_ids(self) -> List[int]:
        out: List[int] = []
        for name in ("S", "E", "N", "W"):
            out.extend(self.sides[name])
        return out


@dataclass
class TileGraph:
    nvars: int
    vcount: int = 0
    edges: List[Edge] = field(default_factory=list)
    dead: set = field(default_factory=set)
    tiles: List[TileInstance] = field(default_factory=list)
    coords: Dict[int, Tuple[Fraction, Fraction]] = field(default_factory=dict)
    first_tile: int = 0
    source: tuple = ()

    def new_vertex(self, coord: Tuple[Fraction, Fraction]) -> int:
        vid = self.vcount
        self.vcount += 1
        self.coords[vid] = coord
        return vid

    def add_edge(self, u: int, v: int, labels: Tuple[Label, ...],
                 tile: Optional[int], is_arc: bool = False) -> int:
        for eid, e in enumerate(self.edges):
            if eid in self.dead:
                continue
            if {e.u, e.v} == {u, v}:
                if tile is not None and tile not in e.tiles:
                    e.tiles = e.tiles + (tile,)
                return eid
        eid = len(self.edges)
        self.edges.append(Edge(u, v, labels, (tile,) if tile is not None else (), is_arc))
        return eid

    def alive_edges(self) -> List[int]:
        return [i for i in range(len(self.edges)) if i not in self.dead]

    def is_boundary_edge(self, eid: int) -> bool:
        e = self.edges[eid]
        return len(e.tiles) == 1 and not e.is_arc

    def has_arc(self) -> bool:
        return any(e.is_arc for i, e in enumerate(self.edges) if i not in self.dead)

    def tile_count(self) -> int:
        return len(self.tiles)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def _label_of(p: Pair, tbar: Triangulation) -> Label:
    if p in tbar.diagonals:
        return tbar.diagonals.index(p) + 1
    return p


def _sides_of_triangle(tri: Tuple[int, int, int]) -> List[Pair]:
    a, b, c = tri
    return [geo.norm_pair(a, b), geo.norm_pair(b, c), geo.norm_pair(a, c)]


def triangle_walk(gamma: Pair, tbar: Triangulation):
    """Triangles met by gamma in order, with the crossed diagonal slots."""
    m = tbar.cfg.vertex_count
    s, t = gamma
    tris = geo.triangles_of(tbar)
    start = None
    for tri in tris:
        if s not in tri:
            continue
        opp = geo.norm_pair(*sorted(set(tri) - {s}))
        if t in tri or geo.crosses(opp, gamma, m):
            start = tri
            break
    assert start is not None
    seq: List[tuple[int, Tuple[int, int, int]]] = []
    cur = start
    prev: Optional[Pair] = None
    while t not in cur:
        nxt = None
        for side in _sides_of_triangle(cur):
            if side == prev:
                continue
            if geo.crosses(side, gamma, m):
                nxt = side
                break
        assert nxt is not None, "walk must make progress"
        slot = tbar.diagonals.index(nxt) + 1
        cur = next(tri for tri in tris if set(nxt) <= set(tri) and tri != cur)
        seq.append((slot, cur))
        prev = nxt
    return start, seq


def crossing_sequence(gamma: Pair, tbar: Triangulation) -> List[int]:
    """Slots crossed by gamma, oriented from its smaller endpoint."""
    gamma = geo.norm_pair(*gamma)
    m = tbar.cfg.vertex_count
    if gamma in tbar.diagonals:
        raise DiagonalInTriangulation(geo.format_pair(gamma))
    if geo.is_boundary(gamma, m):
        raise BoundarySegment(geo.format_pair(gamma))
    _, seq = triangle_walk(gamma, tbar)
    return [slot for slot, _ in seq]


def build_snake_graph(gamma: Pair, tbar: Triangulation, component: int = 0) -> TileGraph:
    gamma = geo.norm_pair(*gamma)
    m = tbar.cfg.vertex_count
    if gamma in tbar.diagonals:
        raise DiagonalInTriangulation(geo.format_pair(gamma))
    if geo.is_boundary(gamma, m):
        raise BoundarySegment(geo.format_pair(gamma))
    s, t = gamma
    start, seq = triangle_walk(gamma, tbar)
    right = set(geo.ccw_arc(s, t, m))
    g = TileGraph(nvars=tbar.n, source=(gamma, tbar))

    # Polygon vertices sitting at each corner of the current tile.
    poly: Dict[str, int] = {}
    ids: Dict[str, int] = {}
    anchor = (Fraction(0), Fraction(0))

    for pos, (slot, delta_next) in enumerate(seq, start=1):
        tau = tbar.tau(slot)
        lv, rv = (tau[1], tau[0]) if tau[0] in right else (tau[0], tau[1])
        apex = (set(delta_next) - set(tau)).pop()
        if pos == 1:
            poly = {"SW": s, "NW": lv, "SE": rv, "NE": apex}
            x, y = anchor
            ids = {
                "SW": g.new_vertex((x, y)),
                "SE": g.new_vertex((x + 1, y)),
                "NE": g.new_vertex((x + 1, y + 1)),
                "NW": g.new_vertex((x, y + 1)),
            }
        tile_idx = len(g.tiles)
        tile = TileInstance(label=slot, position=pos, component=component,
                            rel=1 if pos % 2 else -1)
        tile.corners = dict(ids)
        g.tiles.append(tile)
        for name, (ca, cb) in _SIDE_CORNERS.items():
            pair = geo.norm_pair(poly[ca], poly[cb])
            eid = g.add_edge(ids[ca], ids[cb], (_label_of(pair, tbar),), tile_idx)
            tile.sides[name] = [eid]
        if pos == len(seq):
            break
        # Exit through the third side of delta_next; the next crossed diagonal
        # hangs off the apex, which always sits at NE.
        next_slot, next_tri = seq[pos]
        next_tau = tbar.tau(next_slot)
        assert apex in next_tau
        pivot = (set(next_tau) - {apex}).pop()
        exit_corner = next(c for c in ("NW", "SE") if poly[c] != pivot)
        exit_side = next(nm for nm, cc in _SIDE_CORNERS.items()
                         if set(cc) == {exit_corner, "NE"})
        assert exit_side in ("N", "E")
        next_apex = (set(next_tri) - set(next_tau)).pop()
        x, y = anchor
        if exit_side == "E":
            anchor = (x + 1, y)
            poly = {"SW": poly["SE"], "NW": poly["NE"], "SE": pivot, "NE": next_apex}
            ids = {"SW": ids["SE"], "NW": ids["NE"],
                   "SE": g.new_vertex((x + 2, y)),
                   "NE": g.new_vertex((x + 2, y + 1))}
        else:
            anchor = (x, y + 1)
            poly = {"SW": poly["NW"], "SE": poly["NE"], "NW": pivot, "NE": next_apex}
            ids = {"SW": ids["NW"], "SE": ids["NE"],
                   "NW": g.new_vertex((x, y + 2)),
                   "NE": g.new_vertex((x + 1, y + 2))}
    return g


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------


def enumerate_matchings(g: TileGraph) -> List[Matching]:
    """All perfect matchings, in a deterministic backtracking order."""
    adj: Dict[int, List[int]] = {v: [] for v in range(g.vcount)}
    for eid in g.alive_edges():
        e = g.edges[eid]
        adj[e.u].append(eid)
        adj[e.v].append(eid)
    out: List[Matching] = []
    covered = [False] * g.vcount
    chosen: List[int] = []

    def rec(lo: int) -> None:
        while lo < g.vcount and covered[lo]:
            lo += 1
        if lo == g.vcount:
            out.append(frozenset(chosen))
            return
        for eid in adj[lo]:
            e = g.edges[eid]
            w = e.v if e.u == lo else e.u
            if covered[w]:
                continue
            covered[lo] = covered[w] = True
            chosen.append(eid)
            rec(lo + 1)
            chosen.pop()
            covered[lo] = covered[w] = False

    rec(0)
    return out


def brute_force_matchings(g: TileGraph) -> List[Matching]:
    """Independent oracle: filter all edge subsets of the right size."""
    import itertools

    alive = g.alive_edges()
    need = g.vcount // 2
    full = (1 << g.vcount) - 1
    masks = {eid: (1 << g.edges[eid].u) | (1 << g.edges[eid].v) for eid in alive}
    out = []
    for combo in itertools.combinations(alive, need):
        acc = 0
        ok = True
        for eid in combo:
            if acc & masks[eid]:
                ok = False
                break
            acc |= masks[eid]
        if ok and acc == full:
            out.append(frozenset(combo))
    return out


def boundary_matchings(g: TileGraph) -> List[Matching]:
    out = [p for p in enumerate_matchings(g)
           if all(g.is_boundary_edge(eid) for eid in p)]
    assert len(out) == 2, f"expected exactly two boundary matchings, got {len(out)}"
    return out


def minimal_matching(g: TileGraph) -> Matching:
    """Boundary matching avoiding the first tile's east/west sides.

    On a subdivided side the middle edge stands for "side unused" (it covers
    the two new vertices without touching the corners), so only the flanking
    edges count as using that side.
    """
    first = g.tiles[g.first_tile]
    avoid = set()
    for name in ("E", "W"):
        eids = first.sides[name]
        avoid.update(eids if len(eids) == 1 else (eids[0], eids[2]))
    sel = [p for p in boundary_matchings(g) if not (p & avoid)]
    assert len(sel) == 1, "minimal matching selection must be unambiguous"
    return sel[0]


def maximal_matching(g: TileGraph) -> Matching:
    pm = minimal_matching(g)
    return next(p for p in boundary_matchings(g) if p != pm)


# ---------------------------------------------------------------------------
# Heights
# ---------------------------------------------------------------------------


def _cycles(g: TileGraph, edge_ids: FrozenSet[int]) -> List[List[int]]:
    deg: Dict[int, List[int]] = {}
    for eid in edge_ids:
        e = g.edges[eid]
        deg.setdefault(e.u, []).append(eid)
        deg.setdefault(e.v, []).append(eid)
    assert all(len(v) == 2 for v in deg.values()), "symmetric difference must be 2-regular"
    seen: set = set()
    cycles = []
    for eid in sorted(edge_ids):
        if eid in seen:
            continue
        cyc = [eid]
        seen.add(eid)
        e = g.edges[eid]
        start, cur = e.u, e.v
        while cur != start:
            nxt = next(i for i in deg[cur] if i not in seen)
            cyc.append(nxt)
            seen.add(nxt)
            e2 = g.edges[nxt]
            cur = e2.v if e2.u == cur else e2.u
        cycles.append(cyc)
    return cycles


def _tiles_inside(g: TileGraph, cycle: Sequence[int], p_minus: Matching) -> set:
    """Tiles enclosed by one cycle: flood from the tiles flanking the cycle's
    boundary edges that belong to the minimal matching, never crossing the
    cycle."""
    walls = set(cycle)
    seeds = set()
    for eid in cycle:
        if eid in p_minus and g.is_boundary_edge(eid):
            seeds.add(g.edges[eid].tiles[0])
    assert seeds, "a height cycle must carry minimal-matching boundary edges"
    inside = set(seeds)
    frontier = list(seeds)
    while frontier:
        ti = frontier.pop()
        for eid in g.tiles[ti].edge_ids():
            if eid in walls:
                continue
            for tj in g.edges[eid].tiles:
                if tj != ti and tj not in inside:
                    inside.add(tj)
                    frontier.append(tj)
    return inside


def height_exponents(g: TileGraph, p: Matching, p_minus: Matching) -> Tuple[int, ...]:
    diff = p ^ p_minus
    enclosed: set = set()
    arc_in_diff = any(g.edges[eid].is_arc for eid in diff)
    if diff:
        for cyc in _cycles(g, frozenset(diff)):
            if any(g.edges[eid].is_arc for eid in cyc):
                continue
            enclosed |= _tiles_inside(g, cyc, p_minus)
    if arc_in_diff:
        # The cycle through the arc has no planar inside.  A matching using
        # the arc always trades the joint for the first component's diameter
        # tile together with the second component's hexagon, and additionally
        # encloses every tile whose whole exterior boundary lies on the cycle.
        arc_cycle = next(cyc for cyc in _cycles(g, frozenset(diff))
                         if any(g.edges[eid].is_arc for eid in cyc))
        walls = set(arc_cycle)
        enclosed.add(next(ti for ti, t in enumerate(g.tiles)
                          if t.component == 0 and t.label == g.nvars))
        enclosed.add(next(ti for ti, t in enumerate(g.tiles)
                          if t.component == 1 and t.shape == "hexagon"))
        for ti, tile in enumerate(g.tiles):
            ext = [eid for eid in tile.edge_ids() if g.is_boundary_edge(eid)]
            if ext and all(eid in walls for eid in ext):
                enclosed.add(ti)
    exps = [0] * g.nvars
    for ti in enclosed:
        exps[g.tiles[ti].label - 1] += 1
    return tuple(exps)


def height_monomial(g: TileGraph, p: Matching) -> Polynomial:
    pm = minimal_matching(g)
    return Polynomial.monomial(g.nvars, height_exponents(g, p, pm))


def f_polynomial(g: TileGraph) -> Polynomial:
    pm = minimal_matching(g)
    out = Polynomial.zero(g.nvars)
    for p in enumerate_matchings(g):
        out = out + Polynomial.monomial(g.nvars, height_exponents(g, p, pm))
    return out


def g_vector(g: TileGraph) -> Tuple[int, ...]:
    """Label incidences over the minimal matching minus the tile label multiset."""
    vec = [0] * g.nvars
    for eid in minimal_matching(g):
        for lab in g.edges[eid].labels:
            if isinstance(lab, int):
                vec[lab - 1] += 1
    for tile in g.tiles:
        vec[tile.label - 1] -= 1
    return tuple(vec)


# ---------------------------------------------------------------------------
# F-polynomial and g-vector of any chord
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def f_and_g(gamma: Pair, tbar: Triangulation) -> tuple[Polynomial, Tuple[int, ...]]:
    """F and g of a chord; trivial on boundary segments and triangulation arcs."""
    gamma = geo.norm_pair(*gamma)
    n = tbar.n
    if gamma in tbar.diagonals:
        vec = [0] * n
        vec[tbar.diagonals.index(gamma)] = 1
        return Polynomial.one(n), tuple(vec)
    if geo.is_boundary(gamma, tbar.cfg.vertex_count):
        return Polynomial.one(n), tuple([0] * n)
    g = build_snake_graph(gamma, tbar)
    return f_polynomial(g), g_vector(g)


def f_of(gamma: Pair, tbar: Triangulation) -> Polynomial:
    return f_and_g(gamma, tbar)[0]


def skein_check(gamma1: Pair, gamma2: Pair, tbar: Triangulation) -> bool:
    """Exact check of the exchange identity for a crossing pair of diagonals."""
    m = tbar.cfg.vertex_count
    gamma1 = geo.norm_pair(*gamma1)
    gamma2 = geo.norm_pair(*gamma2)
    if not geo.crosses(gamma1, gamma2, m):
        raise NotCrossing(f"{geo.format_pair(gamma1)} and {geo.format_pair(gamma2)}")
    a, b = gamma1
    arc = set(geo.ccw_arc(a, b, m))
    c = gamma2[0] if gamma2[0] in arc else gamma2[1]
    d = gamma2[1] if c == gamma2[0] else gamma2[0]
    lhs = f_of(gamma1, tbar) * f_of(gamma2, tbar)
    n = tbar.n
    term1 = Polynomial.monomial(
        n, geo.crossing_vector(geo.norm_pair(a, c), geo.norm_pair(b, d), tbar)) \
        * f_of(geo.norm_pair(a, d), tbar) * f_of(geo.norm_pair(b, c), tbar)
    term2 = Polynomial.monomial(
        n, geo.crossing_vector(geo.norm_pair(a, d), geo.norm_pair(b, c), tbar)) \
        * f_of(geo.norm_pair(a, c), tbar) * f_of(geo.norm_pair(b, d), tbar)
    return lhs == term1 + term2
