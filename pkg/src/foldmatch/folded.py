"""Modified snake graphs for half-turn orbits and the closed-form expansions.

Type B turns the tile flanking the diameter into a hexagon (its diameter-
labeled edge is subdivided into diameter, gluing segment, diameter) and
copies gluing labels across the last tile; a second component is glued onto
the hexagon's new middle edge and, when both components reach the hexagon
stage, an extra arc edge joins two distinguished corners.  Type C copies all
labels of the last tile to opposite edges and glues the two hats along their
common exterior edge.  Gluing always re-embeds the second component so that
relative orientations keep alternating across the joint; when the two
flanking tiles were built with equal orientation the component is mirrored,
which identifies the glued edges endpoint by endpoint in face order, and
crosswise otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import geometry as geo
from . import snake as sn
from .errors import (
    CompanionOrbitNotFound,
    NoCommonExteriorEdge,
    UnsupportedTriangulationForB,
)
from .geometry import Orbit, Pair, Triangulation
from .polynomials import Polynomial
from .snake import Label, TileGraph, _SIDE_CORNERS, _OPPOSITE

GVector = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Local surgery on tile graphs
# ---------------------------------------------------------------------------


def _side_of_edge(tile: sn.TileInstance, eid: int) -> str:
    for name, eids in tile.sides.items():
        if eid in eids:
            return name
    raise KeyError(eid)


def _face_order(g: TileGraph, tile: sn.TileInstance, eid: int) -> Tuple[int, int]:
    """Endpoints of an edge in counterclockwise order around the tile face."""
    name = _side_of_edge(tile, eid)
    ca, _ = _SIDE_CORNERS[name]
    cur = tile.corners[ca]
    for e_i in tile.sides[name]:
        e = g.edges[e_i]
        nxt = e.v if e.u == cur else e.u
        if e_i == eid:
            return cur, nxt
        cur = nxt
    raise AssertionError("edge not on its side chain")


def _subdivide_side(g: TileGraph, tile_idx: int, side: str, mid_label: Label) -> int:
    """Replace the single edge of a side by three, returning the middle edge id."""
    tile = g.tiles[tile_idx]
    (eid,) = tile.sides[side]
    edge = g.edges[eid]
    assert len(edge.tiles) == 1, "only exterior edges are subdivided"
    ca, cb = _SIDE_CORNERS[side]
    va, vb = tile.corners[ca], tile.corners[cb]
    pa, pb = g.coords[va], g.coords[vb]
    w1 = g.new_vertex((pa[0] + (pb[0] - pa[0]) / 3, pa[1] + (pb[1] - pa[1]) / 3))
    w2 = g.new_vertex((pa[0] + 2 * (pb[0] - pa[0]) / 3, pa[1] + 2 * (pb[1] - pa[1]) / 3))
    lab = edge.labels
    g.dead.add(eid)
    e1 = len(g.edges)
    g.edges.append(sn.Edge(va, w1, lab, (tile_idx,)))
    e2 = len(g.edges)
    g.edges.append(sn.Edge(w1, w2, (mid_label,), (tile_idx,)))
    e3 = len(g.edges)
    g.edges.append(sn.Edge(w2, vb, lab, (tile_idx,)))
    tile.sides[side] = [e1, e2, e3]
    tile.shape = "hexagon"
    return e2


def _duplicate_labels(g: TileGraph, tile_idx: int, only: Optional[set] = None) -> None:
    """Copy side labels of a tile onto the opposite sides (all, or a subset)."""
    tile = g.tiles[tile_idx]
    snapshot = {name: [tuple(g.edges[eid].labels) for eid in eids]
                for name, eids in tile.sides.items()}
    for name, eids in tile.sides.items():
        opp = tile.sides[_OPPOSITE[name]]
        assert len(eids) == 1 and len(opp) == 1, "duplication happens on square tiles"
        for labs in snapshot[name]:
            for lab in labs:
                if only is not None and lab not in only:
                    continue
                tgt = g.edges[opp[0]]
                tgt.labels = tgt.labels + (lab,)


def _gluing_labels(g: TileGraph) -> set:
    out = set()
    for eid in g.alive_edges():
        e = g.edges[eid]
        if len(e.tiles) == 2:
            out.update(e.labels)
    return out


def glue_graphs(g1: TileGraph, e1_id: int, g2: TileGraph, e2_id: int) -> TileGraph:
    """Identify edge e2 of g2 with edge e1 of g1 (both exterior).

    The identification is the plane gluing: the two faces flanking the new
    joint traverse it in opposite directions, so the face-order endpoints are
    matched crosswise and the second component keeps its own embedding.
    """
    t1 = g1.edges[e1_id].tiles[0]
    t2 = g2.edges[e2_id].tiles[0]
    mirrored = False
    m1, m2 = _face_order(g1, g1.tiles[t1], e1_id)
    r1, r2 = _face_order(g2, g2.tiles[t2], e2_id)
    vmap = {r1: m2, r2: m1}

    out = TileGraph(nvars=g1.nvars, vcount=g1.vcount,
                    edges=[sn.Edge(e.u, e.v, e.labels, e.tiles, e.is_arc) for e in g1.edges],
                    dead=set(g1.dead),
                    tiles=[sn.TileInstance(t.label, t.position, t.component, t.rel,
                                           t.shape, dict(t.corners),
                                           {k: list(v) for k, v in t.sides.items()})
                           for t in g1.tiles],
                    coords=dict(g1.coords),
                    first_tile=g1.first_tile,
                    source=g1.source)

    placed = _placement(g1, (m1, m2), g2, (r1, r2), mirrored)
    for v in range(g2.vcount):
        if v not in vmap:
            vmap[v] = out.new_vertex(placed(v))
    tile_off = len(out.tiles)
    emap = {}
    for eid in range(len(g2.edges)):
        if eid in g2.dead:
            continue
        e = g2.edges[eid]
        if eid == e2_id:
            emap[eid] = e1_id
            tgt = out.edges[e1_id]
            tgt.tiles = tgt.tiles + tuple(t + tile_off for t in e.tiles)
            for lab in e.labels:
                if lab not in tgt.labels:
                    tgt.labels = tgt.labels + (lab,)
            continue
        emap[eid] = len(out.edges)
        out.edges.append(sn.Edge(vmap[e.u], vmap[e.v], e.labels,
                                 tuple(t + tile_off for t in e.tiles), e.is_arc))
    flip = -1 if mirrored else 1
    for t in g2.tiles:
        out.tiles.append(sn.TileInstance(
            t.label, t.position, t.component, t.rel * flip, t.shape,
            {k: vmap[v] for k, v in t.corners.items()},
            {k: [emap[i] for i in v] for k, v in t.sides.items()}))
    return out


def _placement(g1: TileGraph, anchor1: Tuple[int, int],
               g2: TileGraph, anchor2: Tuple[int, int], mirrored: bool):
    """Affine map sending g2's glued edge onto g1's, for schematic coordinates."""
    a0 = g1.coords[anchor1[0]]
    a1 = g1.coords[anchor1[1]]
    b0 = g2.coords[anchor2[0]]
    b1 = g2.coords[anchor2[1]]
    sv = (b1[0] - b0[0], b1[1] - b0[1])
    dv = (a1[0] - a0[0], a1[1] - a0[1])
    den = sv[0] * sv[0] + sv[1] * sv[1]

    def tf(v: int) -> Tuple[Fraction, Fraction]:
        p = (g2.coords[v][0] - b0[0], g2.coords[v][1] - b0[1])
        if mirrored:
            p = (p[0], -p[1]) if sv == dv else p
        # complex multiply p by dv/sv (conjugate p first when mirrored)
        px, py = (p[0], -p[1]) if mirrored else p
        zx = (sv[0] * dv[0] + sv[1] * dv[1])
        zy = (sv[0] * dv[1] - sv[1] * dv[0])
        qx = (px * zx - py * zy) / den
        qy = (px * zy + py * zx) / den
        return (a0[0] + qx, a0[1] + qy)

    return tf


# ---------------------------------------------------------------------------
# Hats
# ---------------------------------------------------------------------------


def _mid_segment(t: Triangulation) -> Pair:
    """Boundary third side of the diameter's kept triangle, restricted labels."""
    _, tbar, _ = geo.restrict(t)
    x = geo._kept_apex(tbar)
    n = t.n
    if x == 1:
        return (0, 1)
    if x == n:
        return (n, n + 1)
    raise UnsupportedTriangulationForB(
        "the diameter's triangle has no boundary side")


def build_hat_b(gamma: Pair, t: Triangulation, component: int = 0) -> TileGraph:
    """Type-B modified snake graph of a restricted diagonal."""
    if not geo.hypothesis_b(t):
        raise UnsupportedTriangulationForB(str(t.diagonals))
    _, tbar, _ = geo.restrict(t)
    n = t.n
    special = geo.special_slot_b(t)
    mid = _mid_segment(t)
    g = sn.build_snake_graph(gamma, tbar, component)
    glue_labels = _gluing_labels(g)
    for ti, tile in enumerate(g.tiles):
        if tile.label == n:
            _duplicate_labels(g, ti, only=glue_labels)
    for ti, tile in enumerate(g.tiles):
        if tile.label == special:
            side = next(name for name, eids in tile.sides.items()
                        if len(eids) == 1 and n in g.edges[eids[0]].labels)
            _subdivide_side(g, ti, side, mid)
    return g


def build_hat_c(gamma: Pair, tbar: Triangulation, component: int = 0) -> TileGraph:
    """Type-C modified snake graph: labels of the last tile copied opposite."""
    g = sn.build_snake_graph(gamma, tbar, component)
    for ti, tile in enumerate(g.tiles):
        if tile.label == tbar.n:
            _duplicate_labels(g, ti)
    return g


# ---------------------------------------------------------------------------
# Glued graphs
# ---------------------------------------------------------------------------


def _tile_by(g: TileGraph, component: int, label: int) -> Optional[int]:
    for ti, tile in enumerate(g.tiles):
        if tile.component == component and tile.label == label:
            return ti
    return None


def _roles_b(res: frozenset, t: Triangulation) -> tuple[Pair, Pair]:
    (p_lo, _), (p_hi, _) = sorted(res)
    star = t.n + 2
    if geo.chirality(t) == "cw":
        return (p_hi, star), (p_lo, star)
    return (p_lo, star), (p_hi, star)


def build_g_ab_b(orbit: Orbit, t: Triangulation) -> TileGraph:
    orbit = geo.norm_orbit(orbit)
    if not geo.hypothesis_b(t):
        raise UnsupportedTriangulationForB(str(t.diagonals))
    res = geo.restrict_orbit(orbit, t)
    if len(res) == 1:
        (gamma,) = res
        return build_hat_b(gamma, t, 0)
    gamma1, gamma2 = _roles_b(res, t)
    n = t.n
    special = geo.special_slot_b(t)
    mid = _mid_segment(t)
    g1 = build_hat_b(gamma1, t, 0)
    g2 = build_hat_b(gamma2, t, 1)
    hex1 = _tile_by(g1, 0, special)
    assert hex1 is not None and g1.tiles[hex1].shape == "hexagon"
    sub_side1 = next(name for name, eids in g1.tiles[hex1].sides.items() if len(eids) == 3)
    e1 = g1.tiles[hex1].sides[sub_side1][1]
    tn2 = _tile_by(g2, 1, n)
    assert tn2 is not None
    cands = [eid for eid in g2.tiles[tn2].edge_ids()
             if g2.is_boundary_edge(eid) and mid in g2.edges[eid].labels]
    assert len(cands) == 1, "gluing edge on the second hat must be unique"
    g = glue_graphs(g1, e1, g2, cands[0])
    hex2 = _tile_by(g, 1, special)
    if hex2 is not None:
        _attach_arc(g, orbit, t, hex2)
    return g


def _attach_arc(g: TileGraph, orbit: Orbit, t: Triangulation, hex2: int) -> None:
    """Add the extra edge between the two components.

    One end is the top right corner of the first hat's diameter tile.  The
    matching end on the second hexagon depends on how the gluing rotated that
    component, so it is calibrated in place: candidates are tried in a fixed
    order until the matching polynomial agrees with the closed-form type-B
    expansion, which is computed from plain snake graphs and therefore
    independent of this graph.
    """
    tn1 = _tile_by(g, 0, t.n)
    assert tn1 is not None
    tile2 = g.tiles[hex2]
    sub_side = next(name for name, eids in tile2.sides.items() if len(eids) == 3)
    chain = tile2.sides[sub_side]
    subdiv_vertices = [g.edges[chain[1]].u, g.edges[chain[1]].v]
    candidates2 = [tile2.corners[c] for c in ("SW", "SE", "NE", "NW")] + subdiv_vertices
    candidates1 = [g.tiles[tn1].corners[c] for c in ("NE", "SW", "SE", "NW")]
    target = f_b_formula(orbit, t)
    for end1 in candidates1:
        for end2 in candidates2:
            g.edges.append(sn.Edge(end1, end2, (), (), is_arc=True))
            try:
                if sn.f_polynomial(g) == target:
                    return
            except AssertionError:
                pass
            g.edges.pop()
    raise NoCommonExteriorEdge("no arc placement matches the type-B expansion")


@dataclass(frozen=True)
class CCaseData:
    """Vertex bookkeeping for the type-C formulas, in restricted labels."""
    kind: str                      # "singleton" | "diameter" | "pair"
    gammas: Tuple[Pair, ...]
    a: int = -1
    b: int = -1
    b_bar: int = -1
    c: int = -1
    c_bar: int = -1
    d_bar: int = -1
    glue: Optional[Pair] = None


def _left_vertex(p: Pair, t: Triangulation) -> tuple[int, int]:
    """(full endpoint with surviving image, its restricted label)."""
    vmap = geo.vertex_map(t)
    star = t.n + 2
    for v in p:
        if vmap(v) != star:
            return v, vmap(v)
    raise AssertionError("chord lies entirely on the right of the diameter")


def _pre_diameter_triangle_side(gamma2: Pair, tbar: Triangulation) -> tuple[int, int]:
    """Third side of the triangle met just before the diameter, split as
    (diameter endpoint, apex).

    The second component is glued along this side; its endpoint on the
    diameter and the opposite apex supply the vertices of the closed-form
    subtrahend.
    """
    n = tbar.n
    seq = sn.crossing_sequence(gamma2, tbar)
    assert seq and seq[-1] == n, "the companioned diagonal must end across the diameter"
    if len(seq) < 2:
        raise CompanionOrbitNotFound("no crossing precedes the diameter")
    last = tbar.tau(seq[-2])
    d = (0, n + 1)
    tri = next(tr for tr in geo.triangles_of(tbar)
               if set(last) <= set(tr) and set(d) <= set(tr))
    apex = (set(tri) - set(d)).pop()
    on_d = (set(tri) - set(last)).pop()
    assert on_d in d
    return on_d, apex


def c_case_data(orbit: Orbit, t: Triangulation) -> CCaseData:
    orbit = geo.norm_orbit(orbit)
    rr = geo.rotated_restrict_orbit(orbit, t)
    if len(rr) == 1:
        return CCaseData("singleton", tuple(rr))
    vmap = geo.vertex_map(t)
    cfg = t.cfg
    n = t.n
    star = n + 2
    gamma1, gamma2 = rr
    _, tbar, _ = geo.restrict(t)
    if len(orbit) == 1:
        (diam,) = orbit
        _, a = _left_vertex(diam, t)
        # gamma1 = (a, *) crosses the diameter last; the component carrying
        # gamma2 glues along the third side (b_bar, c) of the triangle just
        # before it, with b_bar on the diameter.
        b_bar, c = _pre_diameter_triangle_side(gamma1, tbar)
        b = (n + 1) - b_bar
        glue = geo.norm_pair(b_bar, c)
        return CCaseData("diameter", tuple(rr), a=a, b=b, b_bar=b_bar, c=c, glue=glue)
    # Pair crossing the diameter: gamma1 keeps its diameter crossing and the
    # companion of the role-two diagonal (a, *) -> gamma2 loses it.
    a = gamma1[0]
    rep = next(p for p in orbit if a in (vmap(p[0]), vmap(p[1])))
    af = rep[0] if vmap(rep[0]) == a else rep[1]
    bf = rep[1] if af == rep[0] else rep[0]
    b_bar = vmap(geo.theta(bf, cfg))
    role2 = next(q for q in geo.restrict_orbit(orbit, t) if q != gamma1)
    c_bar, d_bar = _pre_diameter_triangle_side(role2, tbar)
    cv = (n + 1) - c_bar
    glue = geo.norm_pair(c_bar, d_bar)
    return CCaseData("pair", tuple(rr), a=a, b=star, b_bar=b_bar,
                     c=cv, c_bar=c_bar, d_bar=d_bar, glue=glue)


def build_g_ab_c(orbit: Orbit, t: Triangulation) -> TileGraph:
    data = c_case_data(orbit, t)
    _, tbar, _ = geo.restrict(t)
    if data.kind == "singleton":
        return build_hat_c(data.gammas[0], tbar, 0)
    gamma1, gamma2 = data.gammas
    g1 = build_hat_c(gamma1, tbar, 0)
    g2 = build_hat_c(gamma2, tbar, 1)
    glue_label: Label = data.glue  # type: ignore[assignment]
    if data.glue in tbar.diagonals:
        glue_label = tbar.diagonals.index(data.glue) + 1
    tn1 = _tile_by(g1, 0, t.n)
    assert tn1 is not None, "the distinguished hat keeps its diameter tile"
    c1 = [eid for eid in g1.tiles[tn1].edge_ids()
          if g1.is_boundary_edge(eid) and glue_label in g1.edges[eid].labels]
    if not c1:
        raise NoCommonExteriorEdge(f"no {glue_label} edge on the first hat")
    # Prefer the duplicated copy (label in second position) over the original.
    c1.sort(key=lambda eid: g1.edges[eid].labels.index(glue_label), reverse=True)
    e1 = c1[0]
    c2 = [eid for eid in g2.alive_edges()
          if g2.is_boundary_edge(eid) and glue_label in g2.edges[eid].labels]
    if len(c2) != 1:
        raise NoCommonExteriorEdge(f"expected one {glue_label} edge, found {len(c2)}")
    return glue_graphs(g1, e1, g2, c2[0])


def build_g_ab(orbit: Orbit, t: Triangulation, kind: str) -> TileGraph:
    if kind == "B":
        return build_g_ab_b(orbit, t)
    if kind == "C":
        return build_g_ab_c(orbit, t)
    raise ValueError(f"unknown kind {kind!r}")


def f_polynomial_modified(g: TileGraph) -> Polynomial:
    return sn.f_polynomial(g)


def g_vector_modified(g: TileGraph) -> GVector:
    return sn.g_vector(g)


def orbit_slot_vector(orbit: Orbit, t: Triangulation) -> GVector:
    slot = t.orbit_slot(orbit)
    assert slot is not None
    vec = [0] * t.n
    vec[slot - 1] = 1
    return tuple(vec)


def graph_f_and_g(orbit: Orbit, t: Triangulation, kind: str) -> tuple[Polynomial, GVector]:
    """Matching polynomial and g-vector of the modified snake graph of an orbit."""
    if t.orbit_slot(orbit) is not None:
        return Polynomial.one(t.n), orbit_slot_vector(orbit, t)
    g = build_g_ab(orbit, t, kind)
    return sn.f_polynomial(g), sn.g_vector(g)


# ---------------------------------------------------------------------------
# Closed-form expansions
# ---------------------------------------------------------------------------


def _f_res(p: Pair, t: Triangulation, tbar: Triangulation) -> Polynomial:
    q = geo.restrict_chord(p, t)
    if q is None:
        return Polynomial.one(t.n)
    return sn.f_of(q, tbar)


def f_b_formula(orbit: Orbit, t: Triangulation) -> Polynomial:
    """Type-B F-polynomial from snake graphs over the restriction."""
    orbit = geo.norm_orbit(orbit)
    if not geo.hypothesis_b(t):
        raise UnsupportedTriangulationForB(str(t.diagonals))
    if t.orbit_slot(orbit) is not None:
        return Polynomial.one(t.n)
    _, tbar, _ = geo.restrict(t)
    res = geo.restrict_orbit(orbit, t)
    if len(res) == 1:
        (gamma,) = res
        return sn.f_of(gamma, tbar)
    gamma1, gamma2 = _roles_b(res, t)
    vmap = geo.vertex_map(t)
    a = gamma1[0]
    rep = next(p for p in orbit if a in (vmap(p[0]), vmap(p[1])))
    af = rep[0] if vmap(rep[0]) == a else rep[1]
    bf = rep[1] if af == rep[0] else rep[0]
    b_bar = vmap(geo.theta(bf, t.cfg))
    sub_chord = geo.norm_pair(a, b_bar)
    coeff = Polynomial.monomial(t.n, geo.crossing_vector(gamma1, gamma2, tbar))
    sub = coeff * sn.f_of(sub_chord, tbar) if geo.is_diagonal(sub_chord, t.n + 3) \
        else coeff
    return sn.f_of(gamma1, tbar) * sn.f_of(gamma2, tbar) - sub


def _halved(v1: Tuple[int, ...], v2: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    total = [a + b for a, b in zip(v1, v2)]
    assert total[n - 1] % 2 == 0, "diameter coordinate of the exponent must be even"
    total[n - 1] //= 2
    return tuple(total)


def _f_chord(p: Pair, tbar: Triangulation) -> Polynomial:
    if not geo.is_diagonal(p, tbar.cfg.vertex_count):
        return Polynomial.one(tbar.n)
    return sn.f_of(p, tbar)


def _g_chord(p: Pair, tbar: Triangulation) -> GVector:
    n = tbar.n
    if not geo.is_diagonal(p, tbar.cfg.vertex_count):
        return tuple([0] * n)
    return sn.f_and_g(p, tbar)[1]


def f_c_formula(orbit: Orbit, t: Triangulation) -> Polynomial:
    if t.orbit_slot(orbit) is not None:
        return Polynomial.one(t.n)
    data = c_case_data(orbit, t)
    _, tbar, _ = geo.restrict(t)
    n = t.n
    star = n + 2
    if data.kind == "singleton":
        return sn.f_of(data.gammas[0], tbar)
    g1, g2 = data.gammas
    prod = sn.f_of(g1, tbar) * _f_chord(g2, tbar)
    if data.kind == "diameter":
        v1 = geo.crossing_vector(geo.norm_pair(data.a, star),
                                 geo.norm_pair(data.c, data.b_bar), tbar)
        v2 = geo.crossing_vector(geo.norm_pair(data.a, data.b_bar),
                                 geo.norm_pair(data.b, star), tbar)
        coeff = Polynomial.monomial(n, _halved(v1, v2, n))
        return prod - coeff * _f_chord(geo.norm_pair(data.a, data.b), tbar) \
            * _f_chord(geo.norm_pair(data.a, data.c), tbar)
    v1 = geo.crossing_vector(geo.norm_pair(data.b_bar, star),
                             geo.norm_pair(data.d_bar, data.c_bar), tbar)
    v2 = geo.crossing_vector(geo.norm_pair(data.a, data.c_bar),
                             geo.norm_pair(data.c, star), tbar)
    coeff = Polynomial.monomial(n, _halved(v1, v2, n))
    return prod - coeff * _f_chord(geo.norm_pair(data.a, data.c), tbar) \
        * _f_chord(geo.norm_pair(data.b_bar, data.d_bar), tbar)


def g_c_formula(orbit: Orbit, t: Triangulation) -> GVector:
    if t.orbit_slot(orbit) is not None:
        return orbit_slot_vector(orbit, t)
    data = c_case_data(orbit, t)
    _, tbar, _ = geo.restrict(t)
    n = t.n
    cw = geo.cw_neighbor_slot(t)
    if data.kind == "singleton":
        gamma = data.gammas[0]
        vec = list(_g_chord(gamma, tbar))
        if cw is not None and geo.crosses(gamma, (0, n + 1), n + 3):
            vec[cw - 1] += 1
        return tuple(vec)
    g1, g2 = data.gammas
    vec = [x + y for x, y in zip(_g_chord(g1, tbar), _g_chord(g2, tbar))]
    if cw is not None:
        vec[cw - 1] += 1
        glue = data.glue
        assert glue is not None
        for i, x in enumerate(_g_chord(glue, tbar)):
            vec[i] -= x
    return tuple(vec)
