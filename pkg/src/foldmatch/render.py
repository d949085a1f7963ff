"""DOT and TikZ emission for (modified) snake graphs.

Output is deterministic: vertices and edges are emitted in index order and
coordinates come from the schematic embedding built alongside the graph.
"""

from __future__ import annotations

from typing import Optional

from .snake import Matching, TileGraph


def _label_str(lab) -> str:
    if isinstance(lab, int):
        return str(lab)
    return f"({lab[0]},{lab[1]})"


def edge_label(labels) -> str:
    return ",".join(_label_str(lab) for lab in labels)


def to_dot(g: TileGraph, matching: Optional[Matching] = None) -> str:
    lines = ["graph snake {", "  node [shape=point];"]
    for ti, tile in enumerate(g.tiles):
        members = sorted(set(tile.corners.values()))
        lines.append(f"  subgraph cluster_tile{ti} {{")
        lines.append(f'    label="tile {ti} (label {tile.label}, {tile.shape})";')
        for v in members:
            lines.append(f"    v{v};")
        lines.append("  }")
    for eid in g.alive_edges():
        e = g.edges[eid]
        attrs = [f'label="{edge_label(e.labels)}"']
        if e.is_arc:
            attrs.append('style="dashed"')
            attrs.append('kind="arc"')
        else:
            attrs.append(f'kind="{"boundary" if g.is_boundary_edge(eid) else "interior"}"')
        if matching is not None and eid in matching:
            attrs.append('color="red"')
            attrs.append("penwidth=2")
        lines.append(f"  v{e.u} -- v{e.v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_tikz(g: TileGraph, matching: Optional[Matching] = None) -> str:
    lines = ["\\begin{tikzpicture}[scale=1.4]"]
    for v in range(g.vcount):
        x, y = g.coords[v]
        lines.append(f"  \\coordinate (v{v}) at ({float(x):.3f},{float(y):.3f});")
    for eid in g.alive_edges():
        e = g.edges[eid]
        style = []
        if matching is not None and eid in matching:
            style.append("red, very thick")
        if e.is_arc:
            style.append("bend left=60, dashed")
            opts = f"[{', '.join(style)}]" if style else ""
            lines.append(f"  \\draw{opts} (v{e.u}) to (v{e.v});  % arc edge")
            continue
        opts = f"[{', '.join(style)}]" if style else ""
        lab = edge_label(e.labels)
        node = f" node[midway, auto, font=\\tiny] {{{lab}}}" if lab else ""
        lines.append(f"  \\draw{opts} (v{e.u}) --{node} (v{e.v});")
    for ti, tile in enumerate(g.tiles):
        xs = [g.coords[v][0] for v in tile.corners.values()]
        ys = [g.coords[v][1] for v in tile.corners.values()]
        cx = float(sum(xs)) / len(xs)
        cy = float(sum(ys)) / len(ys)
        shape = " (hexagon)" if tile.shape == "hexagon" else ""
        lines.append(f"  \\node at ({cx:.3f},{cy:.3f}) {{{tile.label}}};  % tile{shape}")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
