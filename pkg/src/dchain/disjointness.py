"""The disjointness graph of a planar point set: one vertex per closed
segment spanned by the set, with edges joining pairs of disjoint segments.
Adjacency is stored as dense bit rows (Python ints), which keeps the exact
solver's candidate-set intersections cheap at desk scale.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple

from .geometry import Orientation, PointSet, is_general_position, orientation, segments_disjoint


class SegmentId(NamedTuple):
    """Unordered pair of point indices, stored with i < j."""

    i: int
    j: int

    @classmethod
    def of(cls, a: int, b: int) -> "SegmentId":
        for idx in (a, b):
            if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
                raise ValueError(f"segment endpoints must be non-negative ints, got {idx!r}")
        if a == b:
            raise ValueError(f"degenerate segment ({a}, {b})")
        return cls(a, b) if a < b else cls(b, a)


def all_segments(n_points: int) -> tuple[SegmentId, ...]:
    """All segments on n points in lexicographic (vertex-rank) order."""
    return tuple(SegmentId(i, j) for i in range(n_points) for j in range(i + 1, n_points))


def segment_rank(seg: SegmentId, n_points: int) -> int:
    """Position of seg in lexicographic order; this is its vertex id in D(P)."""
    i, j = seg
    if not 0 <= i < j < n_points:
        raise ValueError(f"segment {seg} invalid for {n_points} points")
    return i * (2 * n_points - i - 1) // 2 + (j - i - 1)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DisjointnessGraph:
    """Immutable graph over segment ranks, adjacency as symmetric bit rows."""

    n_points: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        v = comb(self.n_points, 2)
        if len(self.adj) != v:
            raise ValueError(f"expected {v} vertices for {self.n_points} points, got {len(self.adj)}")
        full = (1 << v) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} has bits outside the vertex range")
            if row >> u & 1:
                raise ValueError(f"vertex {u} has a self-loop")
            for w in _bits(row >> (u + 1) << (u + 1)):
                if not self.adj[w] >> u & 1:
                    raise ValueError(f"adjacency is not symmetric at ({u}, {w})")

    @property
    def n_vertices(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def segments(self) -> tuple[SegmentId, ...]:
        return all_segments(self.n_points)

    def adjacent(self, u: int, v: int) -> bool:
        return self.adj[u] >> v & 1 == 1

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Adjacency pairs (u, v) with u < v, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v


def build_graph(ps: PointSet) -> DisjointnessGraph:
    """Disjointness graph of ps; vertex numbering is segment rank order."""
    if ps.n < 2:
        raise ValueError("a disjointness graph needs at least two points")
    if not is_general_position(ps):
        raise ValueError("point set is not in general position")
    segs = all_segments(ps.n)
    v = len(segs)
    rows = [0] * v
    for a in range(v):
        for b in range(a + 1, v):
            if segments_disjoint(segs[a], segs[b], ps):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return DisjointnessGraph(ps.n, tuple(rows))


def convex_hull_edges(ps: PointSet) -> list[SegmentId]:
    """Hull edges in counterclockwise traversal order.

    The cycle starts at the lexicographically smallest point, so the output
    is deterministic. Requires at least three points in general position.
    """
    if ps.n < 3:
        raise ValueError("hull edges need at least three points")
    if not is_general_position(ps):
        raise ValueError("point set is not in general position")
    pts = ps.points
    order = sorted(range(ps.n), key=lambda i: (pts[i].x, pts[i].y))

    def half(seq: list[int]) -> list[int]:
        hull: list[int] = []
        for idx in seq:
            while len(hull) >= 2 and orientation(
                    pts[hull[-2]], pts[hull[-1]], pts[idx]) is not Orientation.COUNTERCLOCKWISE:
                hull.pop()
            hull.append(idx)
        return hull

    lower = half(order)
    upper = half(order[::-1])
    cycle = lower[:-1] + upper[:-1]
    return [SegmentId.of(cycle[t], cycle[(t + 1) % len(cycle)]) for t in range(len(cycle))]


def graph_to_json(g: DisjointnessGraph) -> dict:
    return {
        "n_points": g.n_points,
        "vertices": g.n_vertices,
        "edges": [[u, v] for u, v in g.edges()],
    }


def graph_from_json(data: dict, points: PointSet | None = None) -> DisjointnessGraph:
    """Rebuild a graph from its JSON form, validating structure.

    When the source points are supplied alongside, the edge set is checked
    against a fresh build from those points.
    """
    n_points = data["n_points"]
    v = comb(n_points, 2)
    if data.get("vertices") != v:
        raise ValueError(f"vertex count {data.get('vertices')!r} does not match C({n_points},2)={v}")
    rows = [0] * v
    seen: set[tuple[int, int]] = set()
    for u, w in data["edges"]:
        if not 0 <= u < w < v:
            raise ValueError(f"edge [{u}, {w}] is not an in-range pair with u < v")
        if (u, w) in seen:
            raise ValueError(f"duplicate edge [{u}, {w}]")
        seen.add((u, w))
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    g = DisjointnessGraph(n_points, tuple(rows))
    if points is not None and build_graph(points) != g:
        raise ValueError("edges do not match the disjointness graph of the supplied points")
    return g


def export_graph(g: DisjointnessGraph, fmt: str) -> bytes:
    """Serialize as DIMACS edge format or JSON; both byte-deterministic.

    DIMACS uses 1-based vertex ids in rank order: a "p edge V E" header then
    one "e u v" line per adjacency pair.
    """
    kind = fmt.strip().lower()
    if kind == "dimacs":
        lines = [f"p edge {g.n_vertices} {g.edge_count}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
        return ("\n".join(lines) + "\n").encode("ascii")
    if kind == "json":
        return (json.dumps(graph_to_json(g)) + "\n").encode("ascii")
    raise ValueError(f"unknown graph format {fmt!r}; expected 'dimacs' or 'json'")
