"""Colorings of disjointness graphs: proper-coloring verification, star and
thrackle class structure, the cup-star construction for double chains, star
apex removal, and the thrackle edge-count bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Mapping

from .disjointness import DisjointnessGraph, SegmentId, all_segments, build_graph
from .geometry import PointSet, delete_points, gen_double_chain

STAR = "star"
THRACKLE = "thrackle"


@dataclass(frozen=True)
class Coloring:
    """Total assignment of color ids 0..color_count-1 to every segment of a point set."""

    n_points: int
    assignment: Mapping[SegmentId, int]
    color_count: int

    def __post_init__(self) -> None:
        normalized: dict[SegmentId, int] = {}
        for seg, col in dict(self.assignment).items():
            sid = seg if isinstance(seg, SegmentId) else SegmentId.of(*seg)
            if sid.j >= self.n_points:
                raise ValueError(f"segment {sid} out of range for {self.n_points} points")
            if not isinstance(col, int) or isinstance(col, bool) or col < 0:
                raise ValueError(f"color ids must be non-negative ints, got {col!r}")
            if sid in normalized:
                raise ValueError(f"segment {sid} assigned twice")
            normalized[sid] = col
        object.__setattr__(self, "assignment", normalized)
        expected = comb(self.n_points, 2)
        if len(normalized) != expected:
            raise ValueError(
                f"coloring must cover all {expected} segments of {self.n_points} points, "
                f"got {len(normalized)}")
        if set(normalized.values()) != set(range(self.color_count)):
            raise ValueError(f"color ids must be exactly 0..{self.color_count - 1}")

    @classmethod
    def from_vertex_colors(cls, n_points: int, vertex_colors: Iterable[int]) -> "Coloring":
        segs = all_segments(n_points)
        colors = list(vertex_colors)
        if len(colors) != len(segs):
            raise ValueError(f"expected {len(segs)} vertex colors, got {len(colors)}")
        count = max(colors) + 1 if colors else 0
        return cls(n_points, dict(zip(segs, colors)), count)

    def vertex_colors(self) -> list[int]:
        return [self.assignment[s] for s in all_segments(self.n_points)]

    def classes(self) -> dict[int, frozenset[SegmentId]]:
        out: dict[int, set[SegmentId]] = {c: set() for c in range(self.color_count)}
        for seg, col in self.assignment.items():
            out[col].add(seg)
        return {c: frozenset(s) for c, s in out.items()}


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking a coloring against a disjointness graph."""

    proper: bool
    violations: tuple[tuple[int, int], ...]


def verify_coloring(g: DisjointnessGraph, c: Coloring) -> VerifyReport:
    """Proper iff no adjacent (disjoint-segment) pair shares a color.

    Every offending vertex-id pair is listed. Colorings over a different
    point count than the graph's are rejected outright.
    """
    if c.n_points != g.n_points:
        raise ValueError(
            f"coloring covers {c.n_points} points but the graph has {g.n_points}")
    vc = c.vertex_colors()
    bad = tuple((u, v) for u, v in g.edges() if vc[u] == vc[v])
    return VerifyReport(not bad, bad)


@dataclass(frozen=True)
class ClassKind:
    """A color class is a star (all segments through one apex) or a thrackle."""

    kind: str
    apex: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (STAR, THRACKLE):
            raise ValueError(f"kind must be {STAR!r} or {THRACKLE!r}, got {self.kind!r}")
        if (self.kind == STAR) != (self.apex is not None):
            raise ValueError("stars carry an apex, thrackles do not")


def classify_class(ps: PointSet, segments: Iterable) -> ClassKind:
    """Star if some point lies on every segment of the class, else thrackle.

    A single-segment class admits both endpoints as apex; the smaller point
    index is reported.
    """
    segs = [s if isinstance(s, SegmentId) else SegmentId.of(*s) for s in segments]
    if not segs:
        raise ValueError("cannot classify an empty class")
    for s in segs:
        if s.j >= ps.n:
            raise ValueError(f"segment {s} out of range for {ps.n} points")
    common = {segs[0].i, segs[0].j}
    for s in segs[1:]:
        common &= {s.i, s.j}
        if not common:
            return ClassKind(THRACKLE)
    return ClassKind(STAR, min(common))


def classify_coloring(ps: PointSet, c: Coloring) -> dict[int, ClassKind]:
    return {color: classify_class(ps, segs) for color, segs in sorted(c.classes().items())}


ConvexProvider = Callable[[PointSet], Coloring]


def _exact_convex_provider(cap: PointSet) -> Coloring:
    from .solver import chromatic_number_exact  # deferred: solver depends on this module

    result = chromatic_number_exact(build_graph(cap))
    if not result.is_exact:
        raise RuntimeError("exact solve of the cap configuration was cut off")
    return result.witness


def construct_double_chain_coloring(k: int, l: int,
                                    convex_provider: ConvexProvider | None = None) -> Coloring:
    """Proper coloring of the canonical (k, l) double chain's disjointness graph.

    Cap-internal segments reuse a proper coloring of the cap's own
    disjointness graph (by default an optimal one from the exact solver);
    then each cup point, left to right, gives one fresh color to all of its
    still-uncolored incident segments. Total colors = provider's count + k,
    which is k + f(l) when the provider is optimal.
    """
    if not isinstance(k, int) or not isinstance(l, int) or k < 1 or k > l or l < 3:
        raise ValueError(f"need integers 1 <= k <= l with l >= 3, got k={k!r}, l={l!r}")
    ps = gen_double_chain(k, l)
    lower = ps.partition.lower
    cap = PointSet(tuple(ps.points[i] for i in lower))
    provider = convex_provider if convex_provider is not None else _exact_convex_provider
    base = provider(cap)
    if not isinstance(base, Coloring) or base.n_points != cap.n:
        raise ValueError("provider must return a coloring of the cap configuration")
    report = verify_coloring(build_graph(cap), base)
    if not report.proper:
        raise ValueError(
            f"provider coloring is not proper on the cap; first violations {report.violations[:3]}")
    assignment: dict[SegmentId, int] = {
        SegmentId.of(lower[s.i], lower[s.j]): col for s, col in base.assignment.items()
    }
    next_color = base.color_count
    for u in sorted(ps.partition.upper, key=lambda i: (ps.points[i].x, ps.points[i].y)):
        for w in range(ps.n):
            if w == u:
                continue
            sid = SegmentId.of(u, w)
            if sid not in assignment:
                assignment[sid] = next_color
        next_color += 1  # each cup point colors at least its cap segments
    return Coloring(ps.n, assignment, next_color)


def remove_star_apices(ps: PointSet, coloring: Coloring,
                       apices: Iterable[int]) -> tuple[PointSet, Coloring]:
    """Delete one star apex per listed point and induce the coloring on the rest.

    Each apex must identify a distinct color class all of whose segments pass
    through it. Exactly those classes' colors disappear, so the induced
    coloring is proper and uses color_count - r colors; if any other class
    would vanish the call fails rather than silently returning fewer colors.
    """
    apex_list = list(apices)
    for a in apex_list:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < ps.n:
            raise ValueError(f"apex {a!r} out of range for {ps.n} points")
    if len(set(apex_list)) != len(apex_list):
        raise ValueError(f"duplicate apices in {apex_list}")
    if coloring.n_points != ps.n:
        raise ValueError("coloring does not cover this point set")
    if not verify_coloring(build_graph(ps), coloring).proper:
        raise ValueError("input coloring is not proper")
    classes = coloring.classes()
    claimed: dict[int, int] = {}
    for a in apex_list:
        for color in range(coloring.color_count):
            if color in claimed:
                continue
            if all(a in (s.i, s.j) for s in classes[color]):
                claimed[color] = a
                break
        else:
            raise ValueError(f"point {a} is not the apex of an unclaimed star class")
    new_ps, remap = delete_points(ps, apex_list)
    surviving: dict[SegmentId, int] = {}
    for seg, col in coloring.assignment.items():
        if seg.i in remap and seg.j in remap:
            surviving[SegmentId.of(remap[seg.i], remap[seg.j])] = col
    kept = sorted(set(surviving.values()))
    vanished = set(range(coloring.color_count)) - set(kept)
    if vanished != set(claimed):
        extra = sorted(vanished - set(claimed))
        raise ValueError(f"colors {extra} vanished but were not selected star classes")
    renumber = {old: new for new, old in enumerate(kept)}
    induced = Coloring(new_ps.n, {s: renumber[c] for s, c in surviving.items()}, len(kept))
    return new_ps, induced


def thrackle_edge_bound_ok(n: int, thrackle_sizes: Iterable[int]) -> bool:
    """True iff the thrackle classes fit the k*n - C(k, 2) edge budget.

    n is the point count, k the number of thrackle classes; the bound caps
    the total number of segments the k classes can hold.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")
    sizes = list(thrackle_sizes)
    for s in sizes:
        if not isinstance(s, int) or isinstance(s, bool) or s < 1:
            raise ValueError(f"class sizes must be positive ints, got {s!r}")
    k = len(sizes)
    return sum(sizes) <= k * n - comb(k, 2)


def coloring_to_json(c: Coloring) -> dict:
    """{"n_points":, "colors": [[i, j, color], ...]} sorted by segment rank."""
    return {
        "n_points": c.n_points,
        "colors": [[s.i, s.j, c.assignment[s]] for s in all_segments(c.n_points)],
    }


def coloring_from_json(data: dict) -> Coloring:
    entries = [(SegmentId.of(i, j), col) for i, j, col in data["colors"]]
    count = max((col for _, col in entries), default=-1) + 1
    return Coloring(data["n_points"], dict(entries), count)


def save_coloring(c: Coloring, path: str | Path) -> None:
    Path(path).write_text(json.dumps(coloring_to_json(c)) + "\n", encoding="utf-8")


def load_coloring(path: str | Path) -> Coloring:
    return coloring_from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def verify_report_to_json(report: VerifyReport) -> dict:
    return {"proper": report.proper, "violations": [[u, v] for u, v in report.violations]}
