"""Exact integer plane geometry: orientation and disjointness predicates,
generators for convex and double-chain point sets, and configuration
validators.

Every predicate is evaluated with arbitrary-precision integer arithmetic;
nothing in this module touches floating point, so results are exact and
overflow is impossible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence


class Orientation(Enum):
    """Turn direction of an ordered point triple (p, q, r)."""

    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


@dataclass(frozen=True, order=True)
class Point:
    """A plane point with exact integer coordinates."""

    x: int
    y: int

    def __post_init__(self) -> None:
        for c in (self.x, self.y):
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coordinates must be ints, got {c!r}")


def _as_point(obj) -> Point:
    if isinstance(obj, Point):
        return obj
    x, y = obj
    return Point(x, y)


def _cross(p: Point, q: Point, r: Point) -> int:
    # twice the signed area of the triangle (p, q, r)
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Sign of the exact triangle determinant: COLLINEAR iff it is zero."""
    d = _cross(p, q, r)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


@dataclass(frozen=True)
class Partition:
    """Index split of a point set into the upper chain (cup) and lower chain (cap)."""

    upper: tuple[int, ...]
    lower: tuple[int, ...]

    def __post_init__(self) -> None:
        up = tuple(self.upper)
        low = tuple(self.lower)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", low)
        for idx in up + low:
            if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
                raise ValueError(f"partition indices must be non-negative ints, got {idx!r}")
        if not up or not low:
            raise ValueError("both sides of a partition must be non-empty")
        if len(set(up)) != len(up) or len(set(low)) != len(low) or set(up) & set(low):
            raise ValueError("partition sides must be disjoint and free of duplicates")


@dataclass(frozen=True)
class PointSet:
    """An ordered set of distinct points, optionally split into chains U and L."""

    points: tuple[Point, ...]
    partition: Partition | None = None

    def __post_init__(self) -> None:
        pts = tuple(_as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("a point set needs at least one point")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        if self.partition is not None:
            part = self.partition
            if not isinstance(part, Partition):
                up, low = part
                part = Partition(tuple(up), tuple(low))
                object.__setattr__(self, "partition", part)
            if sorted(part.upper + part.lower) != list(range(len(pts))):
                raise ValueError("partition must cover every point index exactly once")

    @property
    def n(self) -> int:
        return len(self.points)

    def _require_partition(self) -> Partition:
        if self.partition is None:
            raise ValueError("point set has no upper/lower partition")
        return self.partition

    def upper_points(self) -> tuple[Point, ...]:
        return tuple(self.points[i] for i in self._require_partition().upper)

    def lower_points(self) -> tuple[Point, ...]:
        return tuple(self.points[i] for i in self._require_partition().lower)


def _check_segment(seg: Sequence[int], n: int) -> tuple[int, int]:
    i, j = seg
    for idx in (i, j):
        if not isinstance(idx, int) or isinstance(idx, bool):
            raise TypeError(f"segment endpoints must be ints, got {idx!r}")
        if not 0 <= idx < n:
            raise ValueError(f"point index {idx} out of range for {n} points")
    if i == j:
        raise ValueError(f"degenerate segment ({i}, {j})")
    return (i, j) if i < j else (j, i)


def _in_box(a: Point, b: Point, p: Point) -> bool:
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segments_disjoint(a: Sequence[int], b: Sequence[int], ps: PointSet) -> bool:
    """True iff the two closed segments share no point at all.

    Sharing an endpoint, properly crossing, and touching (an endpoint lying
    on the other segment) all count as intersecting. Symmetric in a and b.
    """
    n = ps.n
    i, j = _check_segment(a, n)
    k, l = _check_segment(b, n)
    if (i, j) == (k, l):
        raise ValueError(f"segments must be distinct, got ({i}, {j}) twice")
    if i in (k, l) or j in (k, l):
        return False
    pts = ps.points
    p1, p2, q1, q2 = pts[i], pts[j], pts[k], pts[l]
    d1 = _cross(q1, q2, p1)
    d2 = _cross(q1, q2, p2)
    d3 = _cross(p1, p2, q1)
    d4 = _cross(p1, p2, q2)
    if ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 \
            and ((d3 > 0) != (d4 > 0)) and d3 != 0 and d4 != 0:
        return False  # proper crossing
    # collinear touching; unreachable in general position but kept for safety
    if d1 == 0 and _in_box(q1, q2, p1):
        return False
    if d2 == 0 and _in_box(q1, q2, p2):
        return False
    if d3 == 0 and _in_box(p1, p2, q1):
        return False
    if d4 == 0 and _in_box(p1, p2, q2):
        return False
    return True


def find_collinear_triple(ps: PointSet) -> tuple[int, int, int] | None:
    """First collinear index triple (sorted) or None, by O(n^2) slope hashing."""
    pts = ps.points
    n = len(pts)
    if n < 3:
        return None
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    for a in range(n):
        ax, ay = xs[a], ys[a]
        seen: dict[tuple[int, int], int] = {}
        for b in range(n):
            if b == a:
                continue
            dx = xs[b] - ax
            dy = ys[b] - ay
            g = gcd(dx, dy)
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            other = seen.get((dx, dy))
            if other is not None:
                t = sorted((a, other, b))
                return (t[0], t[1], t[2])
            seen[(dx, dy)] = b
    return None


def is_general_position(ps: PointSet) -> bool:
    """True iff no three points are collinear (vacuously true for n <= 2)."""
    return find_collinear_triple(ps) is None


def _check_positive(value: int, name: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def gen_convex(n: int) -> PointSet:
    """n integer points in convex and general position: (i, i*i) for i < n."""
    _check_positive(n, "n")
    return PointSet(tuple(Point(i, i * i) for i in range(n)))


class DoubleChainSearchError(RuntimeError):
    """The generator's vertical-offset search exceeded its step cap."""


def gen_double_chain(k: int, l: int, *, max_offset_steps: int = 10_000) -> PointSet:
    """Canonical (k, l) double chain: a k-point cup strictly above an l-point cap.

    The cap sits on y = -x^2 at even x values roughly centered at 0, the cup
    on y = x^2 + m at odd x values. m starts at a chord-height bound and is
    incremented until the validator accepts, so within-chain collinearity is
    impossible by construction and cross-chain degeneracies are searched away.
    Deterministic for fixed (k, l); point order is cup left-to-right, then cap
    left-to-right.
    """
    _check_positive(k, "k")
    _check_positive(l, "l")
    if k > l:
        raise ValueError(f"cup may not outnumber cap: k={k} > l={l}")
    xs_up = [2 * (j - k // 2) + 1 for j in range(k)]
    xs_low = [2 * (i - l // 2) for i in range(l)]
    a = max(abs(x) for x in xs_up)
    b = max(abs(x) for x in xs_low)
    # strict chord-height bound: covers both "cap below every cup chord" and
    # "cup above every cap chord", so the first offset already validates
    base = max(a * a, b * b) + 2 * a * b + 1
    partition = Partition(tuple(range(k)), tuple(range(k, k + l)))
    for step in range(max_offset_steps):
        m = base + step
        pts = tuple(Point(x, x * x + m) for x in xs_up) \
            + tuple(Point(x, -x * x) for x in xs_low)
        ps = PointSet(pts, partition)
        if validate_double_chain(ps).ok:
            return ps
    raise DoubleChainSearchError(
        f"no valid cup offset in [{base}, {base + max_offset_steps}) for (k={k}, l={l}); "
        f"raise max_offset_steps")


@dataclass(frozen=True)
class ConditionCheck:
    """One validated double-chain condition, with a witness on failure."""

    name: str
    passed: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class DoubleChainReport:
    checks: tuple[ConditionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[ConditionCheck]:
        return [c for c in self.checks if not c.passed]


CONDITION_NAMES = (
    "upper_is_cup",
    "lower_is_cap",
    "lower_below_upper_lines",
    "upper_above_lower_lines",
    "general_position",
)


def validate_double_chain(ps: PointSet) -> DoubleChainReport:
    """Check the five double-chain conditions, with a witness triple per failure.

    (a) U forms a cup, (b) L forms a cap, (c) every L point lies strictly
    below every line through two U points, (d) every U point lies strictly
    above every line through two L points, (e) the whole set is in general
    position. Above/below are strict: collinear counts as failure, and a
    vertical chain line fails outright since no point is strictly below it.
    """
    if ps.partition is None:
        raise ValueError("validate_double_chain requires a partitioned point set")
    pts = ps.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    up = sorted(ps.partition.upper, key=lambda i: (xs[i], ys[i]))
    low = sorted(ps.partition.lower, key=lambda i: (xs[i], ys[i]))

    def chain(order: list[int], name: str, up_open: bool) -> ConditionCheck:
        # cup: consecutive lex-sorted triples turn counterclockwise; cap: clockwise
        for t in range(len(order) - 2):
            a, b, c = order[t], order[t + 1], order[t + 2]
            d = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
            if (d <= 0) if up_open else (d >= 0):
                return ConditionCheck(name, False, (a, b, c))
        return ConditionCheck(name, True)

    def separated(chain_idx: list[int], others: list[int], name: str,
                  below: bool) -> ConditionCheck:
        for u in range(len(chain_idx)):
            for v in range(u + 1, len(chain_idx)):
                a, b = chain_idx[u], chain_idx[v]
                if xs[a] == xs[b]:
                    return ConditionCheck(name, False, (a, b, others[0]))
                ax, ay = xs[a], ys[a]
                dx = xs[b] - ax
                dy = ys[b] - ay
                for p in others:
                    d = dx * (ys[p] - ay) - dy * (xs[p] - ax)
                    if (d >= 0) if below else (d <= 0):
                        return ConditionCheck(name, False, (a, b, p))
        return ConditionCheck(name, True)

    collinear = find_collinear_triple(ps)
    checks = (
        chain(up, CONDITION_NAMES[0], up_open=True),
        chain(low, CONDITION_NAMES[1], up_open=False),
        separated(up, low, CONDITION_NAMES[2], below=True),
        separated(low, up, CONDITION_NAMES[3], below=False),
        ConditionCheck(CONDITION_NAMES[4], collinear is None, collinear),
    )
    return DoubleChainReport(checks)


def delete_points(ps: PointSet, remove: Iterable[int]) -> tuple[PointSet, dict[int, int]]:
    """Drop the given point indices; returns the reindexed set and old->new map.

    Partition labels follow the surviving points; the partition is dropped
    entirely if either side loses all its members.
    """
    rm = set(remove)
    for idx in rm:
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < ps.n:
            raise ValueError(f"cannot delete point {idx!r}: out of range")
    keep = [i for i in range(ps.n) if i not in rm]
    if not keep:
        raise ValueError("cannot delete every point")
    remap = {old: new for new, old in enumerate(keep)}
    part = None
    if ps.partition is not None:
        up = tuple(remap[i] for i in ps.partition.upper if i in remap)
        low = tuple(remap[i] for i in ps.partition.lower if i in remap)
        if up and low:
            part = Partition(up, low)
    return PointSet(tuple(ps.points[i] for i in keep), part), remap


def pointset_to_json(ps: PointSet) -> dict:
    """Interchange form: {"n":, "points": [[x,y],...], "partition": {"U":,"L":}|null}."""
    data: dict = {
        "n": ps.n,
        "points": [[p.x, p.y] for p in ps.points],
        "partition": None,
    }
    if ps.partition is not None:
        data["partition"] = {"U": list(ps.partition.upper), "L": list(ps.partition.lower)}
    return data


def pointset_from_json(data: dict) -> PointSet:
    points = tuple(Point(x, y) for x, y in data["points"])
    if data.get("n") != len(points):
        raise ValueError(f"point count {data.get('n')!r} does not match {len(points)} points")
    part = data.get("partition")
    partition = None
    if part is not None:
        partition = Partition(tuple(part["U"]), tuple(part["L"]))
    return PointSet(points, partition)


def save_points(ps: PointSet, path: str | Path) -> None:
    Path(path).write_text(json.dumps(pointset_to_json(ps)) + "\n", encoding="utf-8")


def load_points(path: str | Path) -> PointSet:
    return pointset_from_json(json.loads(Path(path).read_text(encoding="utf-8")))
