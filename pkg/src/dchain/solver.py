"""Exact chromatic numbers of disjointness graphs.

The workhorse is a DSATUR-ordered branch and bound over bit-row adjacency,
seeded with a greedy clique (precolored: sound symmetry breaking) and a
greedy upper bound. On top of it sit a canonical enumerator of all optimal
colorings, verification sweeps over double-chain and convex grids, and a
seeded randomized scan that hunts for sets with chi below the convex value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from time import perf_counter
from typing import Iterator

from .coloring import Coloring, verify_coloring
from .disjointness import DisjointnessGraph, build_graph
from .formulas import double_chain_chi, f_of
from .geometry import Point, PointSet, gen_convex, gen_double_chain, is_general_position, save_points

EXACT = "exact"
INDETERMINATE = "indeterminate"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ChiResult:
    """Outcome of an exact solve; indeterminate results carry proven bounds only."""

    status: str
    chi: int | None
    lower_bound: int
    upper_bound: int
    witness: Coloring
    nodes: int
    ms: float

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT


def dsatur_upper(g: DisjointnessGraph) -> Coloring:
    """Greedy proper coloring by saturation degree, ties to the smallest vertex id."""
    v_count = g.n_vertices
    adj = g.adj
    colors = [-1] * v_count
    seen = [0] * v_count  # bit mask of colors on colored neighbors
    for _ in range(v_count):
        pick = -1
        pick_sat = -1
        for v in range(v_count):
            if colors[v] < 0:
                s = seen[v].bit_count()
                if s > pick_sat:
                    pick, pick_sat = v, s
        mask = seen[pick]
        c = 0
        while mask >> c & 1:
            c += 1
        colors[pick] = c
        for u in _bits(adj[pick]):
            if colors[u] < 0:
                seen[u] |= 1 << c
    return Coloring.from_vertex_colors(g.n_points, colors)


def clique_lower(g: DisjointnessGraph) -> tuple[int, frozenset[int]]:
    """Deterministic greedy clique (a set of pairwise disjoint segments) with
    one-out/two-in local improvement; pairwise adjacency is re-validated."""
    v_count = g.n_vertices
    adj = g.adj

    def grow(seed: int) -> list[int]:
        members = [seed]
        cand = adj[seed]
        while cand:
            best = -1
            best_deg = -1
            for v in _bits(cand):
                d = (adj[v] & cand).bit_count()
                if d > best_deg:
                    best, best_deg = v, d
            members.append(best)
            cand &= adj[best]
        return members

    best_members: list[int] = []
    for seed in sorted(range(v_count), key=lambda v: (-adj[v].bit_count(), v)):
        grown = grow(seed)
        if len(grown) > len(best_members):
            best_members = grown

    improved = True
    while improved:
        improved = False
        for drop in sorted(best_members):
            rest = [v for v in best_members if v != drop]
            cand = (1 << v_count) - 1
            for v in rest:
                cand &= adj[v]
            for x in _bits(cand):
                pair = adj[x] & ((cand >> (x + 1)) << (x + 1))
                if pair:
                    y = (pair & -pair).bit_length() - 1
                    best_members = rest + [x, y]
                    improved = True
                    break
            if improved:
                break

    members = sorted(best_members)
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            assert g.adjacent(members[a], members[b])
    return len(members), frozenset(members)


class _Budget(Exception):
    pass


def chromatic_number_exact(g: DisjointnessGraph, *, max_nodes: int | None = None,
                           max_ms: float | None = None) -> ChiResult:
    """Exact chromatic number with an optimal-coloring witness.

    Branch and bound in DSATUR order: the branching vertex is the uncolored
    vertex of maximum saturation (ties to the smallest id), it may take any
    feasible used color or open exactly one new color, and a greedy clique is
    precolored with distinct colors up front. The search is deterministic for
    a fixed graph. When a node or time budget runs out the result is
    INDETERMINATE and carries the best proven bounds, never a guessed value.
    """
    t0 = perf_counter()
    lower, clique = clique_lower(g)
    greedy = dsatur_upper(g)
    best_colors = greedy.vertex_colors()
    best_k = greedy.color_count
    nodes = 0
    aborted = False

    if best_k > lower:
        v_count = g.n_vertices
        adj = g.adj
        colors = [-1] * v_count
        seen = [0] * v_count
        for c, v in enumerate(sorted(clique)):
            colors[v] = c
            bit = 1 << c
            for u in _bits(adj[v]):
                seen[u] |= bit
        deadline = None if max_ms is None else t0 + max_ms / 1000.0

        def assign(v: int, c: int) -> list[int]:
            colors[v] = c
            bit = 1 << c
            touched = []
            for u in _bits(adj[v]):
                if colors[u] < 0 and not seen[u] & bit:
                    seen[u] |= bit
                    touched.append(u)
            return touched

        def unassign(v: int, c: int, touched: list[int]) -> None:
            colors[v] = -1
            bit = 1 << c
            for u in touched:
                seen[u] ^= bit

        def search(used: int) -> None:
            nonlocal best_k, best_colors, nodes
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise _Budget
            if deadline is not None and nodes & 0xFF == 0 and perf_counter() > deadline:
                raise _Budget
            if used >= best_k:
                return
            pick = -1
            pick_sat = -1
            for v in range(v_count):
                if colors[v] < 0:
                    s = seen[v].bit_count()
                    if s > pick_sat:
                        pick, pick_sat = v, s
            if pick < 0:
                best_k = used
                best_colors = colors[:]
                return
            feasible = ~seen[pick] & ((1 << used) - 1)
            for c in _bits(feasible):
                if used >= best_k:
                    return  # a deeper completion improved the incumbent
                touched = assign(pick, c)
                search(used)
                unassign(pick, c, touched)
            if used + 1 < best_k:
                touched = assign(pick, used)
                search(used + 1)
                unassign(pick, used, touched)

        try:
            search(len(clique))
        except _Budget:
            aborted = True

    ms = (perf_counter() - t0) * 1000.0
    witness = Coloring.from_vertex_colors(g.n_points, best_colors)
    assert verify_coloring(g, witness).proper
    if aborted:
        return ChiResult(INDETERMINATE, None, lower, best_k, witness, nodes, ms)
    return ChiResult(EXACT, best_k, best_k, best_k, witness, nodes, ms)


def enumerate_optimal_colorings(g: DisjointnessGraph, chi: int) -> Iterator[Coloring]:
    """Every proper coloring with exactly `chi` colors, one per color-permutation
    orbit.

    Vertices are colored in id order and a new color id may only be the next
    unused one, so the emitted classes are numbered by their minimum vertex
    id: exactly one canonical representative per orbit. Exhausting the stream
    without a single coloring raises (chi was below the chromatic number).
    """
    if not isinstance(chi, int) or isinstance(chi, bool) or chi < 1:
        raise ValueError(f"chi must be a positive integer, got {chi!r}")
    v_count = g.n_vertices
    adj = g.adj
    colors = [-1] * v_count
    forb = [0] * v_count

    def rec(v: int, used: int) -> Iterator[Coloring]:
        if chi - used > v_count - v:
            return  # not enough vertices left to open the remaining classes
        if v == v_count:
            if used == chi:
                yield Coloring.from_vertex_colors(g.n_points, colors)
            return
        mask = forb[v]
        later = adj[v] >> (v + 1)
        for c in range(min(used + 1, chi)):
            if mask >> c & 1:
                continue
            colors[v] = c
            bit = 1 << c
            touched = []
            for off in _bits(later):
                u = v + 1 + off
                if not forb[u] & bit:
                    forb[u] |= bit
                    touched.append(u)
            yield from rec(v + 1, used + (1 if c == used else 0))
            for u in touched:
                forb[u] ^= bit
        colors[v] = -1

    found = False
    for coloring in rec(0, 0):
        found = True
        yield coloring
    if not found:
        raise ValueError(
            f"no proper coloring with {chi} colors exists; {chi} is below the chromatic number")


def singleton_class_check(n: int, *, cap: int = 6) -> bool:
    """True iff every optimal coloring of the convex n-point disjointness graph
    has at most one color class consisting of a single segment.

    Enumerates all optimal colorings up to color permutation, so n is capped
    (default 6): the census grows too fast beyond desk scale.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 4:
        raise ValueError(f"n must be an integer >= 4, got {n!r}")
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the enumeration cap {cap}; the optimal-coloring census "
            f"is only exhaustible at desk scale")
    g = build_graph(gen_convex(n))
    chi = chromatic_number_exact(g).chi
    for coloring in enumerate_optimal_colorings(g, chi):
        singles = sum(1 for segs in coloring.classes().values() if len(segs) == 1)
        if singles > 1:
            return False
    return True


@dataclass(frozen=True)
class SweepRow:
    k: int
    l: int
    chi: int
    expected: int

    @property
    def match(self) -> bool:
        return self.chi == self.expected


def double_chain_sweep(max_sum: int) -> list[SweepRow]:
    """Exact chi of every canonical double chain with 1 <= k <= l, l >= 3 and
    k + l <= max_sum, paired with the closed-form prediction k + f(l)."""
    if not isinstance(max_sum, int) or isinstance(max_sum, bool) or max_sum < 4:
        raise ValueError(f"max_sum must be an integer >= 4, got {max_sum!r}")
    rows = []
    for k in range(1, max_sum // 2 + 1):
        for l in range(max(k, 3), max_sum - k + 1):
            result = chromatic_number_exact(build_graph(gen_double_chain(k, l)))
            rows.append(SweepRow(k, l, result.chi, double_chain_chi(k, l)))
    return rows


@dataclass(frozen=True)
class ConvexRow:
    n: int
    chi: int
    expected: int

    @property
    def match(self) -> bool:
        return self.chi == self.expected


def convex_sweep(n_min: int, n_max: int) -> list[ConvexRow]:
    """Exact chi of the canonical convex n-point set against f(n), for a range."""
    if n_min < 2 or n_min > n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got {n_min}, {n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        result = chromatic_number_exact(build_graph(gen_convex(n)))
        rows.append(ConvexRow(n, result.chi, f_of(n)))
    return rows


def sample_general_position(rng: random.Random, n: int, *, box: int = 10_000,
                            max_attempts: int = 1_000) -> tuple[PointSet | None, int]:
    """Rejection-sample n distinct integer points uniform in [0, box]^2 until
    they are in general position; returns (point set or None, attempts used)."""
    for attempt in range(1, max_attempts + 1):
        coords = [(rng.randint(0, box), rng.randint(0, box)) for _ in range(n)]
        if len(set(coords)) != n:
            continue
        ps = PointSet(tuple(Point(x, y) for x, y in coords))
        if is_general_position(ps):
            return ps, attempt
    return None, max_attempts


@dataclass(frozen=True)
class ScanReport:
    """Summary of a randomized chi-versus-f(n) scan."""

    n: int
    trials: int
    f_value: int
    min_chi: int | None
    counterexample_paths: tuple[str, ...]
    forced_chis: dict[str, int]
    resamples: int
    exhausted: bool

    @property
    def conjecture_holds(self) -> bool:
        return not self.counterexample_paths


def conjecture_scan(n: int, trials: int, seed: int, *, out_dir: str | Path | None = None,
                    include_canonical: bool = True, box: int = 10_000,
                    max_attempts_per_trial: int = 1_000) -> ScanReport:
    """Solve exact chi for seeded random general-position sets (plus, by
    default, the canonical convex and double-chain sets) and compare each
    against f(n). Any set with chi < f(n) is written to disk as a points
    JSON file and reported; running out of rejection-sampling attempts is
    reported via the `exhausted` flag.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 4 <= n <= 8:
        raise ValueError(f"scan supports 4 <= n <= 8, got {n!r}")
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 0:
        raise ValueError(f"trials must be a non-negative integer, got {trials!r}")
    rng = random.Random(seed)
    target = f_of(n)
    directory = Path(out_dir) if out_dir is not None else Path.cwd()

    samples: list[tuple[str, PointSet]] = []
    if include_canonical:
        samples.append(("convex", gen_convex(n)))
        k = n // 2
        samples.append((f"double_chain_{k}_{n - k}", gen_double_chain(k, n - k)))
    resamples = 0
    exhausted = False
    for t in range(trials):
        ps, attempts = sample_general_position(rng, n, box=box,
                                               max_attempts=max_attempts_per_trial)
        resamples += attempts - (1 if ps is not None else 0)
        if ps is None:
            exhausted = True
            break
        samples.append((f"random_{t}", ps))

    min_chi: int | None = None
    forced: dict[str, int] = {}
    bad: list[str] = []
    for label, ps in samples:
        chi = chromatic_number_exact(build_graph(ps)).chi
        if not label.startswith("random_"):
            forced[label] = chi
        if min_chi is None or chi < min_chi:
            min_chi = chi
        if chi < target:
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / f"counterexample_n{n}_seed{seed}_{label}.json"
            save_points(ps, path)
            bad.append(str(path))
    return ScanReport(n, trials, target, min_chi, tuple(bad), forced, resamples, exhausted)
