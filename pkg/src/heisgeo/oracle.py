"""Brute-force ground truth over the Cayley graph.

Everything downstream (length formula, dead-end language, polyomino
correspondence) is certified against the tables produced here: exhaustive
breadth-first distance balls, exhaustive geodesic enumeration, geodesic
growth computed two independent ways, and a dead-end census read straight
off a ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import metric
from .errors import ResourceLimitError
from .group import Element, IDENTITY, LETTERS

#: Desk-scale defaults; callers may override the ceilings explicitly.
DEFAULT_BALL_CEILING = 16
DEFAULT_ENUMERATION_CEILING = 20
DEFAULT_GROWTH_CEILING = 12


@dataclass(frozen=True)
class DistanceBall:
    """Exhaustive table element -> distance for all elements within `radius`.

    A completed ball is immutable by convention and safe to share between
    threads for concurrent reads.
    """

    radius: int
    table: dict[Element, int]

    def __contains__(self, g: Element) -> bool:
        return g in self.table

    def distance(self, g: Element) -> int:
        return self.table[g]

    def sphere(self, r: int) -> list[Element]:
        if not 0 <= r <= self.radius:
            raise ValueError(f"sphere radius {r} outside ball of radius {self.radius}")
        return sorted(g for g, d in self.table.items() if d == r)

    def sphere_sizes(self) -> list[int]:
        sizes = [0] * (self.radius + 1)
        for d in self.table.values():
            sizes[d] += 1
        return sizes

    def csv_lines(self) -> list[str]:
        lines = ["n,m,k,dist"]
        for g in sorted(self.table):
            lines.append(f"{g.n},{g.m},{g.k},{self.table[g]}")
        return lines


def bfs_ball(radius: int, *, ceiling: int = DEFAULT_BALL_CEILING) -> DistanceBall:
    """Frontier-by-frontier BFS from the identity out to the given radius."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if radius > ceiling:
        raise ResourceLimitError(
            f"ball radius {radius} exceeds ceiling {ceiling}; "
            "pass a larger ceiling= to authorize the bigger search"
        )
    table = {IDENTITY: 0}
    frontier = [IDENTITY]
    for d in range(1, radius + 1):
        next_frontier = []
        for g in frontier:
            for x in LETTERS:
                h = g.right(x)
                if h not in table:
                    table[h] = d
                    next_frontier.append(h)
        frontier = next_frontier
    return DistanceBall(radius, table)


def ball_reaching(g: Element, *, max_radius: int = DEFAULT_ENUMERATION_CEILING) -> DistanceBall:
    """Smallest complete ball containing g (radius = distance of g)."""
    table = {IDENTITY: 0}
    frontier = [IDENTITY]
    if g == IDENTITY:
        return DistanceBall(0, table)
    for d in range(1, max_radius + 1):
        next_frontier = []
        for cur in frontier:
            for x in LETTERS:
                h = cur.right(x)
                if h not in table:
                    table[h] = d
                    next_frontier.append(h)
        if g in table:
            return DistanceBall(d, table)
        frontier = next_frontier
    raise ResourceLimitError(f"{g} lies outside radius {max_radius}")


def enumerate_geodesics(
    g: Element,
    *,
    ball: DistanceBall | None = None,
    max_length: int = DEFAULT_ENUMERATION_CEILING,
) -> list[str]:
    """All geodesic words for g, in lexicographic letter order (a < b < A < B).

    Depth-first search keeping every prefix on a geodesic to g: a letter x is
    explored iff the quotient distance from the extended prefix to g drops by
    exactly one.  Distances come from the ball, never from the closed-form
    length, so the output is pure brute force.
    """
    if ball is None:
        ball = ball_reaching(g, max_radius=max_length)
    if g not in ball.table:
        raise ResourceLimitError(f"{g} lies outside the supplied radius-{ball.radius} ball")
    total = ball.table[g]
    if total > max_length:
        raise ResourceLimitError(f"geodesics of length {total} exceed ceiling {max_length}")
    table = ball.table
    out: list[str] = []
    prefix: list[str] = []

    def walk(cur: Element) -> None:
        if len(prefix) == total:
            out.append("".join(prefix))
            return
        remaining = total - len(prefix) - 1
        for x in LETTERS:
            nxt = cur.right(x)
            if table.get(nxt.inverse() * g) == remaining:
                prefix.append(x)
                walk(nxt)
                prefix.pop()

    walk(IDENTITY)
    return out


def all_geodesic_words(max_length: int, *, ball: DistanceBall | None = None) -> list[str]:
    """Every geodesic word of length <= max_length, in depth-first order.

    Geodesy is checked against ball distances (oracle-pure).
    """
    if ball is None:
        ball = bfs_ball(max_length)
    if ball.radius < max_length:
        raise ValueError("ball radius too small for the requested word length")
    table = ball.table
    out: list[str] = []
    prefix: list[str] = []

    def walk(cur: Element) -> None:
        out.append("".join(prefix))
        if len(prefix) == max_length:
            return
        depth = len(prefix) + 1
        for x in LETTERS:
            nxt = cur.right(x)
            if table.get(nxt) == depth:
                prefix.append(x)
                walk(nxt)
                prefix.pop()

    walk(IDENTITY)
    return out


class GrowthRow(NamedTuple):
    n: int
    sphere: int
    geodesics: int


def geodesic_growth(nmax: int, *, ceiling: int = DEFAULT_GROWTH_CEILING) -> list[GrowthRow]:
    """Geodesic growth gamma(n) for n <= nmax by DFS over geodesic prefixes.

    Prefix geodesy is decided by the closed-form length; the independent
    recount from ball data lives in :func:`geodesic_growth_from_ball`.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if nmax > ceiling:
        raise ResourceLimitError(f"growth nmax {nmax} exceeds ceiling {ceiling}")
    counts = [0] * (nmax + 1)
    spheres: list[set[Element]] = [set() for _ in range(nmax + 1)]

    def walk(cur: Element, depth: int) -> None:
        counts[depth] += 1
        spheres[depth].add(cur)
        if depth == nmax:
            return
        for x in LETTERS:
            nxt = cur.right(x)
            if metric.length(nxt) == depth + 1:
                walk(nxt, depth + 1)

    walk(IDENTITY, 0)
    return [GrowthRow(n, len(spheres[n]), counts[n]) for n in range(nmax + 1)]


def geodesic_growth_from_ball(
    nmax: int, *, ball: DistanceBall | None = None
) -> list[GrowthRow]:
    """gamma(n) recomputed by summing per-element geodesic counts over spheres.

    The number of geodesic words for g equals the number of shortest paths
    from the identity, counted by dynamic programming over the ball.
    """
    if ball is None:
        ball = bfs_ball(nmax)
    if ball.radius < nmax:
        raise ValueError("ball radius too small for the requested growth range")
    table = ball.table
    by_distance: list[list[Element]] = [[] for _ in range(ball.radius + 1)]
    for g, d in table.items():
        by_distance[d].append(g)
    counts: dict[Element, int] = {IDENTITY: 1}
    rows = [GrowthRow(0, 1, 1)]
    for d in range(1, nmax + 1):
        total = 0
        for g in by_distance[d]:
            # a geodesic word for g drops its last letter onto a neighbor one
            # step closer; the four neighbors are exactly g.right(x)
            c = 0
            for x in LETTERS:
                h = g.right(x)
                if table.get(h) == d - 1:
                    c += counts[h]
            counts[g] = c
            total += c
        rows.append(GrowthRow(d, len(by_distance[d]), total))
    return rows


def dead_end_census(radius: int, *, ball: DistanceBall | None = None) -> list[Element]:
    """All elements of length <= radius-1 whose four neighbors are strictly closer.

    Computed purely from ball distances.
    """
    if radius < 2:
        raise ValueError("census needs radius >= 2")
    if ball is None:
        ball = bfs_ball(radius)
    if ball.radius < radius:
        raise ValueError("ball radius too small for the requested census")
    table = ball.table
    out = []
    for g, d in table.items():
        if 0 < d <= radius - 1 and all(table[g.right(x)] < d for x in LETTERS):
            out.append(g)
    return sorted(out)


def growth_csv_lines(rows: Iterable[GrowthRow]) -> list[str]:
    lines = ["n,sphere,gamma"]
    for row in rows:
        lines.append(f"{row.n},{row.sphere},{row.geodesics}")
    return lines
