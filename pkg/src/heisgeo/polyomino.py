"""Minimal-perimeter polyominoes and their boundary words.

A polyomino with area k has perimeter at least p(k) = 2*ceil(2*sqrt(k));
the shapes attaining it are exactly the a x b rectangles with a + b = p(k)/2
and ab >= k, with four corner staircases (Young diagrams) of total area
ab - k deleted.  Reading the boundary of such a shape from a basepoint gives
a word evaluating to a commutator power whose area is +/- the polyomino area,
the sign recording the orientation.  Boundary words of minimal-perimeter
polyominoes are precisely the geodesic representatives of commutator powers;
the bijection is certified against the oracle in the acceptance suite.

Polyominoes are fixed: compared up to translation only, with rotations and
reflections distinct.  The canonical translation puts the minimum cell
coordinates at (0, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import ResourceLimitError
from .group import Element, evaluate, plane_path
from .metric import ceil_two_sqrt, is_simple_path

Cell = tuple[int, int]
Vertex = tuple[int, int]

DEFAULT_AREA_CEILING = 64
DEFAULT_BRUTE_FORCE_CEILING = 12

_NEIGHBOR_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1))

#: plane direction -> boundary letter (a = east, b = north)
_DIR_LETTER = {(1, 0): "a", (-1, 0): "A", (0, 1): "b", (0, -1): "B"}

#: left turn for the region-on-the-left tracing rule
_LEFT_TURN = {(1, 0): (0, 1), (0, 1): (-1, 0), (-1, 0): (0, -1), (0, -1): (1, 0)}


def p(k: int) -> int:
    """Minimal perimeter of an area-k polyomino: 2*ceil(2*sqrt(k))."""
    if k < 1:
        raise ValueError("area must be >= 1")
    return 2 * ceil_two_sqrt(k)


def _q_bounds(k: int) -> tuple[int, int]:
    # integer roots of q * (h - q) >= k: ceil((h - sqrt(d))/2), floor((h + sqrt(d))/2)
    h = ceil_two_sqrt(k)
    s = math.isqrt(h * h - 4 * k)
    return (h - s + 1) // 2, (h + s) // 2


def q_minus(k: int) -> int:
    """Smallest rectangle side q with q * (p(k)/2 - q) >= k."""
    if k < 1:
        raise ValueError("area must be >= 1")
    return _q_bounds(k)[0]


def q_plus(k: int) -> int:
    """Largest rectangle side q with q * (p(k)/2 - q) >= k."""
    if k < 1:
        raise ValueError("area must be >= 1")
    return _q_bounds(k)[1]


def _is_connected(cells: frozenset[Cell]) -> bool:
    if not cells:
        return False
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        x, y = c
        for dx, dy in _NEIGHBOR_OFFSETS:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                stack.append(nb)
    return len(seen) == len(cells)


def _normalize(cells: Iterator[Cell] | frozenset[Cell]) -> frozenset[Cell]:
    cells = frozenset(cells)
    ox = min(x for x, _ in cells)
    oy = min(y for _, y in cells)
    if ox == 0 and oy == 0:
        return cells
    return frozenset((x - ox, y - oy) for x, y in cells)


@dataclass(frozen=True)
class Polyomino:
    """Edge-connected set of unit cells, translated so min coordinates are 0."""

    cells: frozenset[Cell]

    @staticmethod
    def from_cells(cells) -> "Polyomino":
        cells = frozenset(tuple(c) for c in cells)
        if not cells:
            raise ValueError("a polyomino needs at least one cell")
        if not _is_connected(cells):
            raise ValueError("cells are not edge-connected")
        return Polyomino(_normalize(cells))

    @property
    def area(self) -> int:
        return len(self.cells)

    def perimeter(self) -> int:
        cells = self.cells
        shared = 0
        for x, y in cells:
            if (x + 1, y) in cells:
                shared += 1
            if (x, y + 1) in cells:
                shared += 1
        return 4 * len(cells) - 2 * shared

    def bounding_box(self) -> tuple[int, int]:
        return (
            max(x for x, _ in self.cells) + 1,
            max(y for _, y in self.cells) + 1,
        )

    def directed_boundary(self) -> dict[Vertex, list[tuple[Vertex, tuple[int, int]]]]:
        """Boundary edges directed with the polyomino on the left.

        Maps each start vertex to its outgoing (end vertex, direction) edges.
        """
        cells = self.cells
        out: dict[Vertex, list[tuple[Vertex, tuple[int, int]]]] = {}

        def add(frm: Vertex, dxy: tuple[int, int]) -> None:
            to = (frm[0] + dxy[0], frm[1] + dxy[1])
            out.setdefault(frm, []).append((to, dxy))

        for x, y in cells:
            if (x, y - 1) not in cells:
                add((x, y), (1, 0))
            if (x + 1, y) not in cells:
                add((x + 1, y), (0, 1))
            if (x, y + 1) not in cells:
                add((x + 1, y + 1), (-1, 0))
            if (x - 1, y) not in cells:
                add((x, y + 1), (0, -1))
        return out

    def boundary_chains(self) -> list[list[Vertex]]:
        """Boundary as closed vertex chains (each starts and ends at the same
        vertex).  At pinch vertices the sharpest left turn keeps chains from
        crossing; a simply connected polyomino yields exactly one chain.
        """
        edges = self.directed_boundary()
        unused: set[tuple[Vertex, tuple[int, int]]] = {
            (frm, d) for frm, outs in edges.items() for _, d in outs
        }
        chains = []
        while unused:
            start, d = min(unused)
            chain = [start]
            cur, dcur = start, d
            while True:
                unused.discard((cur, dcur))
                cur = (cur[0] + dcur[0], cur[1] + dcur[1])
                chain.append(cur)
                if cur == start:
                    break
                options = [dd for (_, dd) in edges.get(cur, ()) if (cur, dd) in unused]
                if not options:
                    raise AssertionError("boundary trace ran out of edges")
                if len(options) == 1:
                    dcur = options[0]
                else:
                    turn = _LEFT_TURN[dcur]
                    for cand in (turn, dcur, _LEFT_TURN[_LEFT_TURN[turn]]):
                        if cand in options:
                            dcur = cand
                            break
            chains.append(chain)
        return chains

    def is_simply_connected(self) -> bool:
        """True iff the complement has no enclosed cells (flood fill check)."""
        cells = self.cells
        w, h = self.bounding_box()
        start = (-1, -1)
        seen = {start}
        stack = [start]
        while stack:
            x, y = stack.pop()
            for dx, dy in _NEIGHBOR_OFFSETS:
                nb = (x + dx, y + dy)
                if (
                    -1 <= nb[0] <= w
                    and -1 <= nb[1] <= h
                    and nb not in cells
                    and nb not in seen
                ):
                    seen.add(nb)
                    stack.append(nb)
        empty_inside = w * h - len(cells)
        reached_inside = sum(1 for x, y in seen if 0 <= x < w and 0 <= y < h)
        return reached_inside == empty_inside

    def sort_key(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def to_json_dict(self) -> dict:
        return {
            "cells": [list(c) for c in sorted(self.cells)],
            "area": self.area,
            "perimeter": self.perimeter(),
        }


def area(poly: Polyomino) -> int:
    return poly.area


def perimeter(poly: Polyomino) -> int:
    return poly.perimeter()


def boundary(poly: Polyomino) -> list[list[Vertex]]:
    return poly.boundary_chains()


def partitions_in_box(width: int, height: int, total: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing positive rows, each <= width, at most height rows,
    summing to total.  Yields () when total is 0."""
    if total == 0:
        yield ()
        return
    if width <= 0 or height <= 0:
        return
    for first in range(min(width, total), 0, -1):
        for rest in partitions_in_box(first, height - 1, total - first):
            yield (first,) + rest


@dataclass(frozen=True)
class YoungDiagram:
    """Staircase corner region given by weakly decreasing positive rows."""

    rows: tuple[int, ...]

    def __post_init__(self):
        for i, r in enumerate(self.rows):
            if r < 1:
                raise ValueError("rows must be positive")
            if i and r > self.rows[i - 1]:
                raise ValueError("rows must be weakly decreasing")

    @property
    def area(self) -> int:
        return sum(self.rows)

    def corner_cells(self, width: int, height: int, corner: str) -> set[Cell]:
        """Cells deleted from the given corner of a width x height rectangle.

        corner is one of "sw", "se", "nw", "ne"; rows stack away from the
        corner's horizontal edge, shrinking toward the interior.
        """
        cells = set()
        for row, count in enumerate(self.rows):
            for col in range(count):
                x = col if corner in ("sw", "nw") else width - 1 - col
                y = row if corner in ("sw", "se") else height - 1 - row
                cells.add((x, y))
        return cells


def _corner_quadruples(
    width: int, height: int, surplus: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    for a_sw in range(surplus + 1):
        for p_sw in partitions_in_box(width, height, a_sw):
            for a_se in range(surplus - a_sw + 1):
                for p_se in partitions_in_box(width, height, a_se):
                    for a_nw in range(surplus - a_sw - a_se + 1):
                        for p_nw in partitions_in_box(width, height, a_nw):
                            a_ne = surplus - a_sw - a_se - a_nw
                            for p_ne in partitions_in_box(width, height, a_ne):
                                yield (p_sw, p_se, p_nw, p_ne)


def enumerate_min_perimeter(k: int, *, ceiling: int = DEFAULT_AREA_CEILING) -> list[Polyomino]:
    """All fixed minimal-perimeter polyominoes of area k, canonically sorted.

    Constructive route: every rectangle with half-perimeter p(k)/2 and area
    >= k, minus four corner Young diagrams of total area (rectangle - k).
    Candidates are generated loosely and then verified (area, perimeter,
    connectivity, simple connectivity), which makes subtle fitting rules
    unnecessary; duplicates collapse on the canonical cell set.
    """
    if k < 1:
        raise ValueError("area must be >= 1")
    if k > ceiling:
        raise ResourceLimitError(f"area {k} exceeds ceiling {ceiling}")
    half = ceil_two_sqrt(k)
    target_perimeter = 2 * half
    found: dict[frozenset[Cell], Polyomino] = {}
    for width in range(q_minus(k), q_plus(k) + 1):
        height = half - width
        surplus = width * height - k
        rectangle = frozenset((x, y) for x in range(width) for y in range(height))
        corners = ("sw", "se", "nw", "ne")
        for quad in _corner_quadruples(width, height, surplus):
            deleted: set[Cell] = set()
            total = 0
            for rows, corner in zip(quad, corners):
                if rows:
                    deleted |= YoungDiagram(rows).corner_cells(width, height, corner)
                    total += sum(rows)
            if len(deleted) != total:
                continue  # corners overlap
            cells = rectangle - deleted
            if not cells or not _is_connected(frozenset(cells)):
                continue
            poly = Polyomino(_normalize(frozenset(cells)))
            if poly.perimeter() != target_perimeter or not poly.is_simply_connected():
                continue
            found[poly.cells] = poly
    return sorted(found.values(), key=Polyomino.sort_key)


def fixed_polyominoes(size: int) -> list[frozenset[Cell]]:
    """Every fixed polyomino with `size` cells, exactly once.

    Classic leftmost-lowest-cell enumeration: shapes grow inside the half
    plane where (0, 0) is the minimal cell in (y, x) order, so each
    translation class appears exactly once.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    results: list[frozenset[Cell]] = []
    offered = {(0, 0)}
    shape: list[Cell] = []

    def grow(candidates: list[Cell]) -> None:
        while candidates:
            c = candidates.pop()
            shape.append(c)
            if len(shape) == size:
                results.append(frozenset(shape))
            else:
                fresh = []
                x, y = c
                for dx, dy in _NEIGHBOR_OFFSETS:
                    nb = (x + dx, y + dy)
                    if nb not in offered and (nb[1] > 0 or (nb[1] == 0 and nb[0] >= 0)):
                        offered.add(nb)
                        fresh.append(nb)
                grow(candidates + fresh)
                for nb in fresh:
                    offered.discard(nb)
            shape.pop()

    grow([(0, 0)])
    return results


def brute_force_min_perimeter(
    k: int, *, ceiling: int = DEFAULT_BRUTE_FORCE_CEILING
) -> list[Polyomino]:
    """Exhaustive enumeration of area-k shapes filtered to perimeter p(k).

    Independent of the constructive route; exponential, so keep k small.
    """
    if k < 1:
        raise ValueError("area must be >= 1")
    if k > ceiling:
        raise ResourceLimitError(f"area {k} exceeds brute-force ceiling {ceiling}")
    target = p(k)
    out = []
    for cells in fixed_polyominoes(k):
        poly = Polyomino(_normalize(cells))
        if poly.perimeter() == target:
            out.append(poly)
    return sorted(out, key=Polyomino.sort_key)


@dataclass(frozen=True)
class OrientedBoundary:
    """A simply connected polyomino with a boundary basepoint and a direction.

    orientation +1 walks with the region on the left (counterclockwise),
    -1 with the region on the right.
    """

    polyomino: Polyomino
    basepoint: Vertex
    orientation: int

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        if not self.polyomino.is_simply_connected():
            raise ValueError("polyomino has holes; boundary is not a single chain")
        if self.basepoint not in self.polyomino.directed_boundary():
            raise ValueError(f"basepoint {self.basepoint} is not on the boundary")


def boundary_vertices(poly: Polyomino) -> list[Vertex]:
    return sorted(poly.directed_boundary())


def default_basepoint(poly: Polyomino) -> Vertex:
    return min(poly.directed_boundary())


def boundary_word(ob: OrientedBoundary) -> str:
    """Word read along the boundary from the basepoint.

    The first edge leaves the basepoint with the region on the chosen side;
    were several ever available, the smallest letter in the order
    a < b < A < B would win (simply connected shapes never tie).
    """
    edges = ob.polyomino.directed_boundary()
    if ob.orientation == 1:
        outgoing = edges
    else:
        outgoing = {}
        for frm, outs in edges.items():
            for to, (dx, dy) in outs:
                outgoing.setdefault(to, []).append((frm, (-dx, -dy)))
    letters = []
    cur = ob.basepoint
    while True:
        options = sorted(
            outgoing[cur], key=lambda edge: "abAB".index(_DIR_LETTER[edge[1]])
        )
        to, d = options[0]
        letters.append(_DIR_LETTER[d])
        cur = to
        if cur == ob.basepoint:
            return "".join(letters)


def word_to_polyomino(word: str) -> OrientedBoundary:
    """Interpret a closed simple word as an oriented polyomino boundary.

    The word must project to a simple closed plane chain; the enclosed cells
    form the polyomino, the sign of the evaluated area gives the orientation,
    and the path start becomes the basepoint.  Round-trips with
    :func:`boundary_word`.
    """
    if not word:
        raise ValueError("the empty word encloses nothing")
    g = evaluate(word)
    if (g.n, g.m) != (0, 0):
        raise ValueError("word is not closed in the plane")
    if not is_simple_path(word):
        raise ValueError("word does not trace a simple chain")
    if g.k == 0:
        raise ValueError("closed word encloses zero area")
    path = plane_path(word)
    vertical = [
        (min(path[i][1], path[i + 1][1]), path[i][0])
        for i in range(len(word))
        if path[i][0] == path[i + 1][0]
    ]
    xs = [v[0] for v in path]
    ys = [v[1] for v in path]
    cells = set()
    for cy in range(min(ys), max(ys)):
        row_edges = sorted(x for (ey, x) in vertical if ey == cy)
        for cx in range(min(xs), max(xs)):
            crossings = sum(1 for x in row_edges if x <= cx)
            if crossings % 2:
                cells.add((cx, cy))
    if len(cells) != abs(g.k):
        raise AssertionError("enclosed cell count does not match the signed area")
    ox = min(x for x, _ in cells)
    oy = min(y for _, y in cells)
    poly = Polyomino.from_cells(cells)
    return OrientedBoundary(poly, (-ox, -oy), 1 if g.k > 0 else -1)


def polyomino_svg(ob: OrientedBoundary, *, cell_px: int = 20) -> str:
    """Render one oriented polyomino as a standalone SVG document.

    Cells filled, boundary stroked, basepoint dotted, the first boundary edge
    carrying an orientation arrow; the y axis points up.
    """
    poly = ob.polyomino
    w, h = poly.bounding_box()
    margin = cell_px
    width_px = w * cell_px + 2 * margin
    height_px = h * cell_px + 2 * margin

    def px(v: Vertex) -> tuple[float, float]:
        return (margin + v[0] * cell_px, height_px - margin - v[1] * cell_px)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" '
        f'height="{height_px}" viewBox="0 0 {width_px} {height_px}">'
    ]
    for x, y in sorted(poly.cells):
        cx, cy = px((x, y + 1))
        parts.append(
            f'<rect x="{cx}" y="{cy}" width="{cell_px}" height="{cell_px}" '
            'fill="#9ecae1" stroke="none"/>'
        )
    word = boundary_word(ob)
    path = plane_path(word)
    shifted = [(v[0] + ob.basepoint[0], v[1] + ob.basepoint[1]) for v in path]
    points = [px(v) for v in shifted]
    d = "M " + " L ".join(f"{x} {y}" for x, y in points) + " Z"
    parts.append(f'<path d="{d}" fill="none" stroke="#08306b" stroke-width="2"/>')
    bx, by = px(ob.basepoint)
    parts.append(f'<circle cx="{bx}" cy="{by}" r="4" fill="#d62728"/>')
    (x0, y0), (x1, y1) = points[0], points[1]
    mx, my = (x0 + x1) / 2, (y0 + y1) / 2
    ux, uy = (x1 - x0) / cell_px, (y1 - y0) / cell_px
    tip = (mx + 5 * ux, my + 5 * uy)
    left = (mx - 3 * uy, my + 3 * ux)
    right = (mx + 3 * uy, my - 3 * ux)
    parts.append(
        '<polygon points="'
        f"{tip[0]},{tip[1]} {left[0]},{left[1]} {right[0]},{right[1]}"
        '" fill="#08306b"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts)
