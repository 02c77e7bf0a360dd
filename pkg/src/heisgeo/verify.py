"""Acceptance checks shared by the test suite and the `verify` subcommand.

Each check is exhaustive or seeded-deterministic, compares an implemented
route against an independent one (closed formula vs BFS ball, constructive
vs brute-force enumeration, rewriting vs oracle word sets), and reports one
pass/fail line.  This module is the single source of pass/fail truth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import language, metric, oracle, polyomino
from .errors import CompletionLimitError
from .group import Element, evaluate


@dataclass
class CheckResult:
    ident: int
    slug: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.ident:>2} {self.slug}: {self.detail}"


class VerifyContext:
    """Caches the expensive distance balls across checks."""

    def __init__(self):
        self._balls: dict[int, oracle.DistanceBall] = {}

    def ball(self, radius: int) -> oracle.DistanceBall:
        if radius not in self._balls:
            self._balls[radius] = oracle.bfs_ball(radius, ceiling=radius)
        return self._balls[radius]


def check_length_formula(ctx: VerifyContext) -> CheckResult:
    """Closed-form length equals BFS distance on the whole radius-14 ball."""
    ball = ctx.ball(14)
    mismatches = sum(1 for g, d in ball.table.items() if metric.length(g) != d)
    return CheckResult(
        1,
        "length-formula-vs-oracle",
        mismatches == 0,
        f"{len(ball.table)} elements within radius 14, {mismatches} mismatches",
    )


def check_commutator_lengths(ctx: VerifyContext) -> CheckResult:
    """l([a,b]^k) = 2*ceil(2*sqrt(k)) for k <= 25; oracle-checked for k <= 20."""
    bad = []
    for k in range(1, 26):
        if metric.length(Element(0, 0, k)) != 2 * metric.ceil_two_sqrt(k):
            bad.append(("formula", k))
    ball = ctx.ball(20)
    for k in range(1, 21):
        if ball.table.get(Element(0, 0, k)) != 2 * metric.ceil_two_sqrt(k):
            bad.append(("oracle", k))
    return CheckResult(
        2,
        "commutator-power-lengths",
        not bad,
        "k <= 25 formula, k <= 20 oracle (radius-20 ball)" if not bad else f"failures: {bad}",
    )


def check_dead_end_census(ctx: VerifyContext) -> CheckResult:
    """The radius-12 census is exactly the commutator powers of length <= 11."""
    census = set(oracle.dead_end_census(12, ball=ctx.ball(14)))
    expected = set()
    k = 1
    while 2 * metric.ceil_two_sqrt(k) <= 11:
        expected.add(Element(0, 0, k))
        expected.add(Element(0, 0, -k))
        k += 1
    ok = census == expected
    detail = (
        f"{len(census)} dead ends within length 11, all commutator powers"
        if ok
        else f"missing {sorted(expected - census)}, extra {sorted(census - expected)}"
    )
    return CheckResult(3, "dead-end-census", ok, detail)


def check_dead_end_language(ctx: VerifyContext) -> CheckResult:
    """Swap-generated dead-end words equal the oracle word sets for k <= 9."""
    ball = ctx.ball(14)
    counts = []
    for k in range(1, 10):
        generated = language.generate_dead_end_words(k)
        want = set(oracle.enumerate_geodesics(Element(0, 0, k), ball=ball))
        want |= set(oracle.enumerate_geodesics(Element(0, 0, -k), ball=ball))
        if generated != want:
            return CheckResult(
                4,
                "dead-end-language",
                False,
                f"k={k}: generated {len(generated)} words, oracle {len(want)}",
            )
        counts.append(len(want))
    return CheckResult(
        4,
        "dead-end-language",
        True,
        f"k <= 9 exact word-set equality, sizes {counts}",
    )


def check_boundary_bijection(ctx: VerifyContext) -> CheckResult:
    """Geodesic representatives of [a,b]^k are exactly the basepointed
    boundary words of minimal-perimeter polyominoes (k <= 9)."""
    ball = ctx.ball(14)
    total_words = 0
    for k in range(1, 10):
        geodesics = oracle.enumerate_geodesics(Element(0, 0, k), ball=ball)
        shapes = polyomino.enumerate_min_perimeter(k)
        if len(geodesics) != len(shapes) * polyomino.p(k):
            return CheckResult(
                5,
                "boundary-word-bijection",
                False,
                f"k={k}: {len(geodesics)} geodesics != {len(shapes)} shapes * p({k})",
            )
        from_shapes = set()
        for shape in shapes:
            for vertex in polyomino.boundary_vertices(shape):
                ob = polyomino.OrientedBoundary(shape, vertex, 1)
                from_shapes.add(polyomino.boundary_word(ob))
        if from_shapes != set(geodesics):
            return CheckResult(
                5, "boundary-word-bijection", False, f"k={k}: word sets differ"
            )
        negative = oracle.enumerate_geodesics(Element(0, 0, -k), ball=ball)
        for word, wanted_sign in [(w, 1) for w in geodesics] + [(w, -1) for w in negative]:
            ob = polyomino.word_to_polyomino(word)
            if ob.orientation != wanted_sign or polyomino.boundary_word(ob) != word:
                return CheckResult(
                    5, "boundary-word-bijection", False, f"round trip failed on {word}"
                )
            total_words += 1
    return CheckResult(
        5,
        "boundary-word-bijection",
        True,
        f"k <= 9: counts match and {total_words} round trips are identities",
    )


def check_min_perimeter_enumeration(ctx: VerifyContext) -> CheckResult:
    """Constructive enumeration equals brute force for k <= 12."""
    counts = []
    for k in range(1, 13):
        constructive = {p.cells for p in polyomino.enumerate_min_perimeter(k)}
        brute = {p.cells for p in polyomino.brute_force_min_perimeter(k)}
        if constructive != brute:
            return CheckResult(
                6,
                "min-perimeter-enumeration",
                False,
                f"k={k}: constructive {len(constructive)} != brute {len(brute)}",
            )
        counts.append(len(brute))
    return CheckResult(
        6,
        "min-perimeter-enumeration",
        True,
        f"k <= 12 canonical sets equal, counts {counts}",
    )


def check_completion(ctx: VerifyContext) -> CheckResult:
    """Every geodesic word of length <= 8 completes to a dead-end word within
    the fixed area budget of 64.

    Known red: the 32 words evaluating to the symmetry orbit of (4, 4, 8),
    such as a2b4a2, need minimal completion area 73.  For that element a
    completion of area kappa > 8 forces ceil(2*sqrt(kappa + 8)) =
    ceil(2*sqrt(kappa)), whose smallest integer solution is kappa = 73, so no
    budget below 73 can pass.  The budget stays at 64 here because that is
    the stated acceptance constant; see the failure detail for the numbers.
    """
    words = oracle.all_geodesic_words(8, ball=ctx.ball(14))
    max_area = 0
    blocked: list[str] = []
    for word in words:
        try:
            completed = language.extend_to_dead_end(word, max_area=64)
        except CompletionLimitError:
            blocked.append(word)
            continue
        if not completed.startswith(word) or not metric.is_dead_end_word(completed):
            return CheckResult(
                7, "geodesics-complete-to-dead-ends", False, f"bad completion of {word!r}"
            )
        max_area = max(max_area, abs(evaluate(completed).k))
    if blocked:
        orbit = sorted({evaluate(w) for w in blocked})
        return CheckResult(
            7,
            "geodesics-complete-to-dead-ends",
            False,
            f"{len(words) - len(blocked)} of {len(words)} words completed "
            f"(largest area used {max_area}); {len(blocked)} words on elements "
            f"{orbit} admit no completion of area <= 64 (minimal sufficient "
            "area is 73)",
        )
    return CheckResult(
        7,
        "geodesics-complete-to-dead-ends",
        True,
        f"{len(words)} geodesic words completed; largest area used {max_area}",
    )


def check_swap_invariants(ctx: VerifyContext) -> CheckResult:
    """Swaps preserve length and coordinates and drop the area by exactly one."""
    rng = random.Random(20260811)
    checked = 0
    for _ in range(1200):
        length = rng.randint(2, 30)
        word = "".join(rng.choice("abAB") for _ in range(length))
        before = evaluate(word)
        for pos in language.swap_sites(word):
            after = evaluate(language.swap_at(word, pos))
            if (
                after.n != before.n
                or after.m != before.m
                or after.k != before.k - 1
            ):
                return CheckResult(
                    8, "swap-invariants", False, f"word {word!r} position {pos}"
                )
            checked += 1
    # wrap-around sites on closed words, where the cyclic area is well defined
    for _ in range(300):
        na, nb = rng.randint(1, 6), rng.randint(1, 6)
        letters = list("a" * na + "A" * na + "b" * nb + "B" * nb)
        rng.shuffle(letters)
        word = "".join(letters)
        before = evaluate(word)
        cw = language.CyclicWord(word)
        for pos in language.applicable_swaps(cw):
            after = evaluate(language.apply_swap(cw, pos).word)
            if (after.n, after.m, after.k) != (0, 0, before.k - 1):
                return CheckResult(
                    8, "swap-invariants", False, f"cyclic word {word!r} position {pos}"
                )
            checked += 1
    return CheckResult(8, "swap-invariants", True, f"{checked} swaps verified")


def check_simple_paths(ctx: VerifyContext) -> CheckResult:
    """Every geodesic word of length <= 10 traces a simple plane chain."""
    words = oracle.all_geodesic_words(10, ball=ctx.ball(14))
    bad = [w for w in words if not metric.is_simple_path(w)]
    return CheckResult(
        9,
        "geodesics-are-simple",
        not bad,
        f"{len(words)} geodesic words checked" if not bad else f"non-simple: {bad[:3]}",
    )


def check_growth(ctx: VerifyContext) -> CheckResult:
    """gamma(n), n <= 12, agrees between prefix DFS and per-element counts."""
    dfs_rows = oracle.geodesic_growth(12)
    ball_rows = oracle.geodesic_growth_from_ball(12, ball=ctx.ball(14))
    if dfs_rows != ball_rows:
        return CheckResult(10, "growth-cross-check", False, "strategies disagree")
    anchors = dfs_rows[1].geodesics == 4 and dfs_rows[2].geodesics == 12
    gammas = [row.geodesics for row in dfs_rows]
    return CheckResult(
        10,
        "growth-cross-check",
        anchors,
        f"gamma = {gammas}" if anchors else f"anchor mismatch: {gammas[:3]}",
    )


def check_classifier(ctx: VerifyContext) -> CheckResult:
    """Sampled infinite-geodesic prefixes are geodesic and accepted; the
    square dead-end word is rejected."""
    words = language.sample_infinite_prefixes(10_000, 15, seed=20260811)
    for word in words:
        cls = language.classify_infinite_prefix(word)
        if not cls.extendable:
            return CheckResult(
                11, "infinite-prefix-classifier", False, f"rejected sample {word!r}"
            )
        if not metric.is_geodesic(word):
            return CheckResult(
                11, "infinite-prefix-classifier", False, f"non-geodesic sample {word!r}"
            )
    square = "aabbAABB"
    if language.classify_infinite_prefix(square).extendable:
        return CheckResult(
            11, "infinite-prefix-classifier", False, f"{square!r} wrongly accepted"
        )
    return CheckResult(
        11,
        "infinite-prefix-classifier",
        True,
        f"{len(words)} sampled prefixes geodesic and accepted; {square!r} rejected",
    )


CHECKS: list[tuple[int, str, Callable[[VerifyContext], CheckResult]]] = [
    (1, "length-formula-vs-oracle", check_length_formula),
    (2, "commutator-power-lengths", check_commutator_lengths),
    (3, "dead-end-census", check_dead_end_census),
    (4, "dead-end-language", check_dead_end_language),
    (5, "boundary-word-bijection", check_boundary_bijection),
    (6, "min-perimeter-enumeration", check_min_perimeter_enumeration),
    (7, "geodesics-complete-to-dead-ends", check_completion),
    (8, "swap-invariants", check_swap_invariants),
    (9, "geodesics-are-simple", check_simple_paths),
    (10, "growth-cross-check", check_growth),
    (11, "infinite-prefix-classifier", check_classifier),
]


def run_checks(
    idents: list[int] | None = None,
    ctx: VerifyContext | None = None,
    report: Callable[[str], None] | None = None,
) -> list[CheckResult]:
    if ctx is None:
        ctx = VerifyContext()
    results = []
    for ident, _slug, fn in CHECKS:
        if idents is not None and ident not in idents:
            continue
        result = fn(ctx)
        if report is not None:
            report(result.line())
        results.append(result)
    return results
