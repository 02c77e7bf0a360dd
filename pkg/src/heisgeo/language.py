"""The geodesic-language layer: swap rewriting on cyclic words, generation of
every dead-end word, the infinite-geodesic prefix classifier, and completion
of an arbitrary geodesic word to a dead-end word.

Dead-end words are exactly the geodesic representatives of nonzero commutator
powers.  For area k they all arise as follows: take the boundary word of an
L x (H - L) rectangle (H = p(k)/2, L between q_minus(k) and q_plus(k)), apply
exactly L*(H - L) - k area-decreasing swaps to the cyclic word, then emit
every rotation and every inverse.  Each swap removes one unit of enclosed
area while preserving length, so every word produced has length p(k) and
area k and is therefore geodesic by arithmetic; completeness is certified
against the oracle in the acceptance suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import metric
from .errors import CompletionLimitError, ResourceLimitError
from .group import (
    Element,
    LETTERS,
    evaluate,
    inverse_letter,
    letter_base,
    word_inverse,
    word_sort_key,
)
from .polyomino import q_minus, q_plus

DEFAULT_AREA_CEILING = 32
DEFAULT_COMPLETION_AREA = 64

#: The four area-decreasing adjacent transpositions.
SWAP_RULES = {"ab": "ba", "bA": "Ab", "AB": "BA", "Ba": "aB"}


class CyclicWord:
    """A word up to rotation; hashing and equality use the minimal rotation."""

    __slots__ = ("word", "_canonical")

    def __init__(self, word: str):
        for c in word:
            if c not in LETTERS:
                raise ValueError(f"not a letter: {c!r}")
        self.word = word
        self._canonical: str | None = None

    def canonical(self) -> str:
        if self._canonical is None:
            self._canonical = min(self.rotations(), key=word_sort_key, default="")
        return self._canonical

    def rotations(self) -> list[str]:
        w = self.word
        return [w[i:] + w[:i] for i in range(len(w))]

    def __len__(self) -> int:
        return len(self.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicWord) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"CyclicWord({self.word!r})"


def swap_sites(word: str, *, cyclic: bool = False) -> list[int]:
    """Positions i where an area-decreasing swap applies to (w[i], w[i+1]).

    With cyclic=True the wrap-around pair (last, first) is included as
    position len(word) - 1.
    """
    n = len(word)
    if n < 2:
        return []
    stop = n if cyclic else n - 1
    return [i for i in range(stop) if word[i] + word[(i + 1) % n] in SWAP_RULES]


def swap_at(word: str, pos: int, *, cyclic: bool = False) -> str:
    """Apply the swap whose pattern starts at pos; ValueError if none does."""
    n = len(word)
    wrap = pos == n - 1
    if wrap and not cyclic:
        raise ValueError("wrap-around position needs cyclic=True")
    pattern = word[pos] + word[(pos + 1) % n]
    replacement = SWAP_RULES.get(pattern)
    if replacement is None:
        raise ValueError(f"no swap pattern at position {pos} of {word!r}")
    if wrap:
        return replacement[1] + word[1:-1] + replacement[0]
    return word[:pos] + replacement + word[pos + 2 :]


def applicable_swaps(w: CyclicWord) -> list[int]:
    return swap_sites(w.word, cyclic=True)


def apply_swap(w: CyclicWord, pos: int) -> CyclicWord:
    return CyclicWord(swap_at(w.word, pos, cyclic=True))


def generate_dead_end_words(k: int, *, ceiling: int = DEFAULT_AREA_CEILING) -> set[str]:
    """All dead-end words of area +/-k (the geodesic representatives of the
    k-th commutator power and its inverse)."""
    if k < 1:
        raise ValueError("area must be >= 1")
    if k > ceiling:
        raise ResourceLimitError(f"area {k} exceeds ceiling {ceiling}")
    half = metric.ceil_two_sqrt(k)
    words: set[str] = set()
    for width in range(q_minus(k), q_plus(k) + 1):
        height = half - width
        base = "a" * width + "b" * height + "A" * width + "B" * height
        level = {CyclicWord(base)}
        for _ in range(width * height - k):
            level = {
                apply_swap(cw, pos) for cw in level for pos in applicable_swaps(cw)
            }
        for cw in level:
            for rotation in cw.rotations():
                words.add(rotation)
                words.add(word_inverse(rotation))
    return words


#: classifier tags
HOMOGENEOUS = "homogeneous"
RAY = "ray"
NOT_EXTENDABLE = "none"

#: ray template shapes (x, y range over non-inverse letter pairs)
DETOUR_RAY = "detour"  # V x y^m x^-1 y^inf
OFFSET_RAY = "offset"  # x^n y^-1 x^m y V y^inf


@dataclass(frozen=True)
class InfiniteClass:
    """Classification of a word as a prefix of an infinite geodesic word.

    `homogeneous`: the word uses only one non-inverse letter pair.
    `ray`: the word is a prefix of a template that ends in an infinite
    straight run, with witness parameters recorded.
    `none`: the word extends to no infinite geodesic word.
    """

    tag: str
    pair: tuple[str, str] | None = None
    template: str | None = None
    n: int | None = None
    m: int | None = None
    v: str | None = None

    @property
    def extendable(self) -> bool:
        return self.tag != NOT_EXTENDABLE


NOT_AN_INFINITE_PREFIX = InfiniteClass(NOT_EXTENDABLE)

_ORDERED_PAIRS = [
    (x, y) for x in LETTERS for y in LETTERS if letter_base(x) != letter_base(y)
]


def inversion_count(v: str, x: str, y: str) -> int:
    """Adjacent transpositions needed to sort v into the form x^i y^j."""
    inversions = 0
    ys_seen = 0
    for c in v:
        if c == y:
            ys_seen += 1
        elif c == x:
            inversions += ys_seen
        else:
            raise ValueError(f"letter {c!r} outside alphabet {{{x}, {y}}}")
    return inversions


def _match_detour(word: str, x: str, y: str) -> InfiniteClass | None:
    # prefix of V x y^m x^-1 y^inf with inversion_count(V) < m
    xi = inverse_letter(x)
    if any(c not in (x, y, xi) for c in word):
        return None
    cut = word.find(xi)
    if cut < 0:
        # still inside V x y^m: any {x,y}-word works as V
        m = inversion_count(word, x, y) + 1
        return InfiniteClass(RAY, (x, y), DETOUR_RAY, n=0, m=m, v=word)
    if xi in word[cut + 1 :]:
        return None
    if any(c != y for c in word[cut + 1 :]):
        return None
    head = word[:cut]
    m = len(head) - len(head.rstrip(y))
    if m < 1:
        return None
    stem = head[: len(head) - m]
    if not stem.endswith(x):
        return None
    v = stem[:-1]
    if inversion_count(v, x, y) >= m:
        return None
    return InfiniteClass(RAY, (x, y), DETOUR_RAY, n=0, m=m, v=v)


def _match_offset(word: str, x: str, y: str) -> InfiniteClass | None:
    # prefix of x^n y^-1 x^m y V y^inf with inversion_count(V) < m
    yi = inverse_letter(y)
    if any(c not in (x, y, yi) for c in word):
        return None
    cut = word.find(yi)
    if cut < 0:
        if any(c != x for c in word):
            return None
        return InfiniteClass(RAY, (x, y), OFFSET_RAY, n=len(word), m=1, v="")
    if yi in word[cut + 1 :]:
        return None
    if any(c != x for c in word[:cut]):
        return None
    tail = word[cut + 1 :]
    run = len(tail) - len(tail.lstrip(x))
    rest = tail[run:]
    if not rest:
        return InfiniteClass(RAY, (x, y), OFFSET_RAY, n=cut, m=max(run, 1), v="")
    if rest[0] != y:
        return None
    m = run
    if m < 1:
        return None
    v = rest[1:]
    if inversion_count(v, x, y) >= m:
        return None
    return InfiniteClass(RAY, (x, y), OFFSET_RAY, n=cut, m=m, v=v)


def classify_infinite_prefix(word: str) -> InfiniteClass:
    """Decide whether a word is a prefix of some infinite geodesic word.

    Homogeneous words (over one non-inverse pair, any of the eight quadrant
    alphabets) always qualify.  Otherwise the word must fit one of the two
    ray templates; everything else admits no infinite geodesic extension.
    """
    used = set(word)
    for x, y in _ORDERED_PAIRS:
        if used <= {x, y}:
            return InfiniteClass(HOMOGENEOUS, (x, y))
    for x, y in _ORDERED_PAIRS:
        hit = _match_detour(word, x, y) or _match_offset(word, x, y)
        if hit is not None:
            return hit
    return NOT_AN_INFINITE_PREFIX


def sample_infinite_prefixes(count: int, max_length: int, seed: int) -> list[str]:
    """Deterministic sample of prefixes of infinite geodesic words.

    Mixes homogeneous words and truncations of both ray templates; used by
    the classifier soundness checks.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        x, y = rng.choice(_ORDERED_PAIRS)
        kind = rng.randrange(3)
        if kind == 0:
            length = rng.randint(0, max_length)
            out.append("".join(rng.choice((x, y)) for _ in range(length)))
            continue
        v = "".join(rng.choice((x, y)) for _ in range(rng.randint(0, 5)))
        m = inversion_count(v, x, y) + rng.randint(1, 3)
        if kind == 1:
            full = v + x + y * m + inverse_letter(x) + y * max_length
        else:
            n = rng.randint(0, 4)
            full = x * n + inverse_letter(y) + x * m + y + v + y * max_length
        out.append(full[: rng.randint(0, max_length)])
    return out


def extend_to_dead_end(word: str, max_area: int = DEFAULT_COMPLETION_AREA) -> str:
    """Extend a geodesic word to a dead-end word with the same prefix.

    Targets commutator powers of area 1, 2, ... up to max_area (positive sign
    first), extending letter by letter so that every prefix stays on a
    geodesic to the target; letters are tried in the order a < b < A < B, so
    the result is deterministic.  Raises CompletionLimitError when no target
    within the budget admits a completion.
    """
    g0 = evaluate(word)
    start_len = len(word)
    if metric.length(g0) != start_len:
        raise ValueError(f"not a geodesic word: {word!r}")
    for area in range(1, max_area + 1):
        total = 2 * metric.ceil_two_sqrt(area)
        if total < start_len:
            continue
        for sign in (1, -1):
            target = Element(0, 0, sign * area)
            if metric.length(g0.inverse() * target) != total - start_len:
                continue
            letters = list(word)
            cur = g0
            remaining = total - start_len
            while remaining:
                for x in LETTERS:
                    nxt = cur.right(x)
                    if metric.length(nxt.inverse() * target) == remaining - 1:
                        letters.append(x)
                        cur = nxt
                        remaining -= 1
                        break
                else:
                    raise AssertionError("geodesic continuation must exist")
            return "".join(letters)
    raise CompletionLimitError(word, max_area)
