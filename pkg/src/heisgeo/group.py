"""Words over {a, b, a^-1, b^-1} and normal-form arithmetic in the discrete
Heisenberg group.

A word is a plain string over the four letters ``a``, ``b``, ``A``, ``B``
(uppercase = inverse).  Every word evaluates to a unique normal form
``[a,b]^k b^m a^n``, stored as an :class:`Element` with coordinates ``(n, m)``
and area ``k``.  Right multiplication by one letter acts by

    a^e : n -> n + e
    b^e : m -> m + e,  k -> k + e*n

which folds to the closed-form product
``(n1,m1,k1)*(n2,m2,k2) = (n1+n2, m1+m2, k1+k2+n1*m2)``.

The module also carries the sixteen length-preserving word symmetries (eight
letter permutations respecting inverse pairs, optionally composed with word
reversal) together with their exact actions on normal-form coordinates.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple

from .errors import WordParseError

LETTERS = "abAB"

_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
_SIGN = {"a": 1, "b": 1, "A": -1, "B": -1}
_BASE = {"a": "a", "A": "a", "b": "b", "B": "b"}
_STEP = {"a": (1, 0), "A": (-1, 0), "b": (0, 1), "B": (0, -1)}
_ORDER = {c: i for i, c in enumerate(LETTERS)}
_DIGITS = "0123456789"


def inverse_letter(letter: str) -> str:
    return _INVERSE[letter]


def letter_sign(letter: str) -> int:
    return _SIGN[letter]


def letter_base(letter: str) -> str:
    return _BASE[letter]


def word_sort_key(word: str) -> tuple[int, ...]:
    """Sort key realizing the letter order a < b < A < B."""
    return tuple(_ORDER[c] for c in word)


class Element(NamedTuple):
    """Group element in normal form: coordinates (n, m) and area k."""

    n: int
    m: int
    k: int

    def __mul__(self, other: "Element") -> "Element":  # type: ignore[override]
        return Element(
            self.n + other.n, self.m + other.m, self.k + other.k + self.n * other.m
        )

    def inverse(self) -> "Element":
        return Element(-self.n, -self.m, self.n * self.m - self.k)

    def right(self, letter: str) -> "Element":
        """Right-multiply by a single generator letter (fast path)."""
        if letter == "a":
            return Element(self.n + 1, self.m, self.k)
        if letter == "A":
            return Element(self.n - 1, self.m, self.k)
        if letter == "b":
            return Element(self.n, self.m + 1, self.k + self.n)
        if letter == "B":
            return Element(self.n, self.m - 1, self.k - self.n)
        raise ValueError(f"not a letter: {letter!r}")

    def to_json_dict(self) -> dict[str, int]:
        return {"n": self.n, "m": self.m, "k": self.k}


IDENTITY = Element(0, 0, 0)


def multiply(g: Element, h: Element) -> Element:
    return g * h


def invert(g: Element) -> Element:
    return g.inverse()


def evaluate(word: str) -> Element:
    """Fold a word into its normal form."""
    n = m = k = 0
    for c in word:
        if c == "a":
            n += 1
        elif c == "A":
            n -= 1
        elif c == "b":
            m += 1
            k += n
        elif c == "B":
            m -= 1
            k -= n
        else:
            raise ValueError(f"not a letter: {c!r}")
    return Element(n, m, k)


def parse_word(text: str) -> str:
    """Parse compact word syntax into an expanded letter string.

    Grammar: zero or more tokens, each one of ``a b A B`` optionally followed
    by a decimal repeat count >= 1, e.g. ``a3B2`` -> ``aaaBB``.
    """
    out: list[str] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c not in _INVERSE:
            raise WordParseError(f"unexpected character {c!r}", offset=i)
        i += 1
        start = i
        while i < len(text) and text[i] in _DIGITS:
            i += 1
        if i > start:
            count = int(text[start:i])
            if count == 0:
                raise WordParseError("repeat count must be >= 1", offset=start)
        else:
            count = 1
        out.append(c * count)
    return "".join(out)


def format_word(word: str) -> str:
    """Run-length encode a word into the canonical compact syntax."""
    parts = []
    for letter, run in itertools.groupby(word):
        count = sum(1 for _ in run)
        parts.append(letter if count == 1 else f"{letter}{count}")
    return "".join(parts)


def free_reduce(word: str) -> str:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[str] = []
    for c in word:
        if stack and stack[-1] == _INVERSE[c]:
            stack.pop()
        else:
            stack.append(c)
    return "".join(stack)


def word_inverse(word: str) -> str:
    return "".join(_INVERSE[c] for c in reversed(word))


def word_reverse(word: str) -> str:
    return word[::-1]


def cyclic_shifts(word: str) -> list[str]:
    """All rotations of the word, one per starting position (duplicates kept)."""
    return [word[i:] + word[:i] for i in range(len(word))]


def plane_path(word: str) -> list[tuple[int, int]]:
    """Vertices of the projected path in the plane, starting at (0, 0)."""
    x = y = 0
    path = [(0, 0)]
    for c in word:
        dx, dy = _STEP[c]
        x += dx
        y += dy
        path.append((x, y))
    return path


class Symmetry(NamedTuple):
    """A letter permutation (a -> image_a, b -> image_b, inverses following)
    optionally composed with word reversal.

    Both images must have distinct bases; this leaves exactly eight
    permutations, hence sixteen symmetries in total.  Each acts on words
    preserving length, and on elements by the matching coordinate map.
    """

    image_a: str
    image_b: str
    reverse: bool

    def on_word(self, word: str) -> str:
        table = {
            "a": self.image_a,
            "b": self.image_b,
            "A": _INVERSE[self.image_a],
            "B": _INVERSE[self.image_b],
        }
        mapped = "".join(table[c] for c in word)
        return mapped[::-1] if self.reverse else mapped

    def on_element(self, g: Element) -> Element:
        sa = _SIGN[self.image_a]
        sb = _SIGN[self.image_b]
        if _BASE[self.image_a] == "a":
            n, m, k = sa * g.n, sb * g.m, sa * sb * g.k
        else:
            # a and b trade places; restoring normal-form order costs n*m - k
            n, m, k = sb * g.m, sa * g.n, sa * sb * (g.n * g.m - g.k)
        if self.reverse:
            k = n * m - k
        return Element(n, m, k)


def _all_symmetries() -> list[Symmetry]:
    perms = [
        ("a", "b"), ("a", "B"), ("A", "b"), ("A", "B"),
        ("b", "a"), ("b", "A"), ("B", "a"), ("B", "A"),
    ]
    return [Symmetry(ia, ib, rev) for rev in (False, True) for ia, ib in perms]


SYMMETRIES: list[Symmetry] = _all_symmetries()
IDENTITY_SYMMETRY = SYMMETRIES[0]
REVERSAL = Symmetry("a", "b", True)
INVERSION = Symmetry("A", "B", True)  # word inverse = flip letters, then reverse


def apply_symmetry(sym: Symmetry, word: str) -> str:
    return sym.on_word(word)


def element_symmetry(sym: Symmetry, g: Element) -> Element:
    return sym.on_element(g)


def random_word(rng, max_length: int, alphabet: str = LETTERS) -> str:
    """Uniform random word of length 0..max_length (test/sampling helper)."""
    length = rng.randint(0, max_length)
    return "".join(rng.choice(alphabet) for _ in range(length))


def words_of_length(length: int) -> Iterator[str]:
    """All words of exactly the given length, in lexicographic letter order."""
    for tup in itertools.product(LETTERS, repeat=length):
        yield "".join(tup)
