"""Compositions, binary words, Lyndon words, set partitions and their encodings.

Conventions used throughout the package:

* a composition is a tuple of positive ints; ``()`` is the unit;
* a binary word is a ``str`` over ``"ab"`` with ``a < b``;
* compositions of a fixed ``(n, k)`` are listed in *descending*
  lexicographic order, and the full list for ``n`` goes by increasing length.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import accumulate
from typing import NamedTuple

Composition = tuple[int, ...]


def check_composition(parts: Iterable[int]) -> Composition:
    parts = tuple(parts)
    if any(not isinstance(p, int) or p < 1 for p in parts):
        raise ValueError(f"not a composition: {parts!r}")
    return parts


def parse_composition(text: str) -> Composition:
    """Parse ``"2,1,3"`` (or ``""`` / ``"()"`` for the empty composition)."""
    body = text.strip().strip("()[]")
    if not body:
        return ()
    parts, pos = [], 0
    for token in body.split(","):
        t = token.strip()
        if not t.isdigit() or int(t) < 1:
            raise ValueError(f"cannot parse composition {text!r}: bad part {token!r} at position {pos}")
        parts.append(int(t))
        pos += len(token) + 1
    return tuple(parts)


def format_composition(parts: Composition) -> str:
    return ",".join(map(str, parts))


def _compositions(n: int, k: int) -> Iterator[Composition]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n - k + 1, 0, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def compositions_of(n: int, k: int | None = None) -> list[Composition]:
    """All compositions of ``n`` (of length ``k`` if given), in canonical order.

    >>> compositions_of(4, 3)
    [(2, 1, 1), (1, 2, 1), (1, 1, 2)]
    >>> compositions_of(3)
    [(3,), (2, 1), (1, 2), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if k is not None:
        if k < 0 or k > n:
            return []
        return list(_compositions(n, k))
    if n == 0:
        return [()]
    return [c for length in range(1, n + 1) for c in _compositions(n, length)]


def descent_set(parts: Composition) -> frozenset[int]:
    """Partial sums of ``parts`` excluding the total."""
    return frozenset(list(accumulate(parts))[:-1])


def subset_to_composition(subset: Iterable[int], n: int) -> Composition:
    """Send ``{s_1 < ... < s_{k-1}}`` inside ``{1..n-1}`` to ``(s_1, s_2 - s_1, ..., n - s_{k-1})``."""
    s = sorted(set(subset))
    if s and (s[0] < 1 or s[-1] > n - 1):
        raise ValueError(f"{s} is not a subset of 1..{n - 1}")
    if n == 0:
        return ()
    points = [0] + s + [n]
    return tuple(b - a for a, b in zip(points, points[1:]))


def composition_to_subset(parts: Composition) -> frozenset[int]:
    return descent_set(parts)


# --- binary words ------------------------------------------------------------

def word_of_composition(parts: Composition) -> str:
    """``W_I = a^(i1-1) b a^(i2-1) b ...``; e.g. ``(2,1,3) -> "abbaab"``."""
    return "".join("a" * (p - 1) + "b" for p in parts)


def composition_of_word(word: str) -> Composition:
    if word and word[-1] != "b":
        raise ValueError(f"word {word!r} does not end with b")
    if set(word) - {"a", "b"}:
        raise ValueError(f"word {word!r} is not over the alphabet ab")
    return tuple(len(block) + 1 for block in word[:-1].split("b")) if word else ()


def is_lyndon(word: Sequence) -> bool:
    """True iff ``word`` is strictly smaller than each of its proper rotations."""
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, n))


def is_anti_lyndon(parts: Composition) -> bool:
    return is_lyndon(word_of_composition(parts))


def lyndon_words(length: int, alphabet: str = "ab") -> list[str]:
    """Lyndon words of exactly ``length`` letters, in lexicographic order (Duval's generator)."""
    if length < 1:
        raise ValueError("length must be positive")
    k = len(alphabet)
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == length:
            out.append("".join(alphabet[i] for i in w))
        m = len(w)
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def lyndon_factorization(word: Sequence) -> list:
    """Chen-Fox-Lyndon factorization into weakly decreasing Lyndon factors (Duval)."""
    n = len(word)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and word[k] <= word[j]:
            k = i if word[k] < word[j] else k + 1
            j += 1
        while i <= k:
            factors.append(word[i:i + j - k])
            i += j - k
    return factors


def anti_lyndon_factors(parts: Composition) -> list[Composition]:
    """Factor ``I`` through the Lyndon factorization of ``W_I``."""
    return [composition_of_word(f) for f in lyndon_factorization(word_of_composition(parts))]


# --- set partitions ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class SetPartition:
    """Set partition in canonical form: blocks sorted ascending, ordered by minimum.

    The ground set is the union of the blocks; it need not be ``{1..n}``
    (sub-partitions produced by splitting are kept unstandardized).
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & set(b):
                raise ValueError("blocks are not disjoint")
            seen |= set(b)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> SetPartition:
        bs = [tuple(sorted(b)) for b in blocks]
        return cls(tuple(sorted(bs)))

    @classmethod
    def parse(cls, text: str) -> SetPartition:
        """Parse ``"12|3|4"`` (single-digit letters) or ``"1,2|3|10"``."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        blocks = []
        for chunk in text.split("|"):
            letters = chunk.split(",") if "," in chunk else list(chunk)
            blocks.append(int(x) for x in letters)
        return cls.of(blocks)

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(x for b in self.blocks for x in b))

    @property
    def n(self) -> int:
        return sum(map(len, self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def by_maxima(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.blocks, key=max))

    def maxima(self) -> frozenset[int]:
        return frozenset(max(b) for b in self.blocks)

    def minima(self) -> frozenset[int]:
        return frozenset(min(b) for b in self.blocks)

    def standardize(self) -> SetPartition:
        """Relabel the ground set to ``1..n`` preserving relative order."""
        rank = {x: i + 1 for i, x in enumerate(self.ground)}
        return SetPartition(tuple(tuple(rank[x] for x in b) for b in self.blocks))

    def __str__(self) -> str:
        sep = "" if all(x < 10 for b in self.blocks for x in b) else ","
        return "(" + "|".join(sep.join(map(str, b)) for b in self.by_maxima()) + ")"


def _standard(pi: SetPartition) -> SetPartition:
    return pi if pi.ground == tuple(range(1, pi.n + 1)) else pi.standardize()


def stat_K(pi: SetPartition) -> Composition:
    """Block sizes, blocks ordered by increasing maxima."""
    return tuple(len(b) for b in pi.by_maxima())


def stat_Kprime(pi: SetPartition) -> Composition:
    """Block sizes, blocks ordered by increasing minima."""
    return tuple(len(b) for b in pi.blocks)


def stat_C(pi: SetPartition) -> Composition:
    """Composition whose descent set is the set of block maxima other than ``n``."""
    pi = _standard(pi)
    return subset_to_composition(pi.maxima() - {pi.n}, pi.n)


def stat_Cprime(pi: SetPartition) -> Composition:
    """Same as :func:`stat_C` with (decremented) block minima."""
    pi = _standard(pi)
    return subset_to_composition({m - 1 for m in pi.minima()} - {0}, pi.n)


# --- signed words ------------------------------------------------------------

class SignedLetter(NamedTuple):
    value: int
    signed: bool


SignedWord = tuple[SignedLetter, ...]


def signed_word(letters: Iterable[int]) -> SignedWord:
    """Build a signed word from ints, negative meaning overlined: ``(1, -2) -> 1 2bar``."""
    return tuple(SignedLetter(abs(x), x < 0) for x in letters)


def format_signed_word(w: SignedWord) -> str:
    return "".join(str(x.value) + ("̅" if x.signed else "") for x in w)


def is_valid_signed_word(w: SignedWord) -> bool:
    if not w:
        return True
    if not w[-1].signed:
        return False
    signed_values = [x.value for x in w if x.signed]
    if signed_values != sorted(signed_values) or len(set(x.value for x in w)) != len(w):
        return False
    return all(x.signed or x.value < y.value for x, y in zip(w, w[1:]))


def signed_word_of_partition(pi: SetPartition) -> SignedWord:
    """Blocks by increasing maxima, each sorted, last letter of each block signed."""
    out = []
    for b in pi.by_maxima():
        out.extend(SignedLetter(x, i == len(b) - 1) for i, x in enumerate(b))
    return tuple(out)


def partition_of_signed_word(w: SignedWord) -> SetPartition:
    if not is_valid_signed_word(w):
        raise ValueError(f"invalid signed word {format_signed_word(w)}")
    blocks, current = [], []
    for x in w:
        current.append(x.value)
        if x.signed:
            blocks.append(current)
            current = []
    return SetPartition.of(blocks)


def sp_enumerate(ground: Iterable[int], maxima: Iterable[int]) -> list[SetPartition]:
    """All partitions of ``ground`` whose set of block maxima is exactly ``maxima``.

    >>> [str(p) for p in sp_enumerate({1, 3, 5, 6}, {3, 5, 6})]
    ['(13|5|6)', '(3|15|6)', '(3|5|16)']
    """
    ground, maxima = sorted(set(ground)), sorted(set(maxima))
    if not set(maxima) <= set(ground):
        raise ValueError(f"{maxima} is not a subset of {ground}")
    others = [x for x in ground if x not in set(maxima)]
    out: list[SetPartition] = []

    def place(i: int, blocks: dict[int, list[int]]):
        if i == len(others):
            out.append(SetPartition.of([v + [m] for m, v in blocks.items()]))
            return
        x = others[i]
        for m in maxima:
            if m > x:
                blocks[m].append(x)
                place(i + 1, blocks)
                blocks[m].pop()

    place(0, {m: [] for m in maxima})
    return sorted(out, key=signed_word_of_partition)


def sigma_word(parts: Composition) -> SignedWord:
    """Identity word ``1..n`` with the partial sums of ``parts`` (including ``n``) signed."""
    marks = set(accumulate(parts))
    return tuple(SignedLetter(i, i in marks) for i in range(1, sum(parts) + 1))


def sp_of_signed_word(w: SignedWord) -> list[SetPartition]:
    """Decode a nondecreasing signed word ``w(S, S')`` into ``SP(S, S')``."""
    return sp_enumerate((x.value for x in w), (x.value for x in w if x.signed))


# --- colored permutations ----------------------------------------------------

@dataclass(frozen=True, order=True)
class ColoredPermutation:
    """Permutation ``sigma`` of ``1..n`` carrying a color (exponent) word of length ``n``."""

    sigma: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise ValueError(f"{self.sigma} is not a permutation")
        if len(self.colors) != len(self.sigma) or any(c < 1 for c in self.colors):
            raise ValueError(f"bad color word {self.colors} for {self.sigma}")

    @classmethod
    def parse(cls, text: str) -> ColoredPermutation:
        """``"21;1,2"`` -> sigma ``(2, 1)``, colors ``(1, 2)``; ``"21"`` alone means all colors 1."""
        text = text.strip()
        if ";" in text:
            perm, cols = text.split(";", 1)
        else:
            perm, cols = text, ""
        perm = perm.strip()
        sigma = tuple(int(x) for x in (perm.split(",") if "," in perm else perm))
        colors = parse_composition(cols) if cols.strip() else (1,) * len(sigma)
        return cls(sigma, colors)

    @property
    def size(self) -> int:
        return len(self.sigma)

    @property
    def weight(self) -> int:
        return sum(self.colors)

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.size, self.weight

    def letters(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.sigma, self.colors))

    def shift_letters(self, k: int) -> tuple[tuple[int, int], ...]:
        return tuple((x + k, c) for x, c in zip(self.sigma, self.colors))

    def reversed(self) -> ColoredPermutation:
        return ColoredPermutation(self.sigma[::-1], self.colors[::-1])

    def with_colors(self, colors: Composition) -> ColoredPermutation:
        return ColoredPermutation(self.sigma, tuple(colors))

    def __str__(self) -> str:
        sep = "" if self.size < 10 else ","
        return sep.join(map(str, self.sigma)) + ";" + format_composition(self.colors)


def colored_permutation_of_letters(letters: Iterable[tuple[int, int]]) -> ColoredPermutation:
    letters = tuple(letters)
    return ColoredPermutation(tuple(x for x, _ in letters), tuple(c for _, c in letters))
