"""Shuffle, quasi-shuffle and unshuffle of words, and the shifted shuffle of colored permutations.

Words are ``str`` or ``tuple``; one implementation serves binary words,
compositions read as words over the positive integers, and colored words.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache, reduce
from itertools import combinations

from .combinatorics import ColoredPermutation, Composition, colored_permutation_of_letters
from .linalg import LinearCombination, bilinear_extension


@lru_cache(maxsize=1 << 16)
def _shuffle(u, v) -> dict:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    acc: dict = {}
    head = u[:1]
    for w, c in _shuffle(u[1:], v).items():
        w = head + w
        acc[w] = acc.get(w, 0) + c
    head = v[:1]
    for w, c in _shuffle(u, v[1:]).items():
        w = head + w
        acc[w] = acc.get(w, 0) + c
    return acc


def shuffle(u: Sequence, v: Sequence) -> LinearCombination:
    """Sum of all interleavings of ``u`` and ``v``, with multiplicity.

    >>> shuffle("b", "ab") == LinearCombination({"bab": 1, "abb": 2})
    True
    """
    return LinearCombination(_shuffle(u, v))


def shuffle_product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return bilinear_extension(shuffle, x, y)


def shuffle_many(*words: Sequence) -> LinearCombination:
    if not words:
        raise ValueError("need at least one word")
    return reduce(shuffle_product, (LinearCombination.monomial(w) for w in words))


@lru_cache(maxsize=1 << 14)
def _quasi_shuffle(u: Composition, v: Composition) -> dict:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    acc: dict = {}
    for head, rest in (((u[0],), _quasi_shuffle(u[1:], v)),
                       ((v[0],), _quasi_shuffle(u, v[1:])),
                       ((u[0] + v[0],), _quasi_shuffle(u[1:], v[1:]))):
        for w, c in rest.items():
            w = head + w
            acc[w] = acc.get(w, 0) + c
    return acc


def quasi_shuffle(left: Composition, right: Composition) -> LinearCombination:
    """Quasi-shuffle (stuffle) of compositions: shuffle terms plus contractions of adjacent parts."""
    return LinearCombination(_quasi_shuffle(tuple(left), tuple(right)))


def quasi_shuffle_product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return bilinear_extension(quasi_shuffle, x, y)


def unshuffle(w: Sequence) -> LinearCombination:
    """Coproduct dual to :func:`shuffle`: all splittings of ``w`` into complementary subwords."""
    join = "".join if isinstance(w, str) else tuple
    n = len(w)
    acc: dict = {}
    for k in range(n + 1):
        for left in combinations(range(n), k):
            chosen = set(left)
            pair = (join(w[i] for i in left), join(w[i] for i in range(n) if i not in chosen))
            acc[pair] = acc.get(pair, 0) + 1
    return LinearCombination(acc)


def concatenation_product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    """Product of the free associative algebra (words concatenate)."""
    return bilinear_extension(lambda u, v: LinearCombination.monomial(u + v), x, y)


def shifted_colored_shuffle(first: ColoredPermutation, second: ColoredPermutation) -> LinearCombination:
    """Shuffle the colored letters of ``first`` with those of ``second`` shifted by ``first.size``."""
    terms = _shuffle(first.letters(), second.shift_letters(first.size))
    return LinearCombination((colored_permutation_of_letters(w), c) for w, c in terms.items())
