"""Exact linear algebra: sparse linear combinations and composition-indexed matrices.

Scalars are :class:`fractions.Fraction` (plain ``int`` is accepted wherever a
rational is expected).  Nothing in this package ever touches floating point.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

Rational = Union[int, Fraction]


def _normalize(c: Rational) -> Rational:
    # keep integral values as int: Python int arithmetic is much cheaper
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LinearCombination(Mapping):
    """Immutable sparse map ``key -> coefficient`` with no stored zeros.

    Keys may be any hashable canonical value (tuples, strings, frozen
    dataclasses).  Arithmetic returns new objects.

    >>> x = LinearCombination({"x": 2, "y": 4})
    >>> (x * Fraction(1, 2))["y"]
    2
    >>> len(x - x)
    0
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple[Hashable, Rational]] | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: _normalize(c) for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, key: Hashable, coefficient: Rational = 1) -> LinearCombination:
        return cls({key: coefficient})

    @classmethod
    def _trusted(cls, terms: dict) -> LinearCombination:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # Mapping protocol; missing keys read as zero
    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def coefficient(self, key) -> Rational:
        return self._terms.get(key, 0)

    def support(self) -> set:
        return set(self._terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, LinearCombination):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v != 0}
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LinearCombination) -> LinearCombination:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = _normalize(v)
            else:
                acc.pop(k, None)
        return LinearCombination._trusted(acc)

    def __neg__(self) -> LinearCombination:
        return LinearCombination._trusted({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: LinearCombination) -> LinearCombination:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Rational) -> LinearCombination:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return scale(scalar, self)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Rational) -> LinearCombination:
        return scale(Fraction(1) / scalar, self)

    def map_keys(self, f: Callable[[Any], Hashable]) -> LinearCombination:
        """Push coefficients through ``f``; colliding images are summed."""
        return LinearCombination((f(k), c) for k, c in self._terms.items())

    def filter(self, predicate: Callable[[Any], bool]) -> LinearCombination:
        return LinearCombination._trusted({k: c for k, c in self._terms.items() if predicate(k)})

    def sorted_items(self, key=None, reverse: bool = False) -> list:
        return sorted(self._terms.items(), key=(lambda kv: key(kv[0])) if key else (lambda kv: kv[0]),
                      reverse=reverse)

    def __repr__(self) -> str:
        if not self._terms:
            return "LinearCombination({})"
        body = ", ".join(f"{k!r}: {c}" for k, c in self.sorted_items(key=repr))
        return "LinearCombination({" + body + "})"


ZERO = LinearCombination()


def add(*terms: LinearCombination) -> LinearCombination:
    acc: dict = {}
    for t in terms:
        for k, c in t.items():
            acc[k] = acc.get(k, 0) + c
    return LinearCombination(acc)


def scale(scalar: Rational, x: LinearCombination) -> LinearCombination:
    if scalar == 0:
        return ZERO
    return LinearCombination._trusted({k: _normalize(scalar * c) for k, c in x.items()})


def linear_extension(f: Callable[[Any], LinearCombination], x: LinearCombination) -> LinearCombination:
    """Extend a map on keys to a linear map on combinations."""
    acc: dict = {}
    for k, c in x.items():
        for k2, c2 in f(k).items():
            acc[k2] = acc.get(k2, 0) + c * c2
    return LinearCombination(acc)


def bilinear_extension(rule: Callable[[Any, Any], LinearCombination],
                       x: LinearCombination, y: LinearCombination) -> LinearCombination:
    """Extend ``rule(key, key) -> LinearCombination`` bilinearly to ``x`` and ``y``."""
    acc: dict = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            for k, c in rule(k1, k2).items():
                acc[k] = acc.get(k, 0) + c1 * c2 * c
    return LinearCombination(acc)


class SingularMatrixError(ArithmeticError):
    """Raised when exact elimination meets a matrix with no inverse."""


@dataclass(frozen=True)
class TransitionMatrix:
    """Square exact matrix whose rows and columns share one index sequence.

    ``entries[i][j]`` is the entry in row ``index[i]``, column ``index[j]``.
    """

    index: tuple
    entries: tuple

    def __post_init__(self):
        m = len(self.index)
        if len(self.entries) != m or any(len(row) != m for row in self.entries):
            raise ValueError("transition matrix must be square and match its index")

    @classmethod
    def from_function(cls, index: Iterable, f: Callable[[Any, Any], Rational]) -> TransitionMatrix:
        index = tuple(index)
        return cls(index, tuple(tuple(_normalize(f(r, c)) for c in index) for r in index))

    @classmethod
    def from_rows(cls, index: Iterable, rows: Iterable[Iterable[Rational]]) -> TransitionMatrix:
        return cls(tuple(index), tuple(tuple(_normalize(x) for x in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.index)

    def __getitem__(self, rc: tuple) -> Rational:
        r, c = rc
        return self.entries[self.index.index(r)][self.index.index(c)]

    def row(self, key) -> LinearCombination:
        i = self.index.index(key)
        return LinearCombination(zip(self.index, self.entries[i]))

    def column(self, key) -> LinearCombination:
        j = self.index.index(key)
        return LinearCombination((r, row[j]) for r, row in zip(self.index, self.entries))

    def transpose(self) -> TransitionMatrix:
        return TransitionMatrix(self.index, tuple(zip(*self.entries)) if self.entries else ())

    def __matmul__(self, other: TransitionMatrix) -> TransitionMatrix:
        if self.index != other.index:
            raise ValueError("index mismatch")
        m = self.size
        cols = list(zip(*other.entries))
        return TransitionMatrix.from_rows(
            self.index,
            [[sum(a * b for a, b in zip(self.entries[i], cols[j])) for j in range(m)] for i in range(m)])

    def is_identity(self) -> bool:
        return all(x == (1 if i == j else 0)
                   for i, row in enumerate(self.entries) for j, x in enumerate(row))

    def is_lower_unitriangular(self) -> bool:
        return all(x == (1 if i == j else x if j < i else 0)
                   for i, row in enumerate(self.entries) for j, x in enumerate(row))

    def is_upper_unitriangular(self) -> bool:
        return self.transpose().is_lower_unitriangular()

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self.entries for x in row)

    def total(self) -> Rational:
        return sum(sum(row) for row in self.entries)

    def row_sums(self) -> list:
        return [sum(row) for row in self.entries]

    def column_sums(self) -> list:
        return [sum(col) for col in zip(*self.entries)]


def identity_matrix(index: Iterable) -> TransitionMatrix:
    return TransitionMatrix.from_function(index, lambda r, c: 1 if r == c else 0)


def matrix_invert(m: TransitionMatrix) -> TransitionMatrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    size = m.size
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(m.entries)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (column {m.index[col]!r} has no pivot)")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(size):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return TransitionMatrix.from_rows(m.index, [row[size:] for row in work])
