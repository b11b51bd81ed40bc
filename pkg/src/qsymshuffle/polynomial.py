"""Sparse multivariate polynomials with exact coefficients in a fixed number of variables."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from .linalg import Rational, _normalize


class SparsePolynomial:
    """Polynomial in ``nvars`` commuting variables, stored as ``{exponents: coefficient}``.

    Variables are indexed from 0.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Rational] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Rational] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong arity (expected {nvars})")
            if c != 0:
                self.terms[tuple(e)] = _normalize(c)

    @classmethod
    def constant(cls, nvars: int, c: Rational = 1) -> SparsePolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> SparsePolynomial:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, nvars: int, coefficients: Mapping[int, Rational]) -> SparsePolynomial:
        """``sum(c * x_i)`` for ``i, c`` in ``coefficients``."""
        terms = {}
        for i, c in coefficients.items():
            e = [0] * nvars
            e[i] = 1
            terms[tuple(e)] = c
        return cls(nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Iterable[int]) -> Rational:
        return self.terms.get(tuple(exponents), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other: SparsePolynomial):
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return SparsePolynomial(self.nvars, acc)

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        acc: dict[tuple[int, ...], Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return SparsePolynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePolynomial:
        if k < 0:
            raise ValueError("negative power")
        result = SparsePolynomial.constant(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def times_variable_sum(self, indices: Iterable[int]) -> SparsePolynomial:
        """Multiply by ``x_{i1} + x_{i2} + ...`` without building the linear form."""
        indices = tuple(indices)
        acc: dict[tuple[int, ...], Rational] = {}
        for e, c in self.terms.items():
            for i in indices:
                e2 = e[:i] + (e[i] + 1,) + e[i + 1:]
                acc[e2] = acc.get(e2, 0) + c
        out = SparsePolynomial.__new__(SparsePolynomial)
        out.nvars = self.nvars
        out.terms = {e: c for e, c in acc.items() if c != 0}
        return out

    def shift(self, offset: int, nvars: int) -> SparsePolynomial:
        """Re-embed into ``nvars`` variables, moving variable ``i`` to ``i + offset``."""
        if offset + self.nvars > nvars:
            raise ValueError("shift out of range")
        pad = nvars - offset - self.nvars
        return SparsePolynomial(nvars, {(0,) * offset + e + (0,) * pad: c for e, c in self.terms.items()})

    def evaluate(self, point: Iterable[Rational]) -> Rational:
        point = tuple(point)
        total: Rational = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePolynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return self.to_string()

    def to_string(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
