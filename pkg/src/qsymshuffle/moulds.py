"""Rational moulds: fractions ``N(u) / prod(linear forms)``, the product ``mu``, and the
Guo-Xie fractions ``z_{sigma,s}`` with their shuffle product formula.

Linear forms are sums of distinct variables ``u_i`` (1-based), stored as
sorted index tuples.  Distinct forms are pairwise non-proportional, so the
lcm of two denominators is the maximum exponent per form and equality never
needs a polynomial gcd.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import reduce

from .combinatorics import ColoredPermutation
from .linalg import LinearCombination, Rational
from .polynomial import SparsePolynomial
from .shuffles import _shuffle

Form = tuple[int, ...]
CONVENTIONS = ("suffix", "prefix")


def _canonical_denominator(forms: Mapping[Form, int]) -> tuple[tuple[Form, int], ...]:
    return tuple(sorted((tuple(sorted(f)), e) for f, e in forms.items() if e))


@dataclass(frozen=True, eq=False)
class RationalMould:
    """Homogeneous mould of arity ``arity``: ``numerator / prod(form^exponent)``."""

    arity: int
    numerator: SparsePolynomial
    denominator: tuple[tuple[Form, int], ...] = ()

    def __post_init__(self):
        if self.numerator.nvars != self.arity:
            raise ValueError("numerator arity mismatch")
        for form, e in self.denominator:
            if not form or e < 1 or min(form) < 1 or max(form) > self.arity:
                raise ValueError(f"bad linear form {form}^{e} for arity {self.arity}")

    @classmethod
    def reciprocal(cls, arity: int, forms: Mapping[Form, int]) -> RationalMould:
        """``1 / prod(form^e)``."""
        return cls(arity, SparsePolynomial.constant(arity), _canonical_denominator(forms))

    @property
    def forms(self) -> dict[Form, int]:
        return dict(self.denominator)

    def cleared(self, target: Mapping[Form, int]) -> SparsePolynomial:
        """Numerator rewritten over the larger denominator ``target``."""
        mine = self.forms
        poly = self.numerator
        for form, e in target.items():
            extra = e - mine.get(form, 0)
            if extra < 0:
                raise ValueError("target denominator does not divide")
            for _ in range(extra):
                poly = poly.times_variable_sum(i - 1 for i in form)
        return poly

    def __mul__(self, c: Rational) -> RationalMould:
        return RationalMould(self.arity, self.numerator * c, self.denominator)

    __rmul__ = __mul__

    def __add__(self, other: RationalMould) -> RationalMould:
        return mould_sum([(1, self), (1, other)])

    def __sub__(self, other: RationalMould) -> RationalMould:
        return mould_sum([(1, self), (-1, other)])

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMould):
            return NotImplemented
        return self.arity == other.arity and (self - other).is_zero()

    def __hash__(self):
        raise TypeError("RationalMould equality is semantic; not hashable")

    def evaluate(self, point: Iterable[Rational]) -> Rational:
        from fractions import Fraction
        point = tuple(point)
        value = Fraction(self.numerator.evaluate(point))
        for form, e in self.denominator:
            value /= sum(point[i - 1] for i in form) ** e
        return value

    def __repr__(self) -> str:
        names = [f"u{i + 1}" for i in range(self.arity)]
        den = "*".join(("(" + "+".join(names[i - 1] for i in f) + ")" if len(f) > 1 else names[f[0] - 1])
                       + (f"^{e}" if e > 1 else "") for f, e in self.denominator)
        num = self.numerator.to_string(names)
        return f"({num})/({den})" if den else num


def lcm_denominator(moulds: Iterable[RationalMould]) -> dict[Form, int]:
    acc: dict[Form, int] = {}
    for m in moulds:
        for form, e in m.denominator:
            acc[form] = max(acc.get(form, 0), e)
    return acc


def mould_sum(terms: Iterable[tuple[Rational, RationalMould]]) -> RationalMould:
    """Exact sum ``sum c * m`` over the lcm of the denominators."""
    terms = [(c, m) for c, m in terms if c != 0]
    if not terms:
        raise ValueError("empty sum has no arity; use RationalMould.reciprocal(arity, {}) * 0")
    arity = terms[0][1].arity
    if any(m.arity != arity for _, m in terms):
        raise ValueError("cannot add moulds of different arity")
    target = lcm_denominator(m for _, m in terms)
    numerator = reduce(lambda p, q: p + q, (m.cleared(target) * c for c, m in terms))
    return RationalMould(arity, numerator, _canonical_denominator(target))


def identity_mould() -> RationalMould:
    return RationalMould(0, SparsePolynomial.constant(0))


def mu(f: RationalMould, g: RationalMould) -> RationalMould:
    """``f(u_1..u_n) * g(u_{n+1}..u_{n+m})``."""
    n, m = f.arity, g.arity
    num = f.numerator.shift(0, n + m) * g.numerator.shift(n, n + m)
    forms = dict(f.denominator)
    for form, e in g.denominator:
        shifted = tuple(i + n for i in form)
        forms[shifted] = forms.get(shifted, 0) + e
    return RationalMould(n + m, num, _canonical_denominator(forms))


def z_fraction(p: ColoredPermutation) -> RationalMould:
    """``1 / (u_s1^c1 (u_s1 + u_s2)^c2 ... )`` for ``p = (s, c)``."""
    forms: dict[Form, int] = {}
    prefix: list[int] = []
    for x, e in zip(p.sigma, p.colors):
        prefix.append(x)
        forms[tuple(sorted(prefix))] = e
    return RationalMould.reciprocal(p.size, forms)


def f_fraction(sigma: Iterable[int]) -> RationalMould:
    sigma = tuple(sigma)
    return z_fraction(ColoredPermutation(sigma, (1,) * len(sigma)))


# --- the epsilon encoding and the Guo-Xie product ------------------------------

def epsilon_word(p: ColoredPermutation, convention: str = "suffix", shift: int = 0) -> tuple[int, ...]:
    """Colored word of ``p``: each letter ``sigma_t`` with ``c_t - 1`` zeros after it
    (``suffix``) or before it (``prefix``); ``shift`` is added to the nonzero letters."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    out: list[int] = []
    for x, c in zip(p.sigma, p.colors):
        zeros = [0] * (c - 1)
        out.extend([x + shift] + zeros if convention == "suffix" else zeros + [x + shift])
    return tuple(out)


def decode_epsilon(word: Iterable[int], convention: str = "suffix") -> ColoredPermutation:
    word = tuple(word)
    sigma: list[int] = []
    colors: list[int] = []
    if convention == "suffix":
        if word and word[0] == 0:
            raise ValueError(f"{word} starts with 0 (suffix convention)")
        for x in word:
            if x == 0:
                colors[-1] += 1
            else:
                sigma.append(x)
                colors.append(1)
    elif convention == "prefix":
        if word and word[-1] == 0:
            raise ValueError(f"{word} ends with 0 (prefix convention)")
        zeros = 0
        for x in word:
            if x == 0:
                zeros += 1
            else:
                sigma.append(x)
                colors.append(zeros + 1)
                zeros = 0
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return ColoredPermutation(tuple(sigma), tuple(colors))


def epsilon_shuffle_product(p1: ColoredPermutation, p2: ColoredPermutation,
                            convention: str) -> LinearCombination:
    """``sum <eps_w | eps_p1 sh eps_{p2[n]}> w`` over colored permutations ``w``."""
    words = _shuffle(epsilon_word(p1, convention), epsilon_word(p2, convention, shift=p1.size))
    return LinearCombination((decode_epsilon(w, convention), c) for w, c in words.items())


def guo_xie_product(p1: ColoredPermutation, p2: ColoredPermutation,
                    convention: str = "suffix") -> LinearCombination:
    """Expansion of ``z_p1 * z_p2`` predicted by the epsilon-shuffle rule.

    Only the suffix encoding makes the prediction correct for the fractions
    of :func:`z_fraction`; ``prefix`` is exposed for comparison.
    """
    return epsilon_shuffle_product(p1, p2, convention)


@dataclass
class MouldCheck:
    passed: bool
    difference: RationalMould | None = None

    def __bool__(self) -> bool:
        return self.passed


def expand_fractions(x: LinearCombination, fraction=z_fraction, arity: int | None = None) -> RationalMould:
    """``sum c * fraction(p)`` for a combination of colored permutations."""
    if not x:
        if arity is None:
            raise ValueError("arity needed for an empty combination")
        return RationalMould(arity, SparsePolynomial(arity))
    return mould_sum((c, fraction(p)) for p, c in x.items())


def verify_mould_identity(p1: ColoredPermutation, p2: ColoredPermutation,
                          convention: str = "suffix") -> MouldCheck:
    lhs = mu(z_fraction(p1), z_fraction(p2))
    rhs = expand_fractions(guo_xie_product(p1, p2, convention), arity=lhs.arity)
    diff = lhs - rhs
    return MouldCheck(True) if diff.is_zero() else MouldCheck(False, diff)
