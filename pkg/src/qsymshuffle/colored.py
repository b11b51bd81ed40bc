"""Colored free quasi-symmetric functions with positive-integer colors, and their Z basis.

Basis elements ``F_{sigma,c}`` and ``Z_{sigma,J}`` are both keyed by
:class:`ColoredPermutation`; which basis a combination lives in is up to
the caller.  The change of basis reuses the uncolored matrices on the
color word: ``F_{sigma,I} = sum_J c_IJ Z_{sigma,J}`` and
``Z_{sigma,J} = sum_I d_IJ F_{sigma,I}``.

The epsilon-shuffle rule for the Z basis holds with the *prefix* encoding
(zeros before each letter, matching ``W_I``).  The Guo-Xie fractions
multiply by the *suffix* rule, so the multiplicative realization sends
``Z_{sigma,J}`` to the fraction of the reversed colored permutation.
"""

from __future__ import annotations

from .basis import RouteDisagreement, c_matrix, d_matrix
from .combinatorics import ColoredPermutation
from .linalg import LinearCombination, bilinear_extension, linear_extension
from .moulds import (
    RationalMould,
    epsilon_shuffle_product,
    expand_fractions,
    mu,
    z_fraction,
)
from .polynomial import SparsePolynomial
from .shuffles import shifted_colored_shuffle

Z_CONVENTION = "prefix"


def colored_F_product(p1: ColoredPermutation, p2: ColoredPermutation) -> LinearCombination:
    return shifted_colored_shuffle(p1, p2)


def colored_F_product_lincomb(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return bilinear_extension(colored_F_product, x, y)


def f_to_z(p: ColoredPermutation) -> LinearCombination:
    """``F_{sigma,I} = sum_J c_IJ Z_{sigma,J}``."""
    if not p.size:
        return LinearCombination.monomial(p)
    row = c_matrix(p.weight, p.size).row(p.colors)
    return LinearCombination((p.with_colors(J), c) for J, c in row.items())


def z_to_f(p: ColoredPermutation) -> LinearCombination:
    """``Z_{sigma,J} = sum_I d_IJ F_{sigma,I}``."""
    if not p.size:
        return LinearCombination.monomial(p)
    col = d_matrix(p.weight, p.size).column(p.colors)
    return LinearCombination((p.with_colors(I), c) for I, c in col.items())


def colored_Z_convert(direction: str, p: ColoredPermutation) -> LinearCombination:
    """``direction`` is ``"F->Z"`` or ``"Z->F"``."""
    if direction == "F->Z":
        return f_to_z(p)
    if direction == "Z->F":
        return z_to_f(p)
    raise ValueError(f"unknown direction {direction!r}")


def colored_Z_product_by_epsilon(p1: ColoredPermutation, p2: ColoredPermutation,
                                 convention: str = Z_CONVENTION) -> LinearCombination:
    return epsilon_shuffle_product(p1, p2, convention)


def colored_Z_product_via_F(p1: ColoredPermutation, p2: ColoredPermutation) -> LinearCombination:
    """Expand both factors in ``F``, multiply by the shifted shuffle, convert back."""
    return linear_extension(f_to_z, colored_F_product_lincomb(z_to_f(p1), z_to_f(p2)))


def colored_Z_product(p1: ColoredPermutation, p2: ColoredPermutation,
                      convention: str = Z_CONVENTION) -> LinearCombination:
    """``Z_p1 Z_p2`` by the epsilon rule, cross-checked against the route through ``F``."""
    direct = colored_Z_product_by_epsilon(p1, p2, convention)
    through_f = colored_Z_product_via_F(p1, p2)
    if direct != through_f:
        raise RouteDisagreement(f"Z product {p1} * {p2}: epsilon rule ({convention}) != route via F")
    return direct


def realization(p: ColoredPermutation) -> RationalMould:
    """Image of ``Z_p`` under the multiplicative map to rational moulds."""
    return z_fraction(p.reversed())


def realize(x: LinearCombination, arity: int, fraction=realization) -> RationalMould:
    return expand_fractions(x, fraction=fraction, arity=arity)


def is_multiplicative_on(p1: ColoredPermutation, p2: ColoredPermutation, fraction=realization) -> bool:
    """Check ``fraction(Z_p1) * fraction(Z_p2) == fraction(Z_p1 Z_p2)``, the product taken in
    the algebra (through ``F``)."""
    lhs = mu(fraction(p1), fraction(p2))
    rhs = realize(colored_Z_product_via_F(p1, p2), lhs.arity, fraction)
    return (lhs - rhs).is_zero()


def generating_identity_holds(sigma: tuple[int, ...], weight: int) -> bool:
    """``sum_I y^(I-1) Z_{sigma,I} == sum_I prod_s (y_s - y_{s+1})^(i_s-1) F_{sigma,I}``.

    Both sides are compared coefficientwise in the ``F`` basis, the left side
    through ``z_to_f`` and the right side by direct polynomial expansion.
    """
    from .combinatorics import compositions_of

    n = len(sigma)
    lhs: dict[tuple, SparsePolynomial] = {}
    for I in compositions_of(weight, n):
        mono = SparsePolynomial(n, {tuple(i - 1 for i in I): 1})
        for q, c in z_to_f(ColoredPermutation(sigma, I)).items():
            lhs[q.colors] = lhs.get(q.colors, SparsePolynomial(n)) + mono * c
    for I in compositions_of(weight, n):
        rhs = SparsePolynomial.constant(n)
        for s, i in enumerate(I):
            form = SparsePolynomial.linear(n, {s: 1, s + 1: -1} if s + 1 < n else {s: 1})
            rhs = rhs * form ** (i - 1)
        if lhs.get(I, SparsePolynomial(n)) != rhs:
            return False
    return True
