"""Shuffle-type bases of QSym: the recursive Y basis, the matrices C and D, and basis changes.

Index conventions (fixed by the printed tables):

* ``y_matrix(n, k)[I, J]`` is the coefficient of ``W_I`` in ``Y_J``;
* ``c_matrix(n, k)[I, J] = c_IJ`` is the coefficient of ``V_I`` in ``X_J``;
* ``d_matrix(n, k)[I, J]`` is the coefficient of ``U_I`` in ``Z_J``, and
  ``D = transpose(C^-1)``.

Hence ``U_I = sum_J c_IJ Z_J`` and ``Z_J = sum_I d_IJ U_I``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType

from .combinatorics import (
    Composition,
    anti_lyndon_factors,
    composition_of_word,
    compositions_of,
    is_anti_lyndon,
    word_of_composition,
)
from .freealg import project_p, words_to_compositions, y_product_word
from .linalg import (
    LinearCombination,
    TransitionMatrix,
    add,
    bilinear_extension,
    linear_extension,
    matrix_invert,
    scale,
)
from .polynomial import SparsePolynomial
from .shuffles import quasi_shuffle, shuffle, shuffle_many, shuffle_product


class RouteDisagreement(AssertionError):
    """Two independent constructions of the same matrix differ."""


def binomial(p: int, q: int) -> int:
    """Binomial coefficient that is zero when ``q > p``, or ``p < 0``, or ``q < 0``."""
    if q < 0 or p < 0 or q > p:
        return 0
    return factorial(p) // (factorial(q) * factorial(p - q))


# --- the recursive Y basis ---------------------------------------------------

@dataclass(frozen=True)
class YBasisTable:
    """``table[I]`` is ``Y_I`` as a combination of compositions ``J`` (standing for ``W_J``)."""

    n: int
    table: Mapping[Composition, LinearCombination]

    def __getitem__(self, parts: Composition) -> LinearCombination:
        return self.table[tuple(parts)]

    def word_element(self, parts: Composition) -> LinearCombination:
        """``Y_I`` as an element of the shuffle algebra on ``a, b``."""
        return self.table[tuple(parts)].map_keys(word_of_composition)


@lru_cache(maxsize=None)
def build_y_basis(n: int) -> YBasisTable:
    """Solve the triangular system making ``Y_I Y_J = sum_K <K | I sh J> Y_K`` in degree ``n``.

    Anti-Lyndon compositions get ``Y_L = W_L``.  Any other ``I`` factors as
    ``L_1 >= ... >= L_m`` through the Lyndon factorization of ``W_I``; the
    composition shuffle ``L_1 sh ... sh L_m`` contains ``I`` with coefficient
    ``prod m_t!`` and otherwise only compositions ``K > I``, which are solved
    first because compositions are processed in decreasing order.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    solved: dict[Composition, LinearCombination] = {}
    for I in sorted(compositions_of(n), reverse=True):
        if is_anti_lyndon(I):
            solved[I] = LinearCombination.monomial(word_of_composition(I))
            continue
        factors = anti_lyndon_factors(I)
        lhs = shuffle_many(*(word_of_composition(L) for L in factors))
        expansion = shuffle_many(*factors)
        lead = expansion[I]
        if lead == 0:
            raise AssertionError(f"zero leading coefficient while solving for Y{I}")
        rest = [scale(-c, solved[K]) for K, c in expansion.items() if K != I]
        if any(K <= I for K in expansion if K != I):
            raise AssertionError(f"triangularity violated at {I}")
        y = scale(Fraction(1, lead), add(lhs, *rest))
        if any(not isinstance(c, int) for c in y.values()):
            raise AssertionError(f"Y{I} has a non-integral coefficient")
        solved[I] = y
    table = {I: solved[I].map_keys(composition_of_word) for I in compositions_of(n)}
    return YBasisTable(n, MappingProxyType(table))


@lru_cache(maxsize=None)
def y_matrix(n: int, k: int) -> TransitionMatrix:
    """Entry ``(I, J)``: coefficient of ``W_I`` in ``Y_J``."""
    table = build_y_basis(n)
    return TransitionMatrix.from_function(compositions_of(n, k), lambda I, J: table[J][I])


# --- the matrices C and D ----------------------------------------------------

def c_entry(I: Composition, J: Composition) -> int:
    """``c_IJ = prod_s binom(j_1 + ... + j_s - (i_1 + ... + i_{s-1}) - 1, i_s - 1)``."""
    if sum(I) != sum(J) or len(I) != len(J):
        return 0
    out, pi, pj = 1, 0, 0
    for i, j in zip(I, J):
        pj += j
        out *= binomial(pj - pi - 1, i - 1)
        pi += i
        if not out:
            return 0
    return out


@lru_cache(maxsize=None)
def c_matrix(n: int, k: int) -> TransitionMatrix:
    return TransitionMatrix.from_function(compositions_of(n, k), c_entry)


def _monomial_key(parts: Composition) -> tuple[int, ...]:
    return tuple(p - 1 for p in parts)


def _composition_of_exponents(e: tuple[int, ...]) -> Composition:
    return tuple(x + 1 for x in e)


def column_expansion(J: Composition) -> LinearCombination:
    """Expand ``prod_s (x_s + ... + x_k)^(j_s - 1)``; the coefficient of
    ``prod_s x_s^(i_s - 1)`` is returned under key ``I``."""
    k = len(J)
    if k == 0:
        raise ValueError("J must be nonempty")
    poly = SparsePolynomial.constant(k)
    for s, j in enumerate(J):
        for _ in range(j - 1):
            poly = poly.times_variable_sum(range(s, k))
    return LinearCombination((_composition_of_exponents(e), c) for e, c in poly.terms.items())


def d_row_expansion(I: Composition) -> LinearCombination:
    """Expand ``prod_s (y_s - y_{s+1})^(i_s - 1)`` with ``y_{k+1} = 0``; key ``J`` carries
    the coefficient of ``prod_s y_s^(j_s - 1)``."""
    k = len(I)
    if k == 0:
        raise ValueError("I must be nonempty")
    poly = SparsePolynomial.constant(k)
    for s, i in enumerate(I):
        form = SparsePolynomial.linear(k, {s: 1, s + 1: -1} if s + 1 < k else {s: 1})
        poly = poly * form ** (i - 1)
    return LinearCombination((_composition_of_exponents(e), c) for e, c in poly.terms.items())


def d_matrix_by_inversion(n: int, k: int) -> TransitionMatrix:
    return matrix_invert(c_matrix(n, k)).transpose()


def d_matrix_by_expansion(n: int, k: int) -> TransitionMatrix:
    index = compositions_of(n, k)
    rows = {I: d_row_expansion(I) for I in index}
    return TransitionMatrix.from_function(index, lambda I, J: rows[I][J])


def d_matrix_by_projection(n: int, k: int) -> TransitionMatrix:
    """Row ``I`` read from ``p(Y^I) = sum_J d_IJ W_J`` in the free algebra."""
    index = compositions_of(n, k)
    rows = {I: words_to_compositions(project_p(y_product_word(I))) for I in index}
    return TransitionMatrix.from_function(index, lambda I, J: rows[I][J])


def c_matrix_by_expansion(n: int, k: int) -> TransitionMatrix:
    index = compositions_of(n, k)
    cols = {J: column_expansion(J) for J in index}
    return TransitionMatrix.from_function(index, lambda I, J: cols[J][I])


D_ROUTES = {
    "inversion": d_matrix_by_inversion,
    "expansion": d_matrix_by_expansion,
    "projection": d_matrix_by_projection,
}


@lru_cache(maxsize=None)
def d_matrix(n: int, k: int) -> TransitionMatrix:
    """``D`` for the ``(n, k)`` block, computed by all three routes, which must agree."""
    results = {name: route(n, k) for name, route in D_ROUTES.items()}
    reference = results["inversion"]
    for name, m in results.items():
        if m != reference:
            raise RouteDisagreement(f"D({n},{k}): route {name!r} disagrees with inversion")
    return reference


def d_entry(I: Composition, J: Composition) -> int:
    if sum(I) != sum(J) or len(I) != len(J):
        return 0
    return d_matrix(sum(I), len(I))[I, J]


# --- basis conversions and products -----------------------------------------

def convert_U_to_Z(I: Composition) -> LinearCombination:
    """``U_I = sum_J c_IJ Z_J``."""
    I = tuple(I)
    if not I:
        return LinearCombination.monomial(())
    return c_matrix(sum(I), len(I)).row(I)


def convert_Z_to_U(J: Composition) -> LinearCombination:
    """``Z_J = sum_I d_IJ U_I``."""
    J = tuple(J)
    if not J:
        return LinearCombination.monomial(())
    return d_matrix(sum(J), len(J)).column(J)


def u_to_z(x: LinearCombination) -> LinearCombination:
    return linear_extension(convert_U_to_Z, x)


def z_to_u(x: LinearCombination) -> LinearCombination:
    return linear_extension(convert_Z_to_U, x)


def m_product(I: Composition, J: Composition) -> LinearCombination:
    """Product of quasi-monomial functions: ``M_I M_J = sum_K <K | I qsh J> M_K``."""
    return quasi_shuffle(I, J)


def u_product(I: Composition, J: Composition) -> LinearCombination:
    """``U_I U_J`` is the shuffle of compositions."""
    return shuffle(tuple(I), tuple(J))


def z_product(I: Composition, J: Composition) -> LinearCombination:
    """``Z_I Z_J = sum_K <W_K | W_I sh W_J> Z_K``."""
    return shuffle(word_of_composition(I), word_of_composition(J)).map_keys(composition_of_word)


def z_product_via_u(I: Composition, J: Composition) -> LinearCombination:
    """Same product computed by converting to ``U``, shuffling compositions, converting back."""
    return u_to_z(bilinear_extension(u_product, convert_Z_to_U(I), convert_Z_to_U(J)))


def z_product_lincomb(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return bilinear_extension(z_product, x, y)


def y_shuffle_check(I: Composition, J: Composition) -> bool:
    """``Y_I sh Y_J == sum_K <K | I sh J> Y_K`` in the shuffle algebra on ``a, b``."""
    n = sum(I) + sum(J)
    table = build_y_basis(n)
    lhs = shuffle_product(build_y_basis(sum(I)).word_element(I), build_y_basis(sum(J)).word_element(J))
    rhs = add(*(scale(c, table.word_element(K)) for K, c in shuffle(tuple(I), tuple(J)).items()))
    return lhs == rhs
