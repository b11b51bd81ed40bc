"""Realization in the free algebra on two letters, and noncommutative Bell polynomials.

Elements of the free algebra K<a, b> are :class:`LinearCombination` over
``str`` words; the product is concatenation.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .combinatorics import Composition, composition_of_word, compositions_of
from .linalg import LinearCombination, add, linear_extension, scale
from .shuffles import concatenation_product, unshuffle

A = LinearCombination.monomial("a")
B = LinearCombination.monomial("b")
ONE = LinearCombination.monomial("")


def bracket(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return concatenation_product(x, y) - concatenation_product(y, x)


def power(x: LinearCombination, k: int) -> LinearCombination:
    out = ONE
    for _ in range(k):
        out = concatenation_product(out, x)
    return out


@lru_cache(maxsize=None)
def ad_word(n: int) -> LinearCombination:
    """``ad_a^(n-1) b = [a, [a, ..., [a, b]...]]`` expanded; ``Y_n`` in the free algebra."""
    if n < 1:
        raise ValueError("n must be positive")
    x = B
    for _ in range(n - 1):
        x = bracket(A, x)
    return x


def ad_word_closed(n: int) -> LinearCombination:
    """``sum_k (-1)^k binom(n-1, k) a^(n-1-k) b a^k``."""
    return LinearCombination(("a" * (n - 1 - k) + "b" + "a" * k, (-1) ** k * comb(n - 1, k))
                             for k in range(n))


def psi_word(n: int) -> LinearCombination:
    """``Psi_n = ad_a^(n-1) b / (n-1)!``."""
    return ad_word(n) / factorial(n - 1)


def y_product_word(parts: Composition) -> LinearCombination:
    """``Y^I = Y_{i1} Y_{i2} ...`` with ``Y_n = ad_a^(n-1) b``."""
    out = ONE
    for p in parts:
        out = concatenation_product(out, ad_word(p))
    return out


def project_p(x: LinearCombination) -> LinearCombination:
    """Kill every word ending with ``a`` (the empty word survives)."""
    return x.filter(lambda w: not w.endswith("a"))


def coproduct(x: LinearCombination) -> LinearCombination:
    """Coproduct of K<a,b> for which the letters are primitive (dual to the shuffle)."""
    return linear_extension(unshuffle, x)


def delta_prime(x: LinearCombination) -> LinearCombination:
    """``(p tensor p) o Delta``."""
    return coproduct(x).filter(lambda uv: not uv[0].endswith("a") and not uv[1].endswith("a"))


def words_to_compositions(x: LinearCombination) -> LinearCombination:
    return x.map_keys(composition_of_word)


# --- noncommutative Bell polynomials -----------------------------------------

@lru_cache(maxsize=None)
def bell_polynomial(n: int) -> LinearCombination:
    """Coefficients ``beta_I`` of ``Y^I`` in ``B_n``.

    Uses ``B_{n+1} = sum_k binom(n, k) B_{n-k} Y_{k+1}`` with ``B_0 = 1``; a
    composition key ``I`` stands for the noncommutative monomial ``Y^I``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return LinearCombination.monomial(())
    m = n - 1
    return add(*(scale(comb(m, k), bell_polynomial(m - k).map_keys(lambda I, k=k: I + (k + 1,)))
                 for k in range(m + 1)))


def bell_closed_coefficient(parts: Composition) -> int:
    """``prod_{s>=2} binom(i_1 + ... + i_s - 1, i_1 + ... + i_{s-1})``."""
    out, prefix = 1, 0
    for s, p in enumerate(parts):
        if s:
            out *= comb(prefix + p - 1, prefix)
        prefix += p
    return out


def bell_substitute(n: int) -> LinearCombination:
    """``B_n`` with ``Y_k -> ad_a^(k-1) b``, expanded in words."""
    return add(*(scale(c, y_product_word(I)) for I, c in bell_polynomial(n).items()))


def snab_word(n: int) -> LinearCombination:
    """``sum_k binom(n, k) (-1)^k (a + b)^(n-k) a^k``."""
    a_plus_b = A + B
    return add(*(scale((-1) ** k * comb(n, k), concatenation_product(power(a_plus_b, n - k), power(A, k)))
                 for k in range(n + 1)))


def L_operator(x: LinearCombination) -> LinearCombination:
    """``L = ad_a + b`` acting by ``x -> a x - x a + b x``."""
    return concatenation_product(A, x) - concatenation_product(x, A) + concatenation_product(B, x)


def L_power(n: int) -> LinearCombination:
    x = ONE
    for _ in range(n):
        x = L_operator(x)
    return x


def s_word(n: int) -> LinearCombination:
    """Unnormalized ``n! S_n`` in K<a, b>, computed from the closed binomial expansion."""
    return snab_word(n)


def s_normalized(n: int) -> LinearCombination:
    """``S_n = s_word(n) / n!``."""
    return s_word(n) / factorial(n)


def s_recursion_rhs(n: int) -> LinearCombination:
    """``sum_{k=0}^{n} S_{n-k} Psi_{k+1}``; equals ``(n+1) S_{n+1}``."""
    return add(*(concatenation_product(s_normalized(n - k), psi_word(k + 1)) for k in range(n + 1)))


def bell_row_sum_table(n: int) -> dict[Composition, int]:
    return {I: bell_polynomial(n)[I] for I in compositions_of(n)}
