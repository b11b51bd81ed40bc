"""Set-partition side: the ``M_pi`` basis of WSym by index, its coproduct, and the sums ``X_J``.

``M_pi`` is represented only by its index ``pi``; an element of WSym is a
:class:`LinearCombination` over :class:`SetPartition`, and tensors are keyed
by pairs of set partitions.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import accumulate, combinations

from .combinatorics import (
    Composition,
    SetPartition,
    SignedWord,
    composition_of_word,
    sigma_word,
    sp_enumerate,
    sp_of_signed_word,
    stat_C,
    stat_K,
    word_of_composition,
)
from .linalg import LinearCombination, linear_extension
from .shuffles import unshuffle

EMPTY = SetPartition(())


def set_partitions(n: int, k: int | None = None) -> Iterator[SetPartition]:
    """Partitions of ``{1..n}`` (with exactly ``k`` blocks if given), by restricted growth strings."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        if k in (None, 0):
            yield EMPTY
        return

    def grow(i: int, blocks: list[list[int]]):
        if k is not None and len(blocks) + (n - i + 1) < k:
            return
        if i > n:
            if k is None or len(blocks) == k:
                yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            yield from grow(i + 1, blocks)
            b.pop()
        if k is None or len(blocks) < k:
            blocks.append([i])
            yield from grow(i + 1, blocks)
            blocks.pop()

    yield from grow(1, [])


def x_element(J: Composition) -> LinearCombination:
    """``X_J = sum of M_pi over pi with C(pi) = J``: block maxima are the partial sums of ``J``."""
    J = tuple(J)
    n = sum(J)
    return LinearCombination((pi, 1) for pi in sp_enumerate(range(1, n + 1), accumulate(J)))


def x_element_by_filter(J: Composition) -> LinearCombination:
    J = tuple(J)
    return LinearCombination((pi, 1) for pi in set_partitions(sum(J), len(J)) if stat_C(pi) == J)


def co_pairs(pi: SetPartition) -> list[tuple[SetPartition, SetPartition]]:
    """All ordered splittings of the blocks of ``pi`` into two sub-collections (no relabelling)."""
    blocks = pi.blocks
    out = []
    for r in range(len(blocks) + 1):
        for left in combinations(range(len(blocks)), r):
            chosen = set(left)
            out.append((SetPartition(tuple(blocks[i] for i in left)),
                        SetPartition(tuple(b for i, b in enumerate(blocks) if i not in chosen))))
    return out


def _m_coproduct(pi: SetPartition) -> LinearCombination:
    return LinearCombination(((a.standardize(), b.standardize()), 1) for a, b in co_pairs(pi))


def wsym_coproduct(x: LinearCombination) -> LinearCombination:
    """Coproduct of WSym: split the blocks, standardize each side."""
    return linear_extension(_m_coproduct, x)


def tensor(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return LinearCombination(((a, b), c * d) for a, c in x.items() for b, d in y.items())


def theorem_rhs(J: Composition) -> LinearCombination:
    """``sum_{K,L} <W_J | W_K sh W_L> X_K tensor X_L`` expanded over partition pairs."""
    acc = LinearCombination()
    for (u, v), c in unshuffle(word_of_composition(J)).items():
        if u.endswith("a") or v.endswith("a"):
            continue
        K, L = composition_of_word(u), composition_of_word(v)
        acc = acc + tensor(x_element(K), x_element(L)) * c
    return acc


@dataclass
class CoproductCheck:
    composition: Composition
    passed: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def verify_theorem_coproduct(J: Composition) -> CoproductCheck:
    """Compare the coproduct of ``X_J`` in WSym with the binary unshuffle of ``W_J``."""
    J = tuple(J)
    lhs = wsym_coproduct(x_element(J))
    rhs = theorem_rhs(J)
    if lhs == rhs:
        return CoproductCheck(J, True)
    diff = lhs - rhs
    key = min(diff, key=lambda ab: (str(ab[0]), str(ab[1])))
    return CoproductCheck(J, False, {"pair": (str(key[0]), str(key[1])),
                                     "lhs": lhs[key], "rhs": rhs[key]})


def s_pairs_by_splitting(J: Composition) -> set[tuple[SetPartition, SetPartition]]:
    """Nontrivial unstandardized splittings ``Co(pi)`` over all ``pi`` in ``X_J``."""
    out = set()
    for pi in x_element(J):
        out.update((a, b) for a, b in co_pairs(pi) if a.blocks and b.blocks)
    return out


def s_pairs_by_unshuffle(J: Composition) -> set[tuple[SetPartition, SetPartition]]:
    """Unshuffle the signed word ``sigma_J`` into pairs ending with signed letters, decode with SP."""
    w: SignedWord = sigma_word(J)
    out = set()
    for (u, v), _ in unshuffle(w).items():
        if not u or not v or not u[-1].signed or not v[-1].signed:
            continue
        out.update((a, b) for a in sp_of_signed_word(u) for b in sp_of_signed_word(v))
    return out


def c_by_counting(I: Composition, J: Composition) -> int:
    """``#{pi : K(pi) = I and C(pi) = J}``."""
    I, J = tuple(I), tuple(J)
    if sum(I) != sum(J):
        raise ValueError("I and J must have the same degree")
    if len(I) != len(J):
        return 0
    return sum(1 for pi in x_element(J) if stat_K(pi) == I)


def c_by_counting_table(n: int) -> dict[tuple[Composition, Composition], int]:
    """All nonzero counts in degree ``n`` by one pass over the set partitions of ``n``."""
    counts: dict = {}
    for pi in set_partitions(n):
        key = (stat_K(pi), stat_C(pi))
        counts[key] = counts.get(key, 0) + 1
    return counts
