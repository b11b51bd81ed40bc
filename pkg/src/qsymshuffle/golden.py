"""Printed transition matrices shipped as package data, and the text layout used to render them."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .linalg import TransitionMatrix


@lru_cache(maxsize=None)
def golden_matrices() -> tuple[dict, ...]:
    with resources.files("qsymshuffle").joinpath("data/golden_matrices.json").open() as fh:
        return tuple(json.load(fh)["matrices"])


def golden_matrix(kind: str, n: int, k: int) -> dict | None:
    for m in golden_matrices():
        if (m["kind"], m["n"], m["k"]) == (kind, n, k):
            return m
    return None


def matrix_tokens(m: TransitionMatrix) -> list[list[str]]:
    return [["." if x == 0 else str(x) for x in row] for row in m.entries]


def render_tokens(rows: list[list[str]]) -> str:
    """Right-align every entry to the widest one; one row per line."""
    width = max((len(t) for row in rows for t in row), default=1)
    return "".join(" ".join(t.rjust(width) for t in row) + "\n" for row in rows)


def render_matrix_text(m: TransitionMatrix) -> str:
    return render_tokens(matrix_tokens(m))


# Pairs S(211) from the worked coproduct example; negative = overlined letter.
# Only the pairs with 1 on the left are printed; the others are their mirrors.
S211_PRINTED = (
    ((1, -2, -3), (-4,)), ((1, -2, -4), (-3,)), ((1, -2), (-3, -4)),
    ((-2, 1, -3), (-4,)), ((1, -3, -4), (-2,)), ((1, -3), (-2, -4)),
    ((-2, 1, -4), (-3,)), ((-3, 1, -4), (-2,)), ((1, -4), (-2, -3)),
)

LYNDON_6_PRINTED = ("aaaaab", "aaaabb", "aaabab", "aaabbb", "aababb", "aabbab", "aabbbb", "ababbb", "abbbbb")
LYNDON_6_COMPOSITIONS_PRINTED = ("6", "51", "42", "411", "321", "312", "3111", "2211", "21111")
