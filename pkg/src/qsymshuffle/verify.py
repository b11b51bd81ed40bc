"""Named verification suites; each returns a :class:`VerificationReport`."""

from __future__ import annotations

import json
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from itertools import product

from . import basis, colored, freealg, moulds, wsym
from .combinatorics import (
    ColoredPermutation,
    composition_of_word,
    compositions_of,
    format_composition,
    is_anti_lyndon,
    is_lyndon,
    lyndon_factorization,
    lyndon_words,
    partition_of_signed_word,
    signed_word,
)
from .golden import (
    LYNDON_6_COMPOSITIONS_PRINTED,
    LYNDON_6_PRINTED,
    S211_PRINTED,
    golden_matrices,
    render_matrix_text,
    render_tokens,
)
from .linalg import matrix_invert


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    counterexample: object = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "counterexample": self.counterexample}


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, timing: bool = True) -> dict:
        out = {"suite": self.suite, "params": self.params, "passed": self.passed,
               "checks": [c.to_dict() for c in self.checks]}
        if timing:
            out["timing"] = {"elapsed_seconds": round(self.elapsed, 3)}
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True, default=str)


class _Check:
    """Accumulate cases; keep the first failure."""

    def __init__(self, name: str):
        self.result = CheckResult(name, True)

    def __call__(self, ok: bool, case) -> None:
        self.result.cases += 1
        if not ok and self.result.passed:
            self.result.passed = False
            self.result.counterexample = case


def stirling2(n: int, k: int) -> int:
    """``S(n, k)`` from ``S(n, k) = k S(n-1, k) + S(n-1, k-1)``."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k] if 0 <= k <= n else 0


def pascal_triangle(rows: int) -> list[list[int]]:
    """Rows ``0..rows`` of Pascal's triangle, by the additive rule only."""
    out = [[1]]
    for _ in range(rows):
        prev = out[-1]
        out.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return out


def blocks(max_n: int, min_n: int = 1) -> Iterator[tuple[int, int]]:
    for n in range(min_n, max_n + 1):
        for k in range(1, n + 1):
            yield n, k


def nonempty_pairs(max_total: int) -> Iterator[tuple[tuple, tuple]]:
    for a in range(1, max_total):
        for b in range(1, max_total - a + 1):
            for I in compositions_of(a):
                for J in compositions_of(b):
                    yield I, J


def colored_permutations(size: int, weight: int) -> Iterator[ColoredPermutation]:
    from itertools import permutations
    for sigma in permutations(range(1, size + 1)):
        for c in compositions_of(weight, size):
            yield ColoredPermutation(sigma, c)


def colored_pairs(max_arity: int, max_weight: int) -> Iterator[tuple[ColoredPermutation, ColoredPermutation]]:
    for n in range(1, max_arity):
        for m in range(1, max_arity - n + 1):
            for w1 in range(n, max_weight - m + 1):
                for w2 in range(m, max_weight - w1 + 1):
                    for p1 in colored_permutations(n, w1):
                        for p2 in colored_permutations(m, w2):
                            yield p1, p2


# --- suites ------------------------------------------------------------------

def suite_y_triangular(max_n: int = 8, **_) -> list[CheckResult]:
    tri, integral, support, law = (_Check("unitriangular"), _Check("integers"),
                                   _Check("support-J>=I"), _Check("shuffle-law"))
    for n, k in blocks(max_n):
        m = basis.y_matrix(n, k)
        tri(m.is_upper_unitriangular(), [n, k])
        integral(m.is_integral(), [n, k])
        table = basis.build_y_basis(n)
        for I in compositions_of(n, k):
            support(all(len(J) == len(I) and J >= I for J in table[I]), format_composition(I))
    for I, J in nonempty_pairs(min(max_n, 6)):
        law(basis.y_shuffle_check(I, J), [format_composition(I), format_composition(J)])
    return [c.result for c in (tri, integral, support, law)]


def suite_stirling(max_n: int = 8, **_) -> list[CheckResult]:
    ycheck, ccheck = _Check("y-block-sum"), _Check("c-block-sum")
    for n, k in blocks(max_n):
        s = stirling2(n, k)
        ycheck(basis.y_matrix(n, k).total() == s, [n, k])
        ccheck(basis.c_matrix(n, k).total() == s, [n, k])
    return [ycheck.result, ccheck.result]


def suite_c_routes(max_n: int = 7, **_) -> list[CheckResult]:
    count_vs_formula, expansion_vs_formula = _Check("counting=binomial"), _Check("expansion=binomial")
    for n in range(1, max_n + 1):
        counts = wsym.c_by_counting_table(n)
        for k in range(1, n + 1):
            c = basis.c_matrix(n, k)
            for I in c.index:
                for J in c.index:
                    count_vs_formula(counts.get((I, J), 0) == c[I, J],
                                     [format_composition(I), format_composition(J)])
            expansion_vs_formula(basis.c_matrix_by_expansion(n, k) == c, [n, k])
    return [count_vs_formula.result, expansion_vs_formula.result]


def suite_d_routes(max_n: int = 7, **_) -> list[CheckResult]:
    checks = {name: _Check(f"{name}=inversion") for name in ("expansion", "projection")}
    tri, inverse = _Check("upper-unitriangular"), _Check("transpose(D)*C=I")
    for n, k in blocks(max_n):
        ref = basis.d_matrix_by_inversion(n, k)
        checks["expansion"](basis.d_matrix_by_expansion(n, k) == ref, [n, k])
        checks["projection"](basis.d_matrix_by_projection(n, k) == ref, [n, k])
        tri(ref.is_upper_unitriangular() and ref.is_integral(), [n, k])
        inverse((ref.transpose() @ basis.c_matrix(n, k)).is_identity(), [n, k])
    return [c.result for c in (*checks.values(), tri, inverse)]


def suite_z_shuffle(max_n: int = 7, **_) -> list[CheckResult]:
    law, positivity = _Check("via-U=binary-rule"), _Check("nonnegative-integers")
    for I, J in nonempty_pairs(max_n):
        direct = basis.z_product(I, J)
        law(direct == basis.z_product_via_u(I, J), [format_composition(I), format_composition(J)])
        positivity(all(isinstance(c, int) and c > 0 for c in direct.values()),
                   [format_composition(I), format_composition(J)])
    return [law.result, positivity.result]


def suite_wsym(max_n: int = 6, **_) -> list[CheckResult]:
    theorem, example = _Check("coproduct-theorem"), _Check("S(211)-pairs")
    for n in range(1, max_n + 1):
        for J in compositions_of(n):
            r = wsym.verify_theorem_coproduct(J)
            theorem(r.passed, {"J": format_composition(J), **r.witness})
    printed = set()
    for left, right in S211_PRINTED:
        a, b = partition_of_signed_word(signed_word(left)), partition_of_signed_word(signed_word(right))
        printed |= {(a, b), (b, a)}
    computed = wsym.s_pairs_by_splitting((2, 1, 1))
    example(computed == printed and len(computed) == 18, {"computed": len(computed), "printed": len(printed)})
    example(wsym.s_pairs_by_unshuffle((2, 1, 1)) == printed, "unshuffle route")
    return [theorem.result, example.result]


def suite_bell(max_n: int = 7, **_) -> list[CheckResult]:
    rows, closed, pascal, ones = (_Check("recursion=C-row-sums"), _Check("recursion=closed-product"),
                                  _Check("k=2-pascal"), _Check("k=n-1-all-ones"))
    for n in range(1, max_n + 1):
        b = freealg.bell_polynomial(n)
        for I in compositions_of(n):
            row_sum = sum(basis.c_matrix(n, len(I)).row(I).values())
            rows(b[I] == row_sum, format_composition(I))
            closed(b[I] == freealg.bell_closed_coefficient(I), format_composition(I))
        if n >= 3:
            c2 = basis.c_matrix(n, 2)
            tri = pascal_triangle(n - 2)
            pascal(all(c2[I, J] == (tri[J[0] - 1][I[0] - 1] if I[0] <= J[0] else 0)
                       for I in c2.index for J in c2.index), [n, 2])
            c = basis.c_matrix(n, n - 1)
            size = c.size
            ones(all(x == (1 if j <= i else 0) for i, row in enumerate(c.entries)
                     for j, x in enumerate(row)) and size == n - 1, [n, n - 1])
    return [c.result for c in (rows, closed, pascal, ones)]


def suite_snab(max_n: int = 7, **_) -> list[CheckResult]:
    subst, lop, rec = _Check("snab=bell-substitution"), _Check("snab=L^n(1)"), _Check("(n+1)S_{n+1}-recursion")
    for n in range(0, max_n + 1):
        s = freealg.s_word(n)
        subst(s == freealg.bell_substitute(n), n)
        lop(s == freealg.L_power(n), n)
        if n + 1 <= max_n:
            rec(freealg.s_normalized(n + 1) * (n + 1) == freealg.s_recursion_rhs(n), n)
    return [c.result for c in (subst, lop, rec)]


def suite_guo_xie(max_n: int = 4, max_weight: int = 6, convention: str = "suffix", **_) -> list[CheckResult]:
    check = _Check(f"mould-identity[{convention}]")
    for p1, p2 in colored_pairs(max_n, max_weight):
        r = moulds.verify_mould_identity(p1, p2, convention)
        check(r.passed, {"left": str(p1), "right": str(p2),
                         "difference": repr(r.difference) if r.difference is not None else None})
    ones = _Check("all-ones=shifted-shuffle")
    for p1, p2 in colored_pairs(max_n, max_n):
        if set(p1.colors) == {1} and set(p2.colors) == {1}:
            ones(moulds.guo_xie_product(p1, p2, convention) == colored.colored_F_product(p1, p2),
                 [str(p1), str(p2)])
    return [check.result, ones.result]


def suite_colored(max_n: int = 4, max_weight: int = 5, convention: str = colored.Z_CONVENTION,
                  **_) -> list[CheckResult]:
    routes, mult = _Check(f"epsilon-rule[{convention}]=via-F"), _Check("reversed-realization-multiplicative")
    for p1, p2 in colored_pairs(max_n, max_weight):
        case = [str(p1), str(p2)]
        routes(colored.colored_Z_product_by_epsilon(p1, p2, convention)
               == colored.colored_Z_product_via_F(p1, p2), case)
        mult(colored.is_multiplicative_on(p1, p2), case)
    gen = _Check("generating-identity")
    from itertools import permutations
    for n in range(1, min(max_n, 3) + 1):
        for sigma in permutations(range(1, n + 1)):
            for w in range(n, 7):
                gen(colored.generating_identity_holds(sigma, w), [list(sigma), w])
    return [routes.result, mult.result, gen.result]


def suite_golden(**_) -> list[CheckResult]:
    check = _Check("printed-matrices")
    builders: dict[str, Callable] = {"y": basis.y_matrix, "c": basis.c_matrix, "d": basis.d_matrix}
    for g in golden_matrices():
        text = render_matrix_text(builders[g["kind"]](g["n"], g["k"]))
        check(text == render_tokens(g["rows"]), {"kind": g["kind"], "n": g["n"], "k": g["k"], "got": text})
    return [check.result]


def suite_lyndon(max_n: int = 12, **_) -> list[CheckResult]:
    printed, count, factor = _Check("length-6-lists"), _Check("anti-lyndon-count"), _Check("factorization")
    words = lyndon_words(6)
    printed(tuple(words) == LYNDON_6_PRINTED, words)
    encoded = tuple("".join(map(str, composition_of_word(w))) for w in words)
    printed(encoded == LYNDON_6_COMPOSITIONS_PRINTED, encoded)
    for n in range(1, max_n + 1):
        anti = sum(1 for I in compositions_of(n) if is_anti_lyndon(I))
        count(anti == sum(1 for w in lyndon_words(n) if w.endswith("b")), n)
    for n in range(1, min(max_n, 10) + 1):
        for bits in product("ab", repeat=n):
            w = "".join(bits)
            fs = lyndon_factorization(w)
            ok = "".join(fs) == w and all(map(is_lyndon, fs)) and all(x >= y for x, y in zip(fs, fs[1:]))
            if w.endswith("b"):
                ok = ok and all(f.endswith("b") for f in fs)
            factor(ok, w)
    return [printed.result, count.result, factor.result]


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "y-triangular": suite_y_triangular,
    "stirling": suite_stirling,
    "c-three-routes": suite_c_routes,
    "d-three-routes": suite_d_routes,
    "z-shuffle": suite_z_shuffle,
    "wsym-coproduct": suite_wsym,
    "bell": suite_bell,
    "snab": suite_snab,
    "guo-xie": suite_guo_xie,
    "colored-theorem": suite_colored,
    "golden-matrices": suite_golden,
    "lyndon": suite_lyndon,
}


def run_suite(name: str, **params) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    params = {k: v for k, v in params.items() if v is not None}
    start = time.perf_counter()
    checks = SUITES[name](**params)
    return VerificationReport(name, params, checks, time.perf_counter() - start)
