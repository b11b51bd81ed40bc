"""Command line: ``qsymshuffle {matrices,product,bell,lyndon,verify}``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import basis, colored, freealg, moulds
from .combinatorics import (
    ColoredPermutation,
    composition_of_word,
    format_composition,
    lyndon_words,
    parse_composition,
)
from .golden import render_matrix_text
from .linalg import LinearCombination
from .shuffles import shifted_colored_shuffle
from .verify import SUITES, run_suite

DEFAULT_CAP = 8

COMPOSITION_BASES = {
    "M": basis.m_product,
    "U": basis.u_product,
    "Z": basis.z_product,
}
COLORED_BASES = ("Fc", "Zc", "GX")


class UsageError(Exception):
    pass


def _number(c) -> str:
    return str(c)


def _sort_key(key):
    """Descending lex order of the binary word W_I is ascending lex order of I
    (within one degree); colored indices sort by colors, then permutation."""
    if isinstance(key, ColoredPermutation):
        return (key.colors, key.sigma)
    return tuple(key)


def render_lincomb(x: LinearCombination, basis_name: str) -> str:
    """Terms in descending lex order of their binary words: ``Z[1,2,1] + 3·Z[2,1,1]``."""
    if not x:
        return "0"
    out = []
    for key, c in sorted(x.items(), key=lambda kv: _sort_key(kv[0])):
        label = f"{basis_name}[{key if isinstance(key, ColoredPermutation) else format_composition(key)}]"
        mag = abs(c)
        term = label if mag == 1 else f"{mag}·{label}"
        if not out:
            out.append(term if c > 0 else "-" + term)
        else:
            out.append(("+ " if c > 0 else "- ") + term)
    return " ".join(out)


def lincomb_json(x: LinearCombination) -> list[dict]:
    terms = []
    for key, c in sorted(x.items(), key=lambda kv: _sort_key(kv[0])):
        if isinstance(key, ColoredPermutation):
            index = {"sigma": list(key.sigma), "colors": list(key.colors)}
        else:
            index = list(key)
        terms.append({"index": index, "coefficient": _number(c)})
    return terms


def cmd_matrices(args) -> int:
    n, k = args.n, args.k
    if not (1 <= k <= n <= args.max_n):
        raise UsageError(f"need 1 <= k <= n <= {args.max_n}, got n={n}, k={k}")
    builder = {"c": basis.c_matrix, "d": basis.d_matrix, "y": basis.y_matrix}[args.kind]
    m = builder(n, k)
    if args.format == "json":
        print(json.dumps({"n": n, "k": k, "kind": args.kind, "order": [list(I) for I in m.index],
                          "entries": [[_number(x) for x in row] for row in m.entries]}))
    else:
        sys.stdout.write(render_matrix_text(m))
    return 0


def _parse_operand(text: str, colored_basis: bool):
    try:
        if colored_basis:
            return ColoredPermutation.parse(text)
        if ";" in text:
            raise ValueError(f"operand {text!r} is a colored permutation; the basis expects a composition")
        return parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_product(args) -> int:
    colored_basis = args.basis in COLORED_BASES
    left = _parse_operand(args.left, colored_basis)
    right = _parse_operand(args.right, colored_basis)
    if args.basis in COMPOSITION_BASES:
        if args.convention:
            raise UsageError("--convention only applies to colored bases")
        result = COMPOSITION_BASES[args.basis](left, right)
    elif args.basis == "Fc":
        result = shifted_colored_shuffle(left, right)
    elif args.basis == "Zc":
        result = colored.colored_Z_product(left, right, args.convention or colored.Z_CONVENTION)
    else:
        result = moulds.guo_xie_product(left, right, args.convention or "suffix")
    if args.format == "json":
        print(json.dumps({"basis": args.basis, "left": args.left, "right": args.right,
                          "terms": lincomb_json(result)}))
    else:
        print(render_lincomb(result, args.basis))
    return 0


def cmd_bell(args) -> int:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    b = freealg.bell_polynomial(args.n)
    if args.format == "json":
        print(json.dumps({"n": args.n, "terms": lincomb_json(b)}))
    else:
        print(render_lincomb(b, "Y^"))
    return 0


def cmd_lyndon(args) -> int:
    if args.length < 1:
        raise UsageError("length must be positive")
    words = lyndon_words(args.length)
    rows = [(w, composition_of_word(w) if w.endswith("b") else None) for w in words]
    if args.format == "json":
        print(json.dumps({"length": args.length,
                          "words": [{"word": w, "composition": list(c) if c else None} for w, c in rows]}))
    else:
        for w, c in rows:
            print(w if c is None else f"{w}  {''.join(map(str, c)) if max(c) < 10 else format_composition(c)}")
    return 0


def cmd_verify(args) -> int:
    params = {"max_n": args.max_n, "max_weight": args.max_weight}
    if args.convention:
        params["convention"] = args.convention
    report = run_suite(args.suite, **params)
    print(report.to_json(timing=not args.no_timing))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsymshuffle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrices", help="print a transition matrix block")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=("c", "d", "y"), required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-n", type=int, default=DEFAULT_CAP, dest="max_n")
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("product", help="multiply two basis elements")
    p.add_argument("--basis", choices=(*COMPOSITION_BASES, *COLORED_BASES), required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--convention", choices=moulds.CONVENTIONS, default=None)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("bell", help="noncommutative Bell polynomial B_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("lyndon", help="Lyndon words on a<b and their compositions")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_lyndon)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--max-weight", type=int, default=None, dest="max_weight")
    p.add_argument("--convention", choices=moulds.CONVENTIONS, default=None)
    p.add_argument("--no-timing", action="store_true", help="omit the timing field")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except basis.RouteDisagreement as exc:
        print(f"{parser.prog}: verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
