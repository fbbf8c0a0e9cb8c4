"""Command line front end.

Exit codes: 0 when everything holds, 1 when a verification fails,
2 for usage errors (bad indices, poles under ``--alpha``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .compositions import (
    check_composition,
    constants,
    format_composition,
    is_partition,
    parse_composition,
)
from .exactfield import AlphaFraction, PoleError
from .jack import build_E, integral_F, monomial_symmetric, symmetric_J, symmetric_P
from .pairing import g_basis, pair, pair_symmetric, q_basis
from .polyring import SparsePoly
from .suites import SUITES, verify_all_for
from .textparse import ParseError, parse_fraction, parse_poly

COMPOSITION_KINDS = ("E", "F", "q")
PARTITION_KINDS = ("J", "P", "m", "g")


class UsageError(ValueError):
    pass


def _index(args, kind):
    if kind in PARTITION_KINDS:
        if args.comp is not None and args.partition is None:
            raise UsageError(f"{kind} is indexed by a partition; use --partition")
        text = args.partition
    else:
        text = args.comp if args.comp is not None else args.partition
    if text is None:
        raise UsageError("an index is required (--comp or --partition)")
    idx = parse_composition(text)
    n = args.n if args.n is not None else len(idx)
    if kind in PARTITION_KINDS:
        if not is_partition(idx):
            raise UsageError(f"{format_composition(idx)} is not a partition")
        if len(idx) > n:
            raise UsageError(f"partition longer than n={n}")
        idx = idx + (0,) * (n - len(idx))
    elif len(idx) != n:
        raise UsageError(f"composition {format_composition(idx)} does not have n={n} parts")
    return idx


def polynomial_of(kind: str, idx) -> SparsePoly:
    if kind == "E":
        return build_E(idx)
    if kind == "F":
        return integral_F(idx)
    if kind == "J":
        return symmetric_J(idx)
    if kind == "P":
        return symmetric_P(idx)
    if kind == "m":
        return monomial_symmetric(idx)
    if kind == "q":
        return q_basis(len(idx), sum(idx)).polys[idx]
    if kind == "g":
        return g_basis(len(idx), sum(idx)).polys[idx]
    raise UsageError(f"unknown kind {kind!r}")


def _specialize_poly(p: SparsePoly, a) -> SparsePoly:
    return SparsePoly(p.n, {e: AlphaFraction.from_rational(v) for e, v in p.specialize_alpha(a).items()})


def _scalar(v: AlphaFraction, a):
    return v if a is None else AlphaFraction.from_rational(v(a))


def emit_poly(p: SparsePoly, fmt: str, a=None) -> str:
    if a is not None:
        p = _specialize_poly(p, a)
    if fmt == "json":
        return p.to_json()
    if fmt == "latex":
        return p.to_latex()
    return p.to_text()


def emit_scalar(v: AlphaFraction, fmt: str, a=None) -> str:
    v = _scalar(v, a)
    return v.to_latex() if fmt == "latex" else str(v)


def cmd_build(args) -> int:
    idx = _index(args, args.kind)
    print(emit_poly(polynomial_of(args.kind, idx), args.format, args.alpha))
    return 0


def cmd_constants(args) -> int:
    eta = _index(args, "F")
    table = {k: _scalar(v, args.alpha) for k, v in constants(eta).as_dict().items()}
    if args.format == "json":
        print(json.dumps({k: str(v) for k, v in table.items()}, ensure_ascii=False))
    else:
        for k, v in table.items():
            print(f"{k}={v.to_latex() if args.format == 'latex' else v}")
    return 0


def _operand(text: str, n: int) -> tuple[str, SparsePoly]:
    """``KIND:index`` (e.g. ``F:1,0``) or a polynomial in plain text."""
    if ":" in text:
        kind, _, body = text.partition(":")
        if kind not in COMPOSITION_KINDS + PARTITION_KINDS:
            raise UsageError(f"unknown kind {kind!r}")
        idx = check_composition(parse_composition(body))
        if kind in PARTITION_KINDS:
            idx = idx + (0,) * (n - len(idx))
        if len(idx) != n:
            raise UsageError(f"index {body} does not fit n={n}")
        return kind, polynomial_of(kind, idx)
    return "poly", parse_poly(text, n)


def cmd_pair(args) -> int:
    _, f = _operand(args.f, args.n)
    _, g = _operand(args.g, args.n)
    cap = max(f.degree(), g.degree(), 0)
    if args.symmetric:
        value = pair_symmetric(f, g, g_basis(args.n, cap))
    else:
        value = pair(f, g, q_basis(args.n, cap))
    print(emit_scalar(value, args.format, args.alpha))
    return 0


def cmd_verify(args) -> int:
    r = None
    if args.r is not None:
        r = parse_fraction(args.r)
    rep = verify_all_for(args.suite, args.n, args.degree, r=r, jobs=args.jobs)
    text = rep.to_json(indent=1) if args.format == "json" else rep.summary()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(rep.summary().splitlines()[0])
    else:
        print(text)
    return 0 if rep.passed else 1


def _alpha_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jack", description="Exact Jack polynomials over Q(alpha).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json", "latex")):
        sp.add_argument("--n", type=int, help="number of variables")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--alpha", type=_alpha_arg, help="specialize alpha to a rational p/q")

    b = sub.add_parser("build", help="print E, F, J, P, m, q or g")
    b.add_argument("kind", choices=COMPOSITION_KINDS + PARTITION_KINDS)
    b.add_argument("--comp", help="composition, e.g. 0,1")
    b.add_argument("--partition", help="partition, e.g. 2,1")
    common(b)
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("constants", help="d, d', e, f (and b, c, c', j for partitions)")
    c.add_argument("--comp")
    c.add_argument("--partition")
    common(c)
    c.set_defaults(func=cmd_constants)

    pr = sub.add_parser("pair", help="scalar product of two polynomials")
    pr.add_argument("--f", required=True, help="KIND:index or plain-text polynomial")
    pr.add_argument("--g", required=True)
    pr.add_argument("--symmetric", action="store_true", help="use <,>_s instead of <,>")
    common(pr)
    pr.set_defaults(func=cmd_pair)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--degree", type=int, required=True)
    v.add_argument("--r", help="exponent r for the las suite, e.g. 5/2 or 2/α")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--output", help="write the report here instead of stdout")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be at least 1")
    if getattr(args, "degree", None) is not None and args.degree < 0:
        parser.error("--degree must be nonnegative")
    if args.command == "pair" and args.n is None:
        parser.error("pair needs --n")
    try:
        return args.func(args)
    except PoleError as exc:
        print(f"jack: pole: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ParseError, ValueError) as exc:
        print(f"jack: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
