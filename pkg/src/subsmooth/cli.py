"""Command-line front end: subsmooth show | smooth | certify | render.

Masks are given either as file paths or as catalog references like
``catalog:merrien``.  Exit codes: 0 success / certificate granted,
2 inconclusive certification, 1 any error (bad input, violated
precondition, unknown catalog entry).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog, maskfile
from .errors import SubsmoothError
from .masks import Kind, Mask, common_one_eigenspace, even_odd_mean
from .hermite_smoothing import (check_interpolatory, check_spectral,
                                check_taylor, smooth_hermite, zeta_of)
from .refine import (DEFAULT_LMAX, Certificate, certify_hermite,
                     certify_vector, render)
from .vector_smoothing import smooth_vector


def _load(ref: str) -> Mask:
    if ref.startswith("catalog:"):
        try:
            return catalog.get(ref[len("catalog:"):])
        except KeyError as exc:
            raise SubsmoothError(str(exc)) from None
    if not os.path.exists(ref):
        raise SubsmoothError(f"no such file: {ref}")
    return maskfile.load(ref)


def _fmt_matrix(m) -> str:
    return "[" + "; ".join(", ".join(str(m[i, j]) for j in range(m.cols))
                           for i in range(m.rows)) + "]"


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(v[i, 0]) for i in range(v.rows)) + ")"


def cmd_show(args) -> int:
    mask = _load(args.path)
    sym = mask.symbol
    out = [f"kind: {mask.kind.value}", f"p: {mask.p}",
           f"support: {mask.support}"]
    out.append("symbol:")
    for i in range(mask.p):
        out.append("  [" + " | ".join(str(sym[i, j]) for j in range(mask.p)) + "]")
    out.append(f"value at 1:  {_fmt_matrix(sym.evaluate(1))}")
    out.append(f"value at -1: {_fmt_matrix(sym.evaluate(-1))}")
    out.append(f"even/odd mean: {_fmt_matrix(even_odd_mean(mask))}")
    basis = common_one_eigenspace(mask)
    if basis:
        out.append("common 1-eigenspace basis: "
                   + ", ".join(_fmt_vec(v) for v in basis))
    else:
        out.append("common 1-eigenspace: trivial")
    if mask.p == 2:
        rep = check_spectral(mask)
        out.append(f"spectral condition: {'holds' if rep.holds else 'fails'}"
                   + (f", phi = {rep.phi}" if rep.holds
                      else f", violated {list(rep.violated)}"))
        if rep.holds:
            out.append(f"interpolatory: {check_interpolatory(mask)}")
        trep = check_taylor(mask)
        out.append(f"taylor conditions: {'hold' if trep.holds_taylor else 'fail'}"
                   + (f" (eigenspace span{{e2}}: {trep.in_tilde})"
                      if trep.holds_taylor else ""))
    if mask.kind is Kind.HERMITE:
        out.append(f"phi: {mask.phi}")
    print("\n".join(out))
    return 0


def cmd_smooth(args) -> int:
    mask = _load(args.path)
    if args.rounds < 1:
        raise SubsmoothError("--rounds must be >= 1")
    print("note: input regularity is assumed, not verified; "
          "run 'subsmooth certify' for a convergence certificate",
          file=sys.stderr)
    current = mask
    for r in range(1, args.rounds + 1):
        if current.kind is Kind.HERMITE:
            zeta = zeta_of(current)
            nxt = smooth_hermite(current)
            print(f"round {r}: zeta = {zeta}, phi {current.phi} -> {nxt.phi}, "
                  f"support {current.support} -> {nxt.support}", file=sys.stderr)
        else:
            k = len(common_one_eigenspace(current))
            nxt = smooth_vector(current)
            print(f"round {r}: k = {k}, support {current.support} -> "
                  f"{nxt.support}", file=sys.stderr)
        current = nxt
    text = maskfile.serialize(current)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_certify(args) -> int:
    mask = _load(args.path)
    lmax = args.lmax
    if lmax is None:
        lmax = int(os.environ.get("SUBSMOOTH_LMAX", DEFAULT_LMAX))
    if lmax < 1:
        raise SubsmoothError("--lmax must be >= 1")
    if mask.kind is Kind.HERMITE:
        ell = args.ell if args.ell is not None else 1
        result = certify_hermite(mask, ell, lmax)
    else:
        ell = args.ell if args.ell is not None else 0
        result = certify_vector(mask, ell, lmax)
    print(result)
    if isinstance(result, Certificate):
        return 0
    return 2


def cmd_render(args) -> int:
    mask = _load(args.path)
    if args.depth < 1:
        raise SubsmoothError("--depth must be >= 1")
    if not 1 <= args.basis <= mask.p:
        raise SubsmoothError(f"--basis must be in 1..{mask.p}")
    sample = render(mask, args.depth, args.basis)
    text = sample.to_csv(exact=args.exact)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subsmooth",
        description="Symbol calculus for raising the smoothness of "
                    "scalar, vector and Hermite subdivision schemes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_show = sub.add_parser("show", help="print the structure of a mask")
    p_show.add_argument("path", help="mask file or catalog:NAME")
    p_show.set_defaults(fn=cmd_show)

    p_smooth = sub.add_parser("smooth", help="raise smoothness by one per round")
    p_smooth.add_argument("path")
    p_smooth.add_argument("--rounds", type=int, default=1)
    p_smooth.add_argument("--out", default=None, help="output mask file")
    p_smooth.set_defaults(fn=cmd_smooth)

    p_cert = sub.add_parser("certify", help="search for a convergence certificate")
    p_cert.add_argument("path")
    p_cert.add_argument("--ell", type=int, default=None,
                        help="smoothness order (default: 1 hermite, 0 otherwise)")
    p_cert.add_argument("--lmax", type=int, default=None,
                        help=f"largest power to test (default {DEFAULT_LMAX}, "
                             "or SUBSMOOTH_LMAX)")
    p_cert.set_defaults(fn=cmd_certify)

    p_render = sub.add_parser("render", help="sample a basic limit function to CSV")
    p_render.add_argument("path")
    p_render.add_argument("--depth", type=int, required=True, help="refinement steps")
    p_render.add_argument("--basis", type=int, default=1,
                          help="1-based component of the unit impulse")
    p_render.add_argument("--out", default=None, help="output CSV file")
    p_render.add_argument("--exact", action="store_true",
                          help="emit exact p/q values instead of floats")
    p_render.set_defaults(fn=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SubsmoothError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
