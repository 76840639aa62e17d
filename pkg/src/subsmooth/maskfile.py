"""Mask file format: canonical JSON with rationals as reduced p/q strings.

Floats never appear, so files round-trip without any loss and canonical
serialization is byte-stable: keys sorted, fixed indentation, rationals
reduced with positive denominator, support trimmed to the true window.

Schema (version 1):
    {
      "coeffs": [ [[<rat>, ...], ...], ... ],   # one p x p array per index
      "kind": "scalar" | "vector" | "hermite",
      "p": <int>,
      "phi": <rat>,                              # hermite only
      "schema_version": 1,
      "support_lo": <int>
    }
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import MaskFileError
from .laurent import LaurentPoly, SymbolMatrix
from .masks import Kind, Mask, derive_phi, hermite_mask, scalar_mask, vector_mask

SCHEMA_VERSION = 1

_KINDS = {"scalar": Kind.SCALAR, "vector": Kind.VECTOR, "hermite": Kind.HERMITE}


def _rat_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _str_to_rat(s, where: str) -> Fraction:
    if not isinstance(s, str):
        raise MaskFileError(f"{where}: rationals must be strings, got {s!r}")
    try:
        f = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise MaskFileError(f"{where}: invalid rational {s!r} ({exc})") from None
    return f


def serialize(mask: Mask) -> str:
    """Canonical text form; parse(serialize(m)) == m, byte-stable."""
    sup = mask.support
    if sup is None:
        lo, coeffs = 0, []
    else:
        lo = sup[0]
        coeffs = []
        for i in range(sup[0], sup[1] + 1):
            m = mask.coefficient(i)
            coeffs.append([[_rat_to_str(m[r, c]) for c in range(mask.p)]
                           for r in range(mask.p)])
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": mask.kind.value,
        "p": mask.p,
        "support_lo": lo,
        "coeffs": coeffs,
    }
    if mask.kind is Kind.HERMITE:
        doc["phi"] = _rat_to_str(mask.phi)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse(text: str) -> Mask:
    """Parse a mask file; raises MaskFileError with field diagnostics."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MaskFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise MaskFileError("top level must be an object")

    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise MaskFileError(f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")

    kind_name = doc.get("kind")
    if kind_name not in _KINDS:
        raise MaskFileError(f"kind: expected one of {sorted(_KINDS)}, got {kind_name!r}")
    kind = _KINDS[kind_name]

    p = doc.get("p")
    if not isinstance(p, int) or p < 1:
        raise MaskFileError(f"p: expected a positive integer, got {p!r}")
    if kind is Kind.SCALAR and p != 1:
        raise MaskFileError("p: scalar masks must have p = 1")
    if kind is Kind.HERMITE and p != 2:
        raise MaskFileError("p: hermite masks must have p = 2")

    lo = doc.get("support_lo")
    if not isinstance(lo, int):
        raise MaskFileError(f"support_lo: expected an integer, got {lo!r}")

    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list):
        raise MaskFileError("coeffs: expected a list of p x p arrays")
    entries = [[dict() for _ in range(p)] for _ in range(p)]
    for idx, mat in enumerate(coeffs):
        where = f"coeffs[{idx}]"
        if not (isinstance(mat, list) and len(mat) == p
                and all(isinstance(row, list) and len(row) == p for row in mat)):
            raise MaskFileError(f"{where}: expected a {p}x{p} array")
        for r in range(p):
            for c in range(p):
                v = _str_to_rat(mat[r][c], f"{where}[{r}][{c}]")
                if v != 0:
                    entries[r][c][lo + idx] = v
    sym = SymbolMatrix(tuple(tuple(LaurentPoly(entries[r][c]) for c in range(p))
                             for r in range(p)))

    if kind is Kind.SCALAR:
        return scalar_mask(sym[0, 0])
    if kind is Kind.VECTOR:
        if "phi" in doc:
            raise MaskFileError("phi: only hermite masks carry phi")
        return vector_mask(sym)

    if "phi" not in doc:
        raise MaskFileError("phi: required for hermite masks")
    phi = _str_to_rat(doc["phi"], "phi")
    derived_phi = derive_phi(sym)
    if phi != derived_phi:
        raise MaskFileError(
            f"phi: stored value {_rat_to_str(phi)} disagrees with the symbol "
            f"(linear reproduction gives {_rat_to_str(derived_phi)})")
    return hermite_mask(sym, phi)


def load(path: str) -> Mask:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(mask: Mask, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(mask))
