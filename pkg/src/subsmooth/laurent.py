"""Laurent polynomials over the rationals and square matrices of them.

A Laurent polynomial is stored as a map exponent -> coefficient with no
explicit zeros, so equality of the maps is equality of the polynomials.
These are the generating functions of finitely supported sequences: all of
the subdivision calculus in this package is phrased in terms of them.

Division is deliberately restricted to the four binomials the smoothing
calculus needs (z+1, 1/z+1, 1/z-1, 1/z**2-1); each has an exact quotient in
the Laurent ring precisely when the matching root condition holds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import NotDivisibleError
from .linalg import RatMatrix, rat


class LaurentPoly:
    """Finitely supported map exponent -> Fraction; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = rat(c)
                if c != 0:
                    clean[int(e)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ----------------------------------------------------------
    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(c, e: int = 0) -> "LaurentPoly":
        return LaurentPoly({e: c})

    @staticmethod
    def from_coeffs(lo: int, coeffs: Sequence) -> "LaurentPoly":
        """Coefficients for consecutive exponents starting at ``lo``."""
        return LaurentPoly({lo + i: c for i, c in enumerate(coeffs)})

    # -- basic queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support(self) -> tuple[int, int] | None:
        """(min exponent, max exponent), or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return min(self.coeffs), max(self.coeffs)

    def coeff(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    # -- ring operations ---------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    def scale(self, c) -> "LaurentPoly":
        c = rat(c)
        return LaurentPoly({e: c * v for e, v in self.coeffs.items()})

    def shift(self, by: int) -> "LaurentPoly":
        """Multiply by z**by."""
        return LaurentPoly({e + by: c for e, c in self.coeffs.items()})

    def dilate(self) -> "LaurentPoly":
        """Substitute z -> z**2 (upsampling of the coefficient sequence)."""
        return LaurentPoly({2 * e: c for e, c in self.coeffs.items()})

    # -- evaluation ----------------------------------------------------------------
    def evaluate(self, x) -> Fraction:
        """Exact value at a nonzero rational point (used at x = +-1)."""
        x = rat(x)
        return sum((c * x ** e for e, c in self.coeffs.items()), Fraction(0))

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self.coeffs.items() if e != 0})

    def derivative_at(self, x) -> Fraction:
        x = rat(x)
        return sum((e * c * x ** (e - 1) for e, c in self.coeffs.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = str(c)
            else:
                zpow = "z" if e == 1 else f"z^{e}"
                if c == 1:
                    term = zpow
                elif c == -1:
                    term = f"-{zpow}"
                else:
                    term = f"{c}*{zpow}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


# The four binomial divisors used by the smoothing calculus.
Z_PLUS_1 = LaurentPoly({1: 1, 0: 1})            # z + 1
ZINV_PLUS_1 = LaurentPoly({-1: 1, 0: 1})        # 1/z + 1
ZINV_MINUS_1 = LaurentPoly({-1: 1, 0: -1})      # 1/z - 1
ZINV2_MINUS_1 = LaurentPoly({-2: 1, 0: -1})     # 1/z**2 - 1

_BINOMIALS = (Z_PLUS_1, ZINV_PLUS_1, ZINV_MINUS_1, ZINV2_MINUS_1)


def divide_exact(f: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient f/d in the Laurent ring for one of the four binomials.

    Synthetic division from the lowest exponent upward; the quotient in the
    Laurent ring is unique, so the direction is only a determinism choice.
    Raises NotDivisibleError (carrying the remainder) when the matching root
    condition fails, e.g. dividing by 1/z - 1 a polynomial with f(1) != 0.
    """
    if d not in _BINOMIALS:
        raise ValueError(f"unsupported divisor {d}")
    if f.is_zero():
        return f
    (a, b) = d.support  # two terms, exponents a < b
    ca = d.coeff(a)
    lo_f, hi_f = f.support
    hi_q = hi_f - b
    rem = dict(f.coeffs)
    q: dict[int, Fraction] = {}
    while rem:
        e = min(rem)
        qe = e - a
        if qe > hi_q:
            raise NotDivisibleError(
                f"{f} is not divisible by {d}", remainder=LaurentPoly(rem))
        c = rem[e] / ca
        q[qe] = c
        for de, dc in d.coeffs.items():
            ee = qe + de
            nv = rem.get(ee, Fraction(0)) - c * dc
            if nv == 0:
                rem.pop(ee, None)
            else:
                rem[ee] = nv
    return LaurentPoly(q)


def root_multiplicity_at_one(f: LaurentPoly):
    """Largest m with (z-1)**m dividing f in the Laurent ring; inf for f = 0.

    1/z - 1 is an associate of z - 1 in the Laurent ring, so dividing by it
    repeatedly counts the multiplicity.
    """
    if f.is_zero():
        return math.inf
    m = 0
    g = f
    while g.evaluate(1) == 0:
        g = divide_exact(g, ZINV_MINUS_1)
        m += 1
    return m


class SymbolMatrix:
    """Square matrix of LaurentPoly; the symbol of a matrix mask."""

    __slots__ = ("p", "entries")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]]):
        p = len(entries)
        if any(len(row) != p for row in entries):
            raise ValueError("symbol matrix must be square")
        rows = tuple(tuple(e for e in row) for row in entries)
        for row in rows:
            for e in row:
                if not isinstance(e, LaurentPoly):
                    raise TypeError("entries must be LaurentPoly")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolMatrix is immutable")

    # -- constructors -------------------------------------------------------------
    @staticmethod
    def from_scalar(f: LaurentPoly) -> "SymbolMatrix":
        return SymbolMatrix(((f,),))

    @staticmethod
    def from_constant(m: RatMatrix) -> "SymbolMatrix":
        if m.rows != m.cols:
            raise ValueError("constant embedding needs a square matrix")
        return SymbolMatrix(tuple(tuple(LaurentPoly.monomial(m[i, j])
                                        for j in range(m.cols)) for i in range(m.rows)))

    @staticmethod
    def identity(p: int) -> "SymbolMatrix":
        return SymbolMatrix.from_constant(RatMatrix.identity(p))

    @staticmethod
    def zero(p: int) -> "SymbolMatrix":
        return SymbolMatrix(tuple(tuple(LaurentPoly.zero() for _ in range(p))
                                  for _ in range(p)))

    # -- queries ---------------------------------------------------------------------
    def __getitem__(self, idx) -> LaurentPoly:
        i, j = idx
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    @property
    def support(self) -> tuple[int, int] | None:
        lo = hi = None
        for row in self.entries:
            for e in row:
                s = e.support
                if s is None:
                    continue
                lo = s[0] if lo is None else min(lo, s[0])
                hi = s[1] if hi is None else max(hi, s[1])
        return None if lo is None else (lo, hi)

    def coefficient(self, i: int) -> RatMatrix:
        """The matrix coefficient of z**i."""
        return RatMatrix(self.p, self.p,
                         [self.entries[r][c].coeff(i)
                          for r in range(self.p) for c in range(self.p)])

    def evaluate(self, x) -> RatMatrix:
        return RatMatrix(self.p, self.p,
                         [e.evaluate(x) for row in self.entries for e in row])

    # -- algebra -----------------------------------------------------------------------
    def map(self, fn) -> "SymbolMatrix":
        return SymbolMatrix(tuple(tuple(fn(e) for e in row) for row in self.entries))

    def __add__(self, other: "SymbolMatrix") -> "SymbolMatrix":
        self._same_p(other)
        return SymbolMatrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                                  for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "SymbolMatrix") -> "SymbolMatrix":
        self._same_p(other)
        return SymbolMatrix(tuple(tuple(a - b for a, b in zip(r1, r2))
                                  for r1, r2 in zip(self.entries, other.entries)))

    def __mul__(self, other: "SymbolMatrix") -> "SymbolMatrix":
        self._same_p(other)
        p = self.p
        out = []
        for i in range(p):
            row = []
            for j in range(p):
                acc = LaurentPoly.zero()
                for k in range(p):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(tuple(row))
        return SymbolMatrix(tuple(out))

    def scale(self, c) -> "SymbolMatrix":
        c = rat(c)
        return self.map(lambda e: e.scale(c))

    def scale_poly(self, f: LaurentPoly) -> "SymbolMatrix":
        return self.map(lambda e: e * f)

    def shift(self, by: int) -> "SymbolMatrix":
        return self.map(lambda e: e.shift(by))

    def dilate(self) -> "SymbolMatrix":
        return self.map(lambda e: e.dilate())

    def left_mul_const(self, m: RatMatrix) -> "SymbolMatrix":
        return SymbolMatrix.from_constant(m) * self

    def right_mul_const(self, m: RatMatrix) -> "SymbolMatrix":
        return self * SymbolMatrix.from_constant(m)

    def _same_p(self, other: "SymbolMatrix") -> None:
        if self.p != other.p:
            raise ValueError("dimension mismatch")

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"SymbolMatrix[{rows}]"
