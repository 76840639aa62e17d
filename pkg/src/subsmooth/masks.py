"""Subdivision masks and their structural invariants.

A mask is a finitely supported sequence of p x p rational matrices,
represented by its symbol (a SymbolMatrix).  The scheme kind records how
the data refined by the mask is interpreted: plain scalar sequences,
coupled vector sequences, or Hermite data (function value and first
derivative, dimension 2, with a shift parameter phi).

The common 1-eigenspace of the even/odd coefficient sums drives all of
the smoothing machinery; this module computes it exactly, together with
the canonical basis change that moves it onto the leading coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import EigenspaceError, EmptyEigenspaceError
from .laurent import LaurentPoly, SymbolMatrix
from .linalg import (RatMatrix, column_space_basis, invert, kernel_basis,
                     rank, rat)


class Kind(enum.Enum):
    SCALAR = "scalar"
    VECTOR = "vector"
    HERMITE = "hermite"


@dataclass(frozen=True)
class Mask:
    """A subdivision scheme: kind + symbol (+ phi for Hermite kinds)."""

    kind: Kind
    symbol: SymbolMatrix
    phi: Fraction | None = None

    def __post_init__(self):
        if self.kind is Kind.SCALAR and self.symbol.p != 1:
            raise ValueError("scalar masks store a 1x1 symbol")
        if self.kind is Kind.HERMITE:
            if self.symbol.p != 2:
                raise ValueError("Hermite masks refine value/derivative pairs (p = 2)")
            if self.phi is None:
                raise ValueError("Hermite masks carry their shift parameter phi")
        if self.kind is not Kind.HERMITE and self.phi is not None:
            raise ValueError("phi is only meaningful for Hermite masks")

    @property
    def p(self) -> int:
        return self.symbol.p

    @property
    def support(self) -> tuple[int, int] | None:
        return self.symbol.support

    def coefficient(self, i: int) -> RatMatrix:
        return self.symbol.coefficient(i)

    def coefficients(self) -> dict[int, RatMatrix]:
        s = self.support
        if s is None:
            return {}
        return {i: self.coefficient(i) for i in range(s[0], s[1] + 1)
                if not self.coefficient(i).is_zero()}


def scalar_mask(f: LaurentPoly) -> Mask:
    return Mask(Kind.SCALAR, SymbolMatrix.from_scalar(f))


def vector_mask(symbol: SymbolMatrix) -> Mask:
    return Mask(Kind.VECTOR, symbol)


def derive_phi(symbol: SymbolMatrix) -> Fraction:
    """Shift parameter from the linear-reproduction equality:
    phi = (a11'(1) - 2*a12(1)) / 2.  Meaningful under the spectral condition,
    but computable for any 2x2 symbol."""
    a11 = symbol[0, 0]
    a12 = symbol[0, 1]
    return (a11.derivative_at(1) - 2 * a12.evaluate(1)) / 2


def hermite_mask(symbol: SymbolMatrix, phi=None) -> Mask:
    if phi is None:
        phi = derive_phi(symbol)
    return Mask(Kind.HERMITE, symbol, rat(phi))


def scheme_scalar(mask: Mask) -> LaurentPoly:
    """The underlying 1x1 symbol of a scalar mask."""
    if mask.kind is not Kind.SCALAR:
        raise ValueError("expected a scalar mask")
    return mask.symbol[0, 0]


# -- even/odd structure ----------------------------------------------------------

def even_odd_sums(mask: Mask) -> tuple[RatMatrix, RatMatrix]:
    """(sum of even-indexed coefficients, sum of odd-indexed coefficients).

    Computed from the symbol values: even = (A*(1)+A*(-1))/2 and
    odd = (A*(1)-A*(-1))/2.
    """
    at1 = mask.symbol.evaluate(1)
    atm1 = mask.symbol.evaluate(-1)
    half = Fraction(1, 2)
    return (at1 + atm1).scale(half), (at1 - atm1).scale(half)


def even_odd_mean(mask: Mask) -> RatMatrix:
    """Half the symbol value at 1, i.e. the mean of the even/odd sums."""
    return mask.symbol.evaluate(1).scale(Fraction(1, 2))


def common_one_eigenspace(mask: Mask) -> list[RatMatrix]:
    """Exact basis of {v : A*(1) v = 2v and A*(-1) v = 0}.

    This is the common 1-eigenspace of the even/odd coefficient sums; its
    non-triviality is necessary for convergence.
    """
    p = mask.p
    top = mask.symbol.evaluate(1) - RatMatrix.identity(p).scale(2)
    stacked = top.vstack(mask.symbol.evaluate(-1))
    return kernel_basis(stacked)


def operator_norm(mask: Mask) -> Fraction:
    """Exact sup-norm of the subdivision operator on bounded sequences."""
    return stencil_norm(mask.symbol, 2)


def stencil_norm(symbol: SymbolMatrix, arity: int) -> Fraction:
    """Exact sup-norm of c -> sum_j M_{i - arity*j} c_j on bounded sequences.

    Equals the max over the residue classes of the output index of the
    max-row-sum of the entrywise absolute coefficient sums; the supremum is
    attained by sign-aligned data of sup-norm one.  Single pass over the
    support, bucketing by residue.
    """
    s = symbol.support
    if s is None:
        return Fraction(0)
    lo, hi = s
    p = symbol.p
    rowsums: dict[int, list[Fraction]] = {}
    for i in range(lo, hi + 1):
        m = symbol.coefficient(i)
        if m.is_zero():
            continue
        sums = rowsums.setdefault(i % arity, [Fraction(0)] * p)
        for r in range(p):
            sums[r] += sum(abs(x) for x in m.row(r))
    if not rowsums:
        return Fraction(0)
    return max(max(sums) for sums in rowsums.values())


def conjugate(mask: Mask, r: RatMatrix) -> Mask:
    """Similarity transform of every coefficient: symbol -> R^-1 * symbol * R."""
    if r.rows != mask.p or r.cols != mask.p:
        raise ValueError("transform dimension mismatch")
    rinv = invert(r)
    sym = mask.symbol.left_mul_const(rinv).right_mul_const(r)
    if mask.kind is Kind.HERMITE:
        return Mask(Kind.HERMITE, sym, derive_phi(sym))
    return Mask(mask.kind, sym)


@dataclass(frozen=True)
class Eigenstructure:
    """Canonical basis change moving the common 1-eigenspace to the front.

    The first k columns of r are the eigenspace basis; the remaining
    columns span the complementary invariant subspace of the even/odd mean
    matrix.  After conjugation by r, that matrix becomes block diagonal
    with identity leading block.
    """

    k: int
    basis: tuple[RatMatrix, ...]
    r: RatMatrix
    r_inv: RatMatrix


def canonical_transform(mask: Mask) -> Eigenstructure:
    """Build the canonical transform from the 1-eigenspace and the column
    space of (mean matrix - identity).

    That column space is the invariant complement exactly when the
    eigenvalue 1 of the mean matrix has equal algebraic and geometric
    multiplicity, which holds for convergent schemes; if the dimensions do
    not add up, the input cannot be normalized and an error is raised
    instead of guessing.
    """
    basis = common_one_eigenspace(mask)
    if not basis:
        raise EmptyEigenspaceError(
            "the even/odd coefficient sums have no common 1-eigenvector")
    p = mask.p
    k = len(basis)
    cols: list[RatMatrix] = list(basis)
    if k < p:
        m = even_odd_mean(mask) - RatMatrix.identity(p)
        comp = column_space_basis(m)
        if len(comp) != p - k:
            raise EigenspaceError(
                f"complement has dimension {len(comp)}, expected {p - k}; "
                "eigenvalue 1 is defective (non-convergent-style mask)")
        cols.extend(comp)
    r = cols[0]
    for c in cols[1:]:
        r = r.hstack(c)
    if rank(r) != p:
        raise EigenspaceError(
            "eigenspace and complement overlap; no canonical transform exists")
    return Eigenstructure(k=k, basis=tuple(basis), r=r, r_inv=invert(r))
