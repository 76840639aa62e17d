"""Taylor factorization and smoothing of Hermite subdivision schemes.

A Hermite mask refines (value, derivative) pairs.  When it reproduces
constants and linears (the spectral condition, with shift parameter phi),
it factors through the Taylor operator

    T = [Delta, -1; 0, 1],      T S_A = 1/2 S_(taylor A) T,

and the Taylor scheme is a vector scheme satisfying the Taylor conditions.
Smoothing a Hermite scheme = smoothing its Taylor scheme as a vector
scheme (with a fixed canonical transform valid for every Taylor mask),
re-normalizing with a shear so the Taylor conditions hold again, and
inverting the factorization.  One round lowers phi by exactly 1/2 and
grows the support by at most 5 on the left.

``smooth_hermite_closed_form`` evaluates the same round through explicit
polynomial formulas in the re-normalization constant zeta; it must agree
with the compositional pipeline bit for bit and serves as an independent
oracle for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (ConsistencyError, DegenerateAError, NotInTildeError,
                     SpectralConditionError)
from .laurent import (LaurentPoly, SymbolMatrix, ZINV2_MINUS_1, ZINV_MINUS_1,
                      ZINV_PLUS_1, divide_exact, root_multiplicity_at_one)
from .linalg import RatMatrix
from .masks import (Kind, Mask, common_one_eigenspace, conjugate,
                    hermite_mask, vector_mask)
from .vector_smoothing import smooth_raw

HALF = Fraction(1, 2)

# Canonical transform valid for every mask satisfying the Taylor conditions:
# the even/odd mean matrix is lower triangular with eigenvector e2 for the
# eigenvalue 1 and eigenvector (1, -1) for the other eigenvalue.
_R_TAYLOR = RatMatrix.from_rows([[0, 1], [1, -1]])
_R_TAYLOR_INV = RatMatrix.from_rows([[1, 1], [1, 0]])


@dataclass(frozen=True)
class SpectralReport:
    """Outcome of the eight spectral-condition equalities.

    ``violated`` lists the failing condition groups (1)-(4); ``phi`` is the
    shift parameter extracted from the linear-reproduction equality and is
    meaningful only when ``holds``.
    """

    holds: bool
    phi: Fraction
    violated: tuple[int, ...]


@dataclass(frozen=True)
class TaylorReport:
    """Outcome of the Taylor conditions for a 2x2 vector mask.

    ``in_tilde`` additionally requires the common 1-eigenspace to equal
    span{e2} exactly.  ``zeta`` is the re-normalization constant the
    smoothing round would use (None when undefined, i.e. b11(1) = 2).
    """

    holds_taylor: bool
    in_tilde: bool
    zeta: Fraction | None


def check_spectral(mask: Mask) -> SpectralReport:
    """Evaluate the spectral condition exactly.

    Conditions, in terms of the symbol entries a_ij:
      (1) a11(1) = 2,  a11(-1) = 0
      (2) a21(1) = 0,  a21(-1) = 0
      (3) a11'(1) - 2 a12(1) = 2 phi,   a11'(-1) + 2 a12(-1) = 0
      (4) a21'(1) - 2 a22(1) = -2,      a21'(-1) + 2 a22(-1) = 0
    (1)+(2) are reproduction of constants, (3)+(4) of linears.
    """
    if mask.p != 2:
        raise ValueError("spectral condition applies to 2x2 masks")
    s = mask.symbol
    a11, a12, a21, a22 = s[0, 0], s[0, 1], s[1, 0], s[1, 1]
    phi = (a11.derivative_at(1) - 2 * a12.evaluate(1)) / 2
    violated = []
    if not (a11.evaluate(1) == 2 and a11.evaluate(-1) == 0):
        violated.append(1)
    if not (a21.evaluate(1) == 0 and a21.evaluate(-1) == 0):
        violated.append(2)
    if not (a11.derivative_at(-1) + 2 * a12.evaluate(-1) == 0):
        violated.append(3)
    if not (a21.derivative_at(1) - 2 * a22.evaluate(1) == -2
            and a21.derivative_at(-1) + 2 * a22.evaluate(-1) == 0):
        violated.append(4)
    holds = not violated
    if holds and mask.kind is Kind.HERMITE and mask.phi != phi:
        raise ConsistencyError(
            f"stored phi {mask.phi} disagrees with the symbol value {phi}")
    return SpectralReport(holds=holds, phi=phi, violated=tuple(violated))


def check_interpolatory(mask: Mask) -> bool:
    """True iff the coefficient at index 0 is diag(1, 1/2) and every other
    even-indexed coefficient vanishes."""
    if mask.p != 2:
        raise ValueError("interpolatory check applies to 2x2 masks")
    s = mask.support
    if s is None:
        return False
    d = RatMatrix.from_rows([[1, 0], [0, HALF]])
    if mask.coefficient(0) != d:
        return False
    for i in range(s[0], s[1] + 1):
        if i != 0 and i % 2 == 0 and not mask.coefficient(i).is_zero():
            return False
    return True


def check_taylor(mask: Mask) -> TaylorReport:
    """Evaluate the Taylor conditions exactly:
      (1) b12(1) = 0, b12(-1) = 0
      (2) b22(1) = 2, b22(-1) = 0
      (3) b11(1) + b21(1) = 2
    """
    if mask.p != 2:
        raise ValueError("Taylor conditions apply to 2x2 masks")
    s = mask.symbol
    b11, b12, b21, b22 = s[0, 0], s[0, 1], s[1, 0], s[1, 1]
    holds = (b12.evaluate(1) == 0 and b12.evaluate(-1) == 0
             and b22.evaluate(1) == 2 and b22.evaluate(-1) == 0
             and b11.evaluate(1) + b21.evaluate(1) == 2)
    in_tilde = holds and _eigenspace_is_e2(mask)
    a = b11.evaluate(1)
    zeta = None
    if a != 2:
        zeta = 2 + b21.evaluate(1) / (a - 2)  # eta + 1 with eta = 1 + b/(a-2)
    return TaylorReport(holds_taylor=holds, in_tilde=in_tilde, zeta=zeta)


def _eigenspace_is_e2(mask: Mask) -> bool:
    basis = common_one_eigenspace(mask)
    return len(basis) == 1 and basis[0][0, 0] == 0 and basis[0][1, 0] != 0


def taylor_scheme(mask: Mask) -> Mask:
    """The vector scheme the Taylor operator intertwines with the input:

      out11 = 2*(a11/(1/z+1) - a21/(1/z**2-1))
      out12 = 2*((1/z-1)a12 - a22 + a11/(1/z+1) - a21/(1/z**2-1))
      out21 = 2*a21/(1/z**2-1)
      out22 = 2*(a22 + a21/(1/z**2-1))

    Only reproduction of constants is needed for the divisions to be exact;
    under the full spectral condition the output satisfies the Taylor
    conditions.
    """
    if mask.p != 2:
        raise ValueError("Taylor factorization applies to 2x2 masks")
    s = mask.symbol
    a11, a12, a21, a22 = s[0, 0], s[0, 1], s[1, 0], s[1, 1]
    q1 = divide_exact(a11, ZINV_PLUS_1)
    q2 = divide_exact(a21, ZINV2_MINUS_1)
    out11 = (q1 - q2).scale(2)
    out12 = (a12 * ZINV_MINUS_1 - a22 + q1 - q2).scale(2)
    out21 = q2.scale(2)
    out22 = (a22 + q2).scale(2)
    return vector_mask(SymbolMatrix(((out11, out12), (out21, out22))))


def inverse_taylor(mask: Mask) -> Mask:
    """Right inverse of the Taylor factorization:

      out11 = 1/2*(1/z+1)(b11 + b21)
      out12 = 1/2*(b12 - b11 - b21 + b22)/(1/z-1)
      out21 = 1/2*b21*(1/z**2-1)
      out22 = 1/2*(b22 - b21)

    The division is exact precisely under the Taylor conditions.  The
    output is a Hermite mask satisfying the spectral condition with
    phi = (b12'(1) + b22'(1) - 1)/2.
    """
    if mask.p != 2:
        raise ValueError("inverse Taylor factorization applies to 2x2 masks")
    s = mask.symbol
    b11, b12, b21, b22 = s[0, 0], s[0, 1], s[1, 0], s[1, 1]
    out11 = ((b11 + b21) * ZINV_PLUS_1).scale(HALF)
    out12 = divide_exact(b12 - b11 - b21 + b22, ZINV_MINUS_1).scale(HALF)
    out21 = (b21 * ZINV2_MINUS_1).scale(HALF)
    out22 = (b22 - b21).scale(HALF)
    phi = (b12.derivative_at(1) + b22.derivative_at(1) - 1) / 2
    out = hermite_mask(SymbolMatrix(((out11, out12), (out21, out22))), phi)
    return out


def retaylor(mask: Mask) -> tuple[Mask, Fraction]:
    """Shear a vector mask with 1-eigenspace span{e2} back into the Taylor
    class.

    With a = b11(1) and b = b21(1), conjugation by [[1,0],[eta,1]] with
    eta = 1 + b/(a-2) restores the trace condition b11(1)+b21(1) = 2 while
    keeping the eigenspace; requires a != 2.  Returns (mask, eta); eta = 0
    means the input already satisfied the condition.
    """
    if mask.p != 2:
        raise ValueError("re-normalization applies to 2x2 masks")
    if not _eigenspace_is_e2(mask):
        raise NotInTildeError("common 1-eigenspace is not span{e2}")
    a = mask.symbol[0, 0].evaluate(1)
    b = mask.symbol[1, 0].evaluate(1)
    if a == 2:
        raise DegenerateAError("leading value 2 admits no shear normalization")
    eta = 1 + b / (a - 2)
    shear = RatMatrix.from_rows([[1, 0], [eta, 1]])
    return conjugate(mask, shear), eta


def smooth_hermite(mask: Mask) -> Mask:
    """One Hermite smoothing round (compositional pipeline).

    Steps: Taylor scheme -> blockwise vector smoothing with the fixed
    canonical transform for Taylor masks -> shear re-normalization ->
    inverse Taylor factorization.  Verifies phi drops by 1/2 and the
    support stays within [lo-5, hi].
    """
    rep = check_spectral(mask)
    if not rep.holds:
        raise SpectralConditionError(
            f"spectral condition fails; violated conditions {list(rep.violated)}")
    tay = taylor_scheme(mask)
    if not _eigenspace_is_e2(tay):
        raise NotInTildeError(
            "Taylor scheme eigenspace is not span{e2}; the vanishing "
            "first-component hypothesis cannot be established")
    barred = conjugate(tay, _R_TAYLOR)
    smoothed = conjugate(smooth_raw(barred, 1), _R_TAYLOR_INV)
    normalized, _eta = retaylor(smoothed)
    out = inverse_taylor(normalized)

    if out.phi != rep.phi - HALF:
        raise ConsistencyError(
            f"phi moved from {rep.phi} to {out.phi}, expected a drop of 1/2")
    s_in, s_out = mask.support, out.support
    if s_in is not None and s_out is not None:
        if s_out[0] < s_in[0] - 5 or s_out[1] > s_in[1]:
            raise ConsistencyError(
                f"support {s_out} exceeds the guaranteed window "
                f"[{s_in[0] - 5}, {s_in[1]}]")
    return out


def zeta_of(mask: Mask) -> Fraction:
    """Re-normalization constant a smoothing round on this Hermite mask
    uses: zeta = 1 + a12(1)/(2 - a22(1))."""
    a12 = mask.symbol[0, 1].evaluate(1)
    a22 = mask.symbol[1, 1].evaluate(1)
    if a22 == 2:
        raise DegenerateAError("zeta undefined: a22(1) = 2")
    return 1 + a12 / (2 - a22)


def zeta_multiplicity_forecast(mask: Mask):
    """Multiplicity r of the root at 1 of the coupling entry a12.

    r - 1 further smoothing rounds stay in the zeta = 1 branch; returns
    math.inf when a12 is identically zero (every round has zeta = 1).
    """
    rep = check_spectral(mask)
    if not rep.holds:
        raise SpectralConditionError("forecast requires the spectral condition")
    return root_multiplicity_at_one(mask.symbol[0, 1])


def smooth_hermite_closed_form(mask: Mask) -> Mask:
    """One Hermite smoothing round through the explicit polynomial formulas.

    With zeta = 1 + a12(1)/(2 - a22(1)), the smoothed symbol is a fixed
    polynomial combination of the four input entries (the zeta = 1 special
    case is also evaluated as an internal cross-check when applicable).
    Must agree exactly with smooth_hermite().
    """
    rep = check_spectral(mask)
    if not rep.holds:
        raise SpectralConditionError(
            f"spectral condition fails; violated conditions {list(rep.violated)}")
    zeta = zeta_of(mask)  # DegenerateAError when a22(1) = 2
    out = _closed_form_general(mask.symbol, zeta)
    if zeta == 1:
        special = _closed_form_special(mask.symbol)
        if special != out:
            raise ConsistencyError("general and zeta=1 closed forms disagree")
    return hermite_mask(out, rep.phi - HALF)


def _lp(coeffs: dict[int, Fraction]) -> LaurentPoly:
    return LaurentPoly(coeffs)


def _closed_form_general(s: SymbolMatrix, zeta: Fraction) -> SymbolMatrix:
    a11, a12, a21, a22 = s[0, 0], s[0, 1], s[1, 0], s[1, 1]
    z2 = zeta * zeta

    c11 = (a12 * _lp({-3: zeta - z2, -2: z2, -1: z2 - 1, 0: -(z2 + zeta)})
           + a11 * (ZINV_MINUS_1.scale(zeta * (1 - zeta)) + _lp({0: zeta}))
           + a22 * (ZINV2_MINUS_1.scale(zeta) - LaurentPoly.one()).scale(zeta - 1)
           + a21.scale(z2 - zeta))
    c11 = (c11 * ZINV_PLUS_1).scale(HALF)

    num12 = (a12 * _lp({-3: (1 - zeta) ** 2, -2: zeta * (1 - zeta),
                        -1: zeta * (1 - zeta), 0: z2})
             + a22 * (ZINV2_MINUS_1.scale(-((1 - zeta) ** 2)) + _lp({0: zeta - 1}))
             + a11 * (ZINV_MINUS_1.scale((1 - zeta) ** 2) + _lp({0: 1 - zeta}))
             - a21.scale((1 - zeta) ** 2))
    c12 = divide_exact(num12.scale(HALF), ZINV_MINUS_1)

    c21 = (a12 * _lp({-3: -z2, -2: zeta + z2, -1: zeta + z2, 0: -((zeta + 1) ** 2)})
           + a11 * (LaurentPoly.one() - ZINV_MINUS_1.scale(zeta)).scale(zeta)
           + a22 * (ZINV2_MINUS_1.scale(zeta) - LaurentPoly.one()).scale(zeta)
           + a21.scale(z2))
    c21 = (c21 * ZINV2_MINUS_1).scale(HALF)

    c22 = (a12 * _lp({-3: z2 - zeta, -2: 1 - z2, -1: -z2, 0: z2 + zeta})
           + a11 * (LaurentPoly.one() - ZINV_MINUS_1.scale(zeta)).scale(1 - zeta)
           + a22 * (ZINV2_MINUS_1.scale(1 - zeta) + LaurentPoly.one()).scale(zeta)
           + a21.scale(zeta - z2))
    c22 = c22.scale(HALF)

    return SymbolMatrix(((c11, c12), (c21, c22)))


def _closed_form_special(s: SymbolMatrix) -> SymbolMatrix:
    # zeta = 1 branch (a12(1) = 0)
    a11, a12, a21, a22 = s[0, 0], s[0, 1], s[1, 0], s[1, 1]
    zinv2_minus_2 = _lp({-2: 1, 0: -2})
    zinv_minus_2 = _lp({-1: 1, 0: -2})

    c11 = ((a12 * zinv2_minus_2 + a11) * ZINV_PLUS_1).scale(HALF)
    c12 = divide_exact(a12, ZINV_MINUS_1).scale(HALF)
    c21 = ((a21 - a11 * zinv_minus_2 + a22 * zinv2_minus_2
            - a12 * zinv_minus_2 * zinv2_minus_2) * ZINV2_MINUS_1).scale(HALF)
    c22 = (a22 - a12 * zinv_minus_2).scale(HALF)
    return SymbolMatrix(((c11, c12), (c21, c22)))
