"""Applying schemes to data, contractivity certificates, limit rendering.

Everything before the final float conversion is exact rational: applying a
mask to a finitely supported sequence, difference operators, iterated
symbols and operator norms.  Contractivity certificates are therefore
machine-checkable witnesses, not numerical estimates: a granted
certificate states an exact operator norm < 1.

A refusal is always inconclusive.  The norm criterion is sufficient for
convergence, not necessary, so failing to find a contractive power proves
nothing about the scheme.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import SymbolMatrix
from .linalg import rat
from .masks import (Kind, Mask, canonical_transform, common_one_eigenspace,
                    conjugate, stencil_norm)
from .vector_smoothing import derived
from .hermite_smoothing import check_spectral, taylor_scheme

DEFAULT_LMAX = 12


@dataclass(frozen=True)
class FinSeq:
    """Finitely supported sequence of p-vectors; zero outside the window.

    values[i] holds the vector at index offset + i.  Stored in normalized
    form (no zero vectors at either end), so equality is semantic.
    """

    p: int
    offset: int
    values: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def make(p: int, offset: int, values) -> "FinSeq":
        vals = [tuple(rat(x) for x in v) for v in values]
        if any(len(v) != p for v in vals):
            raise ValueError("vector dimension mismatch")
        while vals and all(x == 0 for x in vals[0]):
            vals.pop(0)
            offset += 1
        while vals and all(x == 0 for x in vals[-1]):
            vals.pop()
        if not vals:
            offset = 0
        return FinSeq(p, offset, tuple(vals))

    @staticmethod
    def delta(p: int, component: int = 1) -> "FinSeq":
        """Unit impulse at index 0 in the given 1-based component."""
        if not 1 <= component <= p:
            raise ValueError("component out of range")
        v = [Fraction(0)] * p
        v[component - 1] = Fraction(1)
        return FinSeq.make(p, 0, [v])

    def is_zero(self) -> bool:
        return not self.values

    @property
    def support(self) -> tuple[int, int] | None:
        if not self.values:
            return None
        return self.offset, self.offset + len(self.values) - 1

    def at(self, i: int) -> tuple[Fraction, ...]:
        if self.values and self.offset <= i < self.offset + len(self.values):
            return self.values[i - self.offset]
        return tuple(Fraction(0) for _ in range(self.p))

    def scale(self, c) -> "FinSeq":
        c = rat(c)
        return FinSeq.make(self.p, self.offset,
                           [[c * x for x in v] for v in self.values])

    def __add__(self, other: "FinSeq") -> "FinSeq":
        if self.p != other.p:
            raise ValueError("dimension mismatch")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.values), other.offset + len(other.values)) - 1
        vals = [[a + b for a, b in zip(self.at(i), other.at(i))]
                for i in range(lo, hi + 1)]
        return FinSeq.make(self.p, lo, vals)


def apply(mask: Mask, c: FinSeq) -> FinSeq:
    """One subdivision step: (S c)_i = sum_j A_{i-2j} c_j, exactly."""
    if mask.p != c.p:
        raise ValueError(f"mask dimension {mask.p} != data dimension {c.p}")
    ms = mask.support
    if ms is None or c.is_zero():
        return FinSeq.make(c.p, 0, [])
    lo_m, hi_m = ms
    lo_c, hi_c = c.support
    coeffs = {i: mask.coefficient(i) for i in range(lo_m, hi_m + 1)}
    out_lo = 2 * lo_c + lo_m
    out_hi = 2 * hi_c + hi_m
    acc = [[Fraction(0)] * c.p for _ in range(out_hi - out_lo + 1)]
    for j in range(lo_c, hi_c + 1):
        cj = c.at(j)
        for s in range(lo_m, hi_m + 1):
            m = coeffs[s]
            if m.is_zero():
                continue
            row = acc[2 * j + s - out_lo]
            for r in range(c.p):
                row[r] += sum(m[r, t] * cj[t] for t in range(c.p))
    return FinSeq.make(c.p, out_lo, acc)


def full_support_window(mask: Mask, c: FinSeq) -> tuple[int, int] | None:
    """Output indices of one subdivision step whose stencil lies entirely
    inside the stored window of c.

    On this range the result agrees with applying the mask to any infinite
    extension of c, which is what truncated reproduction tests compare
    against.
    """
    ms, cs = mask.support, c.support
    if ms is None or cs is None:
        return None
    lo_m, hi_m = ms
    lo_c, hi_c = cs
    lo = 2 * lo_c + hi_m
    hi = 2 * hi_c + lo_m
    return (lo, hi) if lo <= hi else None


def difference(c: FinSeq, k: int) -> FinSeq:
    """Forward difference on the first k components, identity on the rest."""
    if not 1 <= k <= c.p:
        raise ValueError("k out of range")
    if c.is_zero():
        return c
    lo, hi = c.support
    vals = []
    for i in range(lo - 1, hi + 1):  # index lo-1 picks up c_lo - 0
        cur, nxt = c.at(i), c.at(i + 1)
        vals.append([nxt[t] - cur[t] for t in range(k)] + list(cur[k:]))
    return FinSeq.make(c.p, lo - 1, vals)


def taylor_diff(c: FinSeq) -> FinSeq:
    """Taylor operator on pairs: (Tc)_i = (c1_{i+1} - c1_i - c2_i, c2_i)."""
    if c.p != 2:
        raise ValueError("Taylor operator applies to 2-vector data")
    if c.is_zero():
        return c
    lo, hi = c.support
    vals = []
    for i in range(lo - 1, hi + 1):  # index lo-1 picks up c_lo - 0
        cur, nxt = c.at(i), c.at(i + 1)
        vals.append([nxt[0] - cur[0] - cur[1], cur[1]])
    return FinSeq.make(2, lo - 1, vals)


def iterated_symbol(mask: Mask, L: int) -> SymbolMatrix:
    """Symbol of the L-fold operator: A(z) A(z**2) ... A(z**(2**(L-1)))."""
    if L < 1:
        raise ValueError("L must be >= 1")
    out = mask.symbol
    dil = mask.symbol
    for _ in range(1, L):
        dil = dil.dilate()
        out = out * dil
    return out


# -- certificates -----------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Witness that a scheme converges (kind "C0") or that a smoothness
    chain down to a contractive stage exists (kind "chain")."""

    kind: str
    L: int
    norm_value: Fraction
    steps: tuple[str, ...]
    ell: int | None = None

    def __str__(self) -> str:
        head = "C0 certificate" if self.kind == "C0" else f"chain certificate (ell={self.ell})"
        lines = [f"{head}: |(1/2 S)^{self.L}| = {self.norm_value} < 1"]
        lines += [f"  - {s}" for s in self.steps]
        return "\n".join(lines)


@dataclass(frozen=True)
class Refusal:
    """Inconclusive outcome; carries the stage that stopped the search and
    any exact norms that were computed."""

    stage: str
    reason: str
    norms: tuple[Fraction, ...] = ()

    def __str__(self) -> str:
        lines = [f"inconclusive at stage '{self.stage}': {self.reason}"]
        if self.norms:
            lines.append("  norms per power: " +
                         ", ".join(str(n) for n in self.norms))
        return "\n".join(lines)


def _contractive_power(mask: Mask, lmax: int):
    """Smallest L with |(1/2 S)^L| < 1, plus that exact norm, or the norms
    found if none is contractive up to lmax."""
    norms = []
    for L in range(1, lmax + 1):
        norm = stencil_norm(iterated_symbol(mask, L), 2 ** L) * Fraction(1, 2 ** L)
        norms.append(norm)
        if norm < 1:
            return L, norm, norms
    return None, None, norms


def certify_c0(mask: Mask, lmax: int = DEFAULT_LMAX):
    """Convergence certificate by contractivity of the halved derived scheme.

    Conjugates the mask canonically, takes the derived scheme there, and
    searches L <= lmax for an exact norm |(1/2 S)^L| < 1.  Returns a
    Certificate or an (inconclusive) Refusal.  Raises for masks without a
    usable eigenspace or violating the derived-scheme conditions.
    """
    es = canonical_transform(mask)
    der = derived(conjugate(mask, es.r), es.k)
    L, norm, norms = _contractive_power(der, lmax)
    steps = (f"canonical transform with k={es.k}",
             f"derived scheme support {der.support}")
    if L is None:
        return Refusal(stage="contractivity",
                       reason=f"no power up to {lmax} is contractive",
                       norms=tuple(norms))
    return Certificate(kind="C0", L=L, norm_value=norm,
                       steps=steps + (f"contractive at L={L} with norm {norm}",))


def certify_vector(mask: Mask, ell: int, lmax: int = DEFAULT_LMAX):
    """Certificate that a scalar/vector scheme is C^ell: descend ell derived
    schemes (fresh canonical transform each round), then certify C0."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    steps: list[str] = []
    current = mask
    for r in range(1, ell + 1):
        es = canonical_transform(current)
        current = derived(conjugate(current, es.r), es.k)
        steps.append(f"descent {r}: derived scheme with k={es.k}")
    res = certify_c0(current, lmax)
    if isinstance(res, Refusal):
        return Refusal(stage=f"{res.stage} after {ell} descents",
                       reason=res.reason, norms=res.norms)
    if ell == 0:
        return res
    return Certificate(kind="chain", L=res.L, norm_value=res.norm_value,
                       steps=tuple(steps) + res.steps, ell=ell)


def certify_hermite(mask: Mask, ell: int, lmax: int = DEFAULT_LMAX):
    """Certificate chain that a Hermite scheme is HC^ell.

    Verifies the spectral condition, computes the Taylor scheme, checks its
    eigenspace is span{e2} (the vanishing-first-component hypothesis), then
    certifies the Taylor scheme is C^(ell-1) by ell-1 derived-scheme
    descents ending in a contractivity search.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1 for Hermite certificates")
    rep = check_spectral(mask)
    if not rep.holds:
        return Refusal(stage="spectral condition",
                       reason=f"violated conditions {list(rep.violated)}")
    tay = taylor_scheme(mask)
    basis = common_one_eigenspace(tay)
    if not (len(basis) == 1 and basis[0][0, 0] == 0):
        return Refusal(stage="taylor eigenspace",
                       reason="common 1-eigenspace of the Taylor scheme "
                              "is not span{e2}")
    res = certify_vector(tay, ell - 1, lmax)
    pre = (f"spectral condition holds with phi={rep.phi}",
           "taylor scheme eigenspace is span{e2}")
    if isinstance(res, Refusal):
        return Refusal(stage=res.stage, reason=res.reason, norms=res.norms)
    return Certificate(kind="chain", L=res.L, norm_value=res.norm_value,
                       steps=pre + res.steps, ell=ell)


# -- limit rendering -----------------------------------------------------------------

@dataclass(frozen=True)
class LimitSample:
    """Sampled basic limit function after n refinement steps.

    Values are kept exact; rows expose t = i / 2**n with floats, and
    to_csv can emit either floats (17 significant digits) or p/q strings.
    """

    n: int
    p: int
    offset: int
    values: tuple[tuple[Fraction, ...], ...]

    @property
    def rows(self) -> list[tuple[float, tuple[float, ...]]]:
        scale = 2 ** self.n
        return [( (self.offset + i) / scale, tuple(float(x) for x in v))
                for i, v in enumerate(self.values)]

    def exact_rows(self) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
        scale = 2 ** self.n
        return [(Fraction(self.offset + i, scale), v)
                for i, v in enumerate(self.values)]

    def to_csv(self, exact: bool = False) -> str:
        header = "t," + ",".join(f"c{r + 1}" for r in range(self.p))
        lines = [header]
        if exact:
            for t, v in self.exact_rows():
                lines.append(",".join([str(t)] + [str(x) for x in v]))
        else:
            for t, v in self.rows:
                lines.append(",".join(f"{x:.17g}" for x in (t, *v)))
        return "\n".join(lines) + "\n"


def render(mask: Mask, n: int, component: int = 1) -> LimitSample:
    """n exact refinement steps from a unit impulse in the given component.

    Hermite data is re-normalized by diag(1, 2**n) afterwards so both
    channels approximate the limit function and its derivative on the grid
    i / 2**n.  Conversion to floats happens only in the CSV/rows views.
    """
    if n < 1:
        raise ValueError("depth must be >= 1")
    c = FinSeq.delta(mask.p, component)
    for _ in range(n):
        c = apply(mask, c)
    if mask.kind is Kind.HERMITE:
        pow2 = Fraction(2) ** n
        c = FinSeq.make(c.p, c.offset,
                        [[v[0], v[1] * pow2] for v in c.values])
    if c.is_zero():
        return LimitSample(n=n, p=mask.p, offset=0, values=())
    return LimitSample(n=n, p=mask.p, offset=c.offset, values=c.values)
