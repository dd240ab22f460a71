"""Logarithmic embeddings of units and the exact unit-group decisions:
equal modulus across complex conjugates, literally equal conjugates, and
total positivity.

Equality decisions never use a tolerance.  The quantities being compared
(squared pair moduli, or the conjugate values themselves) are algebraic
numbers that are roots of an explicitly constructed integer polynomial; if
two of them differ they differ by at least the root-separation bound delta
of that polynomial, so comparing certified enclosures of radius < delta/4
is both sound and complete.  Every verdict carries a certificate recording
the precision, the separation bound and the measured margin.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional

from mpmath import mp, mpf

from .balls import RealBall
from .errors import InputError, PrecisionExhausted
from .numberfield import (
    FieldElement,
    NumberField,
    element_ball,
    is_unit,
    min_poly_int,
)
from .polys import conjugate_product_poly
from .roots import DEFAULT_CTX, PrecisionContext, certified_sign, root_separation_bound

_GUARD = 12


@dataclass(frozen=True)
class Decision:
    """Boolean verdict plus the certificate that justifies it."""

    value: bool
    certificate: dict

    def __bool__(self):
        return self.value


@dataclass
class UnitSubgroup:
    """Finitely generated subgroup of the unit group (torsion implicit)."""

    field: NumberField
    generators: List[FieldElement]
    ctx: PrecisionContext = dc_field(default_factory=lambda: DEFAULT_CTX)

    def __post_init__(self):
        for g in self.generators:
            if g.field != self.field:
                raise InputError("generator from a different field")
            if not is_unit(g):
                raise InputError(f"generator {g} is not a unit")


def log_embedding(u: FieldElement, digits: Optional[int] = None) -> List[object]:
    """Dirichlet log vector (n_i * log|sigma_i(u)|) of length s + t, weights
    1 for real embeddings and 2 for pair representatives.  Entries are mpf
    midpoints computed with certified enclosures at the requested digits."""
    if u.is_zero:
        raise InputError("log embedding of zero")
    if not is_unit(u):
        raise InputError("log embedding requires a unit")
    balls = log_embedding_balls(u, digits or u.field.ctx.working_digits)
    return [b.mid for b in balls]


def log_embedding_balls(u: FieldElement, digits: int) -> List[RealBall]:
    fld = u.field
    s, t = fld.signature
    out = []
    with mp.workdps(digits + _GUARD):
        for i in range(s + t):
            ball = element_ball(u, i, digits).abs_ball().log()
            n = 1 if i < s else 2
            out.append(ball.scale(Fraction(n)))
    return out


def product_formula_defect(u: FieldElement, digits: int):
    """|sum of the log vector|, evaluated entirely at the given precision.
    Zero (up to enclosure width) for every unit: the archimedean product
    formula with all non-archimedean factors equal to 1."""
    balls = log_embedding_balls(u, digits)
    with mp.workdps(digits + _GUARD):
        total = balls[0]
        for b in balls[1:]:
            total = total + b
        return abs(total.mid) + total.rad


# ---------------------------------------------------------------------------
# Exact decisions


def _pair_sq_moduli(u: FieldElement, digits: int) -> List[RealBall]:
    fld = u.field
    s, t = fld.signature
    with mp.workdps(digits + _GUARD):
        return [element_ball(u, s + k, digits).sq_modulus() for k in range(t)]


def _max_pairwise_gap(balls: List[RealBall]):
    gap = mpf(0)
    rad = max(b.rad for b in balls)
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            gap = max(gap, abs(balls[i].mid - balls[j].mid))
    return gap, rad


def is_equal_modulus(u: FieldElement, ctx: Optional[PrecisionContext] = None) -> Decision:
    """Exact decision of |sigma_{s+1}(u)| = ... = |sigma_{s+t}(u)|.

    The squared pair moduli are pairwise products of conjugate roots of
    min_poly(u), hence roots of its conjugate-product polynomial; distinct
    values are separated by that polynomial's root-separation bound."""
    if u.is_zero:
        raise InputError("zero has no conjugate moduli")
    ctx = ctx or u.field.ctx
    t = u.field.t
    if t <= 1:
        return Decision(True, {"reason": "t <= 1, single or no conjugate pair"})
    g = min_poly_int(u)
    if g.degree == 1:
        return Decision(True, {"reason": "rational element, all conjugates equal"})
    prod_poly = conjugate_product_poly(g)
    delta = root_separation_bound(prod_poly)
    if delta is None:
        return Decision(True, {"reason": "single pairwise product"})
    quarter = delta / 4
    for digits in ctx.ladder():
        balls = _pair_sq_moduli(u, digits)
        with mp.workdps(digits + _GUARD):
            dq = mpf(quarter.numerator) / mpf(quarter.denominator)
            if max(b.rad for b in balls) >= dq:
                continue
            gap, rad = _max_pairwise_gap(balls)
            cert = {
                "precision_digits": digits,
                "separation_bound": float(delta),
                "measured_margin": float(gap - 2 * rad) if gap > 2 * rad else 0.0,
            }
            if gap < 2 * dq:
                return Decision(True, cert)
            return Decision(False, cert)
    raise PrecisionExhausted("equal-modulus enclosures never beat the separation bound")


def is_equal_conjugates(u: FieldElement, ctx: Optional[PrecisionContext] = None) -> Decision:
    """Exact decision of sigma_{s+1}(u) = ... = sigma_{s+t}(u) as complex
    numbers: distinct values are distinct roots of min_poly(u)."""
    ctx = ctx or u.field.ctx
    s, t = u.field.signature
    if t <= 1:
        return Decision(True, {"reason": "t <= 1"})
    g = min_poly_int(u)
    if g.degree == 1:
        return Decision(True, {"reason": "rational element"})
    delta = root_separation_bound(g)
    quarter = delta / 4
    for digits in ctx.ladder():
        with mp.workdps(digits + _GUARD):
            balls = [element_ball(u, s + k, digits) for k in range(t)]
            dq = mpf(quarter.numerator) / mpf(quarter.denominator)
            if max(b.rad for b in balls) >= dq:
                continue
            gap = mpf(0)
            rad = max(b.rad for b in balls)
            for i in range(t):
                for j in range(i + 1, t):
                    gap = max(gap, abs(balls[i].mid - balls[j].mid))
            cert = {
                "precision_digits": digits,
                "separation_bound": float(delta),
                "measured_margin": float(gap - 2 * rad) if gap > 2 * rad else 0.0,
            }
            return Decision(gap < 2 * dq, cert)
    raise PrecisionExhausted("equal-conjugates enclosures never beat the separation bound")


def is_totally_positive(u: FieldElement, ctx: Optional[PrecisionContext] = None) -> Decision:
    """sigma_i(u) > 0 for every real embedding (vacuously true when s = 0)."""
    if u.is_zero:
        raise InputError("zero is not totally positive")
    ctx = ctx or u.field.ctx
    s = u.field.s
    if s == 0:
        return Decision(True, {"reason": "no real embeddings"})
    signs = []
    for i in range(s):
        sign = certified_sign(
            lambda digits, i=i: element_ball(u, i, digits).real_ball(), ctx
        )
        signs.append(sign)
        if sign < 0:
            break
    return Decision(all(x > 0 for x in signs), {"real_embedding_signs": signs})


# ---------------------------------------------------------------------------
# Rank of the log-vector lattice


def _interval_det(rows):
    """Determinant of a small square RealBall matrix by Laplace expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _interval_det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out


def rank(group: UnitSubgroup):
    """(certified_lower_bound, estimate) for the rank of the generator log
    lattice.  The estimate is the numeric rank at pivot threshold
    10^(-working_digits/2); the lower bound comes from an interval
    determinant of a greedily chosen minor that excludes zero."""
    gens = group.generators
    fld = group.field
    s, t = fld.signature
    dirichlet = s + t - 1
    if not gens:
        return 0, 0
    digits = group.ctx.working_digits
    balls = [log_embedding_balls(g, digits) for g in gens]
    with mp.workdps(digits + _GUARD):
        mat = [[b.mid for b in row] for row in balls]
        tau = mpf(10) ** (-(digits // 2))
        est, pivots = _float_rank(mat, tau)
    est = min(est, dirichlet)
    certified = 0
    for size in range(est, 0, -1):
        sel_rows = [p[0] for p in pivots[:size]]
        sel_cols = [p[1] for p in pivots[:size]]
        ok = False
        for d2 in group.ctx.ladder():
            refined = [log_embedding_balls(gens[r], d2) for r in sel_rows]
            with mp.workdps(d2 + _GUARD):
                sub = [[refined[i][c] for c in sel_cols] for i in range(size)]
                det = _interval_det(sub)
            if not det.contains_zero():
                ok = True
                break
            if det.rad < mpf(10) ** (-(d2 // 2)):
                break  # determinant is genuinely (near) zero; smaller minor
        if ok:
            certified = size
            break
    assert certified <= dirichlet
    return certified, est


def _float_rank(mat, tau):
    """Gaussian elimination with full pivoting; returns (rank, pivot list)."""
    m = [row[:] for row in mat]
    nrows, ncols = len(m), len(m[0])
    used_r, used_c = set(), set()
    pivots = []
    for _ in range(min(nrows, ncols)):
        best, br, bc = mpf(0), -1, -1
        for i in range(nrows):
            if i in used_r:
                continue
            for j in range(ncols):
                if j in used_c:
                    continue
                if abs(m[i][j]) > best:
                    best, br, bc = abs(m[i][j]), i, j
        if best <= tau:
            break
        pivots.append((br, bc))
        used_r.add(br)
        used_c.add(bc)
        for i in range(nrows):
            if i in used_r:
                continue
            factor = m[i][bc] / m[br][bc]
            for j in range(ncols):
                m[i][j] -= factor * m[br][j]
    return len(pivots), pivots


def analyze_subgroup(group: UnitSubgroup) -> dict:
    """Per-generator verdicts plus subgroup rank and the Dirichlet flags."""
    fld = group.field
    s, t = fld.signature
    per_gen = []
    for g in group.generators:
        eqmod = is_equal_modulus(g, group.ctx)
        per_gen.append(
            {
                "generator": [str(c) for c in g.coeffs],
                "unit": is_unit(g),
                "totally_positive": is_totally_positive(g, group.ctx).value,
                "equal_modulus": eqmod.value,
                "equal_conjugates": is_equal_conjugates(g, group.ctx).value,
                "certificates": {"equal_modulus": eqmod.certificate},
            }
        )
    certified, estimate = rank(group)
    return {
        "field": str(fld.poly),
        "signature": [s, t],
        "generators": per_gen,
        "rank": {"certified": certified, "estimate": estimate},
        "rank_equals_s": certified == s,
        "rank_within_dirichlet": estimate <= s + t - 1,
    }
