"""Executable arithmetic constraints on signatures and the OT/LCK verdict.

The signature case analysis mechanizes the subfield argument: if a rank-s
subgroup has all equal-modulus generators, the fixed field of the
equal-conjugates condition has signature (s', t') with t' in {0, 1} and
must satisfy a degree bound, an embedding-count inequality and the
Dirichlet rank inequality simultaneously.  For t >= 2 no case survives,
which is the main theorem in checkable form; the audit operation replays
this consistency check on concrete fields and generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InputError
from .numberfield import NumberField, FieldElement, is_unit
from .roots import PrecisionContext
from .units import (
    UnitSubgroup,
    is_equal_modulus,
    is_totally_positive,
    rank,
)


@dataclass(frozen=True)
class SignaturePair:
    """(number of real embeddings, number of conjugate pairs)."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 0 or self.t < 0 or self.s + 2 * self.t < 1:
            raise InputError("invalid signature")


@dataclass(frozen=True)
class CaseRecord:
    """A surviving (s', t', [K:L]) case of the signature analysis."""

    s_prime: int
    t_prime: int
    degree_ratio: int  # [K:L]


def dubickas_feasible(sig: SignaturePair) -> Optional[Tuple[int, int]]:
    """Smallest (m, q), lexicographically, with s = (2t + 2m)q - 2t for
    m >= 0, q >= 2; None when the relation has no solution.  The relation
    constrains signatures of fields containing an equal-modulus unit of
    infinite order."""
    s, t = sig.s, sig.t
    if s < 1 or t < 1:
        raise InputError("need s >= 1 and t >= 1")
    target = s + 2 * t
    for m in range(0, target // 2 + 1):
        base = 2 * t + 2 * m
        if base == 0:
            continue
        q, r = divmod(target, base)
        if r == 0 and q >= 2:
            return (m, q)
    return None


def signature_case_analysis(sig: SignaturePair) -> List[CaseRecord]:
    """All (s', t', D) with t' in {0, 1} satisfying
      (s' + 2t') * D = s + 2t   (subfield degree divisibility),
      D >= t                    (at least t embeddings over one of L),
      s' - 1 <= s / D <= s / t  (real embedding lifting),
      s' + t' - 1 >= s          (Dirichlet rank of the unit subgroup).
    Empty for every t >= 2; that emptiness is the main theorem."""
    s, t = sig.s, sig.t
    if s < 1 or t < 1:
        raise InputError("need s >= 1 and t >= 1")
    n = s + 2 * t
    out = []
    for d_ratio in range(max(1, t), n + 1):
        if n % d_ratio != 0:
            continue
        n_sub = n // d_ratio
        for t_prime in (0, 1):
            s_prime = n_sub - 2 * t_prime
            if s_prime < 0:
                continue
            if Fraction(s_prime - 1) > Fraction(s, d_ratio):
                continue
            if Fraction(s, d_ratio) > Fraction(s, t):
                continue
            if s_prime + t_prime - 1 < s:
                continue
            out.append(CaseRecord(s_prime, t_prime, d_ratio))
    out.sort(key=lambda c: (c.degree_ratio, c.t_prime, c.s_prime))
    return out


def lck_admissible(
    field: NumberField,
    gens: List[FieldElement],
    ctx: Optional[PrecisionContext] = None,
) -> dict:
    """OT/LCK admissibility surrogate: every generator a totally positive
    unit, the subgroup of certified rank s, and every generator passing the
    exact equal-modulus decision.  Per-generator certificates included."""
    s, t = field.signature
    if s < 1 or t < 1:
        raise InputError("OT data needs s >= 1 and t >= 1")
    return _lck_verdict(field, gens, ctx)


def _lck_verdict(field, gens, ctx=None) -> dict:
    ctx = ctx or field.ctx
    s, t = field.signature
    per_gen = []
    all_units = True
    all_pos = True
    all_eqmod = True
    reasons = []
    for g in gens:
        if g.is_zero:
            raise InputError("zero cannot generate units")
        gu = is_unit(g)
        all_units &= gu
        entry = {"generator": [str(c) for c in g.coeffs], "unit": gu}
        if gu:
            pos = is_totally_positive(g, ctx)
            eqm = is_equal_modulus(g, ctx)
            entry["totally_positive"] = pos.value
            entry["equal_modulus"] = eqm.value
            entry["certificates"] = {
                "totally_positive": pos.certificate,
                "equal_modulus": eqm.certificate,
            }
            all_pos &= pos.value
            all_eqmod &= eqm.value
            if not eqm.value:
                reasons.append(
                    f"equal_modulus fails on generator {g.to_json()}"
                )
            if not pos.value:
                reasons.append(f"generator {g.to_json()} is not totally positive")
        else:
            reasons.append(f"generator {g.to_json()} is not a unit")
        per_gen.append(entry)
    unit_gens = [g for g in gens if is_unit(g)]
    certified, estimate = rank(UnitSubgroup(field, unit_gens, ctx))
    rank_ok = certified == s
    if not rank_ok:
        reasons.append(f"certified rank {certified} != s = {s}")
    verdict = {
        "signature": [s, t],
        "all_units": all_units,
        "all_totally_positive": all_pos,
        "all_equal_modulus": all_eqmod,
        "rank": {"certified": certified, "estimate": estimate},
        "rank_equals_s": rank_ok,
        "generators": per_gen,
        "lck": all_units and all_pos and all_eqmod and rank_ok,
        "reasons": reasons,
    }
    return verdict


def main_theorem_audit(
    field: NumberField,
    gens: List[FieldElement],
    ctx: Optional[PrecisionContext] = None,
) -> dict:
    """Consistency audit: an admissible verdict (lck = true) must only ever
    occur with t = 1.  When t >= 2 and everything else holds, the audit
    names a generator violating equal-modulus, corroborates with the
    emptiness of the signature case analysis, and (for t = 2) records the
    unit-point heights of the generators."""
    from .heights import unit_point_height

    s, t = field.signature
    ctx = ctx or field.ctx
    report = {"field": str(field.poly), "signature": [s, t]}
    verdict = _lck_verdict(field, gens, ctx)
    if s < 1 or t < 1:
        verdict["lck"] = False
        verdict["reasons"].append("not OT data (needs s >= 1 and t >= 1)")
    report.update(verdict)
    if t >= 2 and s >= 1:
        analysis = signature_case_analysis(SignaturePair(s, t))
        report["case_analysis"] = [
            {"s_prime": c.s_prime, "t_prime": c.t_prime, "degree_ratio": c.degree_ratio}
            for c in analysis
        ]
        report["case_analysis_empty"] = not analysis
        others_ok = (
            verdict["all_units"]
            and verdict["all_totally_positive"]
            and verdict["rank_equals_s"]
        )
        if others_ok:
            violators = [
                e["generator"]
                for e in verdict["generators"]
                if not e.get("equal_modulus", True)
            ]
            report["equal_modulus_violators"] = violators
        if t == 2:
            heights = []
            for g in gens:
                if is_unit(g):
                    hv = unit_point_height(g, ctx=ctx)
                    heights.append(
                        {
                            "generator": [str(c) for c in g.coeffs],
                            "unit_point_height": float(hv.value),
                            "error": float(hv.error),
                        }
                    )
            report["unit_point_heights"] = heights
    consistent = not (verdict["lck"] and t >= 2)
    report["status"] = "CONSISTENT" if consistent else "INCONSISTENT"
    return report
