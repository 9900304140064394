"""Avoidability certificates for patterns over 2, 3 or 4 letters.

Pipeline for a pattern ``p`` with ``k`` variables and a target alphabet size:

1. The target fixes a multiplicity ``mu0`` (2, 3, 4 for targets 4, 3, 2).
   If ``len(p) >= mu0**k`` the pigeonhole search guarantees a factor ``p'``
   in which every variable occurs a multiple of ``mu0`` times.
2. A one-variable factor ``x^r`` is settled by the classical results: ``xx``
   is 3-avoidable and ``xxx`` is 2-avoidable.
3. A factor with at least two variables, each occurring at least ``mu``
   times, is *proved* avoidable when the exact closed-form inequality holds
   for ``lambda = m - 3/50``; the ratio property is then also checked on the
   series as a cross-check.
4. Otherwise the Golod series is expanded to the requested order.  Positive
   coefficients give an *empirical* verdict, which is not a proof.

If a pattern's factor is avoidable, so is the pattern.  A verdict that is not
proved or cited is retried over smaller alphabets, since avoidance over fewer
letters implies avoidance over more.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from . import __version__
from .errors import BoundViolation, InvalidTarget, NotApplicable
from .oracle import count_avoiders
from .pattern import (
    FactorSpan,
    Pattern,
    balanced_factor,
    factor_pattern,
    min_occurrence,
    render,
    zimin,
)
from .series import (
    DEFAULT_ORDER,
    decimal_prefix,
    default_lambda,
    empirical_growth,
    first_negative,
    lemma5_closed_form,
    pattern_golod_series,
    ratio_check,
)

TARGETS = (2, 3, 4)
MULTIPLICITY = {4: 2, 3: 3, 2: 4}

ANALYTIC = "analytic-lemma5"
CLASSICAL = "classical-thue"
EMPIRICAL = "empirical-golod"
INCONCLUSIVE = "inconclusive"

PROVED = "proved"
CITED = "cited"
EMPIRICAL_VERDICT = "empirical"
NO_VERDICT = "inconclusive"

RIGOROUS = (PROVED, CITED)


@dataclass(frozen=True)
class Certificate:
    pattern: Pattern
    target_m: int
    k: int
    pattern_length: int
    threshold: int
    threshold_met: bool
    factor_span: FactorSpan
    factor: Pattern
    mu: int
    method: str
    lam: Optional[Fraction]
    verified_order: Optional[int]
    verdict: str
    established_m: int
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        factor = {
            "start": self.factor_span.start,
            "end": self.factor_span.end,
            "text": self.factor.text,
        }
        lam = None
        if self.lam is not None:
            lam = {"num": self.lam.numerator, "den": self.lam.denominator}
        return {
            "pattern": self.pattern.text,
            "target_m": self.target_m,
            "k": self.k,
            "length": self.pattern_length,
            "threshold": self.threshold,
            "threshold_met": self.threshold_met,
            "factor": factor,
            "mu": self.mu,
            "method": self.method,
            "lambda": lam,
            "verified_order": self.verified_order,
            "verdict": self.verdict,
            "established_m": self.established_m,
            "notes": list(self.notes),
            "tool_version": __version__,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"pattern        {self.pattern.text}",
            f"target         {self.target_m} letters",
            f"variables      k = {self.k}, length {self.pattern_length}",
            f"threshold      {self.threshold} ({'met' if self.threshold_met else 'not met'})",
        ]
        lines.append(f"factor         {self.factor.text} "
                     f"[{self.factor_span.start}, {self.factor_span.end})")
        lines.append(f"multiplicity   {self.mu}")
        lines.append(f"method         {self.method}")
        if self.lam is not None:
            lines.append(f"lambda         {self.lam} (~{decimal_prefix(self.lam, 4)}, approximate)")
        if self.verified_order is not None:
            lines.append(f"verified order {self.verified_order}")
        lines.append(f"verdict        {self.verdict}")
        lines.extend(f"note           {n}" for n in self.notes)
        return "\n".join(lines) + "\n"


def _thue(target: int, r: int) -> Optional[str]:
    if target == 2 and r >= 3:
        return "contains xxx, which is 2-avoidable"
    if target in (3, 4) and r >= 2:
        return "contains xx, which is 3-avoidable" + (" (hence 4-avoidable)" if target == 4 else "")
    return None


def _floor_lambda(x: Fraction, den: int = 50) -> Fraction:
    return Fraction(math.floor(x * den), den)


def _examine(sub: Pattern, target: int, order: int):
    """Run the verification paths on one candidate factor.

    Returns ``(method, verdict, lam, verified_order, notes)``.
    """
    notes = []
    mu = min_occurrence(sub)
    if sub.k == 1:
        reason = _thue(target, mu)
        if reason is not None:
            return CLASSICAL, CITED, None, None, [reason]
        if mu == 1:
            notes.append("a single variable occurring once is unavoidable")
        return INCONCLUSIVE, NO_VERDICT, None, None, notes

    occ = sub.occurrence_vector
    lam = default_lambda(target)
    if mu >= 2:
        try:
            closed = lemma5_closed_form(target, mu, lam, 2)
        except NotApplicable:
            closed = None
        if closed is not None and closed.holds and closed.side_condition:
            check = ratio_check(pattern_golod_series(occ, target, order), lam, m=target, mu=mu)
            if not check.passed:
                raise AssertionError(
                    f"closed form holds but b_n >= {lam} b_(n-1) fails at n={check.first_failure}")
            notes.append(f"m - lambda = {closed.lhs} >= {closed.rhs} "
                         f"(~{decimal_prefix(closed.rhs)})")
            return ANALYTIC, PROVED, lam, order, notes
        if closed is not None and not closed.holds:
            notes.append(f"closed form fails for (m, mu) = ({target}, {mu}): "
                         f"{closed.lhs} < {closed.rhs}")
        elif closed is not None:
            notes.append("closed form side condition fails")

    b = pattern_golod_series(occ, target, order)
    neg = first_negative(b)
    if neg is None and all(c > 0 for c in b):
        lam_emp = _floor_lambda(empirical_growth(b))
        if ratio_check(b, lam_emp).passed:
            notes.append(f"Golod coefficients positive through order {order}; not a proof")
            return EMPIRICAL, EMPIRICAL_VERDICT, lam_emp, order, notes
    if neg is not None:
        notes.append(f"Golod series has a negative coefficient at n={neg}")
    else:
        notes.append("Golod series has a zero coefficient")
    return INCONCLUSIVE, NO_VERDICT, None, order, notes


_RANK = {PROVED: 0, CITED: 1, EMPIRICAL_VERDICT: 2, NO_VERDICT: 3}


def _certify_at(p: Pattern, target: int, order: int) -> Certificate:
    mu0 = MULTIPLICITY[target]
    threshold = mu0 ** p.k
    met = len(p) >= threshold
    span = balanced_factor(p.symbols, mu0, p.variables)
    if met and span is None:  # pigeonhole makes this impossible
        raise AssertionError(f"no balanced factor in {p.text} despite length >= {threshold}")
    whole = FactorSpan(0, len(p))
    notes = []
    if met:
        candidates = [span, whole]
    else:
        notes.append(f"threshold not met: length {len(p)} < {threshold}")
        candidates = [whole] if span is None else [whole, span]
    if span == whole:
        candidates = [whole]

    # a proof on the pattern itself beats a citation on a one-variable factor
    best = None
    for cand in candidates:
        sub = factor_pattern(p, cand)
        result = _examine(sub, target, order)
        if best is None or _RANK[result[1]] < _RANK[best[2][1]]:
            best = (cand, sub, result)
    cand, sub, (method, verdict, lam, verified, extra) = best
    return Certificate(
        pattern=p, target_m=target, k=p.k, pattern_length=len(p),
        threshold=threshold, threshold_met=met, factor_span=cand, factor=sub,
        mu=min_occurrence(sub), method=method, lam=lam, verified_order=verified,
        verdict=verdict, established_m=target, notes=tuple(notes + extra),
    )


def certify(p: Pattern, target_m: int, order: int = DEFAULT_ORDER) -> Certificate:
    if target_m not in TARGETS:
        raise InvalidTarget(target_m)
    if order < 2:
        raise ValueError("order must be >= 2")
    cert = _certify_at(p, target_m, order)
    if cert.verdict in RIGOROUS:
        return cert
    for smaller in range(target_m - 1, 1, -1):
        lower = _certify_at(p, smaller, order)
        if lower.verdict in RIGOROUS:
            return replace(
                lower, target_m=target_m,
                notes=lower.notes + (f"avoidable over {smaller} letters, hence over {target_m}",))
    return cert


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    golod_bound: int
    brute_count: Optional[int]
    applicable: bool

    @property
    def gap(self) -> Optional[int]:
        if self.brute_count is None:
            return None
        return self.brute_count - self.golod_bound


def compare(p: Pattern, m: int, n_max: int, order: int = DEFAULT_ORDER,
            budget: Optional[int] = None) -> list[ComparisonRow]:
    """Golod lower bound against the exact avoider count for each length.

    A row is applicable while every Golod coefficient up to it is
    non-negative; in that range the exact count must dominate the bound.
    """
    b = pattern_golod_series(p.occurrence_vector, m, max(order, n_max))
    brute = count_avoiders(m, p, n_max, budget).counts
    rows = []
    applicable = True
    for n in range(n_max + 1):
        applicable = applicable and b[n] >= 0
        row = ComparisonRow(n, b[n], brute[n], applicable)
        if applicable and row.brute_count < row.golod_bound:
            raise BoundViolation(f"n={n}: {row.brute_count} avoiders < Golod bound {row.golod_bound}")
        rows.append(row)
    return rows


def comparison_csv(rows) -> str:
    out = ["n,golod,brute,gap,applicable"]
    for r in rows:
        brute = "" if r.brute_count is None else r.brute_count
        gap = "" if r.gap is None else r.gap
        out.append(f"{r.n},{r.golod_bound},{brute},{gap},{str(r.applicable).lower()}")
    return "\n".join(out) + "\n"


def analyze(p: Pattern) -> dict:
    k, n = p.k, len(p)
    thresholds = {"a": 2 ** k, "b": 3 ** k, "c": 4 ** k}
    clauses = [c for c, t in thresholds.items() if n >= t]
    remarks = []
    if render(p) == render(zimin(k)):
        remarks.append(f"Zimin pattern Z_{k}: length 2^k - 1 = {n}, unavoidable")
    elif k == 1 and n == 1:
        remarks.append("single variable occurring once: unavoidable")
    return {
        "pattern": p.text,
        "k": k,
        "length": n,
        "variables": [str(v) for v in p.variables],
        "occurrences": list(p.occurrence_vector),
        "min_occurrence": min_occurrence(p),
        "doubled": min_occurrence(p) >= 2,
        "thresholds": {"4-avoidable": thresholds["a"], "3-avoidable": thresholds["b"],
                       "2-avoidable": thresholds["c"]},
        "clauses": clauses,
        "remarks": remarks,
    }


def analysis_text(report: dict) -> str:
    names = {"a": "(a) 4-avoidable", "b": "(b) 3-avoidable", "c": "(c) 2-avoidable"}
    t = report["thresholds"]
    lines = [
        f"pattern     {report['pattern']}",
        f"variables   k = {report['k']} ({', '.join(report['variables'])})",
        f"length      {report['length']}",
        f"occurrences {tuple(report['occurrences'])}",
        f"doubled     {'yes' if report['doubled'] else 'no'}",
        f"thresholds  2^k = {t['4-avoidable']}, 3^k = {t['3-avoidable']}, 4^k = {t['2-avoidable']}",
        "clauses     " + (", ".join(names[c] for c in report["clauses"]) or "none apply by length"),
    ]
    lines.extend(f"remark      {r}" for r in report["remarks"])
    return "\n".join(lines) + "\n"
