"""Exact truncated power series and the Golod lower-bound machinery.

Coefficients are Python integers, so nothing overflows however fast they grow.
Rationals are :class:`fractions.Fraction`; floats are never used in a check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import BadCountSeries, InvalidArgument, NotApplicable, NotInvertible

DEFAULT_ORDER = 200
SLACK = Fraction(3, 50)  # lambda = m - 0.06


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known through ``x**order``; ``coeffs[i]`` is ``[x^i]``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise InvalidArgument("a truncated series needs at least one coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: Optional[int] = None) -> "TruncatedSeries":
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1))[:order + 1]
        return cls(tuple(c))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(self.coeffs, order)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, TruncatedSeries(tuple(-c for c in other.coeffs)))

    def __mul__(self, other):
        return series_mul(self, other)

    def dump(self, m: Optional[int] = None) -> str:
        header = f"order={self.order}" + (f" m={m}" if m is not None else "")
        return "\n".join([header, *map(str, self.coeffs)]) + "\n"

    @classmethod
    def load(cls, text: str) -> "TruncatedSeries":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        fields = dict(f.split("=", 1) for f in lines[0].split())
        s = cls(tuple(int(ln) for ln in lines[1:]))
        if s.order != int(fields["order"]):
            raise InvalidArgument("series dump header does not match its body")
        return s


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum, padding the shorter series with zeros."""
    n = max(len(a), len(b))
    ca = a.coeffs + (0,) * (n - len(a))
    cb = b.coeffs + (0,) * (n - len(b))
    return TruncatedSeries(tuple(x + y for x, y in zip(ca, cb)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    order = min(a.order, b.order)
    out = [0] * (order + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs[:order + 1]):
        if ai:
            for j in range(order + 1 - i):
                out[i + j] += ai * bc[j]
    return TruncatedSeries(tuple(out))


def series_reciprocal(a: TruncatedSeries, order: Optional[int] = None) -> TruncatedSeries:
    """``1/a`` through ``x**order``; the constant term must be +1 or -1.

    Terms of ``a`` beyond its own order are taken to be zero.
    """
    if order is None:
        order = a.order
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NotInvertible(f"constant term {a0} is not a unit in the integers")
    support = [(j, c) for j, c in enumerate(a.coeffs[1:order + 1], start=1) if c]
    r = [a0]  # 1/a0 == a0 for a0 = +-1
    for n in range(1, order + 1):
        acc = 0
        for j, c in support:
            if j > n:
                break
            acc += c * r[n - j]
        r.append(-acc * a0)
    return TruncatedSeries(tuple(r))


def instance_gf(occurrences: Sequence[int], m: int, order: int) -> TruncatedSeries:
    """Instance-counting series for a pattern with the given occurrence vector.

    The product over variables of ``sum_{i>=1} m**i x**(a*i)``, where ``a`` is
    the variable's number of occurrences.  Its ``n``-th coefficient bounds the
    number of length-``n`` words over ``m`` letters that are instances.
    """
    if not occurrences:
        raise InvalidArgument("need at least one variable")
    if any(a < 1 for a in occurrences):
        raise InvalidArgument("every occurrence count must be >= 1")
    if m < 1:
        raise InvalidArgument("alphabet size must be >= 1")
    result = TruncatedSeries.one(order)
    for a in occurrences:
        factor = [0] * (order + 1)
        i = 1
        while a * i <= order:
            factor[a * i] = m ** i
            i += 1
        result = series_mul(result, TruncatedSeries(tuple(factor)))
    return result


def golod_series(m: int, c: TruncatedSeries, order: Optional[int] = None) -> TruncatedSeries:
    """``(1 - m x + c(x))^{-1}`` through ``x**order``.

    ``c`` counts (an upper bound on) the forbidden words of each length, so it
    must vanish at lengths 0 and 1.
    """
    if order is None:
        order = c.order
    if c.coeffs[0] != 0 or (c.order >= 1 and c.coeffs[1] != 0):
        raise BadCountSeries("forbidden-word counts must vanish at lengths 0 and 1")
    if c.order < order:
        raise BadCountSeries(f"count series known only to order {c.order} < {order}")
    denom = list(c.coeffs[:order + 1])
    denom[0] = 1
    if order >= 1:
        denom[1] = -m
    return series_reciprocal(TruncatedSeries(tuple(denom)), order)


def pattern_golod_series(occurrences: Sequence[int], m: int,
                         order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return golod_series(m, instance_gf(occurrences, m, order), order)


def first_negative(s: TruncatedSeries) -> Optional[int]:
    return next((n for n, c in enumerate(s.coeffs) if c < 0), None)


@dataclass(frozen=True)
class GrowthCheck:
    """Record of checking ``b_n >= lambda * b_{n-1}`` for ``1 <= n <= verified_to``."""

    lam: Fraction
    verified_to: int
    first_failure: Optional[int] = None
    m: Optional[int] = None
    mu: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def ratio_check(s: TruncatedSeries, lam, *, m: Optional[int] = None,
                mu: Optional[int] = None) -> GrowthCheck:
    lam = Fraction(lam)
    if s.coeffs[0] != 1:
        raise InvalidArgument("ratio_check expects a series with constant term 1")
    p, q = lam.numerator, lam.denominator
    b = s.coeffs
    failure = next((n for n in range(1, len(b)) if q * b[n] < p * b[n - 1]), None)
    return GrowthCheck(lam, s.order, failure, m, mu)


class ClosedForm(NamedTuple):
    holds: bool
    lhs: Fraction
    rhs: Fraction
    side_condition: bool


def lemma5_closed_form(m: int, mu: int, lam, exponent: int = 2) -> ClosedForm:
    """Exact check of ``m - lam >= lam * (m / (lam**mu - m))**exponent``.

    ``side_condition`` reports whether ``m / (lam**mu - m) <= 1``, which is
    what allows the exponent k (number of variables) to be replaced by 2.
    """
    lam = Fraction(lam)
    if exponent < 1:
        raise InvalidArgument("exponent must be >= 1")
    gap = lam ** mu - m
    if lam <= 0 or gap <= 0:
        raise NotApplicable(f"lambda**mu = {lam ** mu} does not exceed m = {m}")
    ratio = Fraction(m) / gap
    lhs = m - lam
    rhs = lam * ratio ** exponent
    return ClosedForm(lhs >= rhs, lhs, rhs, ratio <= 1)


def default_lambda(m: int) -> Fraction:
    return m - SLACK


def empirical_growth(s: TruncatedSeries) -> Fraction:
    """Smallest consecutive ratio ``b_n / b_{n-1}`` over the known coefficients."""
    b = s.coeffs
    if len(b) < 2:
        raise NotApplicable("need at least two coefficients")
    if any(c <= 0 for c in b):
        raise NotApplicable("empirical growth needs all coefficients positive")
    return min(Fraction(b[n], b[n - 1]) for n in range(1, len(b)))


def decimal_prefix(x: Fraction, digits: int = 6) -> str:
    """Truncated (not rounded) decimal expansion of a non-negative rational."""
    scaled = x.numerator * 10 ** digits // x.denominator
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{whole}.{frac:0{digits}d}"
