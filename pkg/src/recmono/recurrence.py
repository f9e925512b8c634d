"""Second-order linear recurrences over the rationals.

A spec pins down one solution of

    a[n+2] = a * a[n+1] - b * a[n]

by its coefficients and starting pair (a[0], a[1]) = (v0, v1).  The sign
convention matches the monic characteristic polynomial x^2 - a*x + b, so
the roots multiply to b and sum to a.

h-type specs are the one-parameter family started from (c, a*c).  They
are exactly the solutions with a[-1] = 0, a scaled copy of the divided
difference h[n] = (alpha^(n+1) - beta^(n+1)) / (alpha - beta); several
decision procedures are stated only for this family.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .qfield import (
    QuadElem,
    RationalLike,
    RootPair,
    characteristic_roots,
    cmp_abs,
    order_by_modulus,
)

__all__ = [
    "RecurrenceSpec",
    "SequenceWindow",
    "LimitKind",
    "RatioLimit",
    "make_h_spec",
    "iterate",
    "term_minus_one",
    "closed_form_term",
    "ratio_limit",
    "exceptional_zero",
]


@dataclass(frozen=True)
class RecurrenceSpec:
    """Coefficients and starting pair; h_type marks the a[-1] = 0 family."""

    a: Fraction
    b: Fraction
    v0: Fraction
    v1: Fraction
    h_type: bool = False

    def __post_init__(self):
        for name in ("a", "b", "v0", "v1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == 0 or self.b == 0:
            raise ValueError("coefficients a and b must be nonzero")
        if self.v0 == 0 and self.v1 == 0:
            raise ValueError("starting pair must not be (0, 0)")
        if self.h_type and (self.v0 == 0 or self.v1 != self.a * self.v0):
            raise ValueError("h-type requires v0 != 0 and v1 = a*v0")

    def roots(self) -> RootPair:
        return characteristic_roots(self.a, self.b)


def make_h_spec(a: RationalLike, b: RationalLike, c: RationalLike = 1) -> RecurrenceSpec:
    """The solution c, c*a, ... with a[-1] = 0; c must be nonzero."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("h-type scale c must be nonzero")
    a = Fraction(a)
    return RecurrenceSpec(a, Fraction(b), c, a * c, h_type=True)


@dataclass(frozen=True)
class SequenceWindow:
    start_index: int
    terms: tuple[Fraction, ...]


def iterate(spec: RecurrenceSpec, n_max: int) -> SequenceWindow:
    """Exact terms a[0] .. a[n_max] by running the recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    terms = [spec.v0, spec.v1]
    for _ in range(n_max - 1):
        terms.append(spec.a * terms[-1] - spec.b * terms[-2])
    return SequenceWindow(0, tuple(terms[: n_max + 1]))


def term_minus_one(spec: RecurrenceSpec) -> Fraction:
    """The unique backward extension a[-1] = (a*a[0] - a[1]) / b."""
    return (spec.a * spec.v0 - spec.v1) / spec.b


def closed_form_term(spec: RecurrenceSpec, n: int) -> Fraction:
    """a[n] evaluated through the characteristic roots, exactly.

    Distinct roots r+ and r-:
        a[n] = ((v1 - v0*r-) * r+^n - (v1 - v0*r+) * r-^n) / (r+ - r-)
    Repeated root r:
        a[n] = v0*(n+1)*r^n + (v1 - a*v0)*n*r^(n-1)
    Requires a real discriminant.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    roots = spec.roots()
    if roots.discriminant_sign < 0:
        raise ValueError("closed form requires a non-negative discriminant")
    c0, c1 = spec.v0, spec.v1
    if roots.discriminant_sign == 0:
        if n == 0:
            return c0
        root = roots.alpha_plus.p  # rational by normal form
        return c0 * (n + 1) * root**n + (c1 - spec.a * c0) * n * root ** (n - 1)
    ap, am = roots.alpha_plus, roots.alpha_minus
    surd = QuadElem(0, 1, roots.discriminant)  # r+ - r-
    value = ((c1 - c0 * am) * ap**n - (c1 - c0 * ap) * am**n) / surd
    assert value.q == 0  # the irrational parts must cancel exactly
    return value.p


class LimitKind(Enum):
    CONVERGES = "converges"
    DIVERGES = "diverges"


@dataclass(frozen=True)
class RatioLimit:
    """Behavior of a[n+1]/a[n]; which_root tells which root is the limit."""

    kind: LimitKind
    limit: Optional[QuadElem]
    which_root: Optional[str]  # "alpha" (dominant) or "beta"


def ratio_limit(spec: RecurrenceSpec) -> RatioLimit:
    """Limit of consecutive-term ratios; needs v0*v1 != 0.

    The ratio converges exactly when the discriminant is non-negative.
    The limit is the dominant root alpha unless the starting pair kills
    its coefficient (v1 = v0*beta), in which case the orbit is a scaled
    power of beta and the ratio sits at beta from the start.
    """
    if spec.v0 * spec.v1 == 0:
        raise ValueError("ratio limit needs a nonzero starting pair")
    roots = spec.roots()
    if roots.discriminant_sign < 0:
        return RatioLimit(LimitKind.DIVERGES, None, None)
    alpha, beta = order_by_modulus(roots)
    if (spec.v1 - spec.v0 * beta).sign() != 0:
        return RatioLimit(LimitKind.CONVERGES, alpha, "alpha")
    return RatioLimit(LimitKind.CONVERGES, beta, "beta")


def exceptional_zero(spec: RecurrenceSpec, horizon: int = 10_000) -> Optional[int]:
    """Index of the unique zero term if one exists, else None.

    Requires v0*v1 != 0 and a non-negative discriminant; under those
    hypotheses at most one term can vanish.  Repeated root: the candidate
    index solves a linear equation.  Distinct roots: scan terms, stopping
    as soon as the dominant-root part strictly outweighs the other part
    in absolute value (from that index on no term can vanish).
    """
    if spec.v0 * spec.v1 == 0:
        raise ValueError("zero search needs a nonzero starting pair")
    roots = spec.roots()
    if roots.discriminant_sign < 0:
        raise ValueError("zero search requires a non-negative discriminant")
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    c0, c1 = spec.v0, spec.v1
    if roots.discriminant_sign == 0:
        root = roots.alpha_plus.p
        denom = c0 * root - c1
        if denom == 0:
            return None  # orbit is c0 * root^n, never zero
        candidate = c0 * root / denom
        if candidate.denominator == 1 and candidate >= 0:
            return int(candidate)
        return None
    alpha, beta = order_by_modulus(roots)
    lead = c1 - c0 * beta  # coefficient on alpha^n
    trail = c1 - c0 * alpha  # coefficient on beta^n
    if lead.sign() == 0 or trail.sign() == 0:
        return None  # single-root orbit, never zero
    x, y = lead, trail
    s, t = spec.v0, spec.v1
    for n in range(horizon + 1):
        if s == 0:
            return n
        if cmp_abs(x, y) > 0:
            return None  # |lead*alpha^m| > |trail*beta^m| for all m >= n
        x = x * alpha
        y = y * beta
        s, t = t, spec.a * t - spec.b * s
    return None
