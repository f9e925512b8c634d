"""Exact finite-window checks of the three monotonicity properties.

These scans work directly on iterated terms and know nothing about the
decision criteria; they are the second route every verdict is held
against.  All comparisons are exact.

For speed the scans run on a rescaled integer copy of the sequence:
with a = A/q, b = B/q over a common denominator q and D clearing the
starting pair, M[n] := a[n] * q**n * D is an integer sequence obeying
M[n+2] = A*M[n+1] - B*q*M[n].  Each compared inequality, cleared of its
(shared, positive) denominator, becomes a sign test on X + Y*sqrt(d)
with integers X, Y and d = q**2 * (a**2 - 4b) >= 0 -- no rational
normalization ever runs.  The rescaling multiplies compared quantities
by positive constants only, so every verdict equals the one computed on
raw terms; the test suite checks that equivalence against a direct
rational-arithmetic reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Optional

from .qfield import characteristic_roots, order_by_modulus
from .recurrence import RecurrenceSpec

__all__ = [
    "PropertyId",
    "WindowReport",
    "check_p1_window",
    "check_p2_window",
    "check_p3_window",
    "find_n0",
]


class PropertyId(Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"


@dataclass(frozen=True)
class WindowReport:
    """Result of one exact scan.

    checked_range is the closed index interval of compared positions;
    skipped_indices lists positions whose comparison is undefined
    (a zero term under a ratio) and was left out of the scan.
    """

    property: PropertyId
    checked_range: tuple[int, int]
    holds_on_window: bool
    first_violation: Optional[int]
    skipped_indices: tuple[int, ...]


def _scaled_sequence(spec: RecurrenceSpec, n_max: int):
    """(q, A, B, d, M) with M[n] = a[n] * q**n * D integral for n <= n_max
    and d = q**2 * (a**2 - 4*b) the integer radicand of the discriminant."""
    q = lcm(spec.a.denominator, spec.b.denominator)
    A = int(spec.a * q)
    B = int(spec.b * q)
    D = lcm(spec.v0.denominator, spec.v1.denominator)
    M = [int(spec.v0 * D), int(spec.v1 * q * D)]
    Bq = B * q
    for _ in range(n_max - 1):
        M.append(A * M[-1] - Bq * M[-2])
    return q, A, B, A * A - 4 * Bq, M


def _int_sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _quad_int_sign(x: int, y: int, d: int) -> int:
    """Sign of x + y*sqrt(d) for integers with d >= 0."""
    if y == 0 or d == 0:
        return _int_sign(x)
    if x == 0:
        return _int_sign(y)
    sx, sy = _int_sign(x), _int_sign(y)
    if sx == sy:
        return sx
    return sx * _int_sign(x * x - y * y * d)


def _sq_residual(m_n: int, m_n1: int, A: int, d: int, s: int) -> tuple[int, int]:
    """(P, Q) with P + Q*sqrt(d) = (2*q**(n+1)*D * (a[n]*alpha - a[n+1]))**2,
    computed from the scaled terms: the doubled scaled residual is
    (M[n]*A - 2*M[n+1]) + s*M[n]*sqrt(d), where s = +1 when the dominant
    root alpha is (a + sqrt(disc))/2 and -1 when it is the other one."""
    u = m_n * A - 2 * m_n1
    return u * u + m_n * m_n * d, 2 * s * m_n * u


def _dominant_sign(spec: RecurrenceSpec) -> int:
    """+1 if the larger-modulus root is (a + sqrt(disc))/2, else -1."""
    roots = characteristic_roots(spec.a, spec.b)
    alpha, _ = order_by_modulus(roots)
    return 1 if alpha == roots.alpha_plus else -1


def check_p1_window(spec: RecurrenceSpec, k: int, n_max: int) -> WindowReport:
    """Scan a[n] <= a[n+1] for n in [k-1, n_max].

    For k = 0 the first compared pair is (a[-1], a[0]) with a[-1] the
    backward extension.
    """
    if k < 0:
        raise ValueError("start index must be non-negative")
    if n_max < k:
        raise ValueError("window must reach the start index")
    q, A, B, _, M = _scaled_sequence(spec, n_max + 1)
    first: Optional[int] = None
    if k == 0:
        # a[-1] = (A*M[0] - M[1]) / (B*D) against a[0] = M[0]/D
        lhs, rhs = A * M[0] - M[1], B * M[0]
        if (lhs > rhs) if B > 0 else (lhs < rhs):
            first = -1
    lo = 0 if k == 0 else k - 1
    if first is None:
        for n in range(lo, n_max + 1):
            if q * M[n] > M[n + 1]:
                first = n
                break
    return WindowReport(PropertyId.P1, (k - 1, n_max), first is None, first, ())


def check_p2_window(spec: RecurrenceSpec, n_max: int) -> WindowReport:
    """Scan |alpha - a[n+1]/a[n]| >= |alpha - a[n+2]/a[n+1]| for n in [0, n_max].

    alpha is the dominant root; a negative discriminant is an error since
    the compared distances are not real then.  Comparisons where a[n] or
    a[n+1] vanishes are skipped and recorded.  Each side is cleared of
    denominators and squared, so the scan compares
    (a[n]*alpha - a[n+1])^2 * a[n+1]^2 against
    (a[n+1]*alpha - a[n+2])^2 * a[n]^2 exactly.
    """
    if n_max < 0:
        raise ValueError("window length must be non-negative")
    roots = characteristic_roots(spec.a, spec.b)
    if roots.discriminant_sign < 0:
        raise ValueError("ratio distances are undefined for complex roots")
    _, A, _, d, M = _scaled_sequence(spec, n_max + 2)
    s = _dominant_sign(spec)
    skipped: list[int] = []
    first: Optional[int] = None
    for n in range(n_max + 1):
        if M[n] == 0 or M[n + 1] == 0:
            skipped.append(n)
            continue
        p_n, q_n = _sq_residual(M[n], M[n + 1], A, d, s)
        p_n1, q_n1 = _sq_residual(M[n + 1], M[n + 2], A, d, s)
        sq0, sq1 = M[n + 1] * M[n + 1], M[n] * M[n]
        if _quad_int_sign(p_n * sq0 - p_n1 * sq1, q_n * sq0 - q_n1 * sq1, d) < 0:
            first = n
            break
    return WindowReport(PropertyId.P2, (0, n_max), first is None, first, tuple(skipped))


def check_p3_window(spec: RecurrenceSpec, n_max: int) -> WindowReport:
    """Scan |a[n]*alpha - a[n+1]| >= |a[n+1]*alpha - a[n+2]| for n in [0, n_max].

    Real roots: squared residuals over a common denominator, compared
    exactly.  Complex pair: the squared residual modulus is
    (v1^2 - a*v0*v1 + b*v0^2) * b^n exactly, and consecutive values are
    compared index by index.
    """
    if n_max < 0:
        raise ValueError("window length must be non-negative")
    roots = characteristic_roots(spec.a, spec.b)
    first: Optional[int] = None
    if roots.discriminant_sign >= 0:
        q, A, _, d, M = _scaled_sequence(spec, n_max + 2)
        s = _dominant_sign(spec)
        qq = q * q
        p_n, q_n = _sq_residual(M[0], M[1], A, d, s)
        for n in range(n_max + 1):
            p_n1, q_n1 = _sq_residual(M[n + 1], M[n + 2], A, d, s)
            if _quad_int_sign(qq * p_n - p_n1, qq * q_n - q_n1, d) < 0:
                first = n
                break
            p_n, q_n = p_n1, q_n1
    else:
        # squared modulus sequence m * b^n tracked as an exact integer
        # pair (num, den); consecutive values compared cross-multiplied
        m = spec.v1**2 - spec.a * spec.v0 * spec.v1 + spec.b * spec.v0**2
        bn, bd = spec.b.numerator, spec.b.denominator
        num, den = m.numerator, m.denominator
        for n in range(n_max + 1):
            num_next, den_next = num * bn, den * bd
            if num * den_next < num_next * den:
                first = n
                break
            num, den = num_next, den_next
    return WindowReport(PropertyId.P3, (0, n_max), first is None, first, ())


def find_n0(spec: RecurrenceSpec, n_cap: int) -> Optional[int]:
    """Smallest n0 <= n_cap with a[n] <= a[n+1] for all n in [n0, n_cap].

    Returns None when even the final compared pair violates.  This is a
    witness for the eventual property, not a proof.
    """
    if n_cap < 0:
        raise ValueError("cap must be non-negative")
    q, _, _, _, M = _scaled_sequence(spec, n_cap + 1)
    n0 = 0
    for n in range(n_cap + 1):
        if q * M[n] > M[n + 1]:
            n0 = n + 1
    return n0 if n0 <= n_cap else None
