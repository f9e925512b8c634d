"""Full analysis of one recurrence, cross-checked and JSON-ready.

The report carries every decision verdict next to the oracle window it
must agree with on the scanned range.  Agreements that are theorems are
enforced here: a holding verdict with a dirty window, or a failing
verdict whose guaranteed early violation is missing, raises
InternalInconsistency (the CLI maps it to exit code 1).  The one known
benign exception is a starting pair lying exactly on the dominant
eigen-solution: the weighted residuals are then identically zero, every
window comparison ties, and the report flags degenerate_geometric
instead of failing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from . import decisions, oracle
from .decisions import Branch, Verdict
from .oracle import WindowReport
from .qfield import QuadElem, decimal_str, order_by_modulus
from .recurrence import (
    LimitKind,
    RecurrenceSpec,
    iterate,
    ratio_limit,
    term_minus_one,
)
from .riccati import riccati_orbit

__all__ = ["InternalInconsistency", "build_report"]

RICCATI_PREFIX_LEN = 8
TERMS_PREVIEW_LEN = 9


class InternalInconsistency(RuntimeError):
    """A decision verdict contradicts its oracle window."""


def _quad_json(x: QuadElem) -> dict:
    return {"exact": str(x), "decimal": decimal_str(x)}


def _verdict_json(v: Optional[Verdict], **extra) -> Optional[dict]:
    if v is None:
        return None
    out = {"holds": v.holds, "branch": v.branch.value}
    out.update(extra)
    return out


def _window_json(w: Optional[WindowReport], **extra) -> Optional[dict]:
    if w is None:
        return None
    out = {
        "property": w.property.value,
        "checked_range": list(w.checked_range),
        "holds_on_window": w.holds_on_window,
        "first_violation": w.first_violation,
        "skipped_indices": list(w.skipped_indices),
    }
    out.update(extra)
    return out


def _abs_quad(x: QuadElem) -> QuadElem:
    return -x if x.sign() < 0 else x


def build_report(spec: RecurrenceSpec, window: int = 300, from_k: int = 0) -> dict:
    """Assemble the analysis dict; raises InternalInconsistency on mismatch."""
    if window < 1:
        raise ValueError("window must be at least 1")
    if from_k < 0:
        raise ValueError("start index must be non-negative")

    roots = spec.roots()
    real = roots.discriminant_sign >= 0
    terms = iterate(spec, max(window + 2, TERMS_PREVIEW_LEN)).terms

    # ---- verdicts ---------------------------------------------------------
    v_eventual = decisions.eventually_nondecreasing(spec)
    v_immediate = decisions.nondecreasing_from(spec, 0)
    v_from_k = v_immediate if from_k == 0 else decisions.nondecreasing_from(spec, from_k)
    v_h_monotone = decisions.positive_monotone_h(spec) if spec.h_type else None
    v_h_ratio = decisions.ratio_monotone_h(spec) if spec.h_type else None
    v_ratio_eventual = (
        decisions.eventually_ratio_monotone(spec) if spec.v0 * spec.v1 != 0 else None
    )
    v_weighted = decisions.weighted_monotone(spec)

    # ---- oracle windows ---------------------------------------------------
    w1_immediate = oracle.check_p1_window(spec, 0, window)
    w1_from_k = (
        w1_immediate if from_k == 0 else oracle.check_p1_window(spec, from_k, from_k + window)
    )
    w2 = oracle.check_p2_window(spec, window) if real else None
    w3 = oracle.check_p3_window(spec, window)
    n0 = oracle.find_n0(spec, window)

    # degenerate start: coefficient of the dominant root vanishes, the
    # weighted residual is identically zero
    if real:
        alpha, beta = order_by_modulus(roots)
        degenerate = (spec.v1 - spec.v0 * alpha).sign() == 0
    else:
        alpha = beta = None
        degenerate = False

    # ---- consistency: holding verdicts need clean windows -----------------
    def _mismatch(msg: str) -> None:
        raise InternalInconsistency(f"decision/oracle mismatch: {msg}")

    if v_from_k.holds and not w1_from_k.holds_on_window:
        _mismatch(
            f"nondecreasing_from({from_k}) holds but the window finds a "
            f"violation at {w1_from_k.first_violation}"
        )
    if v_immediate.holds and not w1_immediate.holds_on_window:
        _mismatch(
            f"nondecreasing_from(0) holds but the window finds a violation "
            f"at {w1_immediate.first_violation}"
        )
    for verdict, wind, k in ((v_from_k, w1_from_k, from_k), (v_immediate, w1_immediate, 0)):
        if (
            not verdict.holds
            and verdict.branch is Branch.FAIL_INITIAL_TRIPLE
            and (wind.first_violation is None or wind.first_violation > k)
        ):
            _mismatch(
                f"nondecreasing_from({k}) fails its starting triple but the "
                f"window shows no violation by index {k}"
            )
    if v_h_monotone is not None and v_h_monotone.holds:
        if spec.v0 <= 0 or not w1_immediate.holds_on_window:
            _mismatch("positive_monotone_h holds but the window disagrees")
    if v_h_ratio is not None and w2 is not None:
        if v_h_ratio.holds and not w2.holds_on_window:
            _mismatch(
                f"ratio_monotone_h holds but the window finds a violation "
                f"at {w2.first_violation}"
            )
        if (
            not v_h_ratio.holds
            and v_h_ratio.branch is Branch.COND2_FAIL_MODULUS
            and w2.first_violation != 0
        ):
            _mismatch(
                "ratio_monotone_h fails on |a| < |beta|, which forces a "
                "violation at index 0, but the window shows none there"
            )
    if v_weighted.holds and not w3.holds_on_window:
        _mismatch(
            f"weighted_monotone holds but the window finds a violation "
            f"at {w3.first_violation}"
        )
    if not v_weighted.holds and not degenerate and w3.first_violation != 0:
        _mismatch(
            "weighted_monotone fails on |beta| > 1 with a nonzero residual, "
            "which forces a violation at index 0, but the window shows none"
        )
    if v_eventual.holds and n0 is None:
        _mismatch(
            "eventually_nondecreasing holds but no clean tail starts within "
            "the window; rerun with a larger --window"
        )

    # ---- assembled blocks --------------------------------------------------
    if roots.discriminant_sign > 0:
        roots_block = {
            "kind": "real_distinct",
            "alpha_plus": _quad_json(roots.alpha_plus),
            "alpha_minus": _quad_json(roots.alpha_minus),
            "alpha": _quad_json(alpha),
            "beta": _quad_json(beta),
            "modulus_squared": None,
        }
    elif roots.discriminant_sign == 0:
        roots_block = {
            "kind": "real_repeated",
            "alpha_plus": _quad_json(roots.alpha_plus),
            "alpha_minus": _quad_json(roots.alpha_minus),
            "alpha": _quad_json(alpha),
            "beta": _quad_json(beta),
            "modulus_squared": None,
        }
    else:
        roots_block = {
            "kind": "complex",
            "alpha_plus": None,
            "alpha_minus": None,
            "alpha": None,
            "beta": None,
            "modulus_squared": str(roots.modulus_squared),
        }

    p2_extra = {}
    if w2 is not None and w2.first_violation is not None:
        n = w2.first_violation
        lhs = _abs_quad(alpha - terms[n + 1] / terms[n])
        rhs = _abs_quad(alpha - terms[n + 2] / terms[n + 1])
        p2_extra["violation_detail"] = {
            "index": n,
            "lhs_decimal": decimal_str(lhs),
            "rhs_decimal": decimal_str(rhs),
        }
    p3_extra = {}
    if real:
        prefix = []
        for n in range(min(3, window + 1)):
            prefix.append(decimal_str(_abs_quad(terms[n] * alpha - terms[n + 1])))
        p3_extra["residual_decimal_prefix"] = prefix

    limit = ratio_limit(spec) if spec.v0 * spec.v1 != 0 else None
    if limit is None:
        limit_block = None
    elif limit.kind is LimitKind.CONVERGES:
        limit_block = {
            "kind": limit.kind.value,
            "which_root": limit.which_root,
            "limit": _quad_json(limit.limit),
        }
    else:
        limit_block = {"kind": limit.kind.value, "which_root": None, "limit": None}

    if spec.v0 != 0 and spec.v1 != 0:
        orbit = riccati_orbit(spec.a, spec.b, spec.v1 / spec.v0, RICCATI_PREFIX_LEN)
        riccati_block = {
            "b0": str(spec.v1 / spec.v0),
            "states": [str(s) for s in orbit.states],
            "terminated_early": orbit.terminated_early,
        }
    else:
        riccati_block = None

    return {
        "schema": 1,
        "spec": {
            "a": str(spec.a),
            "b": str(spec.b),
            "v0": str(spec.v0),
            "v1": str(spec.v1),
            "h_type": spec.h_type,
        },
        "window": window,
        "from_k": from_k,
        "discriminant": {
            "value": str(roots.discriminant),
            "sign": roots.discriminant_sign,
        },
        "roots": roots_block,
        "degenerate_geometric": degenerate,
        "verdicts": {
            "p1_immediate": _verdict_json(v_immediate),
            "p1_from_k": _verdict_json(v_from_k, k=from_k),
            "p1_eventual": _verdict_json(v_eventual),
            "p1_h_monotone": _verdict_json(v_h_monotone),
            "p2_h_ratio_monotone": _verdict_json(v_h_ratio),
            "p2_eventual_ratio_monotone": _verdict_json(v_ratio_eventual),
            "p3_weighted": _verdict_json(v_weighted),
            "hartman_aurel_sufficient": decisions.hartman_aurel_sufficient(
                spec.a, spec.b
            ),
        },
        "oracle_windows": {
            "p1_immediate": _window_json(w1_immediate),
            "p1_from_k": _window_json(w1_from_k, k=from_k),
            "p2": _window_json(w2, **p2_extra),
            "p3": _window_json(w3, **p3_extra),
            "n0_witness": n0,
        },
        "ratio_limit": limit_block,
        "riccati_prefix": riccati_block,
        "terms_preview": [str(t) for t in terms[:TERMS_PREVIEW_LEN]],
        "term_minus_one": str(term_minus_one(spec)),
    }
