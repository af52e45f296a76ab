"""Registry of every verification task under its stable id.

Each task is a zero-config callable returning a :class:`CheckReport`;
passing ``order=N`` rescales it (identity tasks compare up to N,
progression tasks scan every step whose index stays below N).  The
registry is what the command-line ``verify`` and ``report`` commands
iterate, always in sorted id order so output is deterministic.
"""

from __future__ import annotations

from typing import Callable, Optional

from . import congruence, etaq, kalgebra, theta
from .report import CheckReport

__all__ = ["task_ids", "describe", "run_task", "run_all"]


def _progression(tid: str, default_n_max: int) -> Callable[..., CheckReport]:
    def run(order: Optional[int] = None, **kw) -> CheckReport:
        if order is not None and "n_max" not in kw:
            family = congruence._PROGRESSION_FAMILIES[tid]
            kw["n_max"] = max((order - 1 - family.offset) // family.stride, 0)
        kw.setdefault("n_max", default_n_max)
        return congruence.check_theorem(tid, **kw)
    return run


def _theorem(tid: str, order_key: Optional[str] = "order") -> Callable[..., CheckReport]:
    def run(order: Optional[int] = None, **kw) -> CheckReport:
        if order is not None and order_key is not None:
            kw.setdefault(order_key, order)
        return congruence.check_theorem(tid, **kw)
    return run


def _prime_progression(tid: str, stride_of, offset_of) -> Callable[..., CheckReport]:
    """Task whose scan range is derived from --order once p is known."""
    def run(order: Optional[int] = None, **kw) -> CheckReport:
        if order is not None and "n_max" not in kw:
            p = kw.get("p", {"thm16": 13, "cr2": 7, "ch-d": 7, "ch-h": 13}[tid])
            span = max(order - 1 - offset_of(p), 0)
            kw["n_max"] = span // stride_of(p)
        return congruence.check_theorem(tid, **kw)
    return run


def _with_order(fn: Callable[..., CheckReport], default: int,
                **fixed) -> Callable[..., CheckReport]:
    def run(order: Optional[int] = None, **kw) -> CheckReport:
        merged = dict(fixed)
        merged.update(kw)
        merged["order"] = order if order is not None else default
        return fn(**merged)
    return run


def _binom_suite(order: Optional[int] = None, **kw) -> CheckReport:
    pairs = kw.pop("pairs", ((1, 1), (2, 1), (1, 2)))
    n = order if order is not None else 150
    elapsed = 0
    for m, k in pairs:
        result = etaq.binomial_congruence_check(m, k, n)
        if not result.passed:
            return result
        elapsed += result.elapsed_ms
    params = {"pairs": [list(p) for p in pairs]}
    return CheckReport("binom", params, n, "pass", elapsed_ms=elapsed)


def _no_order(fn: Callable[..., CheckReport], **fixed) -> Callable[..., CheckReport]:
    def run(order: Optional[int] = None, **kw) -> CheckReport:
        merged = dict(fixed)
        merged.update(kw)
        return fn(**merged)
    return run


_REGISTRY: dict[str, tuple[str, Callable[..., CheckReport]]] = {
    # congruences for the named sequences
    "thm11": ("crank parity divisible by 5^(a+1) on the 24n=1 mod 5^(2a+1) class",
              _theorem("thm11", order_key=None)),
    "thm12": ("exact identity for the C(5n+4) column",
              _theorem("thm12")),
    "thm13": ("pentagonal-weighted crank sums over 50n+49, /5, vanish mod 5",
              _progression("thm13", 10)),
    "thm14": ("reciprocal sequence vanishes mod 7 on 7n+2",
              _progression("thm14", 100)),
    "thm15a": ("triangular sums of a over 25n+16 vanish mod 5",
               _progression("thm15a", 20)),
    "thm15b": ("triangular sums of C over 125n+114, /5, vanish mod 25",
               _progression("thm15b", 7)),
    "thm16": ("alternating-square sums of a on the 5p^2 progressions, mod 5",
              _prime_progression("thm16", lambda p: 5 * p * p,
                                 lambda p: 5 * p * (p - 1) + (25 * p * p - 1) // 24)),
    "cr1": ("pentagonal-weighted sums of a over 25n+21 vanish mod 5",
            _progression("cr1", 20)),
    "cr2": ("alternating cubic-weighted sums of a on 5p^2 progressions, mod 5",
            _prime_progression("cr2", lambda p: 5 * p * p,
                               lambda p: 5 * p * (p - 1) + (65 * p * p - 41) // 24)),
    "ch-d": ("multiplicative relation d(7n+16) = 49 d(n/7)",
             _prime_progression("ch-d", lambda p: p, lambda p: 16)),
    "ch-h": ("multiplicative relation h(pn+shift) = +-p h(n/p) and vanishing",
             _prime_progression("ch-h", lambda p: p,
                                lambda p: 5 * (p * p - 1) // 24)),
    "smoke5": ("partition numbers vanish mod 5 on 5n+4",
               _progression("smoke5", 100)),
    "smoke7": ("partition numbers vanish mod 7 on 7n+5",
               _progression("smoke7", 100)),
    "smoke11": ("partition numbers vanish mod 11 on 11n+6",
                _progression("smoke11", 100)),
    # intermediate reduced generating functions
    "a54": ("A(5n+4) column is f_2^2 f_10^2 mod 5; A(10n+9) vanishes mod 5",
            _theorem("a54")),
    "a51": ("a(5n+1) column is 3 f_1 f_2^2 mod 5",
            _theorem("a51")),
    "f52": ("f(5n+2) column vs quoted three-term reduction mod 25 (misprinted "
            "middle term; fails with witness) and f(25n+22) = 0 mod 25",
            _theorem("f52")),
    "f52-corrected": ("f(5n+2) column vs repaired reduction, exactly and mod 25",
                      _theorem("f52-corrected")),
    # combinatorial oracles
    "oracle-crank": ("crank parity enumeration matches the series (n=1 excluded)",
                     _theorem("oracle-crank", order_key=None)),
    "oracle-colored": ("3-colored odd-part enumeration matches the series",
                       _theorem("oracle-colored", order_key=None)),
    # series identities
    "dis31": ("quintic dissection of the Euler product",
              _with_order(theta.verify_5dissections, 150, which="31")),
    "dis32": ("quintic dissection of the reciprocal Euler product",
              _with_order(theta.verify_5dissections, 150, which="32")),
    "k33": ("K + 1 equals its eta quotient",
            _with_order(theta.verify_K_identities, 150, which="33")),
    "k34": ("K - 4 equals its eta quotient",
            _with_order(theta.verify_K_identities, 150, which="34")),
    "theta-triangular": ("triangular sum equals f_2^2/f_1",
                         _with_order(theta.verify_theta_identity, 200,
                                     kind=theta.ThetaKind.TRIANGULAR)),
    "theta-squares": ("alternating square sum equals f_1^2/f_2",
                      _with_order(theta.verify_theta_identity, 200,
                                  kind=theta.ThetaKind.SQUARES)),
    "theta-pent": ("(6k+1)-weighted pentagonal sum equals f_1^5/f_2^2",
                   _with_order(theta.verify_theta_identity, 200,
                               kind=theta.ThetaKind.PENT_6K1)),
    "theta-cubic": ("(3k+1)-weighted cubic sum equals f_2^5/f_1^2",
                    _with_order(theta.verify_theta_identity, 200,
                                kind=theta.ThetaKind.CUBIC_3K1)),
    "binom": ("f_m^(5^k) = f_(5m)^(5^(k-1)) mod 5^k for (1,1), (2,1), (1,2)",
              _binom_suite),
    # the P(m,n) system
    "rec35": ("n-step recurrence closes symbolically on the grid",
              _no_order(kalgebra.verify_recurrences, which="35")),
    "rec36": ("m-step recurrence closes symbolically on the grid",
              _no_order(kalgebra.verify_recurrences, which="36")),
    "pmn-eval": ("symbolic P(m,n) matches direct R-series evaluation",
                 _with_order(kalgebra.verify_series_agreement, 100,
                             m_max=4, n_min=-3, n_max=3)),
    "combo456": ("five-term P-combination identity plus micro-identities",
                 _with_order(kalgebra.verify_combo_identity, 100)),
}


def task_ids() -> list[str]:
    return sorted(_REGISTRY)


def describe(tid: str) -> str:
    return _REGISTRY[tid][0]


def run_task(tid: str, order: Optional[int] = None, **kw) -> CheckReport:
    """Run one registry task; unknown ids raise ValueError."""
    entry = _REGISTRY.get(tid)
    if entry is None:
        raise ValueError(f"unknown task id {tid!r}; known ids: {', '.join(task_ids())}")
    return entry[1](order=order, **kw)


def run_all(order: Optional[int] = None) -> list[CheckReport]:
    """Run every task in sorted id order."""
    # Warm the big shared series to their suite-wide maxima first, so
    # per-task timings stay honest and nothing is recomputed at a larger
    # order halfway through.
    if order is None:
        for name, n in {"C": 2520, "a": 1802, "p": 1107}.items():
            etaq.named_series(name, n)
    return [run_task(tid, order=order) for tid in task_ids()]
