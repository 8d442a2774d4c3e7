"""Brute-force ground truth for best coprime inhomogeneous approximation.

For each n the best coprime numerator is found by walking outward from
floor(n*alpha - gamma) to the nearest coprime integer on each side, which
is exhaustive: any farther candidate has a strictly larger error.  The
record sequence keeps the n at which the best achievable error strictly
decreases.  Deliberately naive; used to calibrate and cross-check the
constructive pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .confrac import ContinuedFraction
from .errors import SearchCapError
from .quadratic import QuadExt
from .validated import ValidatedReal

_SIDE_SCAN_CAP = 10**4


@dataclass(frozen=True)
class RecordEntry:
    """A strict improvement in the best coprime error, reached at n."""

    n: int
    m: int
    err: ValidatedReal
    coprime: bool = True


def approx_error(cf: ContinuedFraction, gamma, m: int, n: int) -> ValidatedReal:
    """Certified |n*alpha - m - gamma|; n = 0 is allowed here (the value
    degenerates to |m + gamma|, outside the approximation setting)."""
    gamma = ValidatedReal.wrap(gamma)
    return abs(cf.alpha() * n - m - gamma)


def _exact_target(cf: ContinuedFraction, gamma: ValidatedReal
                  ) -> Optional[tuple[QuadExt, QuadExt]]:
    """(alpha, gamma) as same-field QuadExt values, when available."""
    alpha_q = cf.alpha_exact()
    if alpha_q is None:
        return None
    ex = gamma.exact
    if ex is None:
        return None
    if isinstance(ex, QuadExt):
        if ex.d != alpha_q.d:
            return None
        return alpha_q, ex
    return alpha_q, QuadExt(alpha_q.d, ex, 0)


def _nearest_coprime(start: int, step: int, n: int) -> int:
    m = start
    for _ in range(_SIDE_SCAN_CAP):
        if math.gcd(m, n) == 1:
            return m
        m += step
    raise SearchCapError(f"no coprime numerator near {start} for n={n}")


def best_coprime_at(cf: ContinuedFraction, gamma, n: int
                    ) -> tuple[int, ValidatedReal]:
    """The minimizing coprime m for |n*alpha - m - gamma| at a fixed n."""
    gamma = ValidatedReal.wrap(gamma)
    exact = _exact_target(cf, gamma)
    if exact is not None:
        alpha_q, gamma_q = exact
        t = alpha_q * n - gamma_q
        m, err = _best_at_exact(t, n)
        return m, ValidatedReal.wrap(err)
    t = cf.alpha() * n - gamma
    left = _nearest_coprime(t.floor(), -1, n)
    right = _nearest_coprime(t.floor() + 1, +1, n)
    e_left = abs(t - left)
    e_right = abs(t - right)
    if e_left <= e_right:
        return left, e_left
    return right, e_right


def _best_at_exact(t: QuadExt, n: int) -> tuple[int, QuadExt]:
    left = _nearest_coprime(t.floor(), -1, n)
    right = _nearest_coprime(t.floor() + 1, +1, n)
    e_left = abs(t - left)
    e_right = abs(t - right)
    if e_right < e_left:
        return right, e_right
    # Exact ties (possible only for rational t) resolve to the smaller m.
    return left, e_left


def best_coprime_approx(cf: ContinuedFraction, gamma,
                        n_max: int) -> list[RecordEntry]:
    """Record sequence of strictly improving best coprime errors, n <= n_max."""
    gamma = ValidatedReal.wrap(gamma)
    records: list[RecordEntry] = []
    exact = _exact_target(cf, gamma)
    if exact is not None:
        alpha_q, gamma_q = exact
        t = -gamma_q
        best: Optional[QuadExt] = None
        for n in range(1, n_max + 1):
            t = t + alpha_q
            m, err = _best_at_exact(t, n)
            if best is None or err < best:
                best = err
                records.append(RecordEntry(n, m, ValidatedReal.wrap(err)))
        return records
    best_vr: Optional[ValidatedReal] = None
    for n in range(1, n_max + 1):
        m, err = best_coprime_at(cf, gamma, n)
        if best_vr is None or err < best_vr:
            best_vr = err
            records.append(RecordEntry(n, m, err))
    return records
