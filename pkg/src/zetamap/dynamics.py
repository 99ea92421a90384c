"""The damped zero map as a one-parameter dynamical system in delta."""
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .errors import DomainError, IllConditionedArgument, MapDomainError, NotFoundError
from .zeros import OrbitRecord, iterate_map
from .zeta import RIEMANN_SIEGEL_AUTO

FIXED_POINT = "fixed_point"
PERIODIC = "periodic"
APERIODIC = "aperiodic"
ESCAPED = "escaped"

FP_TOL = 1e-6
P_MAX = 32
DEFAULT_TRANSIENT = 200
DEFAULT_SAMPLES = 100

__all__ = [
    "OrbitRecord",
    "BifurcationScan",
    "classify_tail",
    "orbit",
    "bifurcation_scan",
    "first_bifurcation_delta",
    "post_transient",
]


def classify_tail(tail, fp_tol=FP_TOL, p_max=P_MAX):
    """Return ``(classification, period)`` for a post-transient orbit tail.

    Periodic needs the tail to cover the period at least twice.
    """
    tail = np.asarray(tail, dtype=np.float64)
    if tail.size == 0:
        raise ValueError("cannot classify an empty tail")
    if float(tail.max() - tail.min()) <= fp_tol:
        return FIXED_POINT, None
    for p in range(2, p_max + 1):
        if tail.size < 2 * p:
            break
        if float(np.max(np.abs(tail[p:] - tail[:-p]))) <= fp_tol:
            return PERIODIC, p
    return APERIODIC, None


def orbit(n, delta, total_iters, transient=DEFAULT_TRANSIENT, t0=1.0,
          fp_tol=FP_TOL, p_max=P_MAX, backend=RIEMANN_SIEGEL_AUTO):
    """Run ``total_iters`` map steps and classify what remains after ``transient``.

    Leaving the Lambert domain (or landing numerically on a zero) is recorded
    as ``escaped`` together with the failing iterate index.
    """
    if transient < 0 or transient >= total_iters:
        raise DomainError("need 0 <= transient < total_iters, got %r, %r" % (transient, total_iters))
    try:
        rec = iterate_map(n, delta, total_iters, t0=t0, backend=backend)
    except MapDomainError as exc:
        return OrbitRecord(
            n=int(n), delta=float(delta), t0=float(t0), iterates=exc.iterates,
            classification=ESCAPED, transient_discarded=int(transient),
            escaped_at=exc.iteration,
        )
    except IllConditionedArgument as exc:
        return OrbitRecord(
            n=int(n), delta=float(delta), t0=float(t0), iterates=exc.iterates,
            classification=ESCAPED, transient_discarded=int(transient),
            escaped_at=exc.iteration, extra={"reason": str(exc)},
        )
    tail = rec.iterates[1 + transient:]
    rec.classification, rec.period = classify_tail(tail, fp_tol=fp_tol, p_max=p_max)
    rec.transient_discarded = int(transient)
    return rec


def post_transient(rec):
    return rec.iterates[1 + rec.transient_discarded:]


@dataclass
class BifurcationScan:
    n: int
    delta_grid: List[float]
    attractor_samples: List[List[float]]
    classifications: List[str]
    periods: List[Optional[int]] = field(default_factory=list)


def bifurcation_scan(n, delta_min, delta_max, steps, total_iters=DEFAULT_TRANSIENT + DEFAULT_SAMPLES,
                     transient=DEFAULT_TRANSIENT, samples_per_delta=DEFAULT_SAMPLES, t0=1.0,
                     backend=RIEMANN_SIEGEL_AUTO):
    if not delta_min < delta_max:
        raise DomainError("need delta_min < delta_max")
    if steps < 2:
        raise DomainError("need at least 2 grid steps")
    if samples_per_delta > total_iters - transient:
        raise DomainError("samples_per_delta exceeds the post-transient length")
    grid = [float(d) for d in np.linspace(delta_min, delta_max, int(steps))]
    samples, classes, periods = [], [], []
    for delta in grid:
        rec = orbit(n, delta, total_iters, transient, t0=t0, backend=backend)
        classes.append(rec.classification)
        periods.append(rec.period)
        if rec.classification == ESCAPED:
            samples.append([])
        else:
            samples.append(list(rec.iterates[-samples_per_delta:]))
    return BifurcationScan(n=int(n), delta_grid=grid, attractor_samples=samples,
                           classifications=classes, periods=periods)


def first_bifurcation_delta(n, delta_max=1.0, coarse_steps=40, refine_tol=1e-7,
                            total_iters=120, transient=80, t0=1.0, backend=RIEMANN_SIEGEL_AUTO):
    """Smallest delta at which the orbit stops settling on a fixed point.

    Scans ``coarse_steps`` uniform intervals of ``(0, delta_max]``, then
    bisects between the last fixed-point delta and the first one that is not.
    Returns the lower end of the final bracket, i.e. the largest delta still
    verified to be a fixed point.
    """
    if not delta_max > 0.0:
        raise DomainError("delta_max must be positive")

    def is_fixed(delta):
        rec = orbit(n, delta, total_iters, transient, t0=t0, backend=backend)
        return rec.classification == FIXED_POINT

    lo = 0.0
    hi = None
    for delta in np.linspace(0.0, delta_max, int(coarse_steps) + 1)[1:]:
        if is_fixed(float(delta)):
            lo = float(delta)
        else:
            hi = float(delta)
            break
    if hi is None:
        raise NotFoundError("no departure from fixed_point for delta <= %g at n=%d" % (delta_max, n))
    while hi - lo > refine_tol:
        mid = 0.5 * (lo + hi)
        if is_fixed(mid):
            lo = mid
        else:
            hi = mid
    return lo
