"""Zero estimates on the critical line: closed-form estimator and the damped map.

The estimator solves ``(t / 2 pi) log(t / 2 pi e) = n - 11/8`` with Lambert W:

    t_hat(n) = 2 pi (n - 11/8) / W0((n - 11/8) / e)

The map feeds the phase of zeta back into the same closed form, damped by
``delta``:

    a_k     = n - 11/8 - (delta / pi) * arg zeta(1/2 + i t_{k-1})
    t_k     = 2 pi a_k / W0(a_k / e)
"""
import math
from dataclasses import dataclass, field
from typing import List, Optional

from .errors import DomainError, IllConditionedArgument, MapDomainError
from .special_functions import INV_E, LN_PI, lambert_w0, log_gamma
from .zeta import RIEMANN_SIEGEL_AUTO, arg_zeta_half

ESTIMATOR = "estimator_eq9"
MAP = "map_eq11"
REFERENCE = "reference_table"

INDEX_SHIFT = 11.0 / 8.0
# a / e must stay at least this far above -1/e
LAMBERT_MARGIN = 1e-12
DEFAULT_STEP_TOL = 1e-10
RESIDUAL_SIGMA_OFFSET = 1e-6


@dataclass(frozen=True)
class ZeroEstimate:
    n: int
    t: float
    method: str
    delta: float = 0.0
    iterations: int = 0
    converged: bool = True
    final_step: float = 0.0


@dataclass
class OrbitRecord:
    """Iterates t^0 .. t^k of the map for one (n, delta).

    ``classification`` is filled in by :func:`zetamap.dynamics.orbit`; plain
    :func:`iterate_map` leaves it as ``None``.
    """

    n: int
    delta: float
    t0: float
    iterates: List[float]
    classification: Optional[str] = None
    period: Optional[int] = None
    transient_discarded: int = 0
    escaped_at: Optional[int] = None
    extra: dict = field(default_factory=dict)

    @property
    def final(self):
        return self.iterates[-1]


def _check_index(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError("zero index must be a positive integer, got %r" % (n,))
    return int(n)


def closed_form(a):
    """Principal solution t of (t / 2 pi) log(t / 2 pi e) = a, for a >= -1."""
    if a == 0.0:
        return 2.0 * math.pi * math.e
    return 2.0 * math.pi * a / lambert_w0(a / math.e)


def estimate_zero(n):
    n = _check_index(n)
    return ZeroEstimate(n=n, t=closed_form(n - INDEX_SHIFT), method=ESTIMATOR)


def effective_index(n, t_prev, delta, backend=RIEMANN_SIEGEL_AUTO):
    a = n - INDEX_SHIFT
    if delta != 0.0:
        a -= (delta / math.pi) * arg_zeta_half(t_prev, 0.0, backend=backend)
    return a


def map_step(n, t_prev, delta, backend=RIEMANN_SIEGEL_AUTO):
    """One application of the damped map.

    With ``delta == 0`` zeta is never evaluated and the result is exactly the
    estimator value.
    """
    n = _check_index(n)
    t_prev = float(t_prev)
    delta = float(delta)
    if not t_prev > 0.0:
        raise DomainError("map_step requires t_prev > 0, got %r" % t_prev)
    a = effective_index(n, t_prev, delta, backend=backend)
    if a / math.e < -INV_E + LAMBERT_MARGIN:
        raise MapDomainError(n, t_prev, delta, a)
    return closed_form(a)


def iterate_map(n, delta, k_iters, t0=1.0, backend=RIEMANN_SIEGEL_AUTO):
    """Run the map ``k_iters`` times from ``t0``.

    A Lambert-domain violation aborts the orbit; the raised MapDomainError
    carries the failing iterate index and the iterates produced so far.  An
    IllConditionedArgument gets the same ``iteration``/``iterates`` context.
    """
    n = _check_index(n)
    if int(k_iters) != k_iters or k_iters < 1:
        raise DomainError("k_iters must be a positive integer, got %r" % (k_iters,))
    t = float(t0)
    if not t > 0.0:
        raise DomainError("t0 must be positive, got %r" % t0)
    iterates = [t]
    for j in range(1, int(k_iters) + 1):
        try:
            t = map_step(n, t, delta, backend=backend)
        except MapDomainError as exc:
            raise MapDomainError(
                n, exc.t_prev, delta, exc.effective_index, iteration=j, iterates=iterates
            ) from None
        except IllConditionedArgument as exc:
            exc.n, exc.delta, exc.iteration, exc.iterates = n, delta, j, list(iterates)
            raise
        iterates.append(t)
    return OrbitRecord(n=n, delta=float(delta), t0=float(t0), iterates=iterates)


def solve_zero(n, delta, k_iters=20, t0=1.0, step_tol=DEFAULT_STEP_TOL, backend=RIEMANN_SIEGEL_AUTO):
    """Iterate the map ``k_iters`` times and report the last iterate.

    An orbit that leaves the Lambert domain is not an exception here: the
    estimate carries the last valid iterate with ``converged=False`` and
    ``iterations`` set to the number of completed steps.
    """
    try:
        orbit = iterate_map(n, delta, k_iters, t0=t0, backend=backend)
    except MapDomainError as exc:
        done = exc.iterates
        return ZeroEstimate(
            n=int(n),
            t=done[-1],
            method=MAP,
            delta=float(delta),
            iterations=len(done) - 1,
            converged=False,
            final_step=abs(done[-1] - done[-2]) if len(done) > 1 else 0.0,
        )
    t_last, t_prev = orbit.iterates[-1], orbit.iterates[-2]
    step = abs(t_last - t_prev)
    return ZeroEstimate(
        n=orbit.n,
        t=t_last,
        method=MAP,
        delta=float(delta),
        iterations=int(k_iters),
        converged=step <= step_tol,
        final_step=step,
    )


def exact_residual(t, n, sigma_offset=RESIDUAL_SIGMA_OFFSET):
    """Phase equation residual; ~0 when t is the n-th zero.

    Im log Gamma(1/4 + it/2) - t log sqrt(pi) + arg zeta(1/2 + sigma_offset + it)
    - (n - 3/2) pi
    """
    n = _check_index(n)
    t = float(t)
    if not t > 0.0:
        raise DomainError("exact_residual requires t > 0, got %r" % t)
    phase = log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LN_PI
    return phase + arg_zeta_half(t, sigma_offset) - (n - 1.5) * math.pi


def asymptotic_residual(t, n):
    """Residual of the Stirling-reduced phase equation at (t, n).

    Below t = 2 pi e the log term is negative but still finite, so any t > 0
    is accepted; the first zero (t ~ 14.13) sits there.
    """
    n = _check_index(n)
    t = float(t)
    if not t > 0.0:
        raise DomainError("asymptotic_residual requires t > 0, got %r" % t)
    smooth = t / (2.0 * math.pi) * math.log(t / (2.0 * math.pi * math.e))
    return smooth + arg_zeta_half(t, RESIDUAL_SIGMA_OFFSET) / math.pi - (n - INDEX_SHIFT)
