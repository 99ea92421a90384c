"""Lambert W (principal branch), complex log-gamma and Riemann-Siegel theta.

Complex values are plain Python ``complex`` numbers; a ``(re, im)`` pair is
accepted wherever a complex argument is expected.
"""
import cmath
import math

import numpy as np

from .errors import DomainError

INV_E = math.exp(-1.0)
_BRANCH_SLACK = 1e-15

LN_PI = math.log(math.pi)
HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)

# Lanczos approximation, g = 7 with 9 coefficients (Godfrey's fit).  Relative
# error of Gamma is about 2e-15 for Re(z) >= 1/2; below that the argument is
# shifted up by one and log(z) subtracted.
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

THETA_CROSSOVER = 30.0

# Phases like theta(t) or t*log(n) reach ~1e6 rad; they are formed and reduced
# mod 2 pi in numpy's extended type (80-bit on x86) before returning to binary64.
LONG = np.longdouble
TWO_PI_LONG = np.arctan(LONG(1)) * 8


def as_complex(z):
    if isinstance(z, complex):
        return z
    if isinstance(z, (tuple, list)):
        re, im = z
        return complex(float(re), float(im))
    return complex(z)


def lambert_w0(x):
    """Principal branch W0 of the Lambert W function for real ``x >= -1/e``.

    Returns ``w >= -1`` with ``w * exp(w) == x``.  The starting point is a
    branch-point series for ``x`` near -1/e, ``log1p`` for moderate ``x`` and
    ``L1 - L2 + L2/L1`` for large ``x``; Halley steps then run until the step
    falls below ``1e-15 * (1 + |w|)``.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("lambert_w0 of NaN")
    if x < -INV_E - _BRANCH_SLACK:
        raise DomainError(
            "lambert_w0 requires x >= -1/e (%.17g), got %.17g" % (-INV_E, x)
        )
    if x <= -INV_E:
        return -1.0
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    if x < -0.25:
        p = math.sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
    elif x < 3.0:
        w = math.log1p(x)
        w = w * (1.0 - math.log1p(w) / (2.0 + w))
    else:
        l1 = math.log(x)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1

    for _ in range(30):
        ew = math.exp(w)
        f = w * ew - x
        if f == 0.0:
            break
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        if abs(dw) < 1e-15 * (1.0 + abs(w)):
            break
    return max(w, -1.0)


def _lanczos_log_gamma(z):
    z = z - 1.0
    series = LANCZOS_COEFFS[0]
    for k in range(1, len(LANCZOS_COEFFS)):
        series += LANCZOS_COEFFS[k] / (z + k)
    shifted = z + LANCZOS_G + 0.5
    return HALF_LN_2PI + (z + 0.5) * cmath.log(shifted) - shifted + cmath.log(series)


def log_gamma(z):
    """log Gamma(z) for Re(z) > 0, on the continuous branch.

    The imaginary part is the sum-of-logs branch (not reduced mod 2*pi), so
    for large ``Im(z)`` it grows like ``Im(z) * log|z|``.
    """
    z = as_complex(z)
    if not (z.real > 0.0) or math.isinf(z.real) or math.isinf(z.imag) or math.isnan(z.imag):
        raise DomainError("log_gamma requires finite z with Re(z) > 0, got %r" % (z,))
    if z.real < 0.5:
        return _lanczos_log_gamma(z + 1.0) - cmath.log(z)
    return _lanczos_log_gamma(z)


def theta_asymptotic(t):
    """Stirling-series form of theta, accurate to ~1e-14 relative for t >= 30."""
    t = float(t)
    if t <= 0.0:
        raise DomainError("theta_asymptotic requires t > 0, got %r" % t)
    inv = 1.0 / t
    inv2 = inv * inv
    tail = inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (381.0 / 1290240.0))))
    return 0.5 * t * (math.log(t / (2.0 * math.pi)) - 1.0) - math.pi / 8.0 + tail


def theta_exact(t):
    """theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log(pi) through log_gamma."""
    t = float(t)
    if t < 0.0:
        raise DomainError("theta requires t >= 0, got %r" % t)
    if t == 0.0:
        return 0.0
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LN_PI


def theta(t):
    """Riemann-Siegel theta function for t >= 0.

    Uses the log-gamma path up to t = 30 and the asymptotic series above; the
    two agree to about 1e-13 at the crossover.
    """
    t = float(t)
    if t < 0.0 or math.isnan(t):
        raise DomainError("theta requires t >= 0, got %r" % t)
    if t <= THETA_CROSSOVER:
        return theta_exact(t)
    return theta_asymptotic(t)


def theta_long(t):
    """Asymptotic theta in extended precision (t >= 30), unreduced."""
    t = LONG(t)
    inv = LONG(1) / t
    inv2 = inv * inv
    tail = inv * (LONG(1) / 48 + inv2 * (LONG(7) / 5760 + inv2 * (LONG(31) / 80640 + inv2 * (LONG(381) / 1290240))))
    return t / 2 * (np.log(t / TWO_PI_LONG) - 1) - TWO_PI_LONG / 16 + tail


def theta_mod_2pi(t):
    """theta(t) reduced to [0, 2 pi) without losing the digits a large theta would drop."""
    t = float(t)
    if t <= THETA_CROSSOVER:
        return theta(t) % (2.0 * math.pi)
    return float(np.fmod(theta_long(t), TWO_PI_LONG))
