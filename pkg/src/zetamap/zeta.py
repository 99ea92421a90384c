"""Riemann zeta on the critical strip, Hardy's Z function and arg zeta(1/2 + it).

Two backends:

``euler_maclaurin``
    Truncated Dirichlet sum with ``N = max(50, ceil(2|t|))`` terms plus
    Euler-Maclaurin tail corrections.  The accuracy reference.

``riemann_siegel_auto``
    On the critical line with ``|t| > 50`` zeta is rebuilt from
    ``zeta(1/2 + it) = exp(-i theta(t)) Z(t)``, where Z comes from the
    Riemann-Siegel formula (O(sqrt t) terms).  Everything else falls back to
    Euler-Maclaurin.
"""
import cmath
import math

import numpy as np

from .errors import DomainError, IllConditionedArgument, PoleError
from .special_functions import LONG, TWO_PI_LONG, as_complex, theta, theta_long, theta_mod_2pi

EULER_MACLAURIN = "euler_maclaurin"
RIEMANN_SIEGEL_AUTO = "riemann_siegel_auto"
BACKENDS = (EULER_MACLAURIN, RIEMANN_SIEGEL_AUTO)

POLE_RADIUS = 1e-8
MIN_TERMS = 50
AUTO_THRESHOLD = 50.0
# Below this height hardy_z uses Euler-Maclaurin; the Riemann-Siegel remainder
# through C4 is ~3e-11 at t = 1000 and shrinks above.
RS_MIN_T = 1000.0
ILL_CONDITIONED_MODULUS = 1e-13

# B_2, B_4, ..., B_14
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def em_terms(s):
    """Number of direct terms used by the Euler-Maclaurin backend at s."""
    return max(MIN_TERMS, int(math.ceil(2.0 * abs(s.imag))))


def log_phases(t, n):
    """(t * log n) mod 2 pi for an integer array n, formed in extended precision."""
    return np.fmod(LONG(t) * np.log(n.astype(LONG)), TWO_PI_LONG).astype(np.float64)


def _zeta_em(s):
    big_n = em_terms(s)
    n = np.arange(1, big_n, dtype=np.int64)
    amp = np.exp(-s.real * np.log(n.astype(np.float64)))
    phase = log_phases(s.imag, n)
    direct = complex(float(np.sum(amp * np.cos(phase))), -float(np.sum(amp * np.sin(phase))))

    end_phase = float(log_phases(s.imag, np.array([big_n]))[0])
    n_pow = big_n ** -s.real * cmath.exp(-1j * end_phase)  # N^-s
    tail = big_n * n_pow / (s - 1.0) + 0.5 * n_pow
    rising = s  # s (s+1) ... (s+2j-2)
    inv_n2 = 1.0 / (big_n * big_n)
    power = n_pow / big_n  # N^(-s-2j+1)
    factorial = 2.0  # (2j)!
    for j, b2j in enumerate(_BERNOULLI_EVEN, start=1):
        if j > 1:
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2)
            power *= inv_n2
            factorial *= (2 * j - 1) * (2 * j)
        tail += b2j / factorial * rising * power
    return direct + tail


# --- Riemann-Siegel remainder ------------------------------------------------
#
# Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) is entire.  Its Taylor
# coefficients about p = 1/2 come from a Cauchy integral on |x| = 1 evaluated
# by FFT; the correction terms C1..C4 are the usual combinations of its
# derivatives (Gabcke's form).

def _psi_taylor(points=128, radius=1.0):
    x = radius * np.exp(2j * np.pi * np.arange(points) / points)
    vals = -np.cos(2.0 * np.pi * x * x - 5.0 * np.pi / 8.0) / np.cos(2.0 * np.pi * x)
    coeffs = (np.fft.fft(vals) / points).real / radius ** np.arange(points)
    coeffs = coeffs[:48].copy()
    coeffs[1::2] = 0.0
    return coeffs


def _rs_correction_polys():
    P = np.polynomial.polynomial
    c = _psi_taylor()

    def d(m):
        return P.polyder(c, m)

    def combo(*terms):
        out = np.zeros(1)
        for scale, poly in terms:
            out = P.polyadd(out, scale * poly)
        return out

    pi2, pi4, pi6, pi8 = math.pi ** 2, math.pi ** 4, math.pi ** 6, math.pi ** 8
    return (
        c,
        combo((-1.0 / (96.0 * pi2), d(3))),
        combo((1.0 / (64.0 * pi2), d(2)), (1.0 / (18432.0 * pi4), d(6))),
        combo(
            (-1.0 / (64.0 * pi2), d(1)),
            (-1.0 / (3840.0 * pi4), d(5)),
            (-1.0 / (5308416.0 * pi6), d(9)),
        ),
        combo(
            (1.0 / (128.0 * pi2), c),
            (19.0 / (24576.0 * pi4), d(4)),
            (11.0 / (5898240.0 * pi6), d(8)),
            (1.0 / (2038431744.0 * pi8), d(12)),
        ),
    )


_RS_POLYS = _rs_correction_polys()


def rs_correction_terms(p):
    """C0(p) .. C4(p) of the Riemann-Siegel remainder for p in [0, 1)."""
    x = p - 0.5
    return [float(np.polynomial.polynomial.polyval(x, poly)) for poly in _RS_POLYS]


def hardy_z_riemann_siegel(t, depth=4):
    """Z(t) from the Riemann-Siegel main sum plus corrections C0..C<depth>.

    No fallback for small t; at t = 50 the error is around 1e-7 with the full
    depth and shrinks like t^(-(depth+2)/2) above.
    """
    t = float(t)
    if not t > 0.0:
        raise DomainError("hardy_z requires t > 0, got %r" % t)
    a = math.sqrt(t / (2.0 * math.pi))
    big_n = int(a)
    p = a - big_n
    n = np.arange(1, big_n + 1, dtype=np.int64)
    phase = np.fmod(theta_long(t) - LONG(t) * np.log(n.astype(LONG)), TWO_PI_LONG).astype(np.float64)
    main = 2.0 * float(np.sum(np.cos(phase) / np.sqrt(n.astype(np.float64))))

    coeffs = rs_correction_terms(p)[: depth + 1]
    inv_a = 1.0 / a
    rem = 0.0
    for c in reversed(coeffs):
        rem = rem * inv_a + c
    sign = 1.0 if (big_n - 1) % 2 == 0 else -1.0
    return main + sign * rem / math.sqrt(a)


def hardy_z(t):
    """Hardy's Z function, real for real t > 0.

    ``zeta(1/2 + it) = exp(-i theta(t)) Z(t)``.  Riemann-Siegel (through C4)
    above t = 1000; below that Z is projected from the Euler-Maclaurin zeta.
    """
    t = float(t)
    if not t > 0.0 or math.isinf(t):
        raise DomainError("hardy_z requires finite t > 0, got %r" % t)
    if t < RS_MIN_T:
        z = _zeta_em(complex(0.5, t))
        return (cmath.exp(1j * theta_mod_2pi(t)) * z).real
    return hardy_z_riemann_siegel(t)


def zeta(s, backend=EULER_MACLAURIN):
    """Riemann zeta at complex ``s`` with 0 < Re(s) (tested up to Re(s) = 2)."""
    s = as_complex(s)
    if backend not in BACKENDS:
        raise ValueError("unknown zeta backend %r (choose from %s)" % (backend, ", ".join(BACKENDS)))
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("zeta requires finite s, got %r" % (s,))
    if abs(s - 1.0) < POLE_RADIUS:
        raise PoleError("zeta has a pole at s = 1 (|s - 1| = %.3g)" % abs(s - 1.0))
    if s.real <= 0.0:
        raise DomainError("zeta requires Re(s) > 0, got %r" % (s,))

    if backend == RIEMANN_SIEGEL_AUTO and s.real == 0.5 and abs(s.imag) > AUTO_THRESHOLD:
        t = abs(s.imag)
        value = cmath.exp(-1j * theta_mod_2pi(t)) * hardy_z(t)
        return value.conjugate() if s.imag < 0 else value
    return _zeta_em(s)


def arg_zeta_half(t, sigma_offset=0.0, backend=RIEMANN_SIEGEL_AUTO):
    """Principal argument in (-pi, pi] of zeta(1/2 + sigma_offset + it).

    On the line itself (``sigma_offset == 0``) zeta is exactly
    ``exp(-i theta) Z``, so the angle is built from theta and the sign of Z;
    this keeps rounding noise orthogonal to zeta out of the phase near zeros.

    Raises IllConditionedArgument when |zeta| < 1e-13, i.e. the point sits
    numerically on a zero.
    """
    t = float(t)
    sigma_offset = float(sigma_offset)
    if not t > 0.0:
        raise DomainError("arg_zeta_half requires t > 0, got %r" % t)
    if not 0.0 <= sigma_offset <= 0.1:
        raise DomainError("sigma_offset must lie in [0, 0.1], got %r" % sigma_offset)
    z = zeta(complex(0.5 + sigma_offset, t), backend=backend)
    if sigma_offset == 0.0:
        th = theta_mod_2pi(t)
        real_z = (cmath.exp(1j * th) * z).real
        if abs(real_z) < ILL_CONDITIONED_MODULUS:
            raise IllConditionedArgument(t, sigma_offset, abs(real_z))
        sign = 1.0 if real_z > 0.0 else -1.0
        angle = math.atan2(-sign * math.sin(th), sign * math.cos(th))
    else:
        modulus = abs(z)
        if modulus < ILL_CONDITIONED_MODULUS:
            raise IllConditionedArgument(t, sigma_offset, modulus)
        angle = math.atan2(z.imag, z.real)
    if angle <= -math.pi:
        angle = math.pi
    return angle
