"""Discrete cosine Riemann transform of x(t) = cos(log(r) t) and factoring by spikes.

    X(k) = sum_n cos(log(r) t_n) cos(log(k) t_n)
         = 1/2 [S(r k) + S(r / k)],     S(q) = sum_n cos(log(q) t_n)

S(q) grows with the number of zeros when q is a prime power (or 1) and stays
at noise level otherwise, so divisors k of r show up as spikes.
"""
import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DomainError

REFERENCE_TABLE = "reference_table"
MAP_ZEROS = "map_eq11"
ESTIMATOR_ZEROS = "estimator_eq9"
PERTURBED = "perturbed"
ZERO_SOURCES = (REFERENCE_TABLE, MAP_ZEROS, ESTIMATOR_ZEROS, PERTURBED)

MIN_PEAK_POINTS = 20
DEFAULT_RATIO = 5.0
_CHUNK = 64


@dataclass
class Spectrum:
    r: int
    k_values: List[int]
    x_values: List[float]
    n_zeros: int
    zero_source: str = REFERENCE_TABLE

    def as_dict(self):
        return dict(zip(self.k_values, self.x_values))

    def normalized(self):
        return [x / self.n_zeros for x in self.x_values]


def _zero_array(zeros):
    t = np.asarray(list(zeros), dtype=np.float64)
    if t.size == 0:
        raise DomainError("DCRT needs at least one zero")
    if not np.all(t > 0.0) or not np.all(np.isfinite(t)):
        raise DomainError("zero heights must be positive and finite")
    return t


def cosine_sum(zeros, q):
    """S(q) = sum_n cos(log(q) t_n) for real q > 0."""
    t = _zero_array(zeros)
    return float(np.sum(np.cos(math.log(q) * t)))


def dcrt_spectrum(zeros, r, k_values, zero_source=REFERENCE_TABLE):
    """Raw (unnormalized) partial sums X(k) over the supplied zeros."""
    t = _zero_array(zeros)
    r = int(r)
    if r < 1:
        raise DomainError("r must be a positive integer, got %r" % r)
    ks = [int(k) for k in k_values]
    if any(k < 1 for k in ks):
        raise DomainError("every k must be >= 1")
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise DomainError("k values must be strictly increasing")
    if zero_source not in ZERO_SOURCES:
        raise ValueError("unknown zero source %r" % zero_source)

    weights = np.cos(math.log(r) * t)
    log_k = np.log(np.asarray(ks, dtype=np.float64))
    out = np.empty(len(ks))
    for start in range(0, len(ks), _CHUNK):
        block = log_k[start:start + _CHUNK]
        out[start:start + _CHUNK] = np.cos(np.outer(block, t)) @ weights
    return Spectrum(r=r, k_values=ks, x_values=[float(x) for x in out],
                    n_zeros=int(t.size), zero_source=zero_source)


def detect_peaks(spectrum, ratio=DEFAULT_RATIO) -> List[Tuple[int, float]]:
    """All (k, X(k)) with |X(k)| > ratio * median|X|, largest |X| first."""
    if len(spectrum.k_values) < MIN_PEAK_POINTS:
        raise DomainError("peak detection needs at least %d k-points" % MIN_PEAK_POINTS)
    if not ratio > 1.0:
        raise DomainError("ratio must exceed 1, got %r" % ratio)
    absx = np.abs(np.asarray(spectrum.x_values))
    threshold = ratio * float(np.median(absx))
    peaks = [(k, x) for k, x, a in zip(spectrum.k_values, spectrum.x_values, absx) if a > threshold]
    peaks.sort(key=lambda kx: (-abs(kx[1]), kx[0]))
    return peaks


def peak_discrimination(spectrum, ks):
    """max |X(k)| over ``ks`` divided by the median |X| over all other k."""
    ks = set(ks)
    on = [abs(x) for k, x in zip(spectrum.k_values, spectrum.x_values) if k in ks]
    off = [abs(x) for k, x in zip(spectrum.k_values, spectrum.x_values) if k not in ks]
    if not on or not off:
        raise DomainError("need both peak and off-peak k values")
    return max(on) / float(np.median(off))


@dataclass
class FactorScan:
    r: int
    window: Tuple[int, int]
    spectrum: Spectrum
    peaks: List[Tuple[int, float]] = field(default_factory=list)
    divisors: List[int] = field(default_factory=list)


def scan_factors(r, zeros, k_max, ratio=DEFAULT_RATIO, zero_source=REFERENCE_TABLE):
    """Spectrum, peaks and divisor peaks for k in [2, min(k_max, r - 1)].

    When that window holds fewer than MIN_PEAK_POINTS values the spectrum is
    extended up to k = MIN_PEAK_POINTS + 1 so the median has a baseline;
    only peaks inside the window count as divisors.
    """
    r = int(r)
    if r < 2:
        raise DomainError("r must be >= 2, got %r" % r)
    if k_max < 2:
        raise DomainError("k_max must be >= 2, got %r" % k_max)
    k_hi = min(int(k_max), r - 1)
    scan_hi = max(k_hi, MIN_PEAK_POINTS + 1)
    spectrum = dcrt_spectrum(zeros, r, range(2, scan_hi + 1), zero_source=zero_source)
    peaks = detect_peaks(spectrum, ratio)
    divisors = sorted(k for k, _ in peaks if k <= k_hi and r % k == 0)
    return FactorScan(r=r, window=(2, k_hi), spectrum=spectrum, peaks=peaks, divisors=divisors)


def factor_via_dcrt(r, zeros, k_max, ratio=DEFAULT_RATIO):
    """Divisors of r found as DCRT spikes, ascending; [] when none stand out."""
    if r < 2 or k_max < 2 or min(k_max, r - 1) < 2:
        return []
    return scan_factors(r, zeros, k_max, ratio).divisors


def perturb_zeros(zeros, epsilon, seed) -> List[float]:
    """t_n + u_n with u_n uniform on [-epsilon, epsilon] from a seeded PCG64 stream."""
    t = _zero_array(zeros)
    if epsilon < 0.0:
        raise DomainError("epsilon must be non-negative")
    rng = np.random.default_rng(seed)
    return [float(v) for v in t + rng.uniform(-epsilon, epsilon, size=t.size)]


def truncate_digits(values: Sequence[float], digits):
    """Drop everything past ``digits`` decimals (toward zero, no rounding)."""
    scale = 10.0 ** int(digits)
    return [math.floor(v * scale) / scale for v in values]
