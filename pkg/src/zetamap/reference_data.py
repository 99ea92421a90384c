"""Reference zero tables and comparison statistics.

Tables are plain text, one zero per line, either bare (``t``) or indexed
(``n t``), as in the public Odlyzko tables.  Blank lines and lines starting
with ``#`` are skipped.  The CSV files written by the command line tool
(header row with ``n`` and ``t`` / ``t_hat`` columns) load the same way.
"""
import math
import os
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import DomainError, TableFormatError
from .output import format_float
from .zeros import REFERENCE, ZeroEstimate

T_COLUMNS = ("t", "t_hat", "t_n", "zero", "value")


@dataclass(frozen=True)
class ZeroTable:
    """Ascending zero heights; ``values[i]`` is zero number ``first_index + i``."""

    values: Tuple[float, ...]
    source_label: str = ""
    precision_hint: Optional[float] = None
    first_index: int = 1

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        check_zero_values(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def last_index(self):
        return self.first_index + len(self.values) - 1

    def zero(self, n):
        if not self.first_index <= n <= self.last_index:
            raise IndexError(
                "zero index %d outside table range [%d, %d]" % (n, self.first_index, self.last_index)
            )
        return self.values[n - self.first_index]

    def head(self, count):
        return ZeroTable(self.values[:count], self.source_label, self.precision_hint, self.first_index)


def check_zero_values(values):
    if len(values) == 0:
        raise DomainError("zero table is empty")
    prev = None
    for i, v in enumerate(values):
        if not (v > 0.0 and math.isfinite(v)):
            raise DomainError("zero #%d is not a positive finite value: %r" % (i + 1, v))
        if prev is not None and not v > prev:
            raise DomainError("zeros must be strictly increasing (entry %d: %r after %r)" % (i + 1, v, prev))
        prev = v


def _split(line):
    if "," in line:
        return [tok.strip() for tok in line.split(",")]
    return line.split()


def _parse_index(tok):
    value = float(tok)
    if value != int(value) or value < 1:
        raise ValueError(tok)
    return int(value)


def load_zero_table(path, source_label=None, precision_hint=None):
    path = os.fspath(path)
    values: List[float] = []
    indices: List[int] = []
    header = None
    with open(path, "r") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = _split(line)
            if header is None and not values and "," in line and not _is_number(tokens[0]):
                header = _header_columns(tokens, path, lineno)
                continue
            try:
                if header is not None:
                    n_col, t_col = header
                    t = float(tokens[t_col])
                    n = _parse_index(tokens[n_col]) if n_col is not None else None
                elif len(tokens) == 1:
                    n, t = None, float(tokens[0])
                elif len(tokens) == 2:
                    n, t = _parse_index(tokens[0]), float(tokens[1])
                else:
                    raise ValueError(line)
            except (ValueError, IndexError):
                raise TableFormatError("cannot parse %r as 't' or 'n t'" % line, path, lineno) from None
            if (n is None) != (not indices) and values:
                raise TableFormatError("mixed indexed and bare lines", path, lineno)
            if n is not None:
                if indices and n != indices[-1] + 1:
                    raise TableFormatError("index %d does not follow %d" % (n, indices[-1]), path, lineno)
                indices.append(n)
            if values and not t > values[-1]:
                raise TableFormatError(
                    "values must be strictly increasing (%r after %r)" % (t, values[-1]), path, lineno
                )
            if not (t > 0.0 and math.isfinite(t)):
                raise TableFormatError("zero height must be positive and finite, got %r" % t, path, lineno)
            values.append(t)
    if not values:
        raise TableFormatError("no zeros found", path)
    return ZeroTable(
        values=tuple(values),
        source_label=source_label if source_label is not None else os.path.basename(path),
        precision_hint=precision_hint,
        first_index=indices[0] if indices else 1,
    )


def _is_number(tok):
    try:
        float(tok)
    except ValueError:
        return False
    return True


def _header_columns(tokens, path, lineno):
    names = [tok.lower() for tok in tokens]
    n_col = names.index("n") if "n" in names else None
    for name in T_COLUMNS:
        if name in names:
            return n_col, names.index(name)
    raise TableFormatError("CSV header has no zero column (one of %s)" % ", ".join(T_COLUMNS), path, lineno)


def save_zero_table(table, path):
    """Write ``table`` in the command line tool's CSV layout (``n,t``)."""
    with open(path, "w") as fh:
        fh.write("n,t\n")
        for i, v in enumerate(table.values):
            fh.write("%d,%s\n" % (table.first_index + i, format_float(v)))


def table_estimates(table, method=REFERENCE):
    """Wrap every table entry as a ZeroEstimate (for compare_zeros)."""
    return [
        ZeroEstimate(n=table.first_index + i, t=v, method=method)
        for i, v in enumerate(table.values)
    ]


@dataclass
class ComparisonStats:
    count: int
    max_abs_diff: float
    rms_diff: float
    per_n_diff: List[float]
    indices: List[int] = field(default_factory=list)

    @property
    def sign_changes(self):
        signs = [d > 0 for d in self.per_n_diff if d != 0.0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def compare_zeros(computed: Sequence[ZeroEstimate], reference: ZeroTable):
    """Differences computed - reference, matched on zero index."""
    diffs, idx = [], []
    for est in computed:
        diffs.append(est.t - reference.zero(est.n))
        idx.append(est.n)
    if diffs:
        max_abs = max(abs(d) for d in diffs)
        rms = math.sqrt(math.fsum(d * d for d in diffs) / len(diffs))
    else:
        max_abs = rms = 0.0
    return ComparisonStats(count=len(diffs), max_abs_diff=max_abs, rms_diff=rms, per_n_diff=diffs, indices=idx)
