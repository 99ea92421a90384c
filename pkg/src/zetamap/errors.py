"""Exception types shared across the package."""


class ZetamapError(Exception):
    """Base class for all errors raised by zetamap."""


class DomainError(ZetamapError, ValueError):
    """An argument lies outside the domain an evaluator supports."""


class PoleError(DomainError):
    """Evaluation requested too close to the pole of zeta at s = 1."""


class IllConditionedArgument(ZetamapError, ArithmeticError):
    """arg(zeta) requested where |zeta| is numerically zero."""

    def __init__(self, t, sigma_offset, modulus):
        self.t = t
        self.sigma_offset = sigma_offset
        self.modulus = modulus
        super().__init__(
            "arg zeta(1/2 + %g + i*%r) is ill-conditioned: |zeta| = %.3g"
            % (sigma_offset, t, modulus)
        )


class MapDomainError(ZetamapError, ValueError):
    """The fixed-point map left the domain of the principal Lambert W branch.

    ``iteration`` and ``iterates`` are filled in when the error is raised from
    inside an orbit, so callers can report where the orbit escaped.
    """

    def __init__(self, n, t_prev, delta, effective_index, iteration=None, iterates=None):
        self.n = n
        self.t_prev = t_prev
        self.delta = delta
        self.effective_index = effective_index
        self.iteration = iteration
        self.iterates = list(iterates) if iterates is not None else []
        where = "" if iteration is None else " at iterate %d" % iteration
        super().__init__(
            "map left the Lambert W domain%s: n=%d, t_prev=%r, delta=%r, "
            "effective index %r < -1" % (where, n, t_prev, delta, effective_index)
        )


class NotFoundError(ZetamapError, LookupError):
    """A search ran to its bound without finding what it was looking for."""


class TableFormatError(ZetamapError, ValueError):
    """A reference zero table could not be parsed."""

    def __init__(self, message, path=None, lineno=None):
        self.path = path
        self.lineno = lineno
        prefix = ""
        if path is not None:
            prefix = "%s:" % path
            if lineno is not None:
                prefix += "%d:" % lineno
            prefix += " "
        super().__init__(prefix + message)
