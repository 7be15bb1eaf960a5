"""Exception hierarchy for series and asymptotic evaluation failures."""


class StruveError(Exception):
    """Base class for all gstruve errors."""


class DegenerateParameter(StruveError):
    """Parameter pair (a, nu) outside the supported domain (a <= -1 or a = 0)."""


class PoleOfGamma(StruveError):
    """Gamma evaluated at (or within tolerance of) a nonpositive integer."""


class SingularTerm(StruveError):
    """A series term's gamma argument hit a nonpositive integer."""


class PrecisionExhausted(StruveError):
    """Cancellation consumed nearly all working digits; escalate precision."""

    def __init__(self, msg, digits_lost=None):
        super().__init__(msg)
        self.digits_lost = digits_lost


class IllConditioned(StruveError):
    """Coefficient solve failed its stability gate at the requested precision."""


class HigherOrderPole(StruveError):
    """Algebraic-expansion gamma argument hit a nonpositive integer."""


class DoublePole(StruveError):
    """k_s collided with an integer; the two pole sequences merge."""


class ZeroArgument(StruveError):
    """Expansion evaluated at zeta = 0."""


class TruncationUnstable(StruveError):
    """Optimal truncation hit the cap before the terms started decaying."""


class SectorUnsupported(StruveError):
    """Argument outside |arg z| <= pi/2; use the rotation identity first."""
