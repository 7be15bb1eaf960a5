"""Parameters of the Wright functions associated with L_nu(z; a), and the
sector classifier for their large-argument behaviour.

For a > 0 the normalized function is a 1Psi2 Wright function of zeta = z^2/4
with kappa = 1 + a > 1; for a = -sigma in (-1, 0) the working representation
is a 2Psi1 with kappa = 1 - sigma in (0, 1). In both cases
theta = -nu - 3/2 and theta' = 1 - theta.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from mpmath import mp, mpf

from .errors import DegenerateParameter
from .precision import to_mpf, working

#: default angular tolerance (radians) for Stokes / anti-Stokes detection
ANGLE_TOL = 1e-12


@dataclass(frozen=True)
class StruveParams:
    """The pair (a, nu), validated. a > -1 and a != 0; nu finite real."""

    a: mpf
    nu: mpf

    def __post_init__(self):
        a = to_mpf(self.a)
        nu = to_mpf(self.nu)
        if not (mp.isfinite(a) and mp.isfinite(nu)):
            raise DegenerateParameter("a and nu must be finite reals")
        if a <= -1:
            raise DegenerateParameter(f"a={a} violates a > -1 (series divergence)")
        if a == 0:
            raise DegenerateParameter(
                "a=0 is rejected: h = a^(-a) is undefined there; "
                "the classical modified Struve function is the case a=1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "nu", nu)

    @property
    def case(self) -> str:
        return "positive" if self.a > 0 else "negative"

    @property
    def sigma(self) -> mpf:
        """sigma = -a for the -1 < a < 0 case."""
        if self.a > 0:
            raise DegenerateParameter("sigma is defined only for -1 < a < 0")
        return -self.a


@dataclass(frozen=True)
class WrightParams:
    """Growth/scale parameters (kappa, h, theta, theta', A0)."""

    kappa: mpf
    h: mpf
    theta: mpf
    theta_prime: mpf
    A0: mpf
    case: str = "positive"


class Sector(enum.Enum):
    EXPONENTIALLY_LARGE = "exponentially-large"
    EXP_SMALL_PLUS_ALGEBRAIC = "exponentially-small+algebraic"
    ALGEBRAIC_ONLY = "algebraic-only"
    STOKES_LINE = "stokes-line"
    ANTI_STOKES_LINE = "anti-stokes-line"


class Dominance(enum.Enum):
    EXPONENTIAL = "exponential"
    ALGEBRAIC = "algebraic"
    COMPARABLE = "comparable"


@dataclass(frozen=True)
class Regime:
    sector: Sector
    dominant: Dominance
    n_range: int  # N of the exponential-copy sum, smallest N with 2N+1 > kappa/2


def smallest_copy_count(kappa) -> int:
    """Smallest integer N with 2N + 1 > kappa/2."""
    N = 0
    half = mpf(kappa) / 2
    while not (2 * N + 1 > half):
        N += 1
    return N


def derive_params(p: StruveParams, P: int = 50) -> WrightParams:
    """Wright-function parameters for the representation matching sign(a).

    a > 0:  kappa = 1+a, h = a^(-a), A0 = (kappa/a)^(nu+1) / sqrt(2 pi)
    a = -sigma:  kappa = 1-sigma, h = sigma^sigma,
                 A0 = sqrt(2 pi) (kappa/sigma)^(nu+1)
    In both, theta = -nu - 3/2 and theta' = 1 - theta.
    """
    with working(P):
        a, nu = p.a, p.nu
        theta = -nu - mpf(3) / 2
        theta_prime = 1 - theta
        if a > 0:
            kappa = 1 + a
            h = a ** (-a)
            A0 = (kappa / a) ** (nu + 1) / mp.sqrt(2 * mp.pi)
        else:
            sig = -a
            kappa = 1 - sig
            h = sig ** sig
            A0 = mp.sqrt(2 * mp.pi) * (kappa / sig) ** (nu + 1)
        return WrightParams(kappa=kappa, h=h, theta=theta,
                            theta_prime=theta_prime, A0=A0, case=p.case)


def classify(wp: WrightParams, arg_zeta, tol: float = ANGLE_TOL) -> Regime:
    """Sector of the associated Wright function at argument angle arg_zeta.

    Angles are measured in the plane of the Wright argument (zeta for a > 0).
    Total on the principal range (-pi, pi]; boundary rays within tol are
    flagged as Stokes (|phi| = pi*kappa, only reachable for kappa < 1) or
    anti-Stokes (|phi| = pi*kappa/2) lines.
    """
    phi = abs(float(arg_zeta))
    if phi > math.pi + float(tol):
        raise ValueError(f"arg zeta = {arg_zeta} outside principal range")
    kappa = float(wp.kappa)
    N = smallest_copy_count(wp.kappa)
    anti = math.pi * kappa / 2
    stokes = math.pi * kappa

    if abs(phi - anti) < tol:
        return Regime(Sector.ANTI_STOKES_LINE, Dominance.COMPARABLE, N)
    if kappa < 1 and abs(phi - stokes) < tol:
        return Regime(Sector.STOKES_LINE, Dominance.ALGEBRAIC, N)
    if phi < anti:
        return Regime(Sector.EXPONENTIALLY_LARGE, Dominance.EXPONENTIAL, N)
    if phi < min(math.pi, stokes):
        return Regime(Sector.EXP_SMALL_PLUS_ALGEBRAIC, Dominance.ALGEBRAIC, N)
    return Regime(Sector.ALGEBRAIC_ONLY, Dominance.ALGEBRAIC, N)
