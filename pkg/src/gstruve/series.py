"""Arbitrary-precision reference evaluation of L_nu(z; a) by direct summation.

The primary value is the normalized function

    calL_nu(z; a) = (z/2)^(-nu-1) L_nu(z; a)
                  = sum_{n>=0} (z^2/4)^n / (Gamma(n+3/2) Gamma(a n + nu + 3/2)),

the quantity tabulated by the verification tables. Summation stops when a
term falls below 10^-P of the running maximum partial-sum magnitude
(cancellation-safe), and cancellation beyond P-10 digits triggers automatic
precision escalation (doubling, capped; see STRUVE_PREC_CAP).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from mpmath import mp, mpf, mpc

from .errors import PoleOfGamma, PrecisionExhausted, SingularTerm
from .precision import (DEFAULT_PRECISION, digits_lost, precision_cap, to_mpc,
                        to_mpf, working)
from .wright import Regime, StruveParams

_MAX_TERMS = 10 ** 6


class Method(enum.Enum):
    SERIES = "series"
    ASYMPTOTIC_EXP = "asymptotic-exponential"
    ASYMPTOTIC_ALG = "asymptotic-algebraic"
    ASYMPTOTIC_COMBINED = "asymptotic-combined"


@dataclass
class EvalResult:
    """Value of the normalized function plus summation bookkeeping."""

    value: object                 # mpf or mpc
    terms_used: int
    error_estimate: mpf
    method: Method = Method.SERIES
    regime: Optional[Regime] = None
    precision_used: int = DEFAULT_PRECISION


def _near_nonpositive_integer(x, tol) -> bool:
    if x > tol:
        return False
    return abs(x - mp.nint(x)) < tol


def gamma_ap(x, P: int = DEFAULT_PRECISION) -> mpf:
    """Gamma(x) for real x to ~P digits; reflection for x < 0.

    Raises PoleOfGamma when x is within 10^(4-P) of a nonpositive integer.
    """
    with working(P):
        x = to_mpf(x)
        tol = mpf(10) ** (4 - P)
        if _near_nonpositive_integer(x, tol):
            raise PoleOfGamma(f"Gamma pole at x={x}")
        if x > 0:
            return mp.gamma(x)
        # Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
        return mp.pi / (mp.sinpi(x) * mp.gamma(1 - x))


def _sum_series(zeta, a, nu, P: int):
    """Sum zeta^n / (Gamma(n+3/2) Gamma(a n+nu+3/2)) with the running-max rule.

    Runs at P + guard digits. Returns (sum, terms, error_estimate, lost).
    """
    guard = 15
    with mp.workdps(P + guard):
        tol_pole = mpf(10) ** (4 - P)
        stop = mpf(10) ** (-P)
        zero = zeta == 0
        s = zeta * 0  # mpf(0) or mpc(0), matching zeta's type
        smax = mpf(0)
        zpow = 1 + s
        rg1 = mp.rgamma(mpf(3) / 2)
        n = 0
        t = None
        prev_mag = None
        while n < _MAX_TERMS:
            arg2 = a * n + nu + mpf(3) / 2
            if _near_nonpositive_integer(arg2, tol_pole):
                raise SingularTerm(
                    f"Gamma({arg2}) singular at series index n={n} "
                    f"(a n + nu + 3/2 hit a nonpositive integer)")
            t = zpow * rg1 * mp.rgamma(arg2)
            s += t
            smax = max(smax, abs(s))
            if n >= 2 and abs(t) < stop * smax:
                break
            if zero and n >= 1:
                break
            prev_mag = abs(t)
            zpow *= zeta
            rg1 /= (n + mpf(3) / 2)
            n += 1
        else:
            raise PrecisionExhausted(f"series did not converge in {_MAX_TERMS} terms")

        # geometric tail bound from the last term ratio, if contracting
        tail = abs(t)
        if prev_mag and prev_mag > 0:
            r = abs(t) / prev_mag
            if r < mpf(3) / 4:
                tail = abs(t) * r / (1 - r)
        lost = digits_lost(smax, abs(s))
        err = tail + smax * mpf(10) ** (-(P + guard) + 2)
        return s, n + 1, err, lost


def eval_series(z, p: StruveParams, P: int = DEFAULT_PRECISION,
                auto_escalate: bool = True) -> EvalResult:
    """Normalized series value calL_nu(z; a) at ~P digits.

    Escalates precision (2P, 4P, ... up to the cap) when alternating
    cancellation consumes more than P-10 digits.
    """
    cap = max(precision_cap(), P)
    Pw = P
    while True:
        with working(Pw):
            zc = to_mpc(z)
            # keep zeta real when z is real or purely imaginary
            if zc.imag == 0:
                zeta = zc.real ** 2 / 4
            elif zc.real == 0:
                zeta = -(zc.imag ** 2) / 4
            else:
                zeta = zc * zc / 4
        s, terms, err, lost = _sum_series(zeta, p.a, p.nu, Pw)
        if lost <= Pw - 10:
            return EvalResult(value=s, terms_used=terms, error_estimate=err,
                              method=Method.SERIES, precision_used=Pw)
        if not auto_escalate or 2 * Pw > cap:
            raise PrecisionExhausted(
                f"cancellation lost ~{lost:.1f} digits at P={Pw} "
                f"(cap {cap})", digits_lost=lost)
        Pw *= 2


def eval_alternating(x, p: StruveParams, P: int = DEFAULT_PRECISION,
                     auto_escalate: bool = True) -> EvalResult:
    """Alternating real variant: sum (-1)^n (x/2)^{2n} / (Gamma(n+3/2) Gamma(a n+nu+3/2)).

    Equals calL_nu evaluated at z = i x; x > 0 required; the result is real.
    """
    with working(P):
        xv = to_mpf(x)
        if xv <= 0:
            raise ValueError("eval_alternating requires x > 0")
    return eval_series(mpc(0, xv), p, P, auto_escalate=auto_escalate)


def unnormalize(z, nu, normalized_value, P: int = DEFAULT_PRECISION):
    """L_nu(z; a) = (z/2)^(nu+1) * calL_nu(z; a), principal branch."""
    with working(P):
        zc = to_mpc(z)
        nu = to_mpf(nu)
        w = (zc / 2) ** (nu + 1) * normalized_value
        return w.real if (w.imag == 0) else w
