"""Precision plumbing: explicit decimal-digit working precision over mpmath.

Every public operation takes the target precision P (decimal digits) as an
argument; nothing reads ambient state besides the mpmath context that the
`working` helper installs and restores.
"""

from __future__ import annotations

import math
import os

from mpmath import mp, mpf, mpc
import mpmath

MIN_PRECISION = 20
DEFAULT_PRECISION = 50
DEFAULT_ESCALATION_CAP = 400

GUARD_DIGITS = 10


def precision_cap() -> int:
    """Escalation cap in digits; STRUVE_PREC_CAP overrides the default 400."""
    raw = os.environ.get("STRUVE_PREC_CAP")
    if raw:
        try:
            return max(MIN_PRECISION, int(raw))
        except ValueError:
            pass
    return DEFAULT_ESCALATION_CAP


def working(P: int, guard: int = GUARD_DIGITS):
    """Context manager running at P + guard decimal digits."""
    if P < MIN_PRECISION:
        raise ValueError(f"precision P={P} below minimum {MIN_PRECISION}")
    return mp.workdps(P + guard)


def parse_q(s) -> mpf:
    """'1/3', '0.25', or a number to mpf at the current working precision."""
    if isinstance(s, str) and "/" in s:
        num, den = s.split("/")
        return mpf(num.strip()) / mpf(den.strip())
    return mpf(s)


def parse_z(s) -> mpc:
    """'15', '20i', or 're,im' to mpc."""
    if not isinstance(s, str):
        return mpc(s)
    s = s.strip()
    if "," in s:
        re_, im_ = s.split(",")
        return mpc(mpf(re_), mpf(im_))
    if s.endswith(("i", "I", "j", "J")):
        body = s[:-1]
        if body in ("", "+", "-"):
            body += "1"
        return mpc(0, mpf(body))
    return mpc(mpf(s))


def to_mpf(x) -> mpf:
    """Convert int/float/str/mpf to mpf at the current working precision."""
    if isinstance(x, str):
        return mpf(x.strip())
    return mpf(x)


def to_mpc(x) -> mpc:
    if isinstance(x, str):
        return parse_z(x)
    return mpc(x)


def dec(x, digits: int = 17) -> str:
    """Decimal string of an mpf/mpc, precision-faithful for report I/O."""
    return mpmath.nstr(x, digits, strip_zeros=False)


def matched_digits(reference, value) -> int:
    """floor(-log10(|reference - value| / |reference|)), clamped >= 0.

    Returns a large sentinel (999) for exact agreement.
    """
    ref = mpc(reference)
    val = mpc(value)
    if ref == val:
        return 999
    if abs(ref) == 0:
        return 0
    rel = abs(ref - val) / abs(ref)
    if rel == 0:
        return 999
    return max(0, int(mp.floor(-mp.log10(rel))))


def parse_printed(text: str):
    """Parse a reference value like '+6.827666326e-12' or '-4.57195324?e-6'.

    A trailing '?' in the mantissa marks an uncertain final digit. Returns
    (value: mpf of the certain digits, ulp: mpf of one unit in the last
    certain digit, uncertain: bool).
    """
    s = text.strip().replace(" ", "")
    mant, _, exp = s.partition("e")
    exp = int(exp) if exp else 0
    uncertain = mant.endswith("?")
    if uncertain:
        mant = mant[:-1]
    frac_digits = len(mant.partition(".")[2])
    value = mpf(mant) * mpf(10) ** exp
    ulp = mpf(10) ** (exp - frac_digits)
    return value, ulp, uncertain


def digits_lost(max_magnitude, result_magnitude) -> float:
    """Decimal digits destroyed by cancellation."""
    if result_magnitude == 0:
        return math.inf
    if max_magnitude == 0:
        return 0.0
    return max(0.0, float(mp.log10(max_magnitude / result_magnitude)))
