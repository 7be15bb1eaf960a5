"""Normalized asymptotic coefficients c_j(a, nu) = A_j / A_0.

The coefficients are fitted from the inverse factorial expansion of the
Wright ratio g(s)/Gamma(1+s): after multiplying through by
Gamma(kappa s + theta') both sides live in the Pochhammer basis

    b(s) = sum_j c_j / (kappa s + theta')_j + O(1)/(kappa s + theta')_M,

so sampling s on a geometric ray and solving the (scaled) Vandermonde-like
least-squares system recovers c_0..c_{M-1}. Extra padded coefficients absorb
the O(1) tail; a second solve with shifted sample points provides the
stability bound recorded as `residual`.

Closed forms for c_1..c_3 (explicit polynomials in a and nu) serve as an
independent oracle, as does the reflection identity d_j = c_j(-sigma, nu)
linking the 2Psi1 coefficients to the continued 1Psi2 ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from mpmath import mp, mpf, mpc
import mpmath

from .errors import DegenerateParameter, IllConditioned
from .precision import DEFAULT_PRECISION, to_mpf, working
from .wright import StruveParams

# sample defaults; s0 is raised to t_min/kappa so the unmodelled expansion
# tail stays below the accuracy target. The tail scale grows like |c_M'|
# (roughly 10^(M/4) for generic parameters), so both the padding and t_min
# grow with the requested depth.
RATIO = mpf("1.6")
EXTRA_POINTS = 6
PAD = 10


def _pad_for(M: int) -> int:
    return PAD + M // 6


def _tmin_for(M: int) -> mpf:
    return mpf(10) ** min(16, 4 + M / 8)

_cache: dict = {}


@dataclass
class CoeffTable:
    params: StruveParams
    M: int
    c: list                      # mpf, c[0] == 1 exactly
    method: str = "linear-solve"  # or "closed-form"
    residual: mpf = mpf(0)
    kind: str = "1psi2"          # which Wright ratio the expansion refers to

    def __len__(self):
        return self.M

    def __getitem__(self, j):
        return self.c[j]

    def to_json(self) -> str:
        return json.dumps({
            "a": mpmath.nstr(self.params.a, 30),
            "nu": mpmath.nstr(self.params.nu, 30),
            "M": self.M,
            "c": [mpmath.nstr(cj, mp.dps if mp.dps > 30 else 40) for cj in self.c],
            "residual": mpmath.nstr(self.residual, 8),
            "method": self.method,
            "kind": self.kind,
        })

    @classmethod
    def from_json(cls, text: str) -> "CoeffTable":
        d = json.loads(text)
        p = StruveParams(mpf(d["a"]), mpf(d["nu"]))
        return cls(params=p, M=d["M"], c=[mpf(s) for s in d["c"]],
                   method=d["method"], residual=mpf(d["residual"]),
                   kind=d.get("kind", "1psi2"))


def closed_form_c123(p: StruveParams, P: int = DEFAULT_PRECISION):
    """The explicit polynomial forms of c_1, c_2, c_3; valid for a < 0 too."""
    with working(P):
        a, nu = p.a, p.nu
        c1 = -(11 + 24 * nu + 12 * nu ** 2 - a * (25 + 24 * nu) + 11 * a ** 2) / (24 * a)
        c2 = (265 + 1056 * nu + 1416 * nu ** 2 + 768 * nu ** 3 + 144 * nu ** 4
              - 2 * a * (791 + 2040 * nu + 1596 * nu ** 2 + 384 * nu ** 3)
              + 3 * a ** 2 * (905 + 1360 * nu + 472 * nu ** 2)
              - 2 * a ** 3 * (791 + 528 * nu)
              + 265 * a ** 4) / (1152 * a ** 2)
        c3 = -((48703 + 286200 * nu + 617940 * nu ** 2 + 636480 * nu ** 3
                + 334800 * nu ** 4 + 86400 * nu ** 5 + 8640 * nu ** 6)
               - 3 * a * (189797 + 791400 * nu + 1179240 * nu ** 2
                          + 797760 * nu ** 3 + 248400 * nu ** 4 + 28800 * nu ** 5)
               + 6 * a ** 2 * (355459 + 1019700 * nu + 996570 * nu ** 2
                               + 398880 * nu ** 3 + 55800 * nu ** 4)
               - a ** 3 * (3254507 + 6118200 * nu + 3537720 * nu ** 2
                           + 636480 * nu ** 3)
               + 6 * a ** 4 * (355459 + 395700 * nu + 102990 * nu ** 2)
               - 3 * a ** 5 * (189797 + 95400 * nu)
               + 48703 * a ** 6) / (414720 * a ** 3)
        return c1, c2, c3


def _ray_setup(p: StruveParams, kind: str):
    """(kappa, theta', log h_eff, log A0_eff, ray angle) for the fit.

    For the continued 1Psi2 at a = -sigma the branch is h = sigma^sigma
    e^{i pi sigma} with A0 carrying e^{-i pi (nu+1)}, and the ray runs in the
    lower half-plane where the reflection factor tends to 1.
    """
    a, nu = p.a, p.nu
    if kind == "1psi2":
        kappa = 1 + a
        if a > 0:
            logh = -a * mp.log(a)
            logA0 = -mp.log(2 * mp.pi) / 2 + (nu + 1) * mp.log(kappa / a)
            angle = mpf(0)
        else:
            sig = -a
            logh = sig * mp.log(sig) + mpc(0, mp.pi) * sig
            logA0 = (-mp.log(2 * mp.pi) / 2 + (nu + 1) * mp.log(kappa / sig)
                     - mpc(0, mp.pi) * (nu + 1))
            angle = -mp.pi / 6

        def logR(s):
            return -mp.loggamma(s + mpf(3) / 2) - mp.loggamma(a * s + nu + mpf(3) / 2)
    elif kind == "2psi1":
        if p.a > 0:
            raise DegenerateParameter("the 2psi1 ratio needs a = -sigma in (-1, 0)")
        sig = -a
        kappa = 1 - sig
        logh = sig * mp.log(sig)
        logA0 = mp.log(2 * mp.pi) / 2 + (nu + 1) * mp.log(kappa / sig)
        angle = -mp.pi / 6

        def logR(s):
            return mp.loggamma(sig * s - nu - mpf(1) / 2) - mp.loggamma(s + mpf(3) / 2)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    theta_prime = nu + mpf(5) / 2
    return kappa, theta_prime, logh, logA0, angle, logR


def _fit(p: StruveParams, M: int, kind: str, s0_shift, P: int,
         s0=None, ratio=RATIO, extra_points=EXTRA_POINTS, pad=None):
    """One least-squares pass; returns the first M coefficients (real parts).

    Sample moduli follow a Chebyshev distribution in u = 1/|s| accumulating
    at u = 0 (columns behave like monomials u^j there, so the scaled system
    conditions like a Chebyshev Vandermonde instead of the exponentially
    graded geometric ray). Internal digits cover the ~4-digits-per-column
    grading of the deep-u nodes; cheap on the gmpy backend."""
    if pad is None:
        pad = _pad_for(M)
    dps0 = 2 * P + 30 + 5 * (M + pad)
    attempts = 0
    while True:
        with mp.workdps(dps0):
            kappa, thp, logh, logA0, angle, logR = _ray_setup(p, kind)
            Mp = M + pad
            K = Mp + extra_points
            base = (to_mpf(s0) if s0 is not None
                    else max(10 * kappa + M, _tmin_for(M) / kappa))
            base = base * s0_shift
            lognorm = mp.log(kappa) + logA0
            logfac = logh + kappa * mp.log(kappa)
            t0 = kappa * base + thp
            colscale = [mpf(1)]
            for j in range(1, Mp):
                colscale.append(colscale[-1] * abs(t0 + j - 1))

            rows, rhs = [], []
            complex_ray = angle != 0
            for k in range(K):
                u_rel = (1 + mp.cos(mp.pi * (k + mpf(1) / 2) / K)) / 2
                smod = base / u_rel
                s = smod * mp.exp(mpc(0, angle)) if complex_ray else smod
                t = kappa * s + thp
                b = mp.exp(logR(s) + mp.loggamma(t) - lognorm - s * logfac)
                row = []
                poch = mpc(1) if complex_ray else mpf(1)
                for j in range(Mp):
                    row.append(colscale[j] / poch)
                    poch *= (t + j)
                if complex_ray:
                    rows.append([v.real for v in row]); rhs.append(b.real)
                    rows.append([v.imag for v in row]); rhs.append(b.imag)
                else:
                    rows.append(row); rhs.append(b)
            try:
                x, _ = mp.qr_solve(mp.matrix(rows), mp.matrix(rhs))
            except ValueError as e:
                if "singular" in str(e) and attempts < 6:
                    attempts += 1
                    dps0 = int(dps0 * 1.5) + 50
                    continue
                raise
            return [mpf(x[j]) * colscale[j] for j in range(M)]


def solve_coeffs(p: StruveParams, M: int, P: int = DEFAULT_PRECISION,
                 kind: str = "1psi2", s0=None, ratio=RATIO,
                 extra_points=EXTRA_POINTS, pad=None,
                 use_cache: bool = True) -> CoeffTable:
    """Fit c_0..c_{M-1}; residual is a cross-solve stability bound.

    Raises IllConditioned when the bound exceeds 10^(-P/2). Results are
    memoized on (a, nu, M, P, kind) for repeated assembly calls.
    """
    if M < 1:
        raise ValueError("M >= 1 required")
    key = (mpmath.nstr(p.a, 30), mpmath.nstr(p.nu, 30), M, P, kind,
           s0 is None and ratio == RATIO and extra_points == EXTRA_POINTS
           and pad is None)
    if use_cache and key[-1] and key in _cache:
        return _cache[key]

    kw = dict(s0=s0, ratio=ratio, extra_points=extra_points, pad=pad)
    for boost in (0, P, 3 * P):
        cA = _fit(p, M, kind, mpf(1), P + boost, **kw)
        cB = _fit(p, M, kind, mp.sqrt(to_mpf(ratio)), P + boost, **kw)
        with working(P):
            diffs = [abs(x - y) / max(1, abs(x)) for x, y in zip(cA, cB)]
            residual = max(max(diffs), abs(cA[0] - 1))
            gate = mpf(10) ** (-mpf(P) / 2)
            if residual < gate:
                break
    else:
        wj = max(range(M), key=lambda j: diffs[j])
        raise IllConditioned(
            f"coefficient stability {mpmath.nstr(residual, 3)} fails the "
            f"10^(-P/2) gate at P={P} (a={mpmath.nstr(p.a, 8)}, "
            f"nu={mpmath.nstr(p.nu, 8)}, M={M}, kind={kind}, worst j={wj}, "
            f"|c0-1|={mpmath.nstr(abs(cA[0] - 1), 3)}); escalate P")
    with working(P):
        c = [mpf(1)] + cA[1:]
    table = CoeffTable(params=p, M=M, c=c, method="linear-solve",
                       residual=residual, kind=kind)
    if use_cache and key[-1]:
        _cache[key] = table
    return table


@dataclass
class AppendixReport:
    sigma: mpf
    nu: mpf
    M: int
    P: int
    d: CoeffTable            # direct 2Psi1 coefficients
    c_continued: CoeffTable  # c_j(-sigma, nu) via the continued 1Psi2 ratio
    max_discrepancy: mpf

    @property
    def passed(self) -> bool:
        return self.max_discrepancy < mpf(10) ** (-mpf(self.P) / 2)


def verify_appendix_identity(sigma, nu, M: int, P: int = 60) -> AppendixReport:
    """Check d_j = c_j(-sigma, nu) by two independent solves."""
    with working(P):
        sig = to_mpf(sigma)
        if not (0 < sig < 1):
            raise DegenerateParameter("sigma must lie in (0, 1)")
        p = StruveParams(-sig, to_mpf(nu))
    d = solve_coeffs(p, M, P, kind="2psi1")
    c = solve_coeffs(p, M, P, kind="1psi2")
    with working(P):
        disc = max(abs(d.c[j] - c.c[j]) for j in range(M))
    return AppendixReport(sigma=sig, nu=p.nu, M=M, P=P, d=d, c_continued=c,
                          max_discrepancy=disc)


def rational_reconstruct(x, max_denominator: int = 10 ** 18,
                         quotient_cutoff: int = 10 ** 8) -> Optional[Fraction]:
    """Continued-fraction reconstruction of a rational from its decimal value.

    Expands the CF of x and stops at the first huge partial quotient (the
    signature of having exhausted the value's accuracy). Returns None when no
    convergent with denominator <= max_denominator emerges before that.
    """
    frac = Fraction(mpmath.nstr(mpf(x), mp.dps))
    sign = -1 if frac < 0 else 1
    frac = abs(frac)
    p0, q0, p1, q1 = 1, 0, int(frac), 1  # convergents
    rem = frac - int(frac)
    for _ in range(200):
        if rem == 0:
            return sign * Fraction(p1, q1)
        rem = 1 / rem
        quot = int(rem)
        if quot >= quotient_cutoff:
            return sign * Fraction(p1, q1) if q1 <= max_denominator else None
        p0, q0, p1, q1 = p1, q1, quot * p1 + p0, quot * q1 + q0
        if q1 > max_denominator:
            return None
        rem -= quot
    return None
