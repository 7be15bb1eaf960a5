"""Large-|z| asymptotic expansions of the normalized function and their
assembly into a single estimate.

a > 0 (kappa = 1 + a): exponential expansions E(zeta e^{2 pi i n}) with
Z = kappa (h zeta)^(1/kappa), the algebraic series H in powers zeta^(-k-1),
and the paired real combinations Etilde_n on the imaginary axis.

a = -sigma (0 < sigma < 1): the reflected exponential combination Ehat, the
two-part algebraic combination Hhat (powers x^(-k-1) and x^(-k_s)), and the
single surviving algebraic series on the imaginary axis.

Rotations e^{+-pi i}, e^{+-2 pi i n} are tracked as explicit phase
annotations (never numeric multiplications); optimal truncation scans term
magnitudes (envelope |c_j| X^-j for the exponential series) until two
consecutive increases and omits everything from the smallest term on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from mpmath import mp, mpf, mpc

from .coeffs import CoeffTable, solve_coeffs
from .errors import (DegenerateParameter, DoublePole, HigherOrderPole,
                     SectorUnsupported, TruncationUnstable, ZeroArgument)
from .precision import DEFAULT_PRECISION, to_mpc, to_mpf, working
from .series import Method
from .wright import (ANGLE_TOL, Dominance, Regime, StruveParams, WrightParams,
                     classify, derive_params, smallest_copy_count)

_ZERO_RUN_STOP = 8  # consecutive exactly-zero terms treated as termination


@dataclass(frozen=True)
class PhasedPoint:
    """A point x e^{i phase} with the phase kept unwrapped (may exceed pi)."""

    modulus: mpf
    phase: mpf

    def power(self, e):
        """(x e^{i phase})^e on the annotated branch."""
        w = self.modulus ** e * mp.exp(mpc(0, self.phase * e))
        return w


@dataclass
class TruncationPolicy:
    """Fixed(j_max) keeps terms j = 0..j_max; Optimal scans for the smallest
    term (two-consecutive-increase stop) and omits it and everything after.

    `converge_rtol`, when set, lets an Optimal scan stop early once terms are
    below rtol times the running partial-sum magnitude (the cut is then
    invisible at the output precision).
    """

    j_max: Optional[int] = None
    cap: int = 400
    converge_rtol: Optional[mpf] = None

    @classmethod
    def fixed(cls, j_max: int) -> "TruncationPolicy":
        return cls(j_max=j_max)

    @classmethod
    def optimal(cls, cap: int = 400, converge_rtol=None) -> "TruncationPolicy":
        return cls(j_max=None, cap=cap, converge_rtol=converge_rtol)

    @property
    def mode(self) -> str:
        return "fixed" if self.j_max is not None else "optimal"


@dataclass
class Component:
    label: str
    value: object            # mpf or mpc
    terms_used: int
    first_omitted: mpf       # magnitude of the first omitted term
    status: str              # 'fixed' | 'optimal' | 'converged'
    dominance: Optional[Dominance] = None


@dataclass
class AsymptoticEstimate:
    value: object
    components: list
    error_estimate: mpf
    method: Method
    regime: Optional[Regime] = None
    stokes_warning: bool = False
    warnings: list = field(default_factory=list)

    @property
    def truncations(self):
        return {c.label: c.terms_used for c in self.components}


class _TableEnd(Exception):
    """Internal: coefficient table ran out before the scan resolved."""


def _truncate(pair_fn: Callable, policy: TruncationPolicy, limit: Optional[int] = None):
    """Sum terms under the policy.

    pair_fn(k) -> (term, scan_magnitude); raises _TableEnd past the table.
    Returns (sum, terms_used, first_omitted_magnitude, status). Exact-zero
    magnitudes are skipped by the min/increase tracking; a long run of them
    terminates the series exactly.
    """
    if policy.j_max is not None:
        total = mpf(0)
        terms = []
        for k in range(policy.j_max + 1):
            t, _ = pair_fn(k)
            terms.append(t)
            total = total + t
        try:
            _, mag = pair_fn(policy.j_max + 1)
        except _TableEnd:
            mag = abs(terms[-1]) if terms else mpf(0)
        return total, len(terms), mpf(mag), "fixed"

    terms = []
    mags = []
    total = mpf(0)
    smax = mpf(0)
    best_idx = None
    best = None
    inc_run = 0
    zero_run = 0
    prev = None
    k = 0
    while k < policy.cap:
        t, mag = pair_fn(k)
        terms.append(t)
        mags.append(mag)
        total = total + t
        smax = max(smax, abs(total))
        if mag == 0:
            zero_run += 1
            if zero_run >= _ZERO_RUN_STOP and best is not None:
                return total, k + 1, mpf(0), "converged"
            k += 1
            continue
        zero_run = 0
        if (policy.converge_rtol is not None and k >= 1 and smax > 0
                and mag < policy.converge_rtol * smax):
            return total, k + 1, mpf(mag), "converged"
        if best is None or mag < best:
            best, best_idx = mag, k
        if prev is not None and mag > prev:
            inc_run += 1
            if inc_run >= 2:
                # truncate before the smallest term seen
                kept = sum(terms[:best_idx], mpf(0))
                return kept, best_idx, mpf(best), "optimal"
        else:
            inc_run = 0
        prev = mag
        k += 1
    raise TruncationUnstable(
        f"no smallest term within cap={policy.cap}; series not yet decaying")


def _exp_sum(Z_abs, Z_phase, ct: CoeffTable, policy: TruncationPolicy):
    """sum c_j Z^-j with the scan on the envelope |c_j| |Z|^-j."""
    invZ = mp.exp(-mpc(mp.log(Z_abs), Z_phase))
    invX = 1 / Z_abs

    def pair(j):
        if j >= ct.M:
            raise _TableEnd
        return ct.c[j] * invZ ** j, abs(ct.c[j]) * invX ** j

    try:
        return _truncate(pair, policy)
    except _TableEnd:
        raise


def exp_expansion_E(zeta: PhasedPoint, wp: WrightParams, ct: CoeffTable,
                    policy: TruncationPolicy, P: int = DEFAULT_PRECISION,
                    label: str = "E") -> Component:
    """E(zeta) = A0 Z^theta e^Z sum_j c_j Z^-j, Z = kappa (h zeta)^(1/kappa)."""
    with working(P):
        if zeta.modulus == 0:
            raise ZeroArgument("exponential expansion undefined at zeta = 0")
        X = wp.kappa * (wp.h * zeta.modulus) ** (1 / wp.kappa)
        Zph = zeta.phase / wp.kappa
        Z = X * mp.exp(mpc(0, Zph))
        pref = wp.A0 * Z ** wp.theta * mp.exp(Z)
        try:
            s, used, omitted, status = _exp_sum(X, Zph, ct, policy)
        except _TableEnd:
            raise TruncationUnstable(
                f"coefficient table (M={ct.M}) exhausted before truncation "
                "resolved; enlarge M") from None
        value = pref * s
        return Component(label=label, value=value, terms_used=used,
                         first_omitted=abs(pref) * omitted, status=status)


def alg_expansion_H12(zeta: PhasedPoint, p: StruveParams,
                      policy: TruncationPolicy, P: int = DEFAULT_PRECISION,
                      label: str = "H") -> Component:
    """H(zeta) = (1/pi) sum_k Gamma(k+1/2) zeta^{-k-1} / Gamma(nu+3/2-a(1+k)),
    with zeta's phase taken from the annotation."""
    with working(P):
        if zeta.modulus == 0:
            raise ZeroArgument("algebraic expansion undefined at zeta = 0")
        a, nu = p.a, p.nu
        tol = mpf(10) ** (-12)
        real_output = mp.sin(zeta.phase) == 0 and mp.cos(zeta.phase) == 1

        def pair(k):
            arg = nu + mpf(3) / 2 - a * (1 + k)
            if arg < tol and abs(arg - mp.nint(arg)) < tol:
                raise HigherOrderPole(
                    f"nu+3/2-a(1+k) = {arg} at k={k}: ordinary point / "
                    "higher-order pole; expansion form invalid")
            t = (mp.gamma(k + mpf(1) / 2) * zeta.power(-(k + 1))
                 * mp.rgamma(arg) / mp.pi)
            if real_output:
                t = t.real
            return t, abs(t)

        total, used, omitted, status = _truncate(pair, policy)
        return Component(label=label, value=total, terms_used=used,
                         first_omitted=mpf(omitted), status=status)


def tilde_E_n(x, n: int, wp: WrightParams, ct: CoeffTable,
              policy: TruncationPolicy, P: int = DEFAULT_PRECISION) -> Component:
    """Paired real combination E(x e^{(2n-1) pi i}) + E(x e^{-(2n-1) pi i}):

    2 A0 X^theta e^{X cos w} sum_j c_j X^-j cos[X sin w + w (theta - j)],
    w = (2n-1) pi / kappa, X = kappa (h x)^(1/kappa).
    """
    with working(P):
        xv = to_mpf(x)
        if xv <= 0:
            raise ZeroArgument("tilde expansion needs x > 0")
        if n < 1:
            raise ValueError("n >= 1 required")
        X = wp.kappa * (wp.h * xv) ** (1 / wp.kappa)
        w = (2 * n - 1) * mp.pi / wp.kappa
        pref = 2 * wp.A0 * X ** wp.theta * mp.exp(X * mp.cos(w))
        Xsin = X * mp.sin(w)
        invX = 1 / X

        def pair(j):
            if j >= ct.M:
                raise _TableEnd
            env = abs(ct.c[j]) * invX ** j
            return ct.c[j] * invX ** j * mp.cos(Xsin + w * (wp.theta - j)), env

        try:
            s, used, omitted, status = _truncate(pair, policy)
        except _TableEnd:
            raise TruncationUnstable(
                f"coefficient table (M={ct.M}) exhausted; enlarge M") from None
        return Component(label=f"Etilde_{n}", value=pref * s, terms_used=used,
                         first_omitted=abs(pref) * omitted, status=status)


def exp_hat_E21(x, sigma, nu, ct: CoeffTable, policy: TruncationPolicy,
                P: int = DEFAULT_PRECISION) -> Component:
    """Reflected exponential combination for a = -sigma, z -> +infinity:

    (A0/pi) X^theta e^{X cos(pi sigma/kappa)} *
        sum_j (-1)^{j-1} c_j X^-j sin[X sin(pi sigma/kappa) + (pi/kappa)(theta-j)].

    Exponentially large for sigma < 1/3, oscillatory at sigma = 1/3,
    exponentially small for 1/3 < sigma < 1/2.
    """
    with working(P):
        sig = to_mpf(sigma)
        nu = to_mpf(nu)
        xv = to_mpf(x)
        if xv <= 0:
            raise ZeroArgument("reflected exponential expansion needs x > 0")
        if not (0 < sig < mpf(1) / 2):
            raise DegenerateParameter(
                "exponential component only enters for 0 < sigma < 1/2")
        kappa = 1 - sig
        h = sig ** sig
        theta = -nu - mpf(3) / 2
        A0 = mp.sqrt(2 * mp.pi) * (kappa / sig) ** (nu + 1)
        X = kappa * (h * xv) ** (1 / kappa)
        w = mp.pi * sig / kappa
        pref = A0 / mp.pi * X ** theta * mp.exp(X * mp.cos(w))
        Xsin = X * mp.sin(w)
        invX = 1 / X

        def pair(j):
            if j >= ct.M:
                raise _TableEnd
            sign = -1 if j % 2 == 0 else 1
            env = abs(ct.c[j]) * invX ** j
            t = sign * ct.c[j] * invX ** j * mp.sin(Xsin + mp.pi / kappa * (theta - j))
            return t, env

        try:
            s, used, omitted, status = _truncate(pair, policy)
        except _TableEnd:
            raise TruncationUnstable(
                f"coefficient table (M={ct.M}) exhausted; enlarge M") from None

        cosw = mp.cos(w)
        if abs(cosw) < mpf(10) ** (-12):
            dom = Dominance.COMPARABLE
        elif cosw > 0:
            dom = Dominance.EXPONENTIAL
        else:
            dom = Dominance.ALGEBRAIC
        return Component(label="Ehat", value=pref * s, terms_used=used,
                         first_omitted=abs(pref) * omitted, status=status,
                         dominance=dom)


def alg_hat_H21(x, sigma, nu, policy: TruncationPolicy,
                P: int = DEFAULT_PRECISION):
    """Two-part algebraic combination for a = -sigma, z -> +infinity:

    (1/pi) sum_k (-x)^{-k-1} Gamma(k+1/2) / Gamma(nu+3/2+sigma(k+1))
      + (1/sigma) sum_k x^{-k_s} / (k! Gamma(3/2-k_s)),  k_s = (k-nu-1/2)/sigma.

    Each sum is truncated independently; returns (k-component, ks-component).
    """
    with working(P):
        sig = to_mpf(sigma)
        nu = to_mpf(nu)
        xv = to_mpf(x)
        if xv <= 0:
            raise ZeroArgument("algebraic combination needs x > 0")
        if not (0 < sig < 1):
            raise DegenerateParameter("0 < sigma < 1 required")
        tol = mpf(10) ** (-12)

        def pair_k(k):
            sign = -1 if k % 2 == 0 else 1
            t = (sign * xv ** (-(k + 1)) * mp.gamma(k + mpf(1) / 2)
                 * mp.rgamma(nu + mpf(3) / 2 + sig * (k + 1)) / mp.pi)
            return t, abs(t)

        def pair_ks(k):
            ks = (k - nu - mpf(1) / 2) / sig
            if abs(ks - mp.nint(ks)) < tol:
                raise DoublePole(
                    f"k_s = {ks} integral at k={k}; pole sequences merge")
            t = xv ** (-ks) * mp.rgamma(mpf(3) / 2 - ks) / (sig * mp.factorial(k))
            return t, abs(t)

        vk, uk, ok, stk = _truncate(pair_k, policy)
        vks, uks, oks, stks = _truncate(pair_ks, policy)
        return (Component(label="Hhat-k", value=vk, terms_used=uk,
                          first_omitted=ok, status=stk),
                Component(label="Hhat-ks", value=vks, terms_used=uks,
                          first_omitted=oks, status=stks))


def _theorem5_component(abs_z, sigma, nu, policy: TruncationPolicy,
                        P: int) -> Component:
    """(1/pi) sum_k Gamma(k+1/2) (|z|/2)^{-2k-2} / Gamma(nu+3/2+sigma(k+1))."""
    with working(P):
        sig = to_mpf(sigma)
        nu = to_mpf(nu)
        y = to_mpf(abs_z) / 2
        if y <= 0:
            raise ZeroArgument("|z| > 0 required")
        inv2 = y ** (-2)

        def pair(k):
            t = (mp.gamma(k + mpf(1) / 2) * inv2 ** (k + 1)
                 * mp.rgamma(nu + mpf(3) / 2 + sig * (k + 1)) / mp.pi)
            return t, abs(t)

        v, used, omitted, status = _truncate(pair, policy)
        return Component(label="Halg", value=v, terms_used=used,
                         first_omitted=omitted, status=status)


def _reflection_regularity_warning(sigma, nu) -> Optional[str]:
    """Flag parameter points where Gamma(sigma n - nu - 1/2) is singular for
    some n >= 0; the reflected-series rewrite then needs care (the second
    algebraic sum remains valid)."""
    sig = to_mpf(sigma)
    nu = to_mpf(nu)
    bound = (nu + mpf(1) / 2) / sig
    n = 0
    while n <= bound + 1:
        w = sig * n - nu - mpf(1) / 2
        if w <= mpf(10) ** (-12) and abs(w - mp.nint(w)) < mpf(10) ** (-12):
            return (f"Gamma(sigma n - nu - 1/2) singular at n={n}; the "
                    "reflected-series representation is degenerate there "
                    "(the k_s sum remains valid)")
        n += 1
    return None


def _sum_components(components) -> object:
    total = components[0].value
    for c in components[1:]:
        total = total + c.value
    return total


def _finish(components, method, regime=None, stokes=False, warnings=None):
    value = _sum_components(components)
    if isinstance(value, mpc) and value.imag == 0:
        value = value.real
    err = sum((c.first_omitted for c in components), mpf(0))
    return AsymptoticEstimate(value=value, components=components,
                              error_estimate=err, method=method,
                              regime=regime, stokes_warning=stokes,
                              warnings=warnings or [])


def assemble_pos(z, p: StruveParams, ct: CoeffTable,
                 policy: TruncationPolicy, P: int = DEFAULT_PRECISION,
                 angle_tol: float = ANGLE_TOL) -> AsymptoticEstimate:
    """Asymptotic estimate of the normalized function for a > 0,
    |arg z| <= pi/2.

    Real z: the exponential expansion alone (all 2N+1 copies for kappa > 2;
    the algebraic part is maximally subdominant and dropped). Imaginary z:
    Etilde_1..Etilde_max(1,N) plus the algebraic series at phase 0. General
    z in the sector: E(zeta) [+ E(zeta e^{-+2 pi i}) beyond the switching ray
    |arg zeta| = pi(1 - kappa/2)] + H(zeta e^{-+pi i}), upper signs for
    arg z > 0.
    """
    if p.a <= 0:
        raise DegenerateParameter("assemble_pos requires a > 0")
    with working(P):
        zc = to_mpc(z)
        if abs(zc) == 0:
            raise ZeroArgument("asymptotic estimate undefined at z = 0")
        argz = mp.arg(zc)
        if abs(argz) > mp.pi / 2 + angle_tol:
            raise SectorUnsupported(
                "assemble_pos covers |arg z| <= pi/2; rotate first via "
                "L(z e^{+-pi i}; a) = e^{+-pi i (nu+1)} L(z; a)")
        wp = derive_params(p, P)
        kappa = wp.kappa
        N = smallest_copy_count(kappa)
        x = abs(zc) ** 2 / 4
        phase = 2 * argz
        regime = classify(wp, float(phase), tol=angle_tol)
        comps = []
        stokes = False

        on_real_axis = abs(argz) < angle_tol
        on_imag_axis = abs(abs(argz) - mp.pi / 2) < angle_tol

        if on_real_axis:
            comps.append(exp_expansion_E(PhasedPoint(x, mpf(0)), wp, ct,
                                         policy, P, label="E"))
            if kappa > 2:
                for n in range(1, N + 1):
                    cpos = exp_expansion_E(PhasedPoint(x, 2 * mp.pi * n), wp,
                                           ct, policy, P,
                                           label=f"E(+2pi*{n})")
                    cneg = Component(label=f"E(-2pi*{n})",
                                     value=mp.conj(cpos.value),
                                     terms_used=cpos.terms_used,
                                     first_omitted=cpos.first_omitted,
                                     status=cpos.status)
                    comps.extend([cpos, cneg])
            method = Method.ASYMPTOTIC_EXP
        elif on_imag_axis:
            for n in range(1, max(1, N) + 1):
                comps.append(tilde_E_n(x, n, wp, ct, policy, P))
            comps.append(alg_expansion_H12(PhasedPoint(x, mpf(0)), p,
                                           policy, P, label="H"))
            method = Method.ASYMPTOTIC_COMBINED
        else:
            sgn = 1 if argz > 0 else -1
            comps.append(exp_expansion_E(PhasedPoint(x, phase), wp, ct,
                                         policy, P, label="E"))
            switch = mp.pi * (1 - kappa / 2)
            near_switch = abs(abs(phase) - switch) < angle_tol
            stokes = bool(kappa < 2 and near_switch)
            if kappa > 2:
                for n in range(1, N + 1):
                    for pm in (1, -1):
                        comps.append(exp_expansion_E(
                            PhasedPoint(x, phase + 2 * mp.pi * n * pm), wp,
                            ct, policy, P, label=f"E({'+' if pm > 0 else '-'}2pi*{n})"))
            elif abs(phase) >= switch - angle_tol:
                comps.append(exp_expansion_E(
                    PhasedPoint(x, phase - sgn * 2 * mp.pi), wp, ct, policy,
                    P, label=f"E({'-' if sgn > 0 else '+'}2pi)"))
            comps.append(alg_expansion_H12(
                PhasedPoint(x, phase - sgn * mp.pi), p, policy, P, label="H"))
            method = Method.ASYMPTOTIC_COMBINED
        return _finish(comps, method, regime=regime, stokes=stokes)


def assemble_neg_real(z, sigma, nu, ct: Optional[CoeffTable],
                      policy: TruncationPolicy, P: int = DEFAULT_PRECISION,
                      sigma_tol: float = 1e-12) -> AsymptoticEstimate:
    """Estimate for a = -sigma and real z > 0: Ehat + Hhat for sigma < 1/2,
    Hhat alone for sigma >= 1/2 (at sigma = 1/2 the exponential part is
    switching off and is dropped, with a Stokes warning)."""
    with working(P):
        sig = to_mpf(sigma)
        nuv = to_mpf(nu)
        zv = to_mpf(z)
        if zv <= 0:
            raise ZeroArgument("assemble_neg_real needs real z > 0")
        if not (0 < sig < 1):
            raise DegenerateParameter("0 < sigma < 1 required")
        x = zv * zv / 4
        p = StruveParams(-sig, nuv)
        wp = derive_params(p, P)
        regime = classify(wp, float(mp.pi * sig))
        warnings = []
        w = _reflection_regularity_warning(sig, nuv)
        if w:
            warnings.append(w)
        on_stokes = abs(sig - mpf(1) / 2) < sigma_tol
        comps = []
        if sig < mpf(1) / 2 and not on_stokes:
            if ct is None:
                raise ValueError("coefficient table required for sigma < 1/2")
            comps.append(exp_hat_E21(x, sig, nuv, ct, policy, P))
        elif on_stokes:
            warnings.append("sigma = 1/2: exponential component maximally "
                            "subdominant and switching off; dropped")
        comps.extend(alg_hat_H21(x, sig, nuv, policy, P))
        method = (Method.ASYMPTOTIC_COMBINED if len(comps) == 3
                  else Method.ASYMPTOTIC_ALG)
        return _finish(comps, method, regime=regime, stokes=on_stokes,
                       warnings=warnings)


def assemble_neg_imag(abs_z, sigma, nu, policy: TruncationPolicy,
                      P: int = DEFAULT_PRECISION) -> AsymptoticEstimate:
    """Estimate for a = -sigma on the imaginary axis (z = i |z|): the single
    surviving algebraic series, optimally truncated; the exponential
    contribution is maximally subdominant and neglected."""
    with working(P):
        sig = to_mpf(sigma)
        nuv = to_mpf(nu)
        if not (0 < sig < 1):
            raise DegenerateParameter("0 < sigma < 1 required")
        p = StruveParams(-sig, nuv)
        wp = derive_params(p, P)
        # the associated arguments sit on the Stokes rays |arg| = pi kappa
        regime = classify(wp, float(mp.pi * wp.kappa))
        warnings = []
        w = _reflection_regularity_warning(sig, nuv)
        if w:
            warnings.append(w)
        comp = _theorem5_component(abs_z, sig, nuv, policy, P)
        return _finish([comp], Method.ASYMPTOTIC_ALG, regime=regime,
                       warnings=warnings)


_M_LADDER = (32, 64, 72)  # deeper single-ray fits fail their stability gate


def _adaptive_table(p: StruveParams, P: int, policy: TruncationPolicy,
                    build: Callable):
    """Run `build(ct)` growing the coefficient table until truncation resolves."""
    if policy.j_max is not None:
        M = policy.j_max + 2
        return build(solve_coeffs(p, M, P))
    for i, M in enumerate(_M_LADDER):
        if M > policy.cap and i > 0:
            break
        try:
            return build(solve_coeffs(p, min(M, max(policy.cap, 8)), P))
        except TruncationUnstable:
            if i == len(_M_LADDER) - 1:
                raise
    raise TruncationUnstable(
        f"series not resolved within the coefficient-depth cap {policy.cap}")


def asymptotic_estimate(z, p: StruveParams, P: int = DEFAULT_PRECISION,
                        policy: Optional[TruncationPolicy] = None,
                        angle_tol: float = ANGLE_TOL) -> AsymptoticEstimate:
    """High-level dispatcher: picks the assembly route for (z, a) and sizes
    the coefficient table adaptively; Optimal scans stop once terms fall
    below 10^-(P+5) of the running sum."""
    if policy is None:
        policy = TruncationPolicy.optimal(converge_rtol=mpf(10) ** (-(P + 5)))
    elif policy.mode == "optimal" and policy.converge_rtol is None:
        policy = TruncationPolicy.optimal(cap=policy.cap,
                                          converge_rtol=mpf(10) ** (-(P + 5)))
    with working(P):
        zc = to_mpc(z)
        argz = mp.arg(zc)
    if p.a > 0:
        return _adaptive_table(
            p, P, policy, lambda ct: assemble_pos(zc, p, ct, policy, P,
                                                  angle_tol=angle_tol))
    sig = -p.a
    with working(P):
        on_real = abs(argz) < angle_tol
        on_imag = abs(abs(argz) - mp.pi / 2) < angle_tol
    if on_imag:
        return assemble_neg_imag(abs(zc), sig, p.nu, policy, P)
    if on_real:
        if sig < mpf(1) / 2 and abs(sig - mpf(1) / 2) > 1e-12:
            return _adaptive_table(
                p, P, policy,
                lambda ct: assemble_neg_real(zc.real, sig, p.nu, ct, policy, P))
        return assemble_neg_real(zc.real, sig, p.nu, None, policy, P)
    raise SectorUnsupported(
        "for -1 < a < 0 the expansions cover real z > 0 and z = i|z| only")
