"""Weierstrass data of the Legendre family, its periods and quasi-periods,
and numerical checks of the eta-quotient period identities.

The curve y^2 = x(x-1)(x-lambda) in Weierstrass form y^2 = 4x^3 - g2 x - g3
has

    g2 = (4/3)(lambda^2 - lambda + 1),
    g3 = (4/27)(lambda + 1)(2 lambda - 1)(lambda - 2),
    disc = g2^3 - 27 g3^2 = 16 lambda^2 (1 - lambda)^2,

with first period Omega1 = pi F(lambda) (F = 2F1(1/2,1/2;1;.)) and first
quasi-period H1 fixed by Bruns' differential relation

    H1 = -2 lambda (lambda - 1) dOmega1/dlambda - ((2 lambda - 1)/3) Omega1.

The check_* operations compare the eta/discriminant route for the period
against the hypergeometric route; certified quantities elsewhere never
depend on them (they are verifications, not inputs).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import BranchWarning
from .hypergeometric import legendre_F, legendre_F2
from .modular import (
    TauPoint,
    delta_tau,
    eta,
    g2_tau,
    g3_tau,
    lambda_tau,
    lambda_tau_reduced,
    normalized_j,
)
from .numerics import PrecisionCtx, format_value, pi_reference
from .reports import FormulaReport, make_report


@dataclass(frozen=True)
class LegendreCurve:
    lam: object
    g2: object
    g3: object
    disc: object
    e0: object
    e1: object
    e_lam: object
    degenerate: bool


def weierstrass_from_lambda(lam) -> LegendreCurve:
    """Weierstrass invariants and 2-torsion roots; exact for rational input.

    Degenerate lambda in {0, 1} is allowed and flagged (disc = 0).
    """
    if isinstance(lam, (int, Fraction)):
        lam = Fraction(lam)
        g2 = Fraction(4, 3) * (lam * lam - lam + 1)
        g3 = Fraction(4, 27) * (lam + 1) * (2 * lam - 1) * (lam - 2)
        disc = 16 * lam * lam * (1 - lam) ** 2
        e0 = Fraction(-(1 + lam), 3)
        e1 = Fraction(2 - lam, 3)
        e_lam = Fraction(2 * lam - 1, 3)
    else:
        g2 = 4 * (lam * lam - lam + 1) / 3
        g3 = 4 * (lam + 1) * (2 * lam - 1) * (lam - 2) / 27
        disc = 16 * lam * lam * (1 - lam) ** 2
        e0 = -(1 + lam) / 3
        e1 = (2 - lam) / 3
        e_lam = (2 * lam - 1) / 3
    return LegendreCurve(
        lam=lam, g2=g2, g3=g3, disc=disc, e0=e0, e1=e1, e_lam=e_lam,
        degenerate=bool(disc == 0),
    )


@dataclass(frozen=True)
class PeriodPair:
    """First period Omega1 and first quasi-period H1 of the Weierstrass model."""

    omega1: object
    h1: object

    def curve_periods(self, lam):
        """(P1, Q1) of y^2 = x(x-1)(x-lambda): P1 = 2 Omega1,
        Q1 = 2 H1 - ((1+lambda)/3) P1."""
        p1 = 2 * self.omega1
        return p1, 2 * self.h1 - (1 + lam) * p1 / 3


def period_classical(lam, ctx: PrecisionCtx):
    """Omega1 = pi * 2F1(1/2, 1/2; 1; lambda)."""
    return pi_reference(ctx) * legendre_F(lam, ctx)


def quasiperiod_bruns(lam, ctx: PrecisionCtx) -> PeriodPair:
    """(Omega1, H1) with H1 from Bruns' first differential relation;
    dOmega1/dlambda = (pi/4) 2F1(3/2, 3/2; 2; lambda) by the contiguous rule."""
    pi = pi_reference(ctx)
    omega1 = pi * legendre_F(lam, ctx)
    d_omega1 = pi / 4 * legendre_F2(lam, ctx)
    h1 = -2 * lam * (lam - 1) * d_omega1 - (2 * lam - 1) / 3 * omega1
    return PeriodPair(omega1=omega1, h1=h1)


def bruns_residuals(lam, ctx: PrecisionCtx):
    """Residuals of both Bruns differential relations at real lambda in (0, 1/2].

    dOmega1/dlambda is exact (contiguous relation); dH1/dlambda uses central
    differences with step 10^(-working/4), which limits the attainable
    residual of the second relation to roughly h^2.
    """
    mp = ctx.mp
    lam = ctx.real(lam)
    if not (0 < lam <= 0.5):
        raise ValueError("residuals need lambda in (0, 1/2]; endpoints are singular")
    pair = quasiperiod_bruns(lam, ctx)
    omega1, h1 = pair.omega1, pair.h1
    d_omega1 = pi_reference(ctx) / 4 * legendre_F2(lam, ctx)
    denom = lam * (lam - 1)
    res1 = abs(d_omega1 + h1 / (2 * denom) + (2 * lam - 1) / (6 * denom) * omega1)

    h = mp.mpf(10) ** (-(ctx.working_digits // 4))
    h1_plus = quasiperiod_bruns(lam + h, ctx).h1
    h1_minus = quasiperiod_bruns(lam - h, ctx).h1
    d_h1 = (h1_plus - h1_minus) / (2 * h)
    res2 = abs(d_h1 - (lam * lam - lam + 1) / (18 * denom) * omega1 - (2 * lam - 1) / (6 * denom) * h1)
    return res1, res2


# ---------------------------------------------------------------------------
# Homothety factor between the lattice of E_lambda and Z + Z tau
# ---------------------------------------------------------------------------

def _near_negative_cut(z, ctx: PrecisionCtx) -> bool:
    zc = ctx.complex(z)
    if zc.real >= 0:
        return False
    return abs(zc.imag) <= abs(zc.real) * ctx.mp.mpf(10) ** (-(ctx.working_digits // 2))


def homothety_mu(t: TauPoint, ctx: PrecisionCtx):
    """The three printed expressions for the homothety factor mu(tau).

    Returns (mu_sqrt, mu_j, mu_closed):

    * mu_sqrt   = sqrt(9(l^2-l+1)/((l+1)(2l-1)(l-2)) * g3(tau)/g2(tau))
    * mu_j      = Delta(tau)^(1/12)/J^(1/6) * (J-1)^(1/4)/27^(1/4) * same sqrt
    * mu_closed = (2^(1/3)/27) * Delta(tau)^(1/12) / (lambda(1-lambda))^(1/6)

    All fractional powers are principal.  The three values are returned
    unreconciled so their mutual ratios (and the ratio to pi F(lambda)) can
    be measured; homothety_ratios does exactly that.
    """
    mp = ctx.mp
    lam = lambda_tau(t, ctx)
    prod = lam * (1 - lam)
    if _near_negative_cut(prod, ctx):
        warnings.warn(
            "lambda(1-lambda) is on the negative real axis; sixth-root branch is ambiguous",
            BranchWarning,
            stacklevel=2,
        )
    cubic = (lam + 1) * (2 * lam - 1) * (lam - 2)
    quad = lam * lam - lam + 1
    ratio = 9 * quad / cubic
    mu_sqrt = mp.sqrt(ratio * g3_tau(t, ctx) / g2_tau(t, ctx))

    delta = delta_tau(t, ctx)
    delta_12 = delta ** (mp.mpf(1) / 12)
    j = normalized_j(lam)
    mu_j = (
        delta_12 / j ** (mp.mpf(1) / 6)
        * (j - 1) ** (mp.mpf(1) / 4) / mp.mpf(27) ** (mp.mpf(1) / 4)
        * mp.sqrt(ratio)
    )
    mu_closed = mp.mpf(2) ** (mp.mpf(1) / 3) / 27 * delta_12 / prod ** (mp.mpf(1) / 6)
    return mu_sqrt, mu_j, mu_closed


def homothety_ratios(t: TauPoint, ctx: PrecisionCtx):
    """Each mu expression divided by pi F(lambda(tau)).

    The measured constants adjudicate the closed form: expressions that
    agree with the period normalization give ratio 1.
    """
    lam = lambda_tau(t, ctx)
    omega1 = pi_reference(ctx) * legendre_F(lam, ctx)
    return tuple(mu / omega1 for mu in homothety_mu(t, ctx))


# ---------------------------------------------------------------------------
# Period-identity checks (eta route vs hypergeometric route)
# ---------------------------------------------------------------------------

def _twelfth_root(x, ctx: PrecisionCtx):
    return x ** (ctx.mp.mpf(1) / 12)


def _eta_route_period(t: TauPoint, disc, ctx: PrecisionCtx):
    """omega1 = Delta(tau)^(1/12) / disc^(1/12) with Delta(tau)^(1/12)
    written as 2 pi eta(tau)^2 (no 12th root of Delta is ever taken)."""
    return 2 * pi_reference(ctx) * eta(t, ctx) ** 2 / _twelfth_root(disc, ctx)


def _real_in_unit_interval(lam, ctx) -> bool:
    z = ctx.complex(lam)
    return abs(z.imag) <= ctx.eps * 16 and 0 < z.real < 1


def check_theorem_period(t: TauPoint, curve: LegendreCurve, ctx: PrecisionCtx) -> FormulaReport:
    """Around infinity: omega1 = 2^(1/3) pi (l(1-l))^(1/6) disc^(-1/12) F(l).

    lhs comes from the eta/discriminant route, rhs from the hypergeometric
    route; curve should be built from lambda(tau).
    """
    mp = ctx.mp
    lam = curve.lam
    flags = []
    if not _real_in_unit_interval(lam, ctx):
        flags.append("lambda outside (0,1): principal sixth root unverified")
    lhs = _eta_route_period(t, curve.disc, ctx)
    rhs = (
        mp.mpf(2) ** (mp.mpf(1) / 3) * pi_reference(ctx)
        * (lam * (1 - lam)) ** (mp.mpf(1) / 6)
        / _twelfth_root(curve.disc, ctx)
        * legendre_F(lam, ctx)
    )
    label = f"period-identity tau={_tau_label(t, ctx)}"
    return make_report(label, lhs, rhs, ctx, flags)


def check_theorem_transform(t: TauPoint, ctx: PrecisionCtx) -> FormulaReport:
    """Around 0: omega1 = 2^(1/3) (pi i / tau) (l(1-l))^(1/6) disc^(-1/12) F(1-l)."""
    mp = ctx.mp
    lam = lambda_tau_reduced(t, ctx)
    curve = weierstrass_from_lambda(lam)
    flags = []
    if not _real_in_unit_interval(lam, ctx):
        flags.append("lambda outside (0,1): principal sixth root unverified")
    lhs = _eta_route_period(t, curve.disc, ctx)
    rhs = (
        mp.mpf(2) ** (mp.mpf(1) / 3) * pi_reference(ctx) * mp.mpc(0, 1) / t.tau
        * (lam * (1 - lam)) ** (mp.mpf(1) / 6)
        / _twelfth_root(curve.disc, ctx)
        * legendre_F(1 - lam, ctx)
    )
    label = f"transform-identity tau={_tau_label(t, ctx)}"
    return make_report(label, lhs, rhs, ctx, flags)


def check_theorem_around1(t: TauPoint, ctx: PrecisionCtx) -> FormulaReport:
    """Around 1: omega1 = 2^(1/3) pi i / ((tau+1) sqrt(1-l)) (l(1-l))^(1/6)
    disc^(-1/12) F(1/(1-l)), all branches principal.

    Near tau = 1, lambda is large negative, so lambda(1-lambda) sits on the
    negative real axis and the principal sixth root is a convention, not a
    theorem; on mismatch the report quantifies the constant lhs/rhs factor
    instead of asserting a branch choice.
    """
    mp = ctx.mp
    lam = lambda_tau_reduced(t, ctx)
    curve = weierstrass_from_lambda(lam)
    flags = []
    if _near_negative_cut(lam * (1 - lam), ctx):
        flags.append("lambda(1-lambda) on the negative real cut: principal branch is a convention")
    lhs = _eta_route_period(t, curve.disc, ctx)
    rhs = (
        mp.mpf(2) ** (mp.mpf(1) / 3) * pi_reference(ctx) * mp.mpc(0, 1)
        / ((t.tau + 1) * mp.sqrt(1 - lam))
        * (lam * (1 - lam)) ** (mp.mpf(1) / 6)
        / _twelfth_root(curve.disc, ctx)
        * legendre_F(1 / (1 - lam), ctx)
    )
    label = f"around-one-identity tau={_tau_label(t, ctx)}"
    report = make_report(label, lhs, rhs, ctx, flags)
    if not report.passed:
        ratio = lhs / rhs
        report.branch_flags.append(
            f"measured lhs/rhs = {format_value(ratio, ctx, 40)} "
            f"(|ratio| = {ctx.mp.nstr(abs(ratio), 40)})"
        )
    return report


def _tau_label(t: TauPoint, ctx: PrecisionCtx) -> str:
    return format_value(t.tau, ctx, 6)
