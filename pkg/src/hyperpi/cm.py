"""CM points, the quasi-period relation, the master CM formula, the two
1/pi identities, and the pi-digit engine.

A CM point is tau = (-b + sqrt(-d))/(2a) with a tau^2 + b tau + c = 0 for
coprime integers, d = 4ac - b^2 > 0.  At such points the quasi-period
relation

    Omega1 H1 Im(tau) - Omega1^2 [Im(tau) (3g3/2g2) s2(tau)] = pi

combines with Bruns' relation into the master formula

    -F^2 [(2l-1)/3 + (3g3/2g2) s2(tau)] + l(1-l) d(F^2)/dl = 2a/(pi sqrt(d)),

whose instances at tau = i (lambda = 1/2) and tau = 1+i (lambda = -1) are
the identities  8/pi = F(1/2) F2(1/2)  and  1/pi = F(-1)^2 - F(-1) F2(-1).

The factor (3g3/2g2) s2(tau) is always evaluated here in the combined form

    (E2(tau) - 3/(pi Im tau)) / (3 F^2),

which is finite even at the zeros of E6 (both identity points are 0/0 for
the raw E4/E6 form) and equals g2/g3 times s2 elsewhere, as the tests
cross-check at tau = 2i.

Reference pi in every report comes from pi_reference, never from the
identities under test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hypergeometric import legendre_F, legendre_F2
from .legendre import quasiperiod_bruns
from .modular import TauPoint, eisenstein, lambda_tau_reduced, tau_point
from .numerics import PrecisionCtx, ctx_new, pi_reference, truncated_digits
from .reports import FormulaReport, make_report


@dataclass(frozen=True)
class CMQuadratic:
    """Integer triple (a, b, c) of a tau quadratic a tau^2 + b tau + c = 0."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if math.gcd(math.gcd(self.a, self.b), self.c) != 1:
            raise ValueError("a, b, c must be mutually coprime")
        if self.a <= 0:
            raise ValueError("a must be positive")
        if self.d <= 0:
            raise ValueError("4ac - b^2 must be positive (upper-half-plane root)")

    @property
    def d(self) -> int:
        return 4 * self.a * self.c - self.b * self.b

    def label(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def cm_tau(q: CMQuadratic, ctx: PrecisionCtx) -> TauPoint:
    """tau = (-b + i sqrt(d)) / (2a)."""
    mp = ctx.mp
    sqrt_d = mp.sqrt(mp.mpf(q.d))
    return tau_point(mp.mpc(mp.mpf(-q.b) / (2 * q.a), sqrt_d / (2 * q.a)), ctx)


def combined_s2_term(t: TauPoint, F, ctx: PrecisionCtx):
    """(3g3/2g2) s2(tau) in the combined form (E2 - 3/(pi Im tau)) / (3 F^2).

    F must be 2F1(1/2,1/2;1;lambda(tau)).  Finite at the zeros of E6 where
    the raw E4/E6 form of s2 is indeterminate.
    """
    pi = pi_reference(ctx)
    bracket = eisenstein(2, t, ctx) - 3 / (pi * t.im)
    return bracket / (3 * F * F)


def quasiperiod_relation_check(q: CMQuadratic, ctx: PrecisionCtx) -> FormulaReport:
    """Omega1 H1 Im(tau) - Omega1^2 Im(tau) (3g3/2g2) s2(tau) = pi."""
    t = cm_tau(q, ctx)
    lam = lambda_tau_reduced(t, ctx)
    pair = quasiperiod_bruns(lam, ctx)
    F = legendre_F(lam, ctx)
    term = combined_s2_term(t, F, ctx)
    lhs = pair.omega1 * pair.h1 * t.im - pair.omega1**2 * t.im * term
    rhs = pi_reference(ctx)
    return make_report(f"quasiperiod {q.label()}", lhs, rhs, ctx)


def theorem_general_check(q: CMQuadratic, ctx: PrecisionCtx) -> FormulaReport:
    """Master CM formula:
    -F^2 [(2l-1)/3 + (3g3/2g2) s2] + l(1-l) d(F^2)/dl = 2a/(pi sqrt(d))."""
    mp = ctx.mp
    t = cm_tau(q, ctx)
    lam = lambda_tau_reduced(t, ctx)
    F = legendre_F(lam, ctx)
    F2v = legendre_F2(lam, ctx)
    term = combined_s2_term(t, F, ctx)
    lhs = -F * F * ((2 * lam - 1) / 3 + term) + lam * (1 - lam) * (F * F2v / 2)
    rhs = 2 * q.a / (pi_reference(ctx) * mp.sqrt(mp.mpf(q.d)))
    return make_report(f"theorem-general {q.label()}", lhs, rhs, ctx)


def identity1_check(ctx: PrecisionCtx) -> FormulaReport:
    """8/pi = F(1/2) F2(1/2)."""
    mp = ctx.mp
    half = mp.mpf(1) / 2
    lhs = 8 / pi_reference(ctx)
    rhs = legendre_F(half, ctx) * legendre_F2(half, ctx)
    return make_report("identity1", lhs, rhs, ctx)


def identity2_check(ctx: PrecisionCtx) -> FormulaReport:
    """1/pi = F(-1)^2 - F(-1) F2(-1)."""
    mp = ctx.mp
    minus_one = mp.mpf(-1)
    F = legendre_F(minus_one, ctx)
    lhs = 1 / pi_reference(ctx)
    rhs = F * F - F * legendre_F2(minus_one, ctx)
    return make_report("identity2", lhs, rhs, ctx)


def pi_from_identity(which: int, digits: int) -> str:
    """pi digits from identity 1 (8/(F F2) at 1/2) or 2 (1/(F^2 - F F2) at -1).

    Returns the first `digits` significant digits, truncated, e.g.
    pi_from_identity(1, 10) == "3.141592653".  The z = 1/2 series gains
    about 0.30 decimal digits per term, so cost is linear in digits.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if digits < 1:
        raise ValueError("digits must be positive")
    ctx = ctx_new(digits)
    mp = ctx.mp
    if which == 1:
        half = mp.mpf(1) / 2
        value = 8 / (legendre_F(half, ctx) * legendre_F2(half, ctx))
    else:
        minus_one = mp.mpf(-1)
        F = legendre_F(minus_one, ctx)
        value = 1 / (F * F - F * legendre_F2(minus_one, ctx))
    return truncated_digits(value, digits)


def pi_reference_digits(digits: int) -> str:
    """Truncated digit string of pi_reference, for digit-for-digit comparison."""
    if digits < 1:
        raise ValueError("digits must be positive")
    ctx = ctx_new(digits)
    return truncated_digits(pi_reference(ctx), digits)
