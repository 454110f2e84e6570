"""Coefficient arithmetic for the series D(s) = L(s) (log L)''(s).

Writes (log L)''(s) = sum u(n) n^-s with u supported on prime powers,
u(p^j) = (alpha_p^j + beta_p^j) * j * log^2 p  where alpha, beta are the
roots of x^2 - lambda(p) x + xi(p) (a single root lambda(p) at ramified p).
Then c(n) = (lambda * u)(n), computed by two independent routes that serve
as each other's oracle, plus the twisted variant

    c_{a,q}(n) = c(n) e(an/q) - sum_{j>=1, q^j | n} r(j) lambda(n / q^j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .characters import TwistContext
from .forms import CoefficientTable, FormDescriptor, smallest_prime_factors


@dataclass
class DSeriesTable:
    """c(n) for 1 <= n <= length; index 0 of ``c`` is unused."""

    length: int
    c: np.ndarray = field(repr=False)
    method: str = "convolution"
    a: int | None = None
    q: int | None = None

    def value(self, s: complex, m: int | None = None) -> complex:
        """Truncated Dirichlet series sum_{n<=m} c(n) n^-s."""
        m = self.length if m is None else min(m, self.length)
        ns = np.arange(1, m + 1, dtype=np.float64)
        return complex(np.sum(self.c[1:m + 1] * np.exp(-s * np.log(ns))))


def _primes_upto(m: int) -> list[int]:
    spf = smallest_prime_factors(m)
    return [p for p in range(2, m + 1) if spf[p] == p]


def satake_power_sums(lam_p: complex, xi_p: complex, jmax: int) -> np.ndarray:
    """t_j = alpha^j + beta^j via the Chebyshev-style recurrence."""
    t = np.zeros(jmax + 1, dtype=np.complex128)
    t[0] = 2.0
    if jmax >= 1:
        t[1] = lam_p
    for j in range(2, jmax + 1):
        t[j] = lam_p * t[j - 1] - xi_p * t[j - 2]
    return t


def log_deriv_coefficients(form: FormDescriptor, table: CoefficientTable,
                           m: int) -> np.ndarray:
    """u(n) for n <= m; zero off prime powers."""
    if table.length < m:
        raise ValueError(f"coefficient table too short: {table.length} < {m}")
    u = np.zeros(m + 1, dtype=np.complex128)
    for p in _primes_upto(m):
        lp2 = math.log(p) ** 2
        jmax = int(math.log(m) / math.log(p)) + 1
        if form.level % p == 0:
            # ramified: local factor (1 - lambda(p) p^-s)^(-1)
            lam_p = table.lambda_of(p)
            pj, val = p, lam_p
            j = 1
            while pj <= m:
                u[pj] = val * j * lp2
                pj *= p
                j += 1
                val *= lam_p
        else:
            t = satake_power_sums(table.lambda_of(p), form.xi(p), jmax)
            pj, j = p, 1
            while pj <= m:
                u[pj] = t[j] * j * lp2
                pj *= p
                j += 1
    return u


def cf_convolution(form: FormDescriptor, table: CoefficientTable,
                   m: int) -> DSeriesTable:
    """c = lambda * u by direct Dirichlet convolution over u's support."""
    u = log_deriv_coefficients(form, table, m)
    lam = table.lam
    c = np.zeros(m + 1, dtype=np.complex128)
    for e in range(2, m + 1):
        ue = u[e]
        if ue == 0.0:
            continue
        mult = np.arange(1, m // e + 1)
        c[e * mult] += ue * lam[mult]
    return DSeriesTable(length=m, c=c, method="convolution")


def cf_eulerlocal(form: FormDescriptor, table: CoefficientTable,
                  m: int) -> DSeriesTable:
    """Same coefficients, assembled per prime.

    For n = p^e * r with p coprime to r, the p-part contribution to c(n) is
    lambda(r) * w_p(e) with w_p = (local lambda series) * (local u series);
    summing over p | n gives c(n).
    """
    lam = table.lam
    c = np.zeros(m + 1, dtype=np.complex128)
    spf = smallest_prime_factors(m)
    for p in _primes_upto(m):
        jmax = 0
        pj = 1
        while pj * p <= m:
            pj *= p
            jmax += 1
        # local lambda coefficients lambda(p^i) and local u(p^j)
        lam_loc = np.array([lam[p ** i] for i in range(jmax + 1)])
        lp2 = math.log(p) ** 2
        if form.level % p == 0:
            lam_p = table.lambda_of(p)
            u_loc = np.array(
                [0.0] + [lam_p ** j * j * lp2 for j in range(1, jmax + 1)],
                dtype=np.complex128)
        else:
            t = satake_power_sums(table.lambda_of(p), form.xi(p), jmax)
            u_loc = np.array(
                [0.0] + [t[j] * j * lp2 for j in range(1, jmax + 1)],
                dtype=np.complex128)
        w = np.convolve(lam_loc, u_loc)[:jmax + 1]
        for e in range(1, jmax + 1):
            pe = p ** e
            # all r <= m/pe with p not dividing r
            rs = np.arange(1, m // pe + 1)
            rs = rs[rs % p != 0]
            c[pe * rs] += w[e] * lam[rs]
    return DSeriesTable(length=m, c=c, method="euler-local")


def cfaq_coefficients(form: FormDescriptor, table: CoefficientTable,
                      ctx: TwistContext, m: int,
                      base: DSeriesTable | None = None) -> DSeriesTable:
    """Twisted coefficients c_{a,q}(n)."""
    if base is None:
        base = cf_convolution(form, table, m)
    if base.length < m:
        raise ValueError("base D-series table too short")
    q, a = ctx.q, ctx.a
    c = np.zeros(m + 1, dtype=np.complex128)
    if q == 1:
        c[1:m + 1] = base.c[1:m + 1]
        return DSeriesTable(length=m, c=c, method=base.method, a=a, q=q)
    phases = np.array([ctx.additive_phase(n) for n in range(q)])
    ns = np.arange(0, m + 1)
    c[1:] = base.c[1:m + 1] * phases[ns[1:] % q]
    lam = table.lam
    qj, j = q, 1
    while qj <= m:
        rj = ctx.local.r(j)
        if rj != 0.0:
            mult = np.arange(1, m // qj + 1)
            c[qj * mult] -= rj * lam[mult]
        qj *= q
        j += 1
    return DSeriesTable(length=m, c=c, method=base.method, a=a, q=q)
