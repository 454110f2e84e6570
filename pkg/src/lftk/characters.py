"""Dirichlet characters mod prime q, Gauss sums, local factors, twist indices.

The modulus set is Q(N) = {1} union {primes q not dividing N}.  Characters
are enumerated through a primitive root g: chi_j(g^t) = e(jt/(q-1)), with
j = 0 the trivial character.  Gauss sums are direct q-term sums.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .forms import CoefficientTable, FormDescriptor, exp2pi_rational


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primitive_root(q: int) -> int:
    """Smallest primitive root mod prime q, by trial."""
    if q == 2:
        return 1
    phi = q - 1
    fac = _factorize(phi)
    for g in range(2, q):
        if all(pow(g, phi // p, q) != 1 for p in fac):
            return g
    raise ArithmeticError(f"no primitive root found mod {q}")


def _factorize(n: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def euler_phi(n: int) -> int:
    out = n
    for p in _factorize(n):
        out -= out // p
    return out


@dataclass
class CharacterTable:
    """All Dirichlet characters mod q (q = 1 or prime)."""

    q: int
    generator: int | None
    values: np.ndarray = field(repr=False)  # shape (q-1, q): values[j][n]
    gauss: np.ndarray = field(repr=False)   # tau(chi_j), j = 0..q-2

    @property
    def n_chars(self) -> int:
        return max(1, self.q - 1)

    def chi(self, j: int, n: int) -> complex:
        if self.q == 1:
            return 1.0 + 0.0j
        return complex(self.values[j % (self.q - 1), n % self.q])

    def chi_values(self, j: int) -> np.ndarray:
        return self.values[j % (self.q - 1)]

    def conj_index(self, j: int) -> int:
        if self.q == 1:
            return 0
        return (-j) % (self.q - 1)

    def is_trivial(self, j: int) -> bool:
        return self.q == 1 or j % (self.q - 1) == 0

    def parity(self, j: int) -> complex:
        """chi_j(-1)."""
        return self.chi(j, self.q - 1) if self.q > 1 else 1.0 + 0.0j

    def nontrivial_indices(self) -> list[int]:
        return list(range(1, self.q - 1)) if self.q > 1 else []


def build_characters(q: int, level: int | None = None) -> CharacterTable:
    """Enumerate characters mod q with Gauss sums; q must lie in Q(N)."""
    if q == 1:
        return CharacterTable(q=1, generator=None,
                              values=np.ones((1, 1), dtype=np.complex128),
                              gauss=np.zeros(0, dtype=np.complex128))
    if not is_prime(q):
        raise ValueError(f"q={q} is not in Q(N): must be 1 or prime")
    if level is not None and level % q == 0:
        raise ValueError(f"q={q} divides the level {level}, outside Q(N)")
    g = primitive_root(q)
    order = q - 1
    # discrete logs: dlog[g^t mod q] = t
    dlog = np.zeros(q, dtype=np.int64)
    acc = 1
    for t in range(order):
        dlog[acc] = t
        acc = (acc * g) % q
    values = np.zeros((order, q), dtype=np.complex128)
    root = np.array([exp2pi_rational(t, order) for t in range(order)])
    for j in range(order):
        for n in range(1, q):
            values[j, n] = root[(j * dlog[n]) % order]
    e_nq = np.array([exp2pi_rational(n, q) for n in range(q)])
    gauss = values[:, :] @ e_nq
    return CharacterTable(q=q, generator=g, values=values, gauss=gauss)


@dataclass
class LocalFactorData:
    """P(x) = 1 - lambda(q) x + xi(q) x^2 and the Taylor data of R(x).

    R(x) = (q log^2 q / (q-1)) * x(lambda(q) - 4 xi(q) x + lambda(q) xi(q) x^2) / P(x)
    with R == 0 for q = 1.
    """

    q: int
    lam_q: complex
    xi_q: complex
    r_taylor: np.ndarray = field(repr=False)  # r(0..J), r(0)=0

    def P(self, x: complex) -> complex:
        if self.q == 1:
            return 1.0 + 0.0j
        return 1.0 - self.lam_q * x + self.xi_q * x * x

    def R(self, x: complex) -> complex:
        if self.q == 1:
            return 0.0 + 0.0j
        scale = self.q * math.log(self.q) ** 2 / (self.q - 1)
        num = x * (self.lam_q - 4.0 * self.xi_q * x + self.lam_q * self.xi_q * x * x)
        return scale * num / self.P(x)

    def r(self, j: int) -> complex:
        if j < 0:
            raise IndexError("negative Taylor index")
        if self.q == 1 or j >= len(self.r_taylor):
            return 0.0 + 0.0j
        return complex(self.r_taylor[j])

    @property
    def j_max(self) -> int:
        return len(self.r_taylor) - 1


def local_factor(form: FormDescriptor, table: CoefficientTable, q: int,
                 j_max: int = 200) -> LocalFactorData:
    """P and R data at q in Q(N); for q = 1 returns P = 1, R = 0."""
    if q == 1:
        return LocalFactorData(q=1, lam_q=1.0, xi_q=1.0,
                               r_taylor=np.zeros(1, dtype=np.complex128))
    if not is_prime(q) or form.level % q == 0:
        raise ValueError(f"q={q} is not in Q(N) for level {form.level}")
    lam_q = table.lambda_of(q)
    xi_q = form.xi(q)
    scale = q * math.log(q) ** 2 / (q - 1)
    # Taylor division: numerator n1 x + n2 x^2 + n3 x^3 over 1 - lam x + xi x^2
    num = {1: lam_q, 2: -4.0 * xi_q, 3: lam_q * xi_q}
    r = np.zeros(j_max + 1, dtype=np.complex128)
    for j in range(1, j_max + 1):
        val = scale * num.get(j, 0.0) + lam_q * r[j - 1]
        if j >= 2:
            val -= xi_q * r[j - 2]
        r[j] = val
    return LocalFactorData(q=q, lam_q=lam_q, xi_q=xi_q, r_taylor=r)


def r_subseries(local: LocalFactorData, modulus: int, t: int, x: complex) -> complex:
    """Sum of r(j) x^j over j = t (mod modulus), via roots of unity.

    Requires |x| < 1/sqrt(q) so that every rotated evaluation point is well
    inside the convergence disk of R's Taylor series.
    """
    if local.q == 1:
        return 0.0 + 0.0j
    if abs(x) >= 1.0 / math.sqrt(local.q):
        raise ValueError(
            f"|x|={abs(x):.4g} >= 1/sqrt(q); subseries not convergent-safe"
        )
    total = 0.0 + 0.0j
    for ell in range(1, modulus + 1):
        w = exp2pi_rational(ell, modulus)
        total += exp2pi_rational(-ell * t, modulus) * local.R(w * x)
    return total / modulus


def modinv(a: int, m: int) -> int:
    if m == 1:
        return 0
    g, x = _egcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} not invertible mod {m}")
    return x % m


def _egcd(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
    return old_r, old_s


@dataclass
class TwistContext:
    """One (form, a, q) twist with its character group and local data.

    ``na_inv`` is the inverse of N*a mod q and ``dual_residue`` the residue
    -na_inv mod q appearing on the reflected side of functional equations.
    The optional (p, a_prime) fields carry the companion-prime arithmetic
    with p*q = -1 (mod N*a) and a' = -(1 + p*q)/(N*a).
    """

    form: FormDescriptor
    table: CoefficientTable
    a: int
    q: int
    chars: CharacterTable
    local: LocalFactorData
    na_inv: int
    dual_residue: int
    p: int | None = None
    a_prime: int | None = None

    @property
    def phi_na(self) -> int:
        return euler_phi(abs(self.form.level * self.a))

    def additive_phase(self, n: int) -> complex:
        """e(a n / q)."""
        if self.q == 1:
            return 1.0 + 0.0j
        return exp2pi_rational(self.a * n, self.q)


def make_context(form: FormDescriptor, table: CoefficientTable, a: int, q: int,
                 j_max: int = 200) -> TwistContext:
    if q < 1:
        raise ValueError("q must be >= 1")
    if math.gcd(a, q) != 1:
        raise ValueError(f"gcd(a,q) = {math.gcd(a, q)} != 1")
    chars = build_characters(q, level=form.level)
    local = local_factor(form, table, q, j_max=j_max)
    na = form.level * a
    na_inv = modinv(na % q if q > 1 else 0, q) if q > 1 else 0
    dual_residue = (-na_inv) % q if q > 1 else 1
    return TwistContext(form=form, table=table, a=a, q=q, chars=chars,
                        local=local, na_inv=na_inv, dual_residue=dual_residue)


def twist_indices(form: FormDescriptor, table: CoefficientTable,
                  a: int, p: int, q: int) -> TwistContext:
    """Context for the companion-prime construction p*q = -1 mod N*a."""
    for r in (p, q):
        if not is_prime(r) or form.level % r == 0:
            raise ValueError(f"{r} must be a prime not dividing the level")
    na = form.level * a
    if (p * q + 1) % na != 0:
        raise ValueError(f"p*q = {p*q} is not = -1 (mod N*a = {na})")
    ctx = make_context(form, table, a, q)
    ctx.p = p
    ctx.a_prime = -(1 + p * q) // na
    return ctx
