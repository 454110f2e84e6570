"""Modular forms as data: descriptors, exact Fourier coefficients, Hecke checks.

Two forms are built in, both generated offline from eta products:

* ``delta`` -- level 1, weight 12, the discriminant form eta(z)^24;
* ``11a``   -- level 11, weight 2, eta(z)^2 eta(11z)^2.

Integer coefficients a(n) are kept exact; the analytic normalization
lambda(n) = a(n) / n^((k-1)/2) is materialized as floats (complex for
ingested forms with complex coefficients).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .qseries import euler_factor_series, series_dilate, series_mul, series_pow

BUILTIN_ETA_SPECS = {
    "delta": {"weight": 12, "level": 1},
    "11a": {"weight": 2, "level": 11},
}


class Nebentypus:
    """Dirichlet character mod N attached to a form.

    ``kind`` is "trivial" or "kronecker"; values are precomputed on residues
    mod N, with xi(n) = 0 whenever gcd(n, N) > 1.
    """

    def __init__(self, level: int, kind: str = "trivial", disc: int | None = None):
        self.level = level
        self.kind = kind
        self.disc = disc
        vals = []
        for r in range(level):
            if math.gcd(r, level) != 1:
                vals.append(0.0)
            elif kind == "trivial":
                vals.append(1.0)
            elif kind == "kronecker":
                vals.append(float(kronecker_symbol(disc, r)))
            else:
                raise ValueError(f"unsupported nebentypus kind {kind!r}")
        if level == 1:
            vals = [1.0]
        self._values = vals

    def __call__(self, n: int) -> complex:
        return self._values[n % self.level]

    def conjugate(self) -> "Nebentypus":
        # real-valued in v1, so self-conjugate
        return self

    @property
    def label(self) -> str:
        if self.kind == "trivial":
            return "trivial"
        return f"kronecker{self.disc}"


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n >= 0."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        raise ValueError("negative modulus unsupported")
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass
class FormDescriptor:
    """Weight, level, nebentypus and bookkeeping for one primitive form."""

    weight: int
    level: int
    label: str
    nebentypus: Nebentypus
    coefficient_source: str = "builtin-eta"
    is_dual: bool = False
    root_number: complex | None = None

    def __post_init__(self):
        if self.weight < 2:
            raise ValueError(
                "weight 1 forms are not supported (no offline coefficient "
                "source, and the residue at s=0 in the expansion of the "
                "residue sum is not handled)"
            )
        if self.level < 1:
            raise ValueError("level must be >= 1")

    @property
    def mu(self) -> float:
        """Shift (k-1)/2 between arithmetic and analytic normalization."""
        return (self.weight - 1) / 2.0

    def xi(self, n: int) -> complex:
        return self.nebentypus(n)


@dataclass
class CoefficientTable:
    """Exact a(n) for 1 <= n <= length, plus float lambda(n)."""

    length: int
    a: list  # ints for built-in forms, complex for ingested data
    lam: np.ndarray = field(repr=False)  # complex128, index 0 unused

    @classmethod
    def from_integer_coeffs(cls, coeffs: list, weight: int) -> "CoefficientTable":
        m = len(coeffs)
        lam = np.zeros(m + 1, dtype=np.complex128)
        ns = np.arange(1, m + 1, dtype=np.float64)
        lam[1:] = np.asarray(coeffs, dtype=np.complex128) / ns ** ((weight - 1) / 2.0)
        return cls(length=m, a=list(coeffs), lam=lam)

    def lambda_of(self, n: int) -> complex:
        if not 1 <= n <= self.length:
            raise IndexError(
                f"n={n} outside coefficient table; need a table of length >= {n}"
            )
        return complex(self.lam[n])

    def a_of(self, n: int) -> complex:
        if not 1 <= n <= self.length:
            raise IndexError(
                f"n={n} outside coefficient table; need a table of length >= {n}"
            )
        return self.a[n - 1]


def eta_product_coefficients(spec: str, m: int) -> list[int]:
    """a(1..m) of a built-in eta product, exact.

    Both products are expanded from the pentagonal-number series of
    prod (1-q^n) with truncated integer series multiplication.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if spec == "delta":
        e = euler_factor_series(m)
        p24 = series_pow(e, 24, m)
        # f = q * E(q)^24, so a(n) = coefficient of q^(n-1) in E^24
        return p24[:m]
    if spec == "11a":
        e = euler_factor_series(m)
        g = series_mul(e, e, m)
        h = series_dilate(g, 11, m)
        prod = series_mul(g, h, m)
        return prod[:m]
    raise ValueError(f"unknown eta product spec {spec!r}")


_BUILTIN_CACHE: dict[tuple[str, int], tuple[FormDescriptor, CoefficientTable]] = {}


def builtin_form(name: str, m: int = 10000) -> tuple[FormDescriptor, CoefficientTable]:
    """Construct (and cache) one of the built-in forms with m coefficients."""
    if name not in BUILTIN_ETA_SPECS:
        raise ValueError(f"unknown form {name!r}; built-ins: {sorted(BUILTIN_ETA_SPECS)}")
    key = (name, m)
    if key not in _BUILTIN_CACHE:
        info = BUILTIN_ETA_SPECS[name]
        form = FormDescriptor(
            weight=info["weight"],
            level=info["level"],
            label=name,
            nebentypus=Nebentypus(info["level"]),
        )
        coeffs = eta_product_coefficients(name, m)
        table = CoefficientTable.from_integer_coeffs(coeffs, form.weight)
        _BUILTIN_CACHE[key] = (form, table)
    return _BUILTIN_CACHE[key]


def normalized_lambda(form: FormDescriptor, table: CoefficientTable, n: int) -> complex:
    """lambda(n) = a(n) * n^(-(k-1)/2)."""
    return table.lambda_of(n)


def dual_form(form: FormDescriptor, table: CoefficientTable) -> tuple[FormDescriptor, CoefficientTable]:
    """The dual form: conjugated coefficients and nebentypus."""
    a_conj = [x.conjugate() if isinstance(x, complex) else x for x in table.a]
    dual_table = CoefficientTable(
        length=table.length, a=a_conj, lam=np.conj(table.lam)
    )
    dual = FormDescriptor(
        weight=form.weight,
        level=form.level,
        label=form.label,
        nebentypus=form.nebentypus.conjugate(),
        coefficient_source=form.coefficient_source,
        is_dual=not form.is_dual,
        root_number=None
        if form.root_number is None
        else (1.0 / form.root_number),
    )
    return dual, dual_table


def is_self_dual(table: CoefficientTable) -> bool:
    return bool(np.max(np.abs(np.imag(table.lam))) == 0.0)


# --------------------------------------------------------------------------
# sieves and validation

def smallest_prime_factors(m: int) -> np.ndarray:
    spf = np.zeros(m + 1, dtype=np.int64)
    spf[1] = 1
    for p in range(2, m + 1):
        if spf[p] == 0:
            spf[p::p][spf[p::p] == 0] = p
    return spf


def divisor_counts(m: int) -> np.ndarray:
    d = np.zeros(m + 1, dtype=np.int64)
    for i in range(1, m + 1):
        d[i::i] += 1
    return d


@dataclass
class HeckeReport:
    max_mult_dev: float
    max_recurrence_dev: float
    n_mult_checked: int
    n_recurrence_checked: int

    @property
    def max_dev(self) -> float:
        return max(self.max_mult_dev, self.max_recurrence_dev)


def hecke_report(form: FormDescriptor, table: CoefficientTable) -> HeckeReport:
    """Check multiplicativity and prime-power recurrences over the table range.

    lambda(mn) = lambda(m)lambda(n) for coprime m,n, and for p not dividing N
    lambda(p^(r+1)) = lambda(p)lambda(p^r) - xi(p)lambda(p^(r-1)).
    Returns the max relative deviation seen (relative to max(1, |lhs|)).
    """
    m = table.length
    if m < 16:
        raise ValueError("need at least 16 coefficients for a Hecke report")
    lam = table.lam
    spf = smallest_prime_factors(m)
    max_mult = 0.0
    n_mult = 0
    for n in range(2, m + 1):
        p = int(spf[n])
        pe = p
        rest = n // p
        while rest % p == 0:
            pe *= p
            rest //= p
        if rest == 1:
            continue
        lhs = lam[n]
        rhs = lam[pe] * lam[rest]
        dev = abs(lhs - rhs) / max(1.0, abs(lhs))
        if dev > max_mult:
            max_mult = dev
        n_mult += 1
    max_rec = 0.0
    n_rec = 0
    for p in range(2, m + 1):
        if spf[p] != p:
            continue
        if form.level % p == 0:
            continue
        xi_p = form.xi(p)
        pr = p  # p^r
        r = 1
        while pr * p <= m:
            prev = lam[pr // p] if r >= 1 else 1.0
            lhs = lam[pr * p]
            rhs = lam[p] * lam[pr] - xi_p * prev
            dev = abs(lhs - rhs) / max(1.0, abs(lhs))
            if dev > max_rec:
                max_rec = dev
            n_rec += 1
            pr *= p
            r += 1
    return HeckeReport(max_mult, max_rec, n_mult, n_rec)


def ramanujan_violations(table: CoefficientTable, tol: float = 1e-12) -> list[int]:
    """Indices n with |lambda(n)| > d(n) beyond tolerance."""
    m = table.length
    d = divisor_counts(m)
    bad = []
    for n in range(1, m + 1):
        if abs(table.lam[n]) > d[n] * (1.0 + tol):
            bad.append(n)
    return bad


# --------------------------------------------------------------------------
# coefficient file format
#
# header:  [tag] k N chi_label M      (tag optional, e.g. "c" for D-series)
# then M lines:  n  re  im

def save_coefficient_file(path, form: FormDescriptor, values, tag: str | None = None):
    n_rows = len(values)
    head = f"{form.weight} {form.level} {form.nebentypus.label} {n_rows}"
    if tag:
        head = f"{tag} {head}"
    lines = [head]
    for i, v in enumerate(values, start=1):
        c = complex(v)
        lines.append(f"{i} {c.real!r} {c.imag!r}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_coefficient_file(path):
    """Returns (tag, weight, level, chi_label, values)."""
    with open(path) as fh:
        head = fh.readline().split()
        if len(head) == 5:
            tag, k, n, chi, m = head[0], int(head[1]), int(head[2]), head[3], int(head[4])
        elif len(head) == 4:
            tag, k, n, chi, m = None, int(head[0]), int(head[1]), head[2], int(head[3])
        else:
            raise ValueError(f"malformed coefficient file header: {head}")
        values = []
        for _ in range(m):
            parts = fh.readline().split()
            if len(parts) != 3:
                raise ValueError("malformed coefficient file row")
            values.append(complex(float(parts[1]), float(parts[2])))
    return tag, k, n, chi, values


def exp2pi_rational(num: int, den: int) -> complex:
    """e(num/den) with the angle reduced exactly in the integers."""
    num %= den
    return cmath.exp(2j * cmath.pi * (num / den))
