"""Scalar special functions in double precision.

Complex log-gamma (Lanczos), the archimedean factor 2 (2 pi)^-s Gamma(s),
trigamma by recurrence lift plus Bernoulli tail, principal-branch powers of
y - i alpha, and the upper incomplete gamma function for complex order and
positive real argument.  Error budgets here are what the evaluation engine
inherits, so each routine is tested against a high-precision oracle.
"""

from __future__ import annotations

import cmath
import math

HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
LOG_2PI = math.log(2.0 * math.pi)

# Lanczos, g = 7, 9 terms
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_NONPOS_INT_TOL = 1e-12


def _is_nonpositive_integer(s: complex) -> bool:
    if abs(s.imag) > _NONPOS_INT_TOL:
        return False
    r = round(s.real)
    return r <= 0 and abs(s.real - r) <= _NONPOS_INT_TOL * max(1.0, abs(r))


def log_gamma(s: complex) -> complex:
    """Principal branch of log Gamma(s), Lanczos approximation."""
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise ValueError(f"Gamma pole at s = {s}")
    if s.real < 0.5:
        # reflection; keep the branch continuous through log(sin)
        return (
            math.log(math.pi)
            - _log_sin_pi(s)
            - log_gamma(1.0 - s)
        )
    z = s - 1.0
    x = _LANCZOS_C[0]
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        x += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def _log_sin_pi(s: complex) -> complex:
    """log(sin(pi s)) evaluated without overflow for large |Im s|."""
    # sin(pi s) = (e^{i pi s} - e^{-i pi s}) / 2i
    if s.imag > 0:
        # factor e^{-i pi s}: sin = e^{i pi s}(1 - e^{-2 i pi s})/(2i) flipped
        return (
            -1j * cmath.pi * s
            + cmath.log((cmath.exp(2j * cmath.pi * s) - 1.0) / 2j)
        )
    return (
        1j * cmath.pi * s
        + cmath.log((1.0 - cmath.exp(-2j * cmath.pi * s)) / 2j)
    )


def complex_gamma(s: complex) -> complex:
    return cmath.exp(log_gamma(s))


def gamma_C(s: complex) -> complex:
    """2 (2 pi)^-s Gamma(s); relative accuracy follows the Lanczos kernel."""
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise ValueError(f"gamma_C pole at s = {s}")
    return cmath.exp(math.log(2.0) - s * LOG_2PI + log_gamma(s))


# Bernoulli numbers B_2..B_16
_BERNOULLI = (
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
)


def trigamma(s: complex) -> complex:
    """psi'(s) by the recurrence psi'(s) = psi'(s+1) + 1/s^2 lifted into
    the asymptotic region, then the Bernoulli tail."""
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise ValueError(f"trigamma pole at s = {s}")
    acc = 0.0 + 0.0j
    z = s
    while z.real < 10.0:
        acc += 1.0 / (z * z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    tail = inv + 0.5 * inv2
    term = inv2 * inv
    for b in _BERNOULLI:
        tail += b * term
        term *= inv2
    return acc + tail


def principal_power(y: float, alpha: float, w: complex) -> complex:
    """(y - i alpha)^w on the principal branch, via atan2."""
    if y <= 0.0:
        raise ValueError("principal_power requires y > 0")
    if alpha == 0.0:
        raise ValueError("principal_power requires alpha != 0")
    lg = complex(0.5 * math.log(y * y + alpha * alpha), math.atan2(-alpha, y))
    return cmath.exp(w * lg)


def upper_incomplete_gamma(s: complex, x: float) -> complex:
    """Gamma(s, x) for x > 0: power series below the turning point, Lentz
    continued fraction above it, asymptotic expansion deep in the region
    where both would struggle but the value is negligible anyway."""
    s = complex(s)
    if x < 0.0:
        raise ValueError("x must be >= 0")
    if x == 0.0:
        if s.real <= 0.0:
            raise ValueError("Gamma(s, 0) only defined for Re s > 0")
        return complex_gamma(s)
    mag = abs(s)
    if x >= 1.25 * (mag + 1.0) or (mag <= 25.0 and x >= mag + 2.0):
        return _upper_gamma_cf(s, x)
    return _upper_gamma_series(s, x)


def _upper_gamma_series(s: complex, x: float) -> complex:
    # gamma(s,x) = x^s e^-x sum_m x^m / (s (s+1) ... (s+m))
    if _is_nonpositive_integer(s):
        raise ValueError(f"series branch of Gamma(s, x) breaks at s = {s}")
    term = 1.0 / s
    total = term
    m = 0
    while m < 10000:
        m += 1
        term *= x / (s + m)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    else:
        raise ArithmeticError("incomplete gamma series did not converge")
    lower = cmath.exp(s * math.log(x) - x) * total
    return complex_gamma(s) - lower


def _upper_gamma_cf(s: complex, x: float) -> complex:
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    for i in range(1, 20000):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if d == 0:
            d = tiny
        c = b + an / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return cmath.exp(s * math.log(x) - x) * h
    raise ArithmeticError("incomplete gamma continued fraction stalled")


def _upper_gamma_series(s: complex, x: float) -> complex:
    # gamma(s,x) = x^s e^-x sum_m x^m / (s (s+1) ... (s+m)); convergent for
    # every x, with slow transient growth only when x approaches |s| from
    # above, which the branch cut in upper_incomplete_gamma keeps mild.
    if _is_nonpositive_integer(s):
        raise ValueError(f"series branch of Gamma(s, x) breaks at s = {s}")
    term = 1.0 / s
    total = term
    m = 0
    while m < 10000:
        m += 1
        term *= x / (s + m)
        total += term
        if abs(term) < 1e-18 * abs(total) and m > x - s.real:
            break
    else:
        raise ArithmeticError("incomplete gamma series did not converge")
    lower = cmath.exp(s * math.log(x) - x) * total
    return complex_gamma(s) - lower
