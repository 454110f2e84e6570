"""Exact truncated integer power series arithmetic.

Everything here works on plain Python lists of ints indexed by exponent,
series truncated to a fixed length M (degree < M).  Multiplication uses
Kronecker substitution: pack coefficients into one big integer with a slot
width wide enough that convolution coefficients cannot collide, multiply,
unpack.  CPython's subquadratic integer multiplication then does the heavy
lifting, which keeps full 10^4-term eta expansions well under a second.
"""

from __future__ import annotations


def euler_factor_series(m: int) -> list[int]:
    """prod_{n>=1} (1 - q^n) to length m, by Euler's pentagonal theorem."""
    out = [0] * m
    if m > 0:
        out[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 >= m and g2 >= m:
            break
        s = -1 if j % 2 else 1
        if g1 < m:
            out[g1] += s
        if g2 < m:
            out[g2] += s
        j += 1
    return out


def jacobi_cube_series(m: int) -> list[int]:
    """prod_{n>=1} (1 - q^n)^3 to length m, by Jacobi's identity."""
    out = [0] * m
    j = 0
    while True:
        e = j * (j + 1) // 2
        if e >= m:
            break
        out[e] += (2 * j + 1) * (-1 if j % 2 else 1)
        j += 1
    return out


def series_mul(a: list[int], b: list[int], m: int) -> list[int]:
    """Truncated product of two integer series, exact."""
    la = min(len(a), m)
    lb = min(len(b), m)
    amax = max((abs(x) for x in a[:la]), default=0)
    bmax = max((abs(x) for x in b[:lb]), default=0)
    if amax == 0 or bmax == 0:
        return [0] * m
    # slot width: products sum over at most min(la, lb) terms
    w = (min(la, lb) * amax * bmax).bit_length() + 2
    w = ((w + 7) // 8) * 8
    wb = w // 8
    big_a = _encode(a[:la], wb)
    big_b = _encode(b[:lb], wb)
    prod = big_a * big_b
    return _decode(prod, w, wb, la + lb, m)


def _encode(coeffs: list[int], wb: int) -> int:
    pos = bytearray(len(coeffs) * wb)
    neg = bytearray(len(coeffs) * wb)
    for i, x in enumerate(coeffs):
        if x > 0:
            pos[i * wb:(i + 1) * wb] = x.to_bytes(wb, "little")
        elif x < 0:
            neg[i * wb:(i + 1) * wb] = (-x).to_bytes(wb, "little")
    return int.from_bytes(bytes(pos), "little") - int.from_bytes(bytes(neg), "little")


def _decode(big: int, w: int, wb: int, nslots: int, m: int) -> list[int]:
    # shift every slot by 2^(w-1) so the packed integer is nonnegative and
    # slots decode independently; |true coefficient| < 2^(w-1) by the width
    # choice in series_mul
    half = 1 << (w - 1)
    offset = half * ((1 << (w * nslots)) - 1) // ((1 << w) - 1)
    shifted = big + offset
    if shifted < 0:
        raise OverflowError("Kronecker slot width too small")
    raw = shifted.to_bytes(nslots * wb + 8, "little")
    out = []
    for i in range(min(nslots, m)):
        d = int.from_bytes(raw[i * wb:(i + 1) * wb], "little") - half
        out.append(d)
    out.extend([0] * (m - len(out)))
    return out[:m]


def series_pow(a: list[int], e: int, m: int) -> list[int]:
    """a**e truncated to length m (binary powering)."""
    if e < 0:
        raise ValueError("negative exponent")
    result = [0] * m
    if m > 0:
        result[0] = 1
    base = list(a[:m]) + [0] * max(0, m - len(a))
    while e:
        if e & 1:
            result = series_mul(result, base, m)
        e >>= 1
        if e:
            base = series_mul(base, base, m)
    return result


def series_dilate(a: list[int], d: int, m: int) -> list[int]:
    """a(q^d) truncated to length m."""
    out = [0] * m
    for i, x in enumerate(a):
        j = i * d
        if j >= m:
            break
        out[j] = x
    return out
