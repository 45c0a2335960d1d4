"""Dense integer polynomial kernels.

Polynomials are plain lists of Python ints, lowest degree first.  Large
products go through Kronecker substitution, which turns a polynomial
product into one big-integer product.
"""

from __future__ import annotations

_SCHOOLBOOK_CUTOFF = 24


def trim(a: list[int]) -> list[int]:
    """Drop trailing zero coefficients in place and return the list."""
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def _pack(a: list[int], width: int) -> int:
    pos = b"".join((c if c > 0 else 0).to_bytes(width, "little") for c in a)
    neg = b"".join((-c if c < 0 else 0).to_bytes(width, "little") for c in a)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a: list[int], b: list[int]) -> list[int]:
    bits = (
        max(map(abs, a)).bit_length()
        + max(map(abs, b)).bit_length()
        + min(len(a), len(b)).bit_length()
        + 2
    )
    width = (bits + 7) // 8
    n = len(a) + len(b) - 1
    # Adding 2^(8*width-1) to every digit makes all digits nonnegative, so
    # the signed coefficients can be read back from the byte string.
    offset = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * n, "little")
    raw = (_pack(a, width) * _pack(b, width) + offset).to_bytes(n * width, "little")
    half = 1 << (8 * width - 1)
    return [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(n)
    ]


def mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    if len(b) <= _SCHOOLBOOK_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    out[i + j] += ai * bj
        return trim(out)
    return trim(_kronecker(a, b))


def series_inverse(d: list[int], prec: int) -> list[int]:
    """Inverse of the power series ``d`` modulo q^prec; needs d[0] = ±1."""
    if not d or d[0] not in (1, -1):
        raise ValueError("series inverse needs a unit constant term")
    g = [d[0]]
    cur = 1
    while cur < prec:
        cur = min(2 * cur, prec)
        e = [-c for c in mul(d[:cur], g)[:cur]]
        e += [0] * (cur - len(e))
        e[0] += 2
        g = mul(g, e)[:cur]
    return g[:prec]


def divmod_unit(a: list[int], p: list[int], rev_inv: list[int] | None = None) -> tuple[list[int], list[int]]:
    """Quotient and remainder of ``a`` by ``p`` whose leading coefficient is ±1.

    ``rev_inv`` may carry a precomputed inverse of the reversed divisor, at
    least as long as the quotient.
    """
    a = trim(list(a))
    deg_p = len(p) - 1
    if len(a) <= deg_p:
        return [], a
    lq = len(a) - deg_p
    if rev_inv is None or len(rev_inv) < lq:
        rev_inv = series_inverse(p[::-1], lq)
    rq = mul(a[::-1][:lq], rev_inv[:lq])[:lq]
    rq += [0] * (lq - len(rq))
    quo = trim(rq[::-1])
    rem = trim(sub(a, mul(quo, p))[:deg_p])
    return quo, rem


def divmod_general(a: list[int], p: list[int]) -> tuple[list[int], list[int]] | None:
    """Long division over the integers; None if a non-integral quotient digit appears."""
    a = trim(list(a))
    p = trim(list(p))
    lead = p[-1]
    deg_p = len(p) - 1
    if len(a) <= deg_p:
        return [], a
    quo = [0] * (len(a) - deg_p)
    for i in range(len(a) - 1, deg_p - 1, -1):
        c = a[i]
        if c == 0:
            continue
        if c % lead:
            return None
        t = c // lead
        quo[i - deg_p] = t
        for j, pj in enumerate(p):
            a[i - deg_p + j] -= t * pj
    return trim(quo), trim(a[:deg_p])
