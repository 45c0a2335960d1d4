"""Independent closed sum for the 4_1 invariant.

The invariant of the figure-eight diagram reduces to a seven-fold sum of
products of four V-symbols.  It depends only on j - i, and the color n
enters only through a power of zeta, so one pass over (Z/N)^7 per
difference j - i yields every color at once.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..algebra.cyclotensor import CycloTensor
from ..algebra.cyclotomic import CyclotomicNumber
from ..rmatrix import v_symbol
from .contract import InvariantMatrix


@lru_cache(maxsize=16)
def _buckets_41(N: int) -> tuple[tuple[CyclotomicNumber, ...], ...]:
    """buckets[d][e] = sum of V-products whose zeta-exponent, over n + 1, is e mod N, for j - i = d."""
    zero = CyclotomicNumber.zero(N)
    out = []
    rng = range(N)
    for diff in rng:
        acc = [zero] * N
        for k3, k7, k2 in itertools.product(rng, repeat=3):
            a = v_symbol(0, k3, k7, k2, N, conjugate=True)
            if a.is_zero():
                continue
            for k6, k4 in itertools.product(rng, repeat=2):
                b = v_symbol(0, k4, k7 - k6, k3 - k6 - 1, N)
                if b.is_zero():
                    continue
                ab = a * b
                for k1, k5 in itertools.product(rng, repeat=2):
                    c = v_symbol(0, k5, k2 + k1 - k6, k4 + k1 - 1, N, conjugate=True)
                    if c.is_zero():
                        continue
                    d = v_symbol(0, k1, diff - k6 + k1, k5, N)
                    if d.is_zero():
                        continue
                    e = (diff + 2 * k1 + k2 - k3 + k4 - k5 - k7) % N
                    acc[e] = acc[e] + ab * c * d
        out.append(tuple(acc))
    return tuple(out)


def naive_sum_41(N: int, n: int) -> InvariantMatrix:
    """<4_1>_{N,n} from the seven-fold sum."""
    if N < 1:
        raise ValueError("N must be at least 1")
    buckets = _buckets_41(N)
    z = CyclotomicNumber.zeta(N)
    by_diff = []
    for diff in range(N):
        total = CyclotomicNumber.zero(N)
        for e, v in enumerate(buckets[diff]):
            if not v.is_zero():
                total = total + v * z ** (e * (n + 1))
        by_diff.append(total)
    return InvariantMatrix(N, n, "4_1", CycloTensor.from_entries(N, (N, N), lambda i, j: by_diff[(j - i) % N]))
