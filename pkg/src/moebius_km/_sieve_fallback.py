"""NumPy implementations of the block-sieve kernels.

Selected at import time by :mod:`moebius_km.sieve` when the compiled
extension is unavailable.  Both backends share the same contract: ``out``
arrives filled with ones and each kernel multiplies in the prime-power
contributions for every prime whose k-th power fits below the block end.

Only primes p with p**k <= hi can affect a value: exponents below k
contribute a factor 1, so cells are touched only at multiples of p**k,
which keeps the work per block near (hi-lo) * sum_p p**(-k).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def mu_km_block(lo: int, n_cells: int, k: int, m: int, primes, out) -> None:
    """Fill out[i] with mu_{k,m}(lo + i) for i in range(n_cells)."""
    hi = lo + n_cells - 1
    for p in primes.tolist():
        q = p**k
        if q > hi:
            break
        t0 = ((lo + q - 1) // q) * q
        if t0 > hi:
            continue
        offs = np.arange(t0 - lo, n_cells, q, dtype=np.int64)
        pm = p**m
        if pm > hi:
            # exponent is in [k, m) for every hit -> zero band
            out[offs] = 0
            continue
        vals = lo + offs
        exact_m = (vals % pm) == 0
        pm1 = pm * p
        if pm1 <= hi:
            exact_m &= (vals % pm1) != 0
        flip = offs[exact_m]
        out[flip] = -out[flip]
        out[offs[~exact_m]] = 0


def qk_block(lo: int, n_cells: int, k: int, primes, out) -> None:
    """Fill out[i] with the k-free indicator of lo + i."""
    hi = lo + n_cells - 1
    for p in primes.tolist():
        q = p**k
        if q > hi:
            break
        t0 = ((lo + q - 1) // q) * q
        if t0 > hi:
            continue
        out[t0 - lo :: q] = 0
