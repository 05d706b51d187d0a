"""Shared brute-force oracles.

These deliberately avoid the package's own factorization and sieves:
sympy.factorint supplies factorizations, and the value tables are spelled
out inline, so every comparison is a genuine two-route check.
"""

from __future__ import annotations

import sympy


def oracle_mu_km(n: int, k: int, m: int) -> int:
    v = 1
    for _, e in sympy.factorint(n).items():
        if e < k:
            continue
        if e == m:
            v = -v
        else:
            return 0
    return v


def oracle_qk(n: int, k: int) -> int:
    return int(all(e < k for e in sympy.factorint(n).values()))


def oracle_mu(n: int) -> int:
    fs = sympy.factorint(n)
    if any(e > 1 for e in fs.values()):
        return 0
    return -1 if len(fs) % 2 else 1
