"""Shared prime table and integer root helpers.

The prime table is grown lazily by a classic Eratosthenes sieve and cached
at module level.  Growth is guarded by a lock and swapped in as one atomic
state tuple, so concurrent callers always observe a consistent table.
"""

from __future__ import annotations

import threading

import numpy as np

_PRIME_TABLE_CAP = 1 << 26

_lock = threading.Lock()
# (sieved_to, primes_array, primes_pylist) — replaced wholesale, never mutated.
_state: tuple[int, np.ndarray, list[int]] = (0, np.empty(0, dtype=np.int64), [])


def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


def _grown_to(limit: int) -> tuple[int, np.ndarray, list[int]]:
    global _state
    state = _state
    if limit > state[0]:
        with _lock:
            state = _state
            if limit > state[0]:
                target = min(max(limit, 2 * state[0], 1 << 16), _PRIME_TABLE_CAP)
                arr = _sieve(target)
                state = (target, arr, arr.tolist())
                _state = state
    return state


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (ascending).

    The returned array is a view into the shared cache; do not mutate it.
    """
    if limit > _PRIME_TABLE_CAP:
        raise ValueError(f"prime table limit {limit} exceeds cap {_PRIME_TABLE_CAP}")
    sieved_to, arr, _ = _grown_to(limit)
    if limit >= sieved_to:
        return arr
    cut = np.searchsorted(arr, limit, side="right")
    return arr[:cut]


def prime_list_up_to(limit: int) -> list[int]:
    """Same primes as :func:`primes_up_to` but as a Python list (faster to iterate)."""
    if limit > _PRIME_TABLE_CAP:
        raise ValueError(f"prime table limit {limit} exceeds cap {_PRIME_TABLE_CAP}")
    sieved_to, _, lst = _grown_to(limit)
    if limit >= sieved_to:
        return lst
    import bisect

    return lst[: bisect.bisect_right(lst, limit)]


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n, computed in integer arithmetic.

    A float seed is corrected by neighbour checks, so the result is exact
    for every n >= 0 (no float-pow boundary drift).
    """
    if n < 0 or k < 1:
        raise ValueError("iroot requires n >= 0 and k >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    r = int(round(n ** (1.0 / k)))
    if r < 1:
        r = 1
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r
