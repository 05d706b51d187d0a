"""Segmented sieves streaming mu_{k,m} and k-free values in bounded memory.

A compiled kernel module is preferred when the extension built; otherwise a
NumPy fallback with identical semantics is used.  Either way the public
operations are deterministic: segments are reduced in ascending order and
all arithmetic is exact integer arithmetic, so results do not depend on the
segment size or the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arith import as_factored
from .functions import OrderPair, as_order
from .primes import iroot, primes_up_to

try:
    from . import _sieve_kernels as _compiled
except ImportError:  # extension not built
    _compiled = None
from . import _sieve_fallback as _fallback

MAX_RANGE = 1 << 62

# Coarse per-cell working-set estimates (bytes) used for the memory report:
# the compiled kernel touches only the int8 output row; the NumPy kernel
# additionally materializes sparse int64 offset/value temporaries whose peak
# is bounded by a few times n_cells/2**k * 8 bytes, rounded up generously.
_BYTES_PER_CELL = {"compiled": 1.0, "python": 8.0}
_REDUCER_BYTES_PER_CELL = 8  # one int64 cumsum row for checkpoint segments


def available_backends() -> tuple[str, ...]:
    """Names of the kernel backends importable in this process."""
    return ("compiled", "python") if _compiled is not None else ("python",)


def default_backend() -> str:
    return "compiled" if _compiled is not None else "python"


def _impl(backend: str | None):
    if backend is None:
        backend = default_backend()
    if backend == "compiled":
        if _compiled is None:
            raise ValueError("compiled backend requested but extension not built")
        return _compiled
    if backend == "python":
        return _fallback
    raise ValueError(f"unknown backend {backend!r}")


def default_worker_count() -> int:
    """Worker count from MOEBIUS_WORKERS, defaulting to 1."""
    raw = os.environ.get("MOEBIUS_WORKERS")
    if raw is None:
        return 1
    count = int(raw)
    if count < 1:
        raise ValueError("MOEBIUS_WORKERS must be a positive integer")
    return count


@dataclass(frozen=True)
class SieveConfig:
    """Segment size and worker count for streaming passes."""

    segment_size: int = 1 << 20
    worker_count: int = field(default_factory=default_worker_count)

    def __post_init__(self) -> None:
        if self.segment_size < 64:
            raise ValueError("segment_size must be >= 64")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")


@dataclass(frozen=True)
class SieveBlock:
    """One contiguous block of pointwise function values.

    values[i] is the function at lo + i; dtype is int8 with entries in
    {-1, 0, 1}.
    """

    lo: int
    hi: int
    values: np.ndarray


def segment_memory_estimate(config: SieveConfig, backend: str | None = None) -> int:
    """Upper estimate (bytes) of the peak sieve working set for a config.

    Counts the per-worker block rows plus one reducer cumsum row; the
    estimate is independent of the range being streamed.
    """
    if backend is None:
        backend = default_backend()
    per_cell = _BYTES_PER_CELL[backend]
    return int(
        config.worker_count * config.segment_size * per_cell
        + config.segment_size * _REDUCER_BYTES_PER_CELL
    )


def _validate_range(lo: int, hi: int) -> None:
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    if hi > MAX_RANGE:
        raise ValueError("hi exceeds supported range 2**62")


def _mu_km_segment(lo: int, n_cells: int, order: OrderPair, primes, impl) -> np.ndarray:
    out = np.ones(n_cells, dtype=np.int8)
    impl.mu_km_block(lo, n_cells, order.k, order.m, primes, out)
    return out


def sieve_mu_km(
    lo: int,
    hi: int,
    order: OrderPair | tuple[int, int],
    config: SieveConfig | None = None,
    backend: str | None = None,
) -> SieveBlock:
    """Exact mu_{k,m} values over [lo, hi] as one block.

    The block length is capped by config.segment_size; use
    :func:`stream_sum` for longer ranges.
    """
    o = as_order(order)
    cfg = config or SieveConfig()
    _validate_range(lo, hi)
    n_cells = hi - lo + 1
    if n_cells > cfg.segment_size:
        raise ValueError(
            f"block length {n_cells} exceeds segment_size {cfg.segment_size}"
        )
    primes = primes_up_to(iroot(hi, o.k))
    out = _mu_km_segment(lo, n_cells, o, primes, _impl(backend))
    return SieveBlock(lo, hi, out)


def sieve_qk(
    lo: int,
    hi: int,
    k: int,
    config: SieveConfig | None = None,
    backend: str | None = None,
) -> SieveBlock:
    """k-free indicator values over [lo, hi] as one block."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    cfg = config or SieveConfig()
    _validate_range(lo, hi)
    n_cells = hi - lo + 1
    if n_cells > cfg.segment_size:
        raise ValueError(
            f"block length {n_cells} exceeds segment_size {cfg.segment_size}"
        )
    primes = primes_up_to(iroot(hi, k))
    out = np.ones(n_cells, dtype=np.int8)
    _impl(backend).qk_block(lo, n_cells, k, primes, out)
    return SieveBlock(lo, hi, out)


def _mask_non_coprime(block: np.ndarray, seg_lo: int, coprime_primes: list[int]) -> None:
    # Zero the cells sharing a factor with the filter modulus.  Stepping the
    # distinct primes of the modulus is exact: gcd > 1 iff some prime hits.
    for p in coprime_primes:
        start = ((seg_lo + p - 1) // p) * p - seg_lo
        if start < len(block):
            block[start::p] = 0


def stream_sum(
    x: int,
    order: OrderPair | tuple[int, int],
    coprime_to: int = 1,
    checkpoints: list[int] | None = None,
    config: SieveConfig | None = None,
    backend: str | None = None,
) -> list[tuple[int, int]]:
    """Partial sums of mu_{k,m} over r <= checkpoint with gcd(r, coprime_to) = 1.

    One streaming pass over [1, x]; returns (checkpoint, sum) pairs in input
    order.  Checkpoints must be ascending (duplicates allowed) and <= x.
    The result is exact and identical for every segment size and worker
    count.
    """
    o = as_order(order)
    cfg = config or SieveConfig()
    _validate_range(1, x)
    if coprime_to < 1:
        raise ValueError("coprime_to must be >= 1")
    cps = [x] if checkpoints is None else list(checkpoints)
    if not cps:
        raise ValueError("checkpoints must be non-empty")
    for a, b in zip(cps, cps[1:]):
        if b < a:
            raise ValueError("checkpoints must be ascending")
    if cps[0] < 1 or cps[-1] > x:
        raise ValueError("checkpoints must lie in [1, x]")

    impl = _impl(backend)
    primes = primes_up_to(iroot(x, o.k))
    coprime_primes = [p for p, _ in as_factored(coprime_to).factors]

    seg = cfg.segment_size
    seg_bounds = [(lo, min(lo + seg - 1, x)) for lo in range(1, x + 1, seg)]

    # Map checkpoints to their segment index (they are ascending).
    cps_by_seg: dict[int, list[int]] = {}
    for c in cps:
        cps_by_seg.setdefault((c - 1) // seg, []).append(c)

    def segment_result(bounds: tuple[int, int]):
        seg_lo, seg_hi = bounds
        n_cells = seg_hi - seg_lo + 1
        block = _mu_km_segment(seg_lo, n_cells, o, primes, impl)
        _mask_non_coprime(block, seg_lo, coprime_primes)
        seg_index = (seg_lo - 1) // seg
        local_cps = cps_by_seg.get(seg_index)
        if local_cps is None:
            return int(block.sum(dtype=np.int64)), None
        cum = np.cumsum(block, dtype=np.int64)
        partials = [(c, int(cum[c - seg_lo])) for c in local_cps]
        return int(cum[-1]), partials

    results: list[tuple[int, int]] = []
    running = 0
    if cfg.worker_count == 1:
        produced = map(segment_result, seg_bounds)
    else:
        pool = ThreadPoolExecutor(max_workers=cfg.worker_count)
        produced = pool.map(segment_result, seg_bounds)
    try:
        for total, partials in produced:
            if partials is not None:
                results.extend((c, running + s) for c, s in partials)
            running += total
    finally:
        if cfg.worker_count > 1:
            pool.shutdown(wait=True)
    return results
