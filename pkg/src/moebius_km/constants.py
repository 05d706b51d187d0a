"""Numerical constants with rigorous truncation bounds.

Three families are produced: the zeta values zeta(k), the order-k density
constant A_k = prod_p (1 - 2/p^k + 1/p^(k+1)), and the family density
alpha_{k,m} = prod_p (1 - 1/(p^(m-k+1) + ... + p^m)) together with its
finite companion alpha_{k,m}(n).  Every float estimate carries a tail_bound
that provably dominates |true - value| (up to float rounding, which the
bound dwarfs by construction).

Tail handling, documented here because the bound choice is load-bearing:

* zeta(k): partial sum to N plus the midpoint of the bracketing integrals
  int_N and int_{N+1} of t**-k; the half-width of that bracket is the
  bound.  This keeps desk tolerances (1e-12) reachable with ~1e6 terms.
* products at prime_limit >= 1000: the truncated log-product is corrected by
  the leading terms of sum_{p>P} log(factor_p), expanded exactly into prime
  power sums sum_{p>P} p^-s.  Those are evaluated as prime_zeta(s) minus
  the partial sum over p <= P, with prime_zeta from its Moebius-weighted
  log-zeta series.  The bound collects the series truncations, the
  second-order remainder (<= 0.6 * sum_{p>P} p^-2s), and float slack, then
  is floored at 1e-10 so it never understates accumulated rounding.
* products at prime_limit < 1000 stay plain truncated products with the
  loose elementary bound 2 * sum_{n>P} n^-m (factor-sum form), so tiny
  prime limits return the literal few-factor product.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import FactoredInteger, as_factored
from .functions import OrderPair, as_order, mu
from .primes import primes_up_to

DEFAULT_PRIME_LIMIT = 1_000_000
DEFAULT_TOL = 1e-12

_ZETA_N_CAP = 1 << 26
_MIN_TOL = 1e-13
_SMAX = 54  # power sums with exponent above this fall below 2**-54 termwise
_CORRECTION_MIN_P = 1000
_TAIL_FLOOR = 1e-10


class PrecisionError(ArithmeticError):
    """Requested tolerance cannot be certified by this implementation."""


@dataclass(frozen=True)
class ConstantEstimate:
    """Float approximation of an infinite series/product plus a proven bound.

    ``prime_limit`` records the truncation cutoff (series length for zeta,
    largest sieved prime for the products).
    """

    value: float
    tail_bound: float
    prime_limit: int


def default_prime_limit() -> int:
    raw = os.environ.get("MOEBIUS_PRIME_LIMIT")
    if raw is None:
        return DEFAULT_PRIME_LIMIT
    limit = int(raw)
    if limit < 2:
        raise ValueError("MOEBIUS_PRIME_LIMIT must be >= 2")
    return limit


def _integral_tail(t: int, k: int) -> float:
    # int_t^inf u**-k du
    return float(t) ** (1 - k) / (k - 1)


def zeta(k: int, tol: float) -> ConstantEstimate:
    """zeta(k) for integer k >= 2 with certified error at most tol."""
    if k < 2:
        raise ValueError(f"zeta requires k >= 2, got {k}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if tol < _MIN_TOL:
        raise PrecisionError(f"tolerance {tol} below float-certifiable floor {_MIN_TOL}")
    n_terms = 64
    while (_integral_tail(n_terms, k) - _integral_tail(n_terms + 1, k)) / 2 > tol:
        n_terms *= 2
        if n_terms > _ZETA_N_CAP:
            raise PrecisionError(f"tolerance {tol} needs more than {_ZETA_N_CAP} terms")
    total = 0.0
    chunk = 1 << 22
    for start in range(1, n_terms + 1, chunk):
        stop = min(start + chunk - 1, n_terms)
        ns = np.arange(start, stop + 1, dtype=np.float64)
        total += float((ns ** float(-k)).sum())
    hi_int = _integral_tail(n_terms, k)
    lo_int = _integral_tail(n_terms + 1, k)
    value = total + (hi_int + lo_int) / 2
    return ConstantEstimate(value, (hi_int - lo_int) / 2, n_terms)


_zeta_cache: dict[int, float] = {}
_prime_zeta_cache: dict[int, tuple[float, float]] = {}
_cache_lock = threading.Lock()


def _zeta_value(s: int) -> float:
    v = _zeta_cache.get(s)
    if v is None:
        v = zeta(s, _MIN_TOL).value
        with _cache_lock:
            _zeta_cache[s] = v
    return v


def _prime_zeta(s: int) -> tuple[float, float]:
    """(value, error bound) for sum_p p**-s, via sum_j mu(j)/j * log zeta(js)."""
    cached = _prime_zeta_cache.get(s)
    if cached is not None:
        return cached
    j_max = max(1, 60 // s)
    total = 0.0
    for j in range(1, j_max + 1):
        mj = mu(j)
        if mj:
            total += mj / j * math.log(_zeta_value(j * s))
    trunc = 2.0 ** (-(j_max + 1) * s + 2)
    result = (total, trunc + 1e-12)
    with _cache_lock:
        _prime_zeta_cache[s] = result
    return result


def _power_tail(s: int, prime_limit: int, pf: np.ndarray) -> tuple[float, float]:
    """(value, error bound) for sum_{p > prime_limit} p**-s; pf = primes as float."""
    pz, pz_err = _prime_zeta(s)
    partial = float((pf ** float(-s)).sum())
    return pz - partial, pz_err + 2e-13


def _nsum_tail(s: int, prime_limit: int) -> float:
    # Elementary bound sum_{n > P} n**-s <= P**(1-s)/(s-1); underflows to 0.0
    # harmlessly for large s.
    return float(prime_limit) ** (1 - s) / (s - 1)


def euler_factor(p: int, order: OrderPair | tuple[int, int]) -> Fraction:
    """Exact local factor 1 - 1/(p^(m-k+1) + ... + p^m) of alpha_{k,m}."""
    o = as_order(order)
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    d = sum(p**e for e in range(o.m - o.k + 1, o.m + 1))
    return 1 - Fraction(1, d)


def alpha_n(order: OrderPair | tuple[int, int], n: int | FactoredInteger) -> Fraction:
    """Exact alpha_{k,m}(n) = n * prod_{p | n} (local factor)."""
    o = as_order(order)
    fn = as_factored(n)
    result = Fraction(fn.value)
    for p, _ in fn.factors:
        result *= euler_factor(p, o)
    return result


def alpha(order: OrderPair | tuple[int, int], prime_limit: int) -> ConstantEstimate:
    """Density constant alpha_{k,m} with a certified truncation bound."""
    o = as_order(order)
    k, m = o.k, o.m
    if prime_limit < 2:
        raise ValueError("prime_limit must be >= 2")
    pf = primes_up_to(prime_limit).astype(np.float64)
    denom = np.zeros_like(pf)
    for e in range(m - k + 1, m + 1):
        denom += pf ** float(e)
    base = float(np.log1p(-1.0 / denom).sum())

    if prime_limit < _CORRECTION_MIN_P:
        log_err = 2.0 * _nsum_tail(m, prime_limit)
        value = math.exp(base)
        return ConstantEstimate(value, value * math.expm1(log_err), prime_limit)

    # 1/D_p = sum_{i>=0} [p^-(m+ik) - p^-(m+1+ik)]  (exact geometric expansion)
    corr = 0.0
    err = 0.0
    i = 0
    while m + i * k <= _SMAX:
        t1, e1 = _power_tail(m + i * k, prime_limit, pf)
        t2, e2 = _power_tail(m + 1 + i * k, prime_limit, pf)
        corr -= t1 - t2
        err += e1 + e2
        i += 1
    err += 2.0 * _nsum_tail(m + i * k, prime_limit)  # dropped expansion terms
    # second-order log remainder: sum x^2/(2(1-x)) with x = 1/D_p <= p^-m
    if 2 * m <= _SMAX:
        t, e = _power_tail(2 * m, prime_limit, pf)
        err += 0.6 * (abs(t) + e)
    else:
        err += 0.6 * _nsum_tail(2 * m, prime_limit)
    err += 1e-12  # float slack for the 78k-term log sum
    value = math.exp(base + corr)
    bound = max(value * math.expm1(err), _TAIL_FLOOR)
    return ConstantEstimate(value, bound, prime_limit)


def apostol_A(k: int, prime_limit: int) -> ConstantEstimate:
    """Order-k density constant A_k = prod_p (1 - 2/p^k + 1/p^(k+1))."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if prime_limit < 2:
        raise ValueError("prime_limit must be >= 2")
    pf = primes_up_to(prime_limit).astype(np.float64)
    base = float(np.log1p(-(2.0 * pf - 1.0) / pf ** float(k + 1)).sum())

    if prime_limit < _CORRECTION_MIN_P:
        log_err = 4.0 * _nsum_tail(k, prime_limit)
        value = math.exp(base)
        return ConstantEstimate(value, value * math.expm1(log_err), prime_limit)

    # factor = (1 - u) * (1 - w), u = p^-k, w = (u - u/p)/(1 - u):
    # log(1-u) expands over p^-(jk); w expands over p^-(k+ik) - p^-(k+1+ik).
    corr = 0.0
    err = 0.0
    j = 1
    while j * k <= _SMAX:
        t, e = _power_tail(j * k, prime_limit, pf)
        corr -= t / j
        err += e / j
        j += 1
    err += 2.0 * _nsum_tail(j * k, prime_limit)
    i = 0
    while k + i * k <= _SMAX:
        t1, e1 = _power_tail(k + i * k, prime_limit, pf)
        t2, e2 = _power_tail(k + 1 + i * k, prime_limit, pf)
        corr -= t1 - t2
        err += e1 + e2
        i += 1
    err += 2.0 * _nsum_tail(k + i * k, prime_limit)
    if 2 * k <= _SMAX:
        t, e = _power_tail(2 * k, prime_limit, pf)
        err += 0.6 * (abs(t) + e)
    else:
        err += 0.6 * _nsum_tail(2 * k, prime_limit)
    err += 1e-12
    value = math.exp(base + corr)
    bound = max(value * math.expm1(err), _TAIL_FLOOR)
    return ConstantEstimate(value, bound, prime_limit)
