# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops for block evaluation of mu_{k,m} and the k-free
indicator.  Same contract as the NumPy fallback module; see there for the
algorithm notes.  Loops release the GIL so segment workers can overlap.
"""

from libc.stdint cimport int64_t, uint64_t

BACKEND_NAME = "compiled"


def mu_km_block(object lo_obj, object n_obj, int k, int m, int64_t[::1] primes,
                signed char[::1] out):
    """Fill out[i] with mu_{k,m}(lo + i); out must arrive filled with ones."""
    cdef uint64_t lo = <uint64_t> lo_obj
    cdef Py_ssize_t n_cells = <Py_ssize_t> n_obj
    cdef uint64_t hi = lo + <uint64_t> n_cells - 1
    cdef Py_ssize_t i, idx
    cdef Py_ssize_t n_primes = primes.shape[0]
    cdef uint64_t p, q, t, r
    cdef int a, j
    with nogil:
        for i in range(n_primes):
            p = <uint64_t> primes[i]
            q = 1
            for j in range(k):
                q *= p
            if q > hi:
                break
            t = ((lo + q - 1) // q) * q
            while t <= hi:
                r = t // q
                a = k
                while r % p == 0:
                    r //= p
                    a += 1
                idx = <Py_ssize_t> (t - lo)
                if a == m:
                    out[idx] = -out[idx]
                else:
                    out[idx] = 0
                t += q


def qk_block(object lo_obj, object n_obj, int k, int64_t[::1] primes,
             signed char[::1] out):
    """Fill out[i] with the k-free indicator of lo + i; out arrives as ones."""
    cdef uint64_t lo = <uint64_t> lo_obj
    cdef Py_ssize_t n_cells = <Py_ssize_t> n_obj
    cdef uint64_t hi = lo + <uint64_t> n_cells - 1
    cdef Py_ssize_t i
    cdef Py_ssize_t n_primes = primes.shape[0]
    cdef uint64_t p, q, t
    cdef int j
    with nogil:
        for i in range(n_primes):
            p = <uint64_t> primes[i]
            q = 1
            for j in range(k):
                q *= p
            if q > hi:
                break
            t = ((lo + q - 1) // q) * q
            while t <= hi:
                out[<Py_ssize_t> (t - lo)] = 0
                t += q
