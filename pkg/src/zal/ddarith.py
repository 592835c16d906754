"""Double-double helpers for large phases.

A double-double value is an unevaluated pair ``hi + lo`` with ``|lo| <= ulp(hi)/2``.
The functions below are branch-free, so the same source works on numpy arrays
and, through the ``*_nb`` aliases, inside numba kernels.
"""
import math

import numba
import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1

TWO_PI_HI = 6.283185307179586
TWO_PI_LO = 2.4492935982947064e-16
PI_LD = np.longdouble("3.14159265358979323846264338327950288")
TWO_PI_LD = 2 * PI_LD


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def dd_add(ah, al, bh, bl):
    s, e = two_sum(ah, bh)
    e = e + (al + bl)
    return quick_two_sum(s, e)


def dd_mul_d(ah, al, b):
    p, e = two_prod(ah, b)
    e = e + al * b
    return quick_two_sum(p, e)


def dd_reduce_2pi(h, l):
    """Reduce ``h + l`` modulo 2 pi to roughly [-pi, pi]; returns a double."""
    k = np.round(h / TWO_PI_HI) if isinstance(h, np.ndarray) else float(round(h / TWO_PI_HI))
    ph, pl = two_prod(k, TWO_PI_HI)
    pl = pl + k * TWO_PI_LO
    rh, rl = dd_add(h, l, -ph, -pl)
    return rh + rl


def from_longdouble(x):
    """Split a longdouble (scalar or array) into a double-double pair."""
    hi = np.asarray(x, dtype=np.float64)
    lo = np.asarray(x - hi.astype(np.longdouble), dtype=np.float64)
    return hi, lo


def log_dd(x):
    """log(x) as a double-double pair, via the platform's extended precision."""
    return from_longdouble(np.log(np.asarray(x, dtype=np.longdouble)))


def phase_mod_2pi(t, log_hi, log_lo):
    """(-t * log) mod 2 pi for arrays of logs, computed in double-double."""
    t = float(t)
    ph, pl = two_prod(-t, np.asarray(log_hi, dtype=np.float64))
    pl = pl - t * np.asarray(log_lo, dtype=np.float64)
    ph, pl = quick_two_sum(ph, pl)
    return dd_reduce_2pi(ph, pl)


two_sum_nb = numba.njit(cache=True)(two_sum)
quick_two_sum_nb = numba.njit(cache=True)(quick_two_sum)
split_nb = numba.njit(cache=True)(split)


@numba.njit(cache=True)
def two_prod_nb(a, b):
    p = a * b
    ah, al = split_nb(a)
    bh, bl = split_nb(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


@numba.njit(cache=True)
def dd_add_nb(ah, al, bh, bl):
    s, e = two_sum_nb(ah, bh)
    e = e + (al + bl)
    return quick_two_sum_nb(s, e)


@numba.njit(cache=True)
def reduce_2pi_nb(h, l):
    k = math.floor(h / TWO_PI_HI + 0.5)
    ph, pl = two_prod_nb(k, TWO_PI_HI)
    pl = pl + k * TWO_PI_LO
    rh, rl = dd_add_nb(h, l, -ph, -pl)
    return rh + rl
