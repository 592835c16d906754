"""Independent reference implementations used only by the tests.

None of these share code with the package: they are slow, direct and written
from textbook formulas.
"""
from __future__ import annotations

import math

import mpmath
import numpy as np

# ------------------------------------------------------------------ zeta


def theta_mp(t, dps=30):
    """theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, arbitrary precision."""
    with mpmath.workdps(dps):
        t = mpmath.mpf(t)
        return float(mpmath.im(mpmath.loggamma(0.25 + 0.5j * t)) - t / 2 * mpmath.log(mpmath.pi))


_BERN = [1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510, 43867 / 798,
         -174611 / 330, 854513 / 138, -236364091 / 2730, 8553103 / 6, -23749461029 / 870]


def zeta_em(t, n_terms=None, m=12):
    """zeta(1/2 + it) by Euler-Maclaurin summation in double precision with
    compensated sums. Independent of the Riemann-Siegel formula."""
    s = complex(0.5, t)
    N = n_terms or int(t / math.pi) + 30
    n = np.arange(1, N, dtype=np.float64)
    logn = np.log(n)
    mag = n ** -0.5
    ph = -t * logn
    re = math.fsum(mag * np.cos(ph))
    im = math.fsum(mag * np.sin(ph))
    Ns = complex(N) ** (-s)
    tail = N * Ns / (s - 1) + Ns / 2
    poch = s
    Npow = Ns / N
    fact = 2.0
    for k in range(1, m + 1):
        tail += _BERN[k - 1] / fact * poch * Npow
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        Npow /= N * N
        fact *= (2 * k + 1) * (2 * k + 2)
    return complex(re, im) + tail


def s_path_mp(t, dps=20, max_turn=0.1):
    """S(t) by continuous tracking of arg zeta along 2 -> 2+it -> 1/2+it,
    with adaptive steps that keep each change of argument below ``max_turn``."""
    with mpmath.workdps(dps):
        def track(z0, z1):
            total = mpmath.mpf(0)
            u, du = mpmath.mpf(0), mpmath.mpf(1) / 64
            prev = mpmath.zeta(z0)
            while u < 1:
                step = min(du, 1 - u)
                cur = mpmath.zeta(z0 + (u + step) * (z1 - z0))
                d = mpmath.arg(cur / prev)
                if abs(d) > max_turn:
                    du = step / 2
                    continue
                total += d
                prev, u = cur, u + step
                du = step * 1.5
            return total

        arg = track(mpmath.mpc(2, 0), mpmath.mpc(2, t)) + track(mpmath.mpc(2, t), mpmath.mpc(0.5, t))
        return float(arg / mpmath.pi)


def gabcke_C(k, p, dps=30):
    """Riemann-Siegel correction C_k(p), k <= 4, from derivatives of
    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)."""
    with mpmath.workdps(dps):
        pi = mpmath.pi

        def psi(x):
            return mpmath.cos(2 * pi * (x * x - x - mpmath.mpf(1) / 16)) / mpmath.cos(2 * pi * x)

        def d(j):
            return mpmath.diff(psi, p, j)

        if k == 0:
            v = psi(mpmath.mpf(p))
        elif k == 1:
            v = -d(3) / (96 * pi ** 2)
        elif k == 2:
            v = d(2) / (64 * pi ** 2) + d(6) / (18432 * pi ** 4)
        elif k == 3:
            v = -d(1) / (64 * pi ** 2) - d(5) / (3840 * pi ** 4) - d(9) / (5308416 * pi ** 6)
        elif k == 4:
            v = (psi(mpmath.mpf(p)) / (128 * pi ** 2) + 19 * d(4) / (24576 * pi ** 4)
                 + 11 * d(8) / (5898240 * pi ** 6) + d(12) / (2038431744 * pi ** 8))
        else:
            raise ValueError("k <= 4 only")
        return float(v)


# ------------------------------------------------------------------ primes


def trial_division_primes(limit):
    out = []
    for n in range(2, int(limit) + 1):
        if all(n % p for p in out if p * p <= n):
            out.append(n)
    return out


def plain_sieve(limit):
    """Non-segmented sieve of Eratosthenes over all integers."""
    flags = np.ones(int(limit) + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i:: i] = False
    return np.flatnonzero(flags)


def direct_prime_sum(tau, h, phi_hat, primes, power=1):
    """sum_p p^(-power/2 - i power tau) phi_hat(power log p / h) / power, in mpmath."""
    total = mpmath.mpc(0)
    with mpmath.workdps(30):
        for p in primes:
            lp = mpmath.log(p)
            w = float(phi_hat(float(power * lp / h)))
            if w == 0.0:
                continue
            total += mpmath.mpf(w) / power * mpmath.power(p, -mpmath.mpf(power) / 2) * mpmath.expj(-power * tau * lp)
    return complex(total)


def two_prime_mean_square(T):
    """(1/T) int_T^2T |2^(-1/2-it) + 3^(-1/2-it)|^2 dt in closed form."""
    L = math.log(1.5)
    return 0.5 + 1 / 3 + 2 / math.sqrt(6) * (math.sin(2 * T * L) - math.sin(T * L)) / (T * L)


# ------------------------------------------------------------------ kernels


def bump_phi_hat_direct(lam, support):
    """(eta * eta)(lam) normalised to value 1 at 0, by adaptive quadrature."""
    b = support / 2

    def eta(x):
        u = x / b
        return mpmath.exp(-1 / (1 - u * u)) if abs(u) < 1 else mpmath.mpf(0)

    with mpmath.workdps(20):
        def conv(l):
            lo, hi = max(-b, l - b), min(b, l + b)
            if lo >= hi:
                return mpmath.mpf(0)
            return mpmath.quad(lambda x: eta(x) * eta(l - x), [lo, (lo + hi) / 2, hi])

        return float(conv(lam) / conv(0))


def fejer_phi(x):
    if x == 0:
        return 1 / (2 * math.pi)
    return (math.sin(x / 2) / (x / 2)) ** 2 / (2 * math.pi)
