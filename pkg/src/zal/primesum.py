"""Prime tables and the prime Dirichlet sums attached to a kernel.

main(tau, h)    = sum_p p^(-1/2 - i tau) phi_hat(log p / h)
squares(tau, h) = (1/2) sum_p p^(-1 - 2 i tau) phi_hat(2 log p / h)

Both sums are finite because phi_hat vanishes beyond the support halfwidth.
Phases tau log p are reduced mod 2 pi in double-double arithmetic.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

from . import ddarith
from .audit import AuditReport
from .errors import DomainError, ParseError, PreconditionError, ResourceError
from .kernel import Kernel
from .rng import uniforms

MAGIC = b"ZALPRIM1"
MAX_LIMIT = 2**48
MEMORY_BUDGET = 2**31  # bytes for the output array


@dataclass(frozen=True, eq=False)
class PrimeTable:
    limit: int
    primes: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.primes, dtype=np.int64)
        object.__setattr__(self, "primes", p)
        object.__setattr__(self, "_logs", ddarith.log_dd(p))

    def __len__(self):
        return self.primes.size

    def upto(self, x):
        """Number of primes <= x."""
        return int(np.searchsorted(self.primes, x, side="right"))

    def logs(self, n=None):
        hi, lo = self._logs
        return (hi, lo) if n is None else (hi[:n], lo[:n])


def _small_primes(n):
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(math.isqrt(n)) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    return np.flatnonzero(sieve)


def sieve_primes(limit, segment=1 << 20) -> PrimeTable:
    """Segmented sieve of Eratosthenes over odd numbers."""
    limit = int(limit)
    if limit < 2:
        raise DomainError("limit must be >= 2")
    if limit > MAX_LIMIT:
        raise ResourceError(f"limit {limit} exceeds the 2^48 ceiling")
    est = 1.3 * limit / math.log(limit) + 10
    if est * 8 > MEMORY_BUDGET:
        raise ResourceError(f"about {int(est)} primes would exceed the memory budget")
    base = _small_primes(int(math.isqrt(limit)) + 1)
    odd_base = base[base > 2]
    out = [np.array([2], dtype=np.int64)]
    lo = 3
    while lo <= limit:
        hi = min(lo + 2 * segment, limit + 1)  # odd numbers in [lo, hi)
        n = (hi - lo + 1) // 2
        mark = np.ones(n, dtype=bool)
        for p in odd_base:
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            mark[(start - lo) // 2::p] = False
        out.append(lo + 2 * np.flatnonzero(mark).astype(np.int64))
        lo = hi if hi % 2 else hi + 1
    primes = np.concatenate(out)
    return PrimeTable(limit, primes[primes <= limit])


def save_primes(table: PrimeTable, path):
    """Magic header, then limit and the primes as little-endian int64."""
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<q", table.limit))
        fh.write(table.primes.astype("<i8").tobytes())


def load_primes(path) -> PrimeTable:
    with open(path, "rb") as fh:
        head = fh.read(8)
        if head != MAGIC:
            raise ParseError("not a prime table (bad magic)")
        (limit,) = struct.unpack("<q", fh.read(8))
        primes = np.frombuffer(fh.read(), dtype="<i8").astype(np.int64)
    if primes.size and (np.any(np.diff(primes) <= 0) or primes[-1] > limit):
        raise ParseError("prime table is not ascending or exceeds its limit")
    return PrimeTable(limit, primes)


def required_limit(kernel: Kernel, h, factor=1.0):
    """Largest p that can contribute: phi_hat(factor log p / h) vanishes beyond."""
    return math.exp(kernel.support * h / factor)


def _dirichlet(tau, logs_hi, logs_lo, weights, scale):
    """sum_j w_j exp(-i scale tau log p_j)."""
    if weights.size == 0:
        return 0j
    t = scale * float(tau)
    ph = ddarith.phase_mod_2pi(t, logs_hi, logs_lo)
    return complex(np.sum(weights * np.cos(ph)) + 1j * np.sum(weights * np.sin(ph)))


def _support(table, kernel, h, factor):
    need = required_limit(kernel, h, factor)
    if table.limit < min(need, 2**62):
        raise PreconditionError(f"prime table limit {table.limit} too small; need >= {math.ceil(need)}")
    return table.upto(need)


def prime_sum_main(tau, h, kernel: Kernel, table: PrimeTable) -> complex:
    n = _support(table, kernel, h, 1.0)
    p = table.primes[:n].astype(np.float64)
    hi, lo = table.logs(n)
    w = kernel.phi_hat(hi / h) / np.sqrt(p)
    return _dirichlet(tau, hi, lo, np.atleast_1d(w), 1.0)


def prime_sum_squares(tau, h, kernel: Kernel, table: PrimeTable) -> complex:
    n = _support(table, kernel, h, 2.0)
    p = table.primes[:n].astype(np.float64)
    hi, lo = table.logs(n)
    w = 0.5 * kernel.phi_hat(2 * hi / h) / p
    return _dirichlet(tau, hi, lo, np.atleast_1d(w), 2.0)


def approximation_residual(tau, h, kernel: Kernel, table: PrimeTable, cfg=None):
    """I(tau, h) - Im main - Im squares; returns (residual, AveragedSample)."""
    from .averaging import AveragingConfig, averaged_im_log_zeta

    main = prime_sum_main(tau, h, kernel, table)
    sq = prime_sum_squares(tau, h, kernel, table)
    sample = averaged_im_log_zeta(tau, h, kernel, cfg=cfg or AveragingConfig())
    return sample.value - main.imag - sq.imag, sample


@dataclass(frozen=True)
class PrimeSumDecomposition:
    s1: complex
    s2: complex
    s3: complex
    x_split: float
    h: float
    tau: float

    @property
    def total_im(self):
        return self.s1.imag + self.s2.imag + self.s3.imag

    CSV_HEADER = "tau,h,s1_re,s1_im,s2_re,s2_im,s3_re,s3_im,residual"

    def csv_row(self, residual=float("nan")):
        vals = (self.tau, self.h, self.s1.real, self.s1.imag, self.s2.real, self.s2.imag,
                self.s3.real, self.s3.imag, residual)
        return ",".join(repr(float(v)) for v in vals)


def split_point(T, V):
    if not T > math.e ** math.e or not V > 0:
        raise DomainError("need T > e^e and V > 0")
    return T ** (1.0 / (V * math.log(math.log(T))))


def split_decomposition(tau, h, kernel: Kernel, table: PrimeTable, T, V) -> PrimeSumDecomposition:
    """Main sum partitioned at x_split = T^(1/(V log log T)), plus the squares sum."""
    x = split_point(T, V)
    n = _support(table, kernel, h, 1.0)
    m = min(table.upto(x), n)
    p = table.primes[:n].astype(np.float64)
    hi, lo = table.logs(n)
    w = np.atleast_1d(kernel.phi_hat(hi / h) / np.sqrt(p))
    s1 = _dirichlet(tau, hi[:m], lo[:m], w[:m], 1.0)
    s2 = _dirichlet(tau, hi[m:], lo[m:], w[m:], 1.0)
    s3 = prime_sum_squares(tau, h, kernel, table)
    return PrimeSumDecomposition(s1, s2, s3, x, float(h), float(tau))


def upper_variance(kernel: Kernel, table: PrimeTable, h, x_split):
    """sum over x_split < p of phi_hat(log p / h)^2 / p."""
    n = _support(table, kernel, h, 1.0)
    p = table.primes[:n].astype(np.float64)
    sel = p > x_split
    return float(np.sum(kernel.phi_hat(np.log(p[sel]) / h) ** 2 / p[sel]))


# --------------------------------------------------------------- mean values

def dirichlet_values(ts, primes, coeffs, chunk=256):
    """sum_p a(p) p^(-1/2 - i t) at every t, in double-double phase arithmetic."""
    hi, lo = ddarith.log_dd(np.asarray(primes))
    w = np.asarray(coeffs, dtype=np.complex128) / np.sqrt(np.asarray(primes, dtype=np.float64))
    out = np.empty(len(ts), dtype=np.complex128)
    for s in range(0, len(ts), chunk):
        t = np.asarray(ts[s:s + chunk], dtype=np.float64)[:, None]
        ph_hi, ph_lo = ddarith.two_prod(-t, hi[None, :])
        ph_lo = ph_lo - t * lo[None, :]
        ph = ddarith.dd_reduce_2pi(*ddarith.quick_two_sum(ph_hi, ph_lo))
        out[s:s + chunk] = (np.cos(ph) + 1j * np.sin(ph)) @ w
    return out


def mean_value_check(coeffs, x, k, T, n_samples, seed, limit_ratio=10.0) -> AuditReport:
    """Monte Carlo (1/T) int_T^2T |sum_{p<=x} a(p) p^(-1/2-it)|^(2k) dt against
    k! (sum |a(p)|^2 / p)^k. ``coeffs`` maps primes to complex coefficients."""
    if not 2 <= x <= T:
        raise DomainError("need 2 <= x <= T")
    if x ** k > T / math.log(T):
        raise DomainError("x^k exceeds T / log T; the estimate is not claimed there")
    if k < 1 or int(k) != k:
        raise DomainError("k must be a positive integer")
    items = sorted((int(p), complex(a)) for p, a in coeffs.items() if p <= x)
    primes = np.array([p for p, _ in items], dtype=np.int64)
    a = np.array([c for _, c in items], dtype=np.complex128)
    bound = math.factorial(int(k)) * float(np.sum(np.abs(a) ** 2 / primes)) ** k if a.size else 0.0
    ts = T + T * uniforms(seed, 0, n_samples, "mean-value")
    if a.size == 0 or not np.any(a):
        moments = np.zeros(n_samples)
    else:
        moments = np.abs(dirichlet_values(ts, primes, a)) ** (2 * k)
    mean = float(np.mean(moments)) if n_samples else 0.0
    se = float(np.std(moments, ddof=1) / math.sqrt(n_samples)) if n_samples > 1 else 0.0
    hi = mean + 1.959963984540054 * se
    ratio = mean / bound if bound > 0 else 0.0
    ratio_hi = hi / bound if bound > 0 else 0.0
    return AuditReport(
        name="mean-value", verdict="pass" if ratio_hi <= limit_ratio else "fail",
        params={"x": x, "k": k, "T": T, "n_samples": n_samples, "n_primes": int(primes.size)},
        statistics={"moment": mean, "stderr": se, "ci_lo": mean - 1.959963984540054 * se,
                    "ci_hi": hi, "diagonal_bound": bound, "ratio": ratio, "ratio_ci_hi": ratio_hi},
        seed=seed)
