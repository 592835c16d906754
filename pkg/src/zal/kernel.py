"""Test functions phi >= 0 whose Fourier transform is compactly supported.

Fourier convention: ``phi_hat(lam) = integral phi(x) exp(-i lam x) dx``, so
``phi(x) = (1/2pi) integral phi_hat(lam) exp(i lam x) dlam``.

Two families are provided.

``smooth-bump-squared``
    ``eta(lam) = exp(-1/(1 - (lam/b)^2))`` on ``|lam| < b = Lambda/2``,
    ``psi`` its inverse transform, ``phi = c psi^2`` with ``c = 2pi / int eta^2``.
    Then ``phi_hat = c (eta * eta) / 2pi`` lives on ``[-Lambda, Lambda]`` and peaks
    at 1 at the origin. ``psi`` is tabulated with one FFT and spline-interpolated.
``fejer``
    ``phi(x) = (1/2pi) (sin(x/2) / (x/2))^2`` and ``phi_hat = max(0, 1 - |lam|)``.
    Closed forms everywhere, but only x^-2 decay.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field
from functools import cached_property, lru_cache

import numpy as np
from scipy import integrate
from scipy.interpolate import CubicSpline
from scipy.special import roots_legendre, sici

from .errors import ConstructionError, DomainError

FAMILIES = ("smooth-bump-squared", "fejer")

_GL_X, _GL_W = roots_legendre(128)
_NOISE_FLOOR = 1e-30  # relative to phi(0); FFT round-off sits near 1e-35


@dataclass(frozen=True)
class KernelSpec:
    family: str = "smooth-bump-squared"
    support_halfwidth: float = 1.0
    grid_step: float = 0.05
    truncation_tolerance: float = 1e-10

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown kernel family {self.family!r}")
        if not self.support_halfwidth > 0 or not self.grid_step > 0:
            raise DomainError("support_halfwidth and grid_step must be positive")
        if not 0 < self.truncation_tolerance < 1:
            raise DomainError("truncation_tolerance must lie in (0, 1)")
        if self.family == "fejer" and self.support_halfwidth != 1.0:
            raise DomainError("the fejer kernel has support_halfwidth 1")


def _eta(lam, b):
    u = np.asarray(lam, dtype=np.float64) / b
    out = np.zeros(u.shape)
    inside = np.abs(u) < 1
    out[inside] = np.exp(-1.0 / (1.0 - u[inside] ** 2))
    return out


@dataclass(frozen=True, eq=False)
class Kernel:
    """An immutable, evaluable kernel. Build with :func:`build_kernel`."""

    spec: KernelSpec
    rapid_decay: bool
    table_halfwidth: float
    _c: float = field(repr=False)
    _x: np.ndarray = field(repr=False)
    _phi: np.ndarray = field(repr=False)
    _spl: object = field(repr=False)
    _cum: object = field(repr=False)
    _cum1: object = field(repr=False)
    _ehw: dict = field(repr=False)

    @property
    def support(self):
        return self.spec.support_halfwidth

    @property
    def family(self):
        return self.spec.family

    # -- point evaluation -------------------------------------------------
    def phi(self, x):
        """phi(x) >= 0, even; zero beyond the table for the bump family."""
        ax = np.abs(np.asarray(x, dtype=np.float64))
        if self.family == "fejer":
            h = 0.5 * ax
            with np.errstate(invalid="ignore", divide="ignore"):
                s = np.where(h > 0, np.sin(h) / np.where(h > 0, h, 1.0), 1.0)
            out = s * s / (2 * math.pi)
        else:
            out = np.where(ax <= self.table_halfwidth,
                           np.maximum(self._spl(np.minimum(ax, self.table_halfwidth)), 0.0), 0.0)
        return float(out) if out.ndim == 0 else out

    def phi_hat(self, lam):
        """Fourier transform, in [0, 1] and exactly 0 for |lam| > Lambda."""
        a = np.abs(np.asarray(lam, dtype=np.float64))
        if self.family == "fejer":
            out = np.maximum(0.0, 1.0 - a)
        else:
            out = self._conv(a)
        return float(out) if out.ndim == 0 else out

    def _conv(self, a):
        # (c / 2pi) int eta(mu) eta(a - mu) dmu over the overlap [a - b, b]
        b = 0.5 * self.support
        flat = a.ravel()
        out = np.zeros(flat.shape)
        live = flat < 2 * b
        if np.any(live):
            lo = flat[live] - b
            half = 0.5 * (b - lo)
            mid = 0.5 * (b + lo)
            mu = mid[:, None] + half[:, None] * _GL_X[None, :]
            vals = _eta(mu, b) * _eta(flat[live][:, None] - mu, b)
            out[live] = self._c / (2 * math.pi) * half * (vals @ _GL_W)
        return np.clip(out, 0.0, 1.0).reshape(a.shape)

    @cached_property
    def _env_table(self):
        return np.maximum.accumulate(self._phi[::-1])[::-1]

    def envelope(self, x):
        """A nonincreasing bound on phi over [|x|, inf)."""
        ax = np.abs(np.asarray(x, dtype=np.float64))
        if self.family == "fejer":
            with np.errstate(divide="ignore"):
                out = np.minimum(1 / (2 * math.pi), 2 / (math.pi * ax * ax))
        else:
            k = np.minimum((ax / self.spec.grid_step).astype(np.int64), self._x.size - 1)
            out = np.where(ax <= self.table_halfwidth, 1.01 * self._env_table[k], 0.0)
        return float(out) if out.ndim == 0 else out

    # -- integrals ----------------------------------------------------------
    def cdf(self, x):
        """int_{-inf}^x phi."""
        x = np.asarray(x, dtype=np.float64)
        if self.family == "fejer":
            ax = np.abs(x)
            si, _ = sici(ax)
            with np.errstate(invalid="ignore", divide="ignore"):
                corr = np.where(ax > 0, 2 * np.sin(0.5 * ax) ** 2 / np.where(ax > 0, ax, 1.0), 0.0)
            half = (si - corr) / math.pi
        else:
            half = self._cum(np.minimum(np.abs(x), self.table_halfwidth))
        out = 0.5 + np.sign(x) * half
        return float(out) if out.ndim == 0 else out

    def upper_tail(self, a):
        """int_a^inf phi for a >= 0."""
        return 1.0 - self.cdf(a)

    def tail_mass(self, a):
        """int_{-inf}^{-a} (1 + |s|) phi(s) ds; infinite for the x^-2 fejer kernel."""
        if not np.all(np.asarray(a) > 0):
            raise DomainError("tail_mass needs a > 0")
        if self.family == "fejer":
            out = np.full(np.shape(a), np.inf)
        else:
            a = np.minimum(np.asarray(a, dtype=np.float64), self.table_halfwidth)
            out = (self._cum(self.table_halfwidth) - self._cum(a)) + (
                self._cum1(self.table_halfwidth) - self._cum1(a))
            out = np.maximum(out, 0.0)
        return float(out) if np.ndim(out) == 0 else out

    def log_weighted_tail(self, a, tau, h):
        """Upper bound for int_{|x|>a} log(2 + tau + |x|/h) phi(x) dx.

        Uses log(2 + tau + x/h) <= log(2 + tau) + x/(h (2 + tau)) for the bump
        family; for fejer the x^-2 envelope of phi is integrated instead.
        """
        l0 = math.log(2 + tau)
        if self.family == "fejer":
            # envelope phi(x) <= 2 / (pi x^2)
            f = lambda x: math.log(2 + tau + x / h) * 2 / (math.pi * x * x)  # noqa: E731
            val, _ = integrate.quad(f, a, np.inf, limit=200)
            return 2 * val
        up = self.upper_tail(a)
        first = (self._cum1(self.table_halfwidth) - self._cum1(min(a, self.table_halfwidth)))
        return 2 * (l0 * up + max(first, 0.0) / (h * (2 + tau)))

    def second_moment(self):
        """int x^2 phi (finite only for the bump family)."""
        if self.family == "fejer":
            return math.inf
        return 2 * integrate.trapezoid(self._x ** 2 * self._phi, self._x)

    def effective_halfwidth(self, m):
        """Smallest X with phi(x) <= (1 + |x|)^-m for all |x| >= X (m <= 8)."""
        if not 0 < m <= 8:
            raise DomainError("effective_halfwidth is defined for 0 < m <= 8")
        if self.family == "fejer":
            if m > 2:
                return math.inf
            return float(_fejer_halfwidth(m))
        key = float(m)
        if key not in self._ehw:
            bad = np.flatnonzero(self._phi * (1 + self._x) ** m > 1.0)
            self._ehw[key] = float(self._x[bad[-1] + 1]) if bad.size else 0.0
        return self._ehw[key]

    # -- serialization -------------------------------------------------------
    def checksum(self):
        h = hashlib.sha256()
        h.update(self._phi.tobytes() if self._phi.size else b"closed-form")
        return h.hexdigest()

    def describe(self):
        d = asdict(self.spec)
        d.update(table_halfwidth=self.table_halfwidth, checksum=self.checksum(),
                 rapid_decay=self.rapid_decay)
        return d

    def to_json(self):
        return json.dumps(self.describe(), sort_keys=True)


def _fejer_halfwidth(m):
    from scipy.optimize import brentq

    f = lambda x: (1 + x) ** m * (math.sin(x / 2) / (x / 2)) ** 2 / (2 * math.pi) - 1  # noqa: E731
    grid = np.linspace(0.1, 50, 5000)
    vals = np.array([f(x) for x in grid])
    pos = np.flatnonzero(vals > 0)
    if pos.size == 0:
        return 0.0
    j = pos[-1]
    return brentq(f, grid[j], grid[j + 1]) if j + 1 < grid.size else math.inf


def _tabulate_bump(spec):
    """psi on x = 0, dx, 2dx, ... by a cosine sum evaluated with one real FFT."""
    b = 0.5 * spec.support_halfwidth
    dx = spec.grid_step
    # lambda spacing dl = 2pi / (P dx); at least 2048 nodes inside [0, b]
    P = 1 << max(12, math.ceil(math.log2(2 * math.pi * 2048 / (dx * b))))
    dl = 2 * math.pi / (P * dx)
    n_lam = int(b / dl) + 1
    e = _eta(np.arange(n_lam) * dl, b)
    buf = np.zeros(P)
    buf[:n_lam] = e
    spec_ = np.fft.rfft(buf).real
    psi = (spec_ - 0.5 * e[0]) * dl / math.pi
    eta_sq = 2 * (np.sum(e * e) - 0.5 * e[0] ** 2) * dl
    c = 2 * math.pi / eta_sq
    x = np.arange(psi.size) * dx
    return x, c * psi * psi, c


@lru_cache(maxsize=16)
def build_kernel(spec: KernelSpec = KernelSpec()) -> Kernel:
    """Construct a kernel; cached, since kernels are immutable."""
    if spec.family == "fejer":
        return Kernel(spec, False, math.inf, 1.0, np.zeros(0), np.zeros(0), None, None, None, {})
    x, phi, c = _tabulate_bump(spec)
    if not np.all(np.isfinite(phi)):
        raise ConstructionError("non-finite values in the tabulated kernel")
    env = np.maximum.accumulate(phi[::-1])[::-1]
    reliable = np.flatnonzero(env > _NOISE_FLOOR * phi[0])
    if reliable.size == 0 or reliable[-1] + 1 >= x.size // 2:
        raise ConstructionError("kernel does not decay inside the tabulation window")
    n = reliable[-1] + 2
    x, phi = x[:n], phi[:n]
    spl = CubicSpline(np.concatenate((-x[:0:-1], x)), np.concatenate((phi[:0:-1], phi)))
    cum = spl.antiderivative()
    c0 = cum(0.0)
    spl1 = CubicSpline(x, x * phi)
    cum1 = spl1.antiderivative()
    half = lambda u: cum(u) - c0  # noqa: E731
    kern = Kernel(spec, True, float(x[-1]), c, x, phi, spl, half, cum1, {})
    mass = 2 * half(x[-1])
    if abs(mass - 1) > 10 * spec.truncation_tolerance + 1e-9:
        raise ConstructionError(f"kernel mass {mass!r} differs from 1")
    if kern.effective_halfwidth(8) >= x[-1]:
        raise ConstructionError("decay envelope not reached inside the table")
    return kern
