"""Riemann-Siegel evaluation of theta, Z, N and S on the critical line.

Conventions
-----------
* ``theta(t)`` is the Riemann-Siegel theta function, from its asymptotic series.
* ``Z(t) = exp(i theta(t)) zeta(1/2 + it)`` is real.
* ``N(t)`` counts zeros with ordinate in (0, t], so it is right-continuous.
* ``S(t) = N(t) - 1 - theta(t)/pi`` and ``Im log zeta(1/2 + it) = pi S(t)``.

Zero counts are certified with Turing's method in Brent's form: a Gram point
``g_b`` is accepted only when enough Rosser-good Gram blocks lie on each side of
it. The number of sign changes between two accepted Gram points must then
match the index difference exactly, otherwise :class:`IntegrityError` is raised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numba
import numpy as np
from scipy.special import lambertw

from ._rs_coeffs import CHEB
from .ddarith import (
    PI_LD,
    TWO_PI_HI,
    TWO_PI_LD,
    dd_add_nb,
    from_longdouble,
    log_dd,
    reduce_2pi_nb,
    two_prod_nb,
)
from .errors import DomainError, IntegrityError

MAX_ORDER = len(CHEB) - 1
EPS = 2.0 ** -53
T_MIN = 2.0
G_MINUS_1 = 9.66690805613041  # Gram point g_{-1}; Z < 0 on (0, 14.13)

# theta(t) - [(t/2) log(t/2pi) - t/2 - pi/8] ~ sum_k c_k t^(1-2k)
_THETA_COEFFS = (1 / 48, 7 / 5760, 31 / 80640, 127 / 430080, 511 / 1216512)
_THETA_NEXT = 1414477 / 1476034560  # first omitted coefficient (k = 6)

_CHEB = np.zeros((len(CHEB), max(len(c) for c in CHEB)))
_CLEN = np.array([len(c) for c in CHEB], dtype=np.int64)
for _k, _c in enumerate(CHEB):
    _CHEB[_k, : len(_c)] = _c


@dataclass(frozen=True)
class ZetaConfig:
    """Numerical knobs for Z evaluation and zero certification.

    ``correction_order`` counts Riemann-Siegel correction terms C_0..C_k;
    orders above 4 matter below t ~ 10^4, where order 4 leaves ~10^-6 error.
    """

    correction_order: int = MAX_ORDER
    dd_threshold: float = 1e6
    samples_per_gram: int = 1
    refine_factor: int = 8
    refine_levels: int = 4
    zero_tol: float = 1e-10

    def __post_init__(self):
        if not 0 <= self.correction_order <= MAX_ORDER:
            raise DomainError(f"correction_order must lie in [0, {MAX_ORDER}]")
        if self.samples_per_gram < 1 or self.refine_factor < 2:
            raise DomainError("sampling parameters too small")


DEFAULT = ZetaConfig()


def _check_t(t):
    t = np.asarray(t, dtype=np.float64)
    if np.any(~np.isfinite(t)) or np.any(t < T_MIN):
        raise DomainError(f"t must be finite and >= {T_MIN}")
    return t


def _theta_ld(t):
    """theta in extended precision (longdouble) and the first omitted series term."""
    t = np.asarray(t, dtype=np.float64)
    tl = t.astype(np.longdouble)
    main = tl / 2 * np.log(tl / TWO_PI_LD) - tl / 2 - PI_LD / 8
    inv = 1.0 / t
    inv2 = inv * inv
    series = np.zeros_like(t)
    pw = inv.copy()
    for c in _THETA_COEFFS:
        series += c * pw
        pw *= inv2
    return main + series.astype(np.longdouble), _THETA_NEXT * pw


def theta(t):
    """Riemann-Siegel theta function for t >= 2 (scalar or array)."""
    t = _check_t(t)
    val = np.asarray(_theta_ld(t)[0], dtype=np.float64)
    return float(val) if val.ndim == 0 else val


def theta_error(t):
    """Magnitude of the first omitted term of the theta series."""
    t = _check_t(t)
    err = _theta_ld(t)[1]
    return float(err) if np.ndim(err) == 0 else err


class _LogTable:
    """Growable table of log n (double-double) and n^(-1/2)."""

    def __init__(self):
        self.hi = np.zeros(0)
        self.lo = np.zeros(0)
        self.rsq = np.zeros(0)

    def ensure(self, n_max):
        if n_max <= self.hi.size:
            return
        n_new = max(n_max, 2 * self.hi.size, 64)
        n = np.arange(1, n_new + 1)
        self.hi, self.lo = log_dd(n)
        self.rsq = 1.0 / np.sqrt(n.astype(np.float64))


_LOGS = _LogTable()


@numba.njit(cache=True)
def _clenshaw(c, m, x):
    b1 = 0.0
    b2 = 0.0
    for j in range(m - 1, 0, -1):
        b1, b2 = 2.0 * x * b1 - b2 + c[j], b1
    return x * b1 - b2 + c[0]


@numba.njit(cache=True)
def _z_kernel(ts, th_hi, th_lo, logn_hi, logn_lo, rsq, cheb, clen, order, dd_min, z_out, err_out):
    for j in range(ts.size):
        t = ts[j]
        a = math.sqrt(t / TWO_PI_HI)
        n_terms = int(a)
        p = a - n_terms
        s = 0.0
        sa = 0.0
        for n in range(n_terms):
            sa += rsq[n]
        if t >= dd_min:
            phase_err = 4.0 * EPS
            for n in range(n_terms):
                ph, pl = two_prod_nb(-t, logn_hi[n])
                pl = pl - t * logn_lo[n]
                h, l = dd_add_nb(th_hi[j], th_lo[j], ph, pl)
                s += rsq[n] * math.cos(reduce_2pi_nb(h, l))
        else:
            th = th_hi[j]
            phase_err = EPS * (abs(th) + t * math.log(max(n_terms, 1)))
            for n in range(n_terms):
                s += rsq[n] * math.cos(th - t * logn_hi[n])
        x = 1.0 - 2.0 * p
        inva = 1.0 / a
        pw = 1.0 / math.sqrt(a)
        rem = 0.0
        last = 0.0
        for k in range(order + 1):
            last = _clenshaw(cheb[k], clen[k], x) * pw
            rem += last
            pw *= inva
        if order + 1 < cheb.shape[0]:
            nxt = abs(_clenshaw(cheb[order + 1], clen[order + 1], x) * pw)
        else:
            nxt = abs(last)
        sign = 1.0 if n_terms % 2 == 1 else -1.0
        z_out[j] = 2.0 * s + sign * rem
        # truncation plus a rounding bound on the main sum
        err_out[j] = nxt + 2.0 * sa * (phase_err + 4.0 * EPS)


def z_with_error(t, cfg: ZetaConfig = DEFAULT):
    """Z(t) and an error estimate: next remainder term, theta truncation and rounding."""
    t = _check_t(t)
    flat = np.ascontiguousarray(t.ravel())
    z = np.empty_like(flat)
    err = np.empty_like(flat)
    if flat.size:
        _LOGS.ensure(int(math.sqrt(flat.max() / (2 * math.pi))) + 1)
        th, th_err = _theta_ld(flat)
        th_hi, th_lo = from_longdouble(th)
        _z_kernel(flat, th_hi, th_lo, _LOGS.hi, _LOGS.lo, _LOGS.rsq, _CHEB, _CLEN,
                  cfg.correction_order, cfg.dd_threshold, z, err)
        # d Z / d theta is bounded by |Z'| ~ the main sum size; theta error enters linearly
        err += th_err * 2.0 * np.sqrt(np.sqrt(flat / (2 * math.pi)))
    return z.reshape(t.shape), err.reshape(t.shape)


def riemann_siegel_Z(t, correction_order: int = MAX_ORDER):
    """Hardy's Z function by the Riemann-Siegel formula (scalar or array)."""
    z, _ = z_with_error(t, ZetaConfig(correction_order=correction_order))
    return float(z) if z.ndim == 0 else z


def _z(t, cfg):
    return z_with_error(t, cfg)[0]


# ---------------------------------------------------------------- Gram points

def gram_point(n):
    """Solution g_n of theta(g_n) = n pi for integer n >= -1 (scalar or array)."""
    n = np.asarray(n)
    if np.any(n < -1):
        raise DomainError("Gram points are indexed from -1")
    nf = n.astype(np.float64)
    g = 2 * math.pi * np.exp(1 + np.real(lambertw((8 * nf + 1) / (8 * math.e))))
    g = np.maximum(g, 9.0)
    nl = n.astype(np.longdouble)
    for _ in range(8):
        th = _theta_ld(g)[0]
        step = np.asarray((th - nl * PI_LD), dtype=np.float64) / (0.5 * np.log(g / (2 * math.pi)))
        g = g - step
        if np.all(np.abs(step) <= 4e-16 * g):
            break
    return float(g) if g.ndim == 0 else g


def gram_index(t):
    """Largest n with g_n <= t (n >= -1); requires t >= g_{-1}."""
    n = max(-1, int(math.floor(float(theta(t)) / math.pi)))
    while True:
        cand = np.arange(max(-1, n - 2), n + 3)
        g = gram_point(cand)
        below = cand[g <= t]
        if below.size and below[-1] < cand[-1]:
            return int(below[-1]) if below[-1] > cand[0] or cand[0] == -1 else int(below[-1])
        n = n + 3 if below.size else n - 3


def turing_blocks(t):
    """Number of consecutive Rosser-good blocks Brent's criterion needs near height t."""
    lg = math.log(max(t, 10.0))
    return max(2, math.ceil(0.0061 * lg * lg + 0.08 * lg))


# ------------------------------------------------------------ certified counts

@dataclass
class CertifiedRegion:
    """Sign-change brackets of Z in (g_b, g_e] with N(g_b) = b + 1 and N(g_e) = e + 1.

    Every bracket holds exactly one zero and no zero lies outside the brackets.
    """

    b: int
    e: int
    g_b: float
    g_e: float
    lo: np.ndarray
    hi: np.ndarray
    z_lo: np.ndarray
    z_hi: np.ndarray
    cfg: ZetaConfig = field(default=DEFAULT, repr=False)

    def count(self, t):
        """N(t) for g_b <= t <= g_e, or t < g_b when b = -1."""
        t = np.atleast_1d(np.asarray(t, dtype=np.float64))
        if np.any(t > self.g_e) or np.any((t < self.g_b) & (self.b != -1)):
            raise DomainError("point outside the certified region")
        out = np.full(t.shape, self.b + 1, dtype=np.int64)
        inside = t >= self.g_b
        if not np.any(inside):
            return out
        ti = t[inside]
        below = np.searchsorted(self.hi, ti, side="right")
        j = np.searchsorted(self.lo, ti, side="right") - 1
        straddle = (j >= 0) & (j < self.lo.size)
        straddle[straddle] &= ti[straddle] < self.hi[j[straddle]]
        extra = np.zeros(ti.shape, dtype=np.int64)
        if np.any(straddle):
            zt = _z(ti[straddle], self.cfg)
            jj = j[straddle]
            extra[straddle] = (zt == 0) | (np.sign(zt) == np.sign(self.z_hi[jj]))
        out[inside] += below + extra
        return out

    def zeros(self, tol=None):
        """Refine every bracket to width <= tol by the Illinois method."""
        tol = self.cfg.zero_tol if tol is None else tol
        return _illinois(self.lo, self.hi, self.z_lo, self.z_hi, tol, self.cfg)

    def zeros_with_width(self, tol):
        """Midpoints and widths of the brackets after refinement to ``tol``
        (an array of per-bracket widths; ``inf`` leaves a bracket as is)."""
        return _illinois(self.lo, self.hi, self.z_lo, self.z_hi, tol, self.cfg, with_width=True)


def _illinois(a, b, fa, fb, tol, cfg, max_iter=200, with_width=False):
    a, b, fa, fb = (np.array(v, dtype=np.float64) for v in (a, b, fa, fb))
    width_tol = np.maximum(tol, 4 * np.spacing(np.maximum(np.abs(a), np.abs(b))))
    active = np.abs(b - a) > width_tol
    checkpoint = np.abs(b - a)
    for it in range(max_iter):
        if not np.any(active):
            break
        idx = np.flatnonzero(active)
        aa, bb, ffa, ffb = a[idx], b[idx], fa[idx], fb[idx]
        c = bb - ffb * (bb - aa) / (ffb - ffa)
        lo, hi = np.minimum(aa, bb), np.maximum(aa, bb)
        bad = ~((c > lo) & (c < hi))
        if it % 3 == 2:
            # bisect where three steps did not even halve the bracket
            w = np.abs(bb - aa)
            bad |= w > 0.5 * checkpoint[idx]
            checkpoint[idx] = w
        c[bad] = 0.5 * (aa[bad] + bb[bad])
        fc = _z(c, cfg)
        hit = fc == 0
        flip = (fc * ffb < 0) & ~hit
        na = np.where(flip, bb, aa)
        nfa = np.where(flip, ffb, np.where(hit, ffa, 0.5 * ffa))
        a[idx], fa[idx], b[idx], fb[idx] = na, nfa, c, fc
        a[idx[hit]] = c[hit]
        active[idx] = (np.abs(b[idx] - a[idx]) > width_tol[idx]) & ~hit
    if np.any(active):
        from .errors import NumericError

        raise NumericError("zero refinement did not converge",
                           achieved=float(np.max(np.abs(b - a)[active])))
    if with_width:
        return 0.5 * (a + b), np.abs(b - a)
    return 0.5 * (a + b)


class _GramScan:
    """Z sampled on Gram intervals n_lo .. n_hi.

    Every interval starts with the same density (a dense 2-D array); refined
    intervals are kept separately.
    """

    def __init__(self, n_lo, n_hi, cfg):
        self.cfg = cfg
        self.n = np.arange(n_lo, n_hi + 1)
        self.g = gram_point(self.n)
        m = cfg.samples_per_gram
        frac = np.arange(m + 1) / m
        left, width = self.g[:-1], np.diff(self.g)
        self.xs = left[:, None] + width[:, None] * frac[None, :]
        self.xs[:, -1] = self.g[1:]
        zi = _z(self.xs[:, 1:-1].ravel(), cfg).reshape(-1, m - 1) if m > 1 else np.zeros((left.size, 0))
        self.zg = _z(self.g, cfg)
        self.zs = np.concatenate((self.zg[:-1, None], zi, self.zg[1:, None]), axis=1)
        self.density = np.full(left.size, m, dtype=np.int64)
        self.refined = {}
        self._base_counts = np.sum(self.zs[:, :-1] * self.zs[:, 1:] < 0, axis=1)

    def resample(self, intervals, m):
        intervals = np.asarray(intervals, dtype=np.int64)
        intervals = intervals[self.density[intervals] < m]
        if intervals.size == 0:
            return
        frac = np.arange(1, m) / m
        left = self.g[intervals]
        width = self.g[intervals + 1] - left
        pts = left[:, None] + width[:, None] * frac[None, :]
        vals = _z(pts.ravel(), self.cfg).reshape(pts.shape)
        for row, i in enumerate(intervals):
            x = np.concatenate(([self.g[i]], pts[row], [self.g[i + 1]]))
            z = np.concatenate(([self.zg[i]], vals[row], [self.zg[i + 1]]))
            self.refined[int(i)] = (x, z)
            self.density[i] = m

    def counts(self):
        c = self._base_counts.copy()
        for i, (_, z) in self.refined.items():
            c[i] = np.count_nonzero(z[:-1] * z[1:] < 0)
        return c

    def brackets(self, i0, i1):
        """(lo, hi, z_lo, z_hi) of all sign changes in intervals i0 .. i1-1, ascending."""
        xs, zs = self.xs[i0:i1], self.zs[i0:i1]
        mask = zs[:, :-1] * zs[:, 1:] < 0
        keep = np.ones(i1 - i0, dtype=bool)
        for i in self.refined:
            if i0 <= i < i1:
                keep[i - i0] = False
        mask &= keep[:, None]
        r, c = np.nonzero(mask)
        parts = [(xs[r, c], xs[r, c + 1], zs[r, c], zs[r, c + 1])]
        for i, (x, z) in self.refined.items():
            if i0 <= i < i1:
                ch = np.flatnonzero(z[:-1] * z[1:] < 0)
                parts.append((x[ch], x[ch + 1], z[ch], z[ch + 1]))
        lo, hi, zl, zh = (np.concatenate(v) for v in zip(*parts))
        order = np.argsort(lo, kind="stable")
        return lo[order], hi[order], zl[order], zh[order]


def _certify(t_lo, t_hi, cfg, pad):
    """One attempt at a certified region; returns None when the Gram range is too short."""
    K = turing_blocks(t_hi)
    n_a = max(-1, gram_index(max(t_lo, G_MINUS_1)) - pad)
    n_z = gram_index(max(t_hi, G_MINUS_1)) + 1 + pad
    scan = _GramScan(n_a, n_z, cfg)
    sgn = np.where(scan.n % 2 == 0, 1.0, -1.0)
    good = sgn * scan.zg > 0
    good[scan.n == -1] = True
    gpos = np.flatnonzero(good)
    if gpos.size < 2:
        return None
    starts, ends = gpos[:-1], gpos[1:]
    lengths = ends - starts

    def block_counts():
        c = scan.counts()
        cs = np.concatenate(([0], np.cumsum(c)))
        return cs[ends] - cs[starts]

    counts = block_counts()
    m = cfg.samples_per_gram
    for _ in range(cfg.refine_levels):
        short = np.flatnonzero(counts < lengths)
        if short.size == 0:
            break
        m *= cfg.refine_factor
        ivals = np.concatenate([np.arange(starts[k], ends[k]) for k in short])
        scan.resample(ivals, m)
        counts = block_counts()
    ok = counts >= lengths

    def run_ok(k0, k1):
        return 0 <= k0 and k1 <= ok.size and k0 < k1 and bool(np.all(ok[k0:k1]))

    # block k spans [g[starts[k]], g[ends[k]]); good point gpos[j] starts block j
    b_choice = None
    for j in range(gpos.size - 1, -1, -1):
        if scan.g[gpos[j]] > max(t_lo, G_MINUS_1):
            continue
        upper = run_ok(j, j + K)
        lower = scan.n[gpos[j]] == -1 or run_ok(j - K, j) or (
            scan.n[0] == -1 and run_ok(0, j))
        if upper and lower:
            b_choice = j
            break
    if b_choice is None:
        return None
    e_choice = None
    for j in range(b_choice + 1, gpos.size):
        if scan.g[gpos[j]] > t_hi and run_ok(j, j + K):
            e_choice = j
            break
    if e_choice is None:
        return None
    ib, ie = gpos[b_choice], gpos[e_choice]
    b, e = int(scan.n[ib]), int(scan.n[ie])

    def collect():
        return scan.brackets(ib, ie)

    lo, hi, zl, zh = collect()
    level_m = m
    while lo.size < e - b and level_m < cfg.samples_per_gram * cfg.refine_factor ** (cfg.refine_levels + 1):
        level_m *= cfg.refine_factor
        scan.resample(np.arange(ib, ie), level_m)
        lo, hi, zl, zh = collect()
    if lo.size != e - b:
        raise IntegrityError(
            f"found {lo.size} sign changes between g_{b} and g_{e}, expected {e - b}",
            interval=(float(scan.g[ib]), float(scan.g[ie])))
    return CertifiedRegion(b, e, float(scan.g[ib]), float(scan.g[ie]), lo, hi, zl, zh, cfg)


def certified_region(t_lo, t_hi=None, cfg: ZetaConfig = DEFAULT):
    """Certify the zero count on a Gram range covering [t_lo, t_hi]."""
    t_hi = t_lo if t_hi is None else t_hi
    _check_t([t_lo, t_hi])
    if t_hi < t_lo:
        raise DomainError("t_hi < t_lo")
    pad = 2 * turing_blocks(t_hi) + 4
    for _ in range(6):
        region = _certify(t_lo, t_hi, cfg, pad)
        if region is not None:
            return region
        pad *= 2
    raise IntegrityError("no Gram points with Turing certificates near the range",
                         interval=(float(t_lo), float(t_hi)))


def _clusters(ts, gap_intervals=200, span_intervals=5000):
    """Group sorted heights so that nearby points share one certified region.

    Gaps and spans are measured in local Gram spacings 2 pi / log(t / 2 pi).
    """
    order = np.argsort(ts, kind="stable")
    s = ts[order]
    spacing = 2 * np.pi / np.log(np.maximum(s, 20.0) / (2 * np.pi))
    groups, start = [], 0
    for i in range(1, s.size + 1):
        if (i == s.size or s[i] - s[i - 1] > gap_intervals * spacing[i]
                or s[i] - s[start] > span_intervals * spacing[i]):
            groups.append(order[start:i])
            start = i
    return groups


def count_zeros(t, cfg: ZetaConfig = DEFAULT):
    """Certified N(t): zeros with ordinate in (0, t] (scalar or array)."""
    t = _check_t(t)
    flat = t.ravel()
    out = np.empty(flat.shape, dtype=np.int64)
    for grp in _clusters(flat):
        tg = flat[grp]
        region = certified_region(float(tg.min()), float(tg.max()), cfg)
        out[grp] = region.count(tg)
    return int(out[0]) if t.ndim == 0 else out.reshape(t.shape)


def s_of_t(t, cfg: ZetaConfig = DEFAULT):
    """S(t) = N(t) - 1 - theta(t)/pi."""
    n = count_zeros(t, cfg)
    s = np.asarray(n, dtype=np.float64) - 1.0 - np.asarray(theta(t)) / math.pi
    return float(s) if np.ndim(s) == 0 else s


def im_log_zeta(t, cfg: ZetaConfig = DEFAULT):
    """Im log zeta(1/2 + it) = pi S(t)."""
    return math.pi * s_of_t(t, cfg) if np.ndim(t) == 0 else math.pi * s_of_t(t, cfg)


def drift_check(t1, t2, cfg: ZetaConfig = DEFAULT):
    """pi S(t2) - pi S(t1) + (t2 - t1) log t2; vectorized over pairs."""
    t1 = np.asarray(t1, dtype=np.float64)
    t2 = np.asarray(t2, dtype=np.float64)
    if np.any(t1 > t2):
        raise DomainError("need t1 <= t2")
    both = im_log_zeta(np.concatenate([np.atleast_1d(t1), np.atleast_1d(t2)]), cfg)
    k = np.atleast_1d(t1).size
    slack = both[k:] - both[:k] + (np.atleast_1d(t2) - np.atleast_1d(t1)) * np.log(np.atleast_1d(t2))
    slack[np.atleast_1d(t1) == np.atleast_1d(t2)] = 0.0
    return float(slack[0]) if t1.ndim == 0 and t2.ndim == 0 else slack


# ------------------------------------------------------------------ zero lists

@dataclass(frozen=True)
class ZeroList:
    """Consecutive critical-line zero ordinates starting at 1-based index ``first_index``."""

    ordinates: np.ndarray
    first_index: int
    source: str = "computed"

    def __post_init__(self):
        o = np.asarray(self.ordinates, dtype=np.float64)
        object.__setattr__(self, "ordinates", o)
        if o.size and (np.any(np.diff(o) <= 0) or o[0] <= 14.0):
            raise IntegrityError("zero ordinates must be ascending and above 14")
        if self.first_index < 1:
            raise DomainError("first_index is 1-based")
        if self.source not in ("computed", "reference-table"):
            raise DomainError(f"unknown source {self.source!r}")

    def __len__(self):
        return self.ordinates.size


def locate_zeros(t_min, t_max, cfg: ZetaConfig = DEFAULT, tol=None):
    """All zero ordinates in (t_min, t_max], refined to bracket width <= tol."""
    _check_t([t_min, t_max])
    if not t_min < t_max:
        raise DomainError("need t_min < t_max")
    region = certified_region(t_min, t_max, cfg)
    n_lo = int(region.count(t_min)[0])
    n_hi = int(region.count(t_max)[0])
    sel = slice(n_lo - region.b - 1, n_hi - region.b - 1)
    sub = CertifiedRegion(region.b, region.e, region.g_b, region.g_e, region.lo[sel],
                          region.hi[sel], region.z_lo[sel], region.z_hi[sel], cfg)
    gam = sub.zeros(tol) if n_hi > n_lo else np.zeros(0)
    return ZeroList(gam, first_index=n_lo + 1)


# ------------------------------------------------------------ critical samples

@dataclass(frozen=True)
class CriticalSample:
    """theta, Z, N and S at one height, with a remainder estimate for Z."""

    t: float
    theta: float
    z: float
    n_zeros: int
    s: float
    method_error: float

    CSV_HEADER = "t,theta,z,n,s,method_error"

    def csv_row(self):
        return (f"{self.t!r},{self.theta!r},{self.z!r},{self.n_zeros},{self.s!r},"
                f"{self.method_error!r}")


def critical_samples(ts, cfg: ZetaConfig = DEFAULT):
    """Batch evaluation returning one :class:`CriticalSample` per height."""
    ts = np.atleast_1d(_check_t(ts))
    th = np.atleast_1d(theta(ts))
    z, err = z_with_error(ts, cfg)
    n = np.atleast_1d(count_zeros(ts, cfg))
    s = n - 1.0 - th / math.pi
    return [CriticalSample(float(a), float(b), float(c), int(d), float(e), float(f))
            for a, b, c, d, e, f in zip(ts, th, z, n, s, err)]
