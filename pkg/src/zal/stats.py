"""Monte Carlo tails and exponential moments of pi S(UT) and I(UT, H).

U is uniform on [0, 1]. Draw i depends only on (seed, i) (see :mod:`zal.rng`),
so chunked and parallel runs match serial ones bit for bit.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp
from statsmodels.stats.proportion import proportion_confint

from . import rszeta
from .audit import AuditReport
from .averaging import AveragingConfig, averaged_batch, truncation_halfwidth
from .errors import DomainError, ZalError
from .kernel import Kernel
from .rng import uniforms

Z95 = 1.959963984540054


# ------------------------------------------------------------------ sampling

@dataclass
class SampleSet:
    """Values pi S(u_i T) (mode 'raw') or I(u_i T, h) (mode 'averaged').

    ``index`` holds the draw indices that produced ``values``; draws that
    could not be evaluated are listed in ``skipped`` with a reason.
    """

    T: float
    n: int
    seed: int
    mode: str
    values: np.ndarray
    u: np.ndarray
    index: np.ndarray
    h: float | None = None
    z: np.ndarray | None = None
    skipped: list = field(default_factory=list)

    def symmetrized(self):
        """The set values U (-values), used for the k <-> -k symmetry."""
        z = None if self.z is None else np.concatenate([self.z, self.z])
        return SampleSet(self.T, 2 * self.values.size, self.seed, self.mode + "+sym",
                         np.concatenate([self.values, -self.values]),
                         np.concatenate([self.u, self.u]),
                         np.concatenate([self.index, self.index]), self.h, z, list(self.skipped))


def _evaluate_chunk(args):
    T, seed, start, count, mode, h, kspec, zcfg, acfg = args
    from .kernel import build_kernel

    u = uniforms(seed, start, count, "tau")
    t = u * T
    idx = np.arange(start, start + count)
    skipped = []
    ok = t >= rszeta.T_MIN
    for i in idx[~ok]:
        skipped.append((int(i), "height below 2"))
    t_ok, u_ok, i_ok = t[ok], u[ok], idx[ok]
    z = None
    if mode == "raw":
        try:
            vals = math.pi * np.atleast_1d(rszeta.s_of_t(t_ok, zcfg)) if t_ok.size else np.zeros(0)
        except ZalError as exc:  # retry one by one, recording failures
            vals, keep = [], []
            for j, tj in enumerate(t_ok):
                try:
                    vals.append(math.pi * rszeta.s_of_t(float(tj), zcfg))
                    keep.append(j)
                except ZalError as e:
                    skipped.append((int(i_ok[j]), f"{type(e).__name__}: {e}"))
            vals = np.array(vals)
            t_ok, u_ok, i_ok = t_ok[keep], u_ok[keep], i_ok[keep]
            del exc
        z = rszeta.z_with_error(t_ok, zcfg)[0] if t_ok.size else np.zeros(0)
    else:
        kernel = build_kernel(kspec)
        X = truncation_halfwidth(kernel, T, h, 0.5 * acfg.tol, acfg.growth_constant)
        low = t_ok - X / h < rszeta.T_MIN
        for i in i_ok[low]:
            skipped.append((int(i), "averaging window reaches below 2"))
        t_ok, u_ok, i_ok = t_ok[~low], u_ok[~low], i_ok[~low]
        vals = averaged_batch(t_ok, h, kernel, cfg=acfg)[0] if t_ok.size else np.zeros(0)
    return np.asarray(vals, dtype=np.float64), u_ok, i_ok, z, skipped


def draw_samples(T, n, seed, mode="raw", h=None, kernel: Kernel | None = None,
                 zeta_cfg: rszeta.ZetaConfig = rszeta.DEFAULT,
                 avg_cfg: AveragingConfig = AveragingConfig(), threads=1, chunk=20000) -> SampleSet:
    """Draw pi S(u_i T) or I(u_i T, h) for i = 0 .. n-1."""
    if T < 1e3:
        raise DomainError("T must be at least 10^3")
    if mode not in ("raw", "averaged"):
        raise DomainError(f"unknown mode {mode!r}")
    if mode == "averaged" and (h is None or kernel is None):
        raise DomainError("averaged mode needs h and a kernel")
    kspec = kernel.spec if kernel is not None else None
    jobs = [(T, seed, s, min(chunk, n - s), mode, h, kspec, zeta_cfg, avg_cfg)
            for s in range(0, n, chunk)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_evaluate_chunk, jobs))
    else:
        parts = [_evaluate_chunk(j) for j in jobs]
    if not parts:
        return SampleSet(T, 0, seed, mode, np.zeros(0), np.zeros(0), np.zeros(0, np.int64), h,
                         np.zeros(0) if mode == "raw" else None)
    vals = np.concatenate([p[0] for p in parts])
    u = np.concatenate([p[1] for p in parts])
    idx = np.concatenate([p[2] for p in parts])
    z = np.concatenate([p[3] for p in parts]) if mode == "raw" else None
    skipped = [s for p in parts for s in p[4]]
    return SampleSet(T, n, seed, mode, vals, u, idx, h, z, skipped)


# ------------------------------------------------------------------ tails

@dataclass(frozen=True)
class TailCurve:
    v_grid: np.ndarray
    p_hat: np.ndarray
    ci_lo: np.ndarray
    ci_hi: np.ndarray
    n: int

    CSV_HEADER = "V,p_hat,ci_lo,ci_hi"

    def csv_rows(self):
        return [f"{v!r},{p!r},{lo!r},{hi!r}" for v, p, lo, hi in
                zip(self.v_grid.tolist(), self.p_hat.tolist(), self.ci_lo.tolist(), self.ci_hi.tolist())]


def wilson(count, n, alpha=0.05):
    """Wilson score interval; arrays allowed."""
    lo, hi = proportion_confint(np.asarray(count), n, alpha=alpha, method="wilson")
    return np.asarray(lo, dtype=np.float64), np.asarray(hi, dtype=np.float64)


def tail_probability(samples, v_grid) -> TailCurve:
    """Empirical P[|value| >= V] with 95% Wilson intervals."""
    vals = np.abs(np.asarray(getattr(samples, "values", samples), dtype=np.float64))
    if vals.size == 0:
        raise DomainError("no samples")
    v = np.asarray(v_grid, dtype=np.float64)
    srt = np.sort(vals)
    counts = srt.size - np.searchsorted(srt, v, side="left")
    lo, hi = wilson(counts, srt.size)
    p = counts / srt.size
    return TailCurve(v, p, np.minimum(lo, p), np.maximum(hi, p), int(srt.size))


def log_gaussian_tail_reference(V, T, eps, c_eps=0.1):
    """Logarithms of the two terms of :func:`gaussian_tail_reference`."""
    if not T > math.exp(math.e):
        raise DomainError("need log log log T > 0")
    lll = math.log(math.log(math.log(T)))
    if not V > 1:
        raise DomainError("need V > 1")
    if not 0 <= eps < 1:
        raise DomainError("need 0 <= eps < 1")
    ll = math.log(math.log(T))
    return lll ** 3 - (1 - eps) * V * V / ll, -c_eps * V * math.log(V)


def gaussian_tail_reference(V, T, eps, c_eps=0.1):
    """(Gaussian-regime term, large-deviation term) of the tail reference curve."""
    a, b = log_gaussian_tail_reference(V, T, eps, c_eps)
    return math.exp(a), math.exp(b)


def tail_crossover(T, eps, c_eps=0.1, lo=1.0001, hi=1e4, tol=1e-10):
    """V where both reference terms agree, by bisection on the log-ratio."""
    def f(v):
        a, b = log_gaussian_tail_reference(v, T, eps, c_eps)
        return a - b

    flo, fhi = f(lo), f(hi)
    if flo * fhi > 0:
        raise DomainError("no sign change of the log-ratio in the bracket")
    while hi - lo > tol * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm * flo > 0:
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ------------------------------------------------------------------ moments

@dataclass(frozen=True)
class MomentEstimate:
    k: float
    nu_hat: float
    stderr: float
    log_nu_hat: float
    mu_hat: float | None = None
    mu_stderr: float | None = None
    n: int = 0

    CSV_HEADER = "logT,k,nu_hat,stderr"


def _log_mean_exp_jackknife(a, blocks=100):
    """log mean exp(a) and the jackknife stderr of mean exp(a) (blocks by index)."""
    n = a.size
    lme = float(logsumexp(a) - math.log(n))
    b = min(blocks, n)
    if b < 2:
        return lme, math.nan
    edges = np.linspace(0, n, b + 1).astype(int)
    shift = float(a.max())
    w = np.exp(a - shift)
    sums = np.add.reduceat(w, edges[:-1])
    sizes = np.diff(edges)
    total = sums.sum()
    loo = (total - sums) / (n - sizes)  # leave-one-block-out means, scaled by exp(-shift)
    var = (b - 1) / b * np.sum((loo - loo.mean()) ** 2)
    if not math.isfinite(shift):
        return lme, math.nan
    if var == 0:
        return lme, 0.0
    log_se = 0.5 * math.log(var) + shift
    return lme, math.exp(log_se) if log_se < 700 else math.inf


def exp_moment(samples, k, blocks=100) -> MomentEstimate:
    """nu_hat_k = mean exp(2k value), with a 100-block jackknife stderr."""
    vals = np.asarray(samples.values, dtype=np.float64)
    if vals.size == 0:
        raise DomainError("no samples")
    if k == 0:
        mu = 1.0 if samples.z is not None else None
        return MomentEstimate(0.0, 1.0, 0.0, 0.0, mu, 0.0 if mu else None, vals.size)
    lme, se = _log_mean_exp_jackknife(2 * k * vals, blocks)
    mu = mu_se = None
    if samples.z is not None and samples.z.size == vals.size:
        with np.errstate(divide="ignore"):
            lz = 2 * k * np.log(np.abs(samples.z))
        lmu, mu_se = _log_mean_exp_jackknife(lz, blocks)
        mu = math.exp(lmu) if lmu < 700 else math.inf
    nu = math.exp(lme) if lme < 700 else math.inf
    return MomentEstimate(float(k), nu, se, lme, mu, mu_se, vals.size)


def moment_from_tails(values, k, dv=1e-3):
    """Rebuild mean exp(2k X) from the signed empirical tails of X:

    1 + int_0^inf 2k e^{2kv} P[X > v] dv - int_{-inf}^0 2k e^{2kv} P[X < v] dv.
    The tails are read at bin midpoints of a uniform grid of step dv.
    """
    x = np.sort(np.asarray(values, dtype=np.float64))
    n = x.size
    if k == 0:
        return 1.0
    top = max(float(x.max()), 0.0)
    bot = min(float(x.min()), 0.0)
    total = 1.0
    if top > 0:
        edges = np.arange(0.0, top + dv, dv)
        mids = 0.5 * (edges[:-1] + edges[1:])
        surv = (n - np.searchsorted(x, mids, side="right")) / n
        total += float(np.sum(surv * np.diff(np.exp(2 * k * edges))))
    if bot < 0:
        edges = -np.arange(0.0, -bot + dv, dv)[::-1]
        mids = 0.5 * (edges[:-1] + edges[1:])
        cdf = np.searchsorted(x, mids, side="left") / n
        total -= float(np.sum(cdf * np.diff(np.exp(2 * k * edges))))
    return total


def moment_growth_scan(k, T_grid, n, seed, threads=1, zeta_cfg=rszeta.DEFAULT, samples=None):
    """Rows (log T, nu_hat, stderr) and the slope of log nu_hat against log log T."""
    T_grid = [float(T) for T in T_grid]
    if any(b <= a for a, b in zip(T_grid, T_grid[1:])):
        raise DomainError("T_grid must be ascending")
    rows = []
    for j, T in enumerate(T_grid):
        ss = samples[j] if samples is not None else draw_samples(T, n, seed, threads=threads,
                                                                 zeta_cfg=zeta_cfg)
        est = exp_moment(ss, k)
        rows.append({"logT": math.log(T), "k": float(k), "nu_hat": est.nu_hat,
                     "stderr": est.stderr, "log_nu_hat": est.log_nu_hat})
    if k == 0 or len(rows) < 2:
        slope = 0.0
    else:
        xx = np.log([r["logT"] for r in rows])
        yy = np.array([r["log_nu_hat"] for r in rows])
        slope = float(np.polyfit(xx, yy, 1)[0])
    return rows, slope


def monotone_verdict(rows):
    """'pass' if nu_hat rises between consecutive T beyond joint 95% intervals,
    'fail' if it drops beyond them, otherwise 'inconclusive'."""
    verdict = "pass"
    for a, b in zip(rows, rows[1:]):
        joint = Z95 * math.hypot(a["stderr"], b["stderr"])
        d = b["nu_hat"] - a["nu_hat"]
        if d < -joint:
            return "fail"
        if d <= joint:
            verdict = "inconclusive"
    return verdict


# ------------------------------------------------------------ union bound

def cascade_depth(T, V):
    """First integer p with 2^p V >= log T."""
    p = 0
    while 2 ** p * V < math.log(T):
        p += 1
    return p


def union_bound_audit(T, V, eps, K, kernel: Kernel, n, seed, threads=1,
                      zeta_cfg=rszeta.DEFAULT, avg_cfg=AveragingConfig(), raw=None,
                      strict=True) -> AuditReport:
    """Compare P[|pi S(UT)| >= V] with the cascade of averaged tail probabilities.

    With ``strict=False`` K may reach or exceed V; the report then records
    ``within_hypotheses = False``.
    """
    logT = math.log(T)
    if not (V < logT and K > 0) or (strict and not K < V):
        raise DomainError("need K < V < log T" if strict else "need K > 0 and V < log T")
    p = max(cascade_depth(T, V), 1)
    H = K * logT / V
    raw = raw if raw is not None else draw_samples(T, n, seed, threads=threads, zeta_cfg=zeta_cfg)
    m = raw.values.size
    left = int(np.count_nonzero(np.abs(raw.values) >= V))
    l_lo, l_hi = wilson(left, m)
    terms = []
    r_lo = r_hi = r_hat = 0.0
    # Bonferroni split of the 5% error over the left side and the p terms
    alpha = 0.05 / (p + 1)
    l_lo, l_hi = wilson(left, m, alpha)
    for r in range(p):
        h = H / 2 ** r
        avg = draw_samples(T, n, seed, mode="averaged", h=h, kernel=kernel, threads=threads,
                           zeta_cfg=zeta_cfg, avg_cfg=avg_cfg)
        thr = (1 - eps) * 2 ** r * V
        c = int(np.count_nonzero(np.abs(avg.values) >= thr))
        lo, hi = wilson(c, avg.values.size, alpha)
        w = (1 + math.log(logT)) ** r
        terms.append({"r": r, "h": h, "threshold": thr, "count": c, "n": int(avg.values.size),
                      "weight": w, "p_hat": c / avg.values.size, "ci_lo": float(lo), "ci_hi": float(hi),
                      "skipped": len(avg.skipped)})
        r_hat += w * c / avg.values.size
        r_lo += w * float(lo)
        r_hi += w * float(hi)
    p_left = left / m
    if float(l_hi) <= r_lo:
        verdict = "pass"
    elif float(l_lo) > r_hi:
        verdict = "fail"
    else:
        verdict = "inconclusive"
    return AuditReport(
        name="union-bound", verdict=verdict,
        params={"T": T, "V": V, "eps": eps, "K": K, "H": H, "p": p, "n": n,
                "within_hypotheses": bool(K < V), "kernel": kernel.describe()},
        statistics={"left": p_left, "left_count": left, "left_ci": [float(l_lo), float(l_hi)],
                    "right": r_hat, "right_ci": [r_lo, r_hi], "terms": terms,
                    "skipped_raw": len(raw.skipped)},
        seed=seed)
