"""Kernel averages I(tau, h) = int pi S(tau + x/h) phi(x) dx.

With pi S(t) = pi (N(t) - 1) - theta(t), the average over a window |x| <= X
splits into three exactly computable pieces:

* ``pi S(tau) M`` with ``M = Phi(X) - Phi(-X)``;
* one kernel-CDF difference per zero ordinate in the window, since N jumps by
  one at each zero (so the step discontinuities are integrated exactly);
* ``-int (theta(tau + x/h) - theta(tau)) phi(x) dx``, a smooth integral done by
  composite Simpson on the kernel grid, with a Richardson error estimate.

The discarded tails are bounded with ``|pi S(t)| <= C log(2 + t)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from . import rszeta
from .audit import AuditReport
from .errors import DomainError, NumericError
from .kernel import Kernel
from .rng import uniforms


@dataclass(frozen=True)
class AveragingConfig:
    tol: float = 1e-6
    growth_constant: float = 5.0
    zeta: rszeta.ZetaConfig = field(default_factory=rszeta.ZetaConfig)


@dataclass(frozen=True)
class AveragedSample:
    tau: float
    h: float
    value: float
    quad_error: float
    window: tuple

    CSV_HEADER = "tau,h,value,quad_error"

    def csv_row(self):
        return f"{self.tau!r},{self.h!r},{self.value!r},{self.quad_error!r}"


def truncation_halfwidth(kernel: Kernel, tau, h, budget, growth_constant=5.0):
    """Smallest grid X whose discarded two-sided tail is below ``budget``."""
    step = kernel.spec.grid_step
    cap = kernel.table_halfwidth if kernel.rapid_decay else 1e7

    def discarded(x):
        return growth_constant * kernel.log_weighted_tail(x, tau, h)

    if discarded(cap) > budget:
        raise NumericError("kernel tail too heavy for the requested tolerance",
                           achieved=discarded(cap))
    lo, hi = step, cap
    if discarded(lo) <= budget:
        return lo
    while hi - lo > step:
        mid = 0.5 * (lo + hi)
        if discarded(mid) <= budget:
            hi = mid
        else:
            lo = mid
    return math.ceil(hi / step) * step


def _simpson_even(f, dx):
    """2 * int_0^X f for f sampled at 0, dx, ..., X (odd length)."""
    return 2 * integrate.simpson(f, dx=dx)


def _theta_term(kernel, tau, h, X):
    dx = kernel.spec.grid_step
    n = int(round(X / dx))
    n += n % 2  # even number of panels for Simpson at step 2dx as well
    if n % 4:
        n += 2
    x = np.arange(n + 1) * dx
    u = x / h
    th0 = rszeta._theta_ld(np.array([tau]))[0][0]
    tp = rszeta._theta_ld(tau + u)[0]
    tm = rszeta._theta_ld(np.maximum(tau - u, rszeta.T_MIN))[0]
    d = np.asarray((tp + tm) / 2 - th0, dtype=np.float64)
    f = d * kernel.phi(x)
    fine = _simpson_even(f, dx)
    coarse = _simpson_even(f[::2], 2 * dx)
    return fine, abs(fine - coarse) / 15 + 1e-15 * abs(fine)


def averaged_batch(taus, h, kernel: Kernel, tol=None, cfg: AveragingConfig = AveragingConfig()):
    """I(tau_i, h) for many heights; zeros are located once per cluster of windows.

    Returns (values, errors, X). Raises NumericError if any error exceeds tol.
    """
    tol = cfg.tol if tol is None else tol
    taus = np.atleast_1d(np.asarray(taus, dtype=np.float64))
    if not h > 0:
        raise DomainError("h must be positive")
    values = np.empty(taus.size)
    errors = np.empty(taus.size)
    if taus.size == 0:
        return values, errors, 0.0
    X = truncation_halfwidth(kernel, float(taus.max()), h, 0.5 * tol, cfg.growth_constant)
    half = X / h
    if taus.min() - half < rszeta.T_MIN:
        raise DomainError(f"window reaches below t = 2 (tau - X/h = {taus.min() - half:.3g})")
    trunc = cfg.growth_constant * np.array([kernel.log_weighted_tail(X, t, h) for t in
                                            (taus.min(), taus.max())]).max()
    cX, cmX = kernel.cdf(X), kernel.cdf(-X)
    loc_budget = 0.25 * tol
    for grp in _window_clusters(taus, half):
        tg = taus[grp]
        region = rszeta.certified_region(float(tg.min() - half), float(tg.max() + half), cfg.zeta)
        lo_b, hi_b = region.lo, region.hi
        n_tau = region.count(tg)
        k_tau = n_tau - region.b - 1  # brackets whose zero lies at or below tau
        s_tau = math.pi * (n_tau - 1) - rszeta.theta(tg)
        mid0 = 0.5 * (lo_b + hi_b)
        lo_idx = np.searchsorted(mid0, tg - half, side="right")
        hi_idx = np.searchsorted(mid0, tg + half, side="right")
        # each zero is located only as precisely as the kernel weight near it requires
        need = np.full(lo_b.size, np.inf)
        for j in range(tg.size):
            sl = slice(lo_idx[j], hi_idx[j])
            nz = max(hi_idx[j] - lo_idx[j], 1)
            dist = np.maximum(np.maximum(lo_b[sl] - tg[j], tg[j] - hi_b[sl]), 0.0) * h
            env = kernel.envelope(dist)
            with np.errstate(divide="ignore"):
                w = np.where(env > 0, 2 * loc_budget / (nz * math.pi * h * np.maximum(env, 1e-300)), np.inf)
            need[sl] = np.minimum(need[sl], np.maximum(w, cfg.zeta.zero_tol))
        gam, width = region.zeros_with_width(need) if lo_b.size else (np.zeros(0), np.zeros(0))
        for j, i in enumerate(grp):
            below = gam[lo_idx[j]:min(k_tau[j], hi_idx[j])]
            above = gam[max(k_tau[j], lo_idx[j]):hi_idx[j]]
            jumps = (np.sum(cX - kernel.cdf((above - tg[j]) * h))
                     - np.sum(kernel.cdf((below - tg[j]) * h) - cmX))
            th_int, th_err = _theta_term(kernel, float(tg[j]), h, X)
            values[i] = s_tau[j] * (cX - cmX) + math.pi * jumps - th_int
            sl = slice(lo_idx[j], hi_idx[j])
            dist = np.maximum(np.maximum(lo_b[sl] - tg[j], tg[j] - hi_b[sl]), 0.0) * h
            loc = float(np.sum(0.5 * width[sl] * h * kernel.envelope(dist)))
            errors[i] = trunc + th_err + math.pi * (loc + 1e-13 * (hi_idx[j] - lo_idx[j])) + 1e-13 * abs(s_tau[j])
    if np.any(errors > tol):
        raise NumericError(f"averaging error {errors.max():.3g} exceeds tol {tol:.3g}",
                           achieved=float(errors.max()))
    return values, errors, X


def _window_clusters(taus, half):
    order = np.argsort(taus, kind="stable")
    s = taus[order]
    spacing = 2 * np.pi / np.log(np.maximum(s, 20.0) / (2 * np.pi))
    groups, start = [], 0
    for i in range(1, s.size + 1):
        if (i == s.size or s[i] - s[i - 1] > 2 * half + 200 * spacing[i]
                or s[i] - s[start] > 5000 * spacing[i]):
            groups.append(order[start:i])
            start = i
    return groups


def averaged_im_log_zeta(tau, h, kernel: Kernel, tol=None, cfg: AveragingConfig = AveragingConfig()):
    """I(tau, h) with an error estimate; raises NumericError if it exceeds tol."""
    vals, errs, X = averaged_batch([tau], h, kernel, tol, cfg)
    t_lo, t_hi = tau - X / h, tau + X / h
    return AveragedSample(float(tau), float(h), float(vals[0]), float(errs[0]), (t_lo, t_hi))


def average_callable(g, tau, h, kernel: Kernel, X):
    """int_{-X}^{X} g(tau + x/h) phi(x) dx for a smooth vectorized g (synthetic mode)."""
    dx = kernel.spec.grid_step
    n = 2 * int(math.ceil(X / dx / 2))
    x = np.linspace(-n * dx, n * dx, 2 * n + 1)
    return float(integrate.simpson(g(tau + x / h) * kernel.phi(x), dx=dx))


def brute_force_average(tau, h, kernel: Kernel, X, step, cfg: rszeta.ZetaConfig = rszeta.DEFAULT):
    """Midpoint Riemann sum of pi S(tau + x/h) phi(x) on |x| <= X (slow oracle)."""
    n = int(math.ceil(2 * X / step))
    x = -X + (np.arange(n) + 0.5) * (2 * X / n)
    vals = math.pi * rszeta.s_of_t(tau + x / h, cfg)
    return float(np.sum(vals * kernel.phi(x)) * (2 * X / n))


# ----------------------------------------------------------- iteration events

def premise_radii(T):
    """Integers r in 0 .. floor(log log T)."""
    return np.arange(int(math.floor(math.log(math.log(T)))) + 1)


@dataclass
class _Premises:
    tau: np.ndarray
    s_tau: np.ndarray


def _screen(T, V, n_samples, seed, cfg, stream="tau"):
    taus = math.sqrt(T) + (T - math.sqrt(T)) * uniforms(seed, 0, n_samples, stream)
    s = math.pi * rszeta.s_of_t(taus, cfg.zeta) if n_samples else np.zeros(0)
    return _Premises(taus, np.asarray(s))


def _event_counts(pre, T, V, eps, K, a, kernel, cfg):
    H = K * math.log(T) / V
    radii = premise_radii(T)
    hits = counter = 0
    details = []
    for sign in (1, -1):
        cand = np.flatnonzero(sign * pre.s_tau >= V)
        for i in cand:
            tau = float(pre.tau[i])
            back = tau - sign * np.exp(radii) / H
            side = math.pi * rszeta.s_of_t(back, cfg.zeta)
            if not np.all(sign * side >= -2 * V):
                continue
            hits += 1
            shifted = tau + sign * a / H
            val = averaged_im_log_zeta(shifted, H, kernel, cfg=cfg).value
            ok = sign * val >= (1 - eps) * V
            counter += not ok
            details.append({"tau": tau, "sign": sign, "I": val, "ok": bool(ok)})
    return hits, counter, details


def iteration_event_check(T, V, eps, K, a, n_samples, kernel: Kernel, seed,
                          cfg: AveragingConfig = AveragingConfig(), screened=None,
                          strict=True) -> AuditReport:
    """Empirical check of the implication 'pi S(tau) >= V and no deep dips behind tau
    together give I(tau + a/H, H) >= (1 - eps) V', and of its mirror image.

    With ``strict=False`` K may exceed V; the report then records
    ``within_hypotheses = False``.
    """
    if not (1 < K and V < math.log(T)) or (strict and not K < V):
        raise DomainError("need 1 < K < V < log T" if strict else "need K > 1 and V < log T")
    if not 0 < eps < 0.5 or not a > 0:
        raise DomainError("need 0 < eps < 1/2 and a > 0")
    pre = screened if screened is not None else _screen(T, V, n_samples, seed, cfg)
    hits, counter, details = _event_counts(pre, T, V, eps, K, a, kernel, cfg)
    verdict = "inconclusive" if hits == 0 else ("pass" if counter == 0 else "fail")
    return AuditReport(
        name="iteration-event", verdict=verdict,
        params={"T": T, "V": V, "eps": eps, "K": K, "a": a, "H": K * math.log(T) / V,
                "n_samples": n_samples, "within_hypotheses": bool(K < V), "kernel": kernel.describe()},
        statistics={"premises_hit": hits, "counterexamples": counter, "events": details},
        seed=seed)


def calibration_sweep(T, V, eps, n_samples, kernel: Kernel, seed, holdout_seed,
                      a_grid=None, K_grid=None, cfg: AveragingConfig = AveragingConfig(),
                      within_hypotheses_only=False):
    """Grid search over (a, K); returns (chosen pair or None, rows, held-out report).

    The grid spans K in (1, 64]. Rows with K >= V lie outside the range
    1 < K < V where the implication is claimed and are flagged as such; with
    ``within_hypotheses_only`` they are dropped. The chosen pair minimises K,
    then a.
    """
    a_grid = np.array([1, 2, 4, 8, 16, 32, 64], float) if a_grid is None else np.asarray(a_grid, float)
    if K_grid is None:
        K_grid = np.array([1.25, 1.5, 2, 2.5, 3, 3.5, 4, 8, 16, 32, 64], float)
    K_grid = np.asarray([k for k in K_grid if k > 1 and (k < V or not within_hypotheses_only)], float)
    pre = _screen(T, V, n_samples, seed, cfg, stream="calibration")
    rows = []
    for K in K_grid:
        for a in a_grid:
            hits, counter, _ = _event_counts(pre, T, V, eps, K, a, kernel, cfg)
            rows.append({"a": float(a), "K": float(K), "premises_hit": hits, "counterexamples": counter,
                         "within_hypotheses": bool(K < V)})
    usable = [r for r in rows if r["premises_hit"] > 0 and r["counterexamples"] == 0]
    usable.sort(key=lambda r: (r["K"], r["a"]))
    chosen = (usable[0]["a"], usable[0]["K"]) if usable else None
    report = None
    if chosen is not None:
        report = iteration_event_check(T, V, eps, chosen[1], chosen[0], n_samples, kernel,
                                       holdout_seed, cfg, strict=False)
    return chosen, rows, report
