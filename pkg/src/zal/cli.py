"""Command-line front end.

    zal zeta point --t 100
    zal verify prop21 --t-min 100 --t-max 1e6 --pairs 10000 --seed 7
    zal rerun out/manifest.json

Exit codes: 0 success, 1 audit failure, 2 usage or domain error,
3 integrity or numerical failure (for instance a Turing check that fails).
Every run writes ``manifest.json`` into ``--out-dir`` with the fully resolved
configuration; ``zal rerun`` replays it.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys

import numpy as np

from . import __version__
from . import rszeta, stats
from .audit import AuditReport
from .averaging import AveragingConfig, averaged_im_log_zeta, calibration_sweep
from .config import resolve
from .errors import DomainError, IntegrityError, ParseError, PreconditionError, ZalError
from .kernel import KernelSpec, build_kernel
from .primesum import (
    PrimeSumDecomposition,
    load_primes,
    mean_value_check,
    required_limit,
    save_primes,
    sieve_primes,
    split_decomposition,
)
from .rng import uniforms
from .zerotable import load_table, validate

COMMON = {
    "out_dir": "zal-out", "seed": 7, "threads": os.cpu_count() or 1,
    "family": "smooth-bump-squared", "support": 1.0, "grid_step": 0.05, "trunc_tol": 1e-10,
    "order": rszeta.MAX_ORDER, "tol": 1e-6, "growth_constant": 5.0, "zeros": "", "prime_cache": "",
}

COMMANDS = {
    ("kernel", "inspect"): {},
    ("zeta", "point"): {"t": 100.0},
    ("zeta", "zeros"): {"t_min": 2.0, "t_max": 1e4, "match_tol": 1e-6},
    ("zeta", "scan"): {"t_min": 100.0, "t_max": 200.0, "n": 101},
    ("avg", "point"): {"tau": 1e5, "h": 5.0},
    ("primes", "residual"): {"n": 1000, "tau_min": 1e4, "tau_max": 1e6, "h_min": 2.0,
                             "h_max": 10.0, "limit": 10.0, "T_split": 1e6, "V_split": 10.0},
    ("primes", "meanvalue"): {"k": 1, "T": 1e6, "n": 10000, "x": 0.0, "h": 0.0, "limit": 10.0},
    ("stats", "sample"): {"T": 1e6, "n": 10000, "mode": "raw", "h": 5.0},
    ("stats", "tail"): {"T": 1e6, "n": 10000, "v_grid": [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0]},
    ("stats", "moments"): {"k": 1.0, "T": [1e4, 1e5, 1e6], "n": 100000},
    ("verify", "prop21"): {"t_min": 100.0, "t_max": 1e6, "pairs": 10000, "limit": 10.0},
    ("verify", "prop22"): {"T": 1e6, "V": 4.0, "eps": 0.25, "n": 10000, "holdout_seed": 8,
                           "strict": 0},
    ("verify", "prop24"): {"T": 1e6, "V": 4.0, "eps": 0.25, "K": 2.0, "n": 100000, "strict": 1},
    ("verify", "prop31"): {"n": 1000, "tau_min": 1e4, "tau_max": 1e6, "ext_tau_max": 1e7,
                           "h_min": 2.0, "h_max": 10.0, "limit": 10.0, "growth": 2.0},
    ("verify", "prop32"): {"k": [1, 2, 3], "T": 1e6, "n": 10000, "limit": 10.0},
    ("report",): {},
}

HELP = {
    "t": "height on the critical line", "tau": "centre of the average", "h": "averaging scale H",
    "T": "height scale (list for stats moments)", "n": "number of samples or points",
    "k": "moment parameter", "V": "tail level", "eps": "relative slack epsilon",
    "K": "scale constant, H = K log(T) / V", "zeros": "reference zero table for validation",
}


def _int(text):
    """Integers given as 1e4 are accepted when exact."""
    v = float(text)
    if v != int(v):
        raise argparse.ArgumentTypeError(f"not an integer: {text}")
    return int(v)


def _flag(key):
    return "--" + key.replace("_", "-")


def build_parser():
    ap = argparse.ArgumentParser(prog="zal", description="critical-line argument laboratory")
    ap.add_argument("--version", action="version", version=f"zal {__version__}")
    sub = ap.add_subparsers(dest="group", required=True)
    groups = {}
    for cmd, opts in COMMANDS.items():
        if len(cmd) == 1:
            p = sub.add_parser(cmd[0])
        else:
            if cmd[0] not in groups:
                g = sub.add_parser(cmd[0])
                groups[cmd[0]] = g.add_subparsers(dest="action", required=True)
            p = groups[cmd[0]].add_parser(cmd[1])
        p.add_argument("--config", default=argparse.SUPPRESS, help="flat key = value file")
        for key, default in {**COMMON, **opts}.items():
            kind = type(default)
            kw = {"default": argparse.SUPPRESS, "help": HELP.get(key, key.replace("_", " "))}
            if isinstance(default, list):
                kw["type"] = str
                kw["help"] += " (comma-separated)"
            elif kind in (int, float, str):
                kw["type"] = _int if kind is int else kind
            p.add_argument(_flag(key), dest=key, **kw)
        p.set_defaults(_cmd=cmd)
    rr = sub.add_parser("rerun", help="replay a manifest")
    rr.add_argument("manifest")
    rr.add_argument("--out-dir", dest="out_dir", default=argparse.SUPPRESS)
    rr.set_defaults(_cmd=("rerun",))
    return ap


# ------------------------------------------------------------------ helpers

class Run:
    def __init__(self, cmd, cfg):
        self.cmd = cmd
        self.cfg = cfg
        self.outputs = []
        os.makedirs(cfg["out_dir"], exist_ok=True)

    def path(self, name):
        return os.path.join(self.cfg["out_dir"], name)

    def write(self, name, text):
        with open(self.path(name), "w", newline="\n") as fh:
            fh.write(text)
        self.outputs.append(name)

    def write_report(self, report: AuditReport, name):
        self.write(name, report.to_json() + "\n")

    def params(self):
        """Configuration that affects results (no paths, no thread count)."""
        return {k: v for k, v in sorted(self.cfg.items()) if k not in ("out_dir", "threads", "prime_cache")}

    def kernel(self):
        spec = KernelSpec(self.cfg["family"], float(self.cfg["support"]), float(self.cfg["grid_step"]),
                          float(self.cfg["trunc_tol"]))
        return build_kernel(spec)

    def zcfg(self):
        return rszeta.ZetaConfig(correction_order=int(self.cfg["order"]))

    def acfg(self):
        return AveragingConfig(tol=float(self.cfg["tol"]), growth_constant=float(self.cfg["growth_constant"]),
                               zeta=self.zcfg())

    def primes(self, limit):
        cache = self.cfg["prime_cache"]
        if cache and os.path.exists(cache):
            table = load_primes(cache)
            if table.limit >= limit:
                return table
        table = sieve_primes(int(math.ceil(limit)))
        if cache:
            save_primes(table, cache)
        return table

    def manifest(self):
        digests = {}
        for name in self.outputs:
            with open(self.path(name), "rb") as fh:
                digests[name] = hashlib.sha256(fh.read()).hexdigest()
        doc = {"tool": "zal", "version": __version__, "command": list(self.cmd),
               "config": {k: v for k, v in sorted(self.cfg.items()) if k != "threads"},
               "outputs": digests}
        with open(self.path("manifest.json"), "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
            fh.write("\n")


def _csv(header, rows):
    return header + "\n" + "".join(r + "\n" for r in rows)


# ------------------------------------------------------------------ commands

def cmd_kernel_inspect(run):
    k = run.kernel()
    d = k.describe()
    d.update(phi_0=float(k.phi(0.0)), effective_halfwidth={str(m): k.effective_halfwidth(m) for m in (2, 4, 8)})
    run.write("kernel.json", json.dumps(d, sort_keys=True, indent=2) + "\n")
    print(f"{k.family} Lambda={k.support} phi(0)={d['phi_0']:.6g} checksum={d['checksum'][:12]}")
    return 0


def cmd_zeta_point(run):
    s = rszeta.critical_samples([run.cfg["t"]], run.zcfg())[0]
    text = _csv(rszeta.CriticalSample.CSV_HEADER, [s.csv_row()])
    run.write("point.csv", text)
    sys.stdout.write(text)
    return 0


def cmd_zeta_scan(run):
    c = run.cfg
    ts = np.linspace(c["t_min"], c["t_max"], int(c["n"]))
    rows = [s.csv_row() for s in rszeta.critical_samples(ts, run.zcfg())]
    run.write("scan.csv", _csv(rszeta.CriticalSample.CSV_HEADER, rows))
    print(f"{len(rows)} points written to scan.csv")
    return 0


def cmd_zeta_zeros(run):
    c = run.cfg
    t_min = max(float(c["t_min"]), rszeta.T_MIN)
    zl = rszeta.locate_zeros(t_min, float(c["t_max"]), run.zcfg())
    run.write("zeros.txt", "".join(f"{g:.10f}\n" for g in zl.ordinates))
    print(f"{len(zl)} zeros in ({t_min:g}, {c['t_max']:g}], first index {zl.first_index}")
    if c["zeros"]:
        rep = validate(zl, load_table(c["zeros"]), float(c["match_tol"]), window=(t_min, float(c["t_max"])))
        run.write_report(rep, "zeros_validation.json")
        st = rep.statistics
        print(f"validation: missing {st['missing']}, spurious {st['spurious']}, "
              f"max discrepancy {st['max_discrepancy']:.3g}")
        return 0 if rep.passed else 1
    return 0


def cmd_avg_point(run):
    c = run.cfg
    s = averaged_im_log_zeta(float(c["tau"]), float(c["h"]), run.kernel(), cfg=run.acfg())
    text = _csv(s.CSV_HEADER, [s.csv_row()])
    run.write("avg.csv", text)
    sys.stdout.write(text)
    return 0


def _residual_rows(run, tau_min, tau_max, n, stream_offset=0):
    c = run.cfg
    kernel = run.kernel()
    table = run.primes(required_limit(kernel, float(c["h_max"])))
    u = uniforms(int(c["seed"]), stream_offset, 2 * n, "residual")
    taus = tau_min + (tau_max - tau_min) * u[0::2]
    hs = float(c["h_min"]) + (float(c["h_max"]) - float(c["h_min"])) * u[1::2]
    rows, res = [], []
    acfg = run.acfg()
    T_split = float(c.get("T_split", 1e6))
    V_split = float(c.get("V_split", 10.0))
    for tau, h in zip(taus, hs):
        val = averaged_im_log_zeta(float(tau), float(h), kernel, cfg=acfg).value
        dec = split_decomposition(float(tau), float(h), kernel, table, T_split, V_split)
        r = val - dec.total_im
        res.append(r)
        rows.append(dec.csv_row(r))
    return rows, np.array(res)


def cmd_primes_residual(run):
    c = run.cfg
    rows, res = _residual_rows(run, float(c["tau_min"]), float(c["tau_max"]), int(c["n"]))
    run.write("residual.csv", _csv(PrimeSumDecomposition.CSV_HEADER, rows))
    mx = float(np.max(np.abs(res))) if res.size else 0.0
    rep = AuditReport("prime-sum-residual", "pass" if mx <= float(c["limit"]) else "fail",
                      params=run.params(), statistics={"max_abs_residual": mx,
                                                  "mean_residual": float(np.mean(res)) if res.size else 0.0},
                      seed=int(c["seed"]))
    run.write_report(rep, "residual.json")
    print(f"max |residual| = {mx:.4g} over {res.size} samples")
    return 0 if rep.passed else 1


def _meanvalue_reports(run, ks):
    c = run.cfg
    kernel = run.kernel()
    T = float(c["T"])
    reports = []
    for k in ks:
        k = int(k)
        x = float(c.get("x", 0.0)) or (T / math.log(T)) ** (1.0 / k)
        h = float(c.get("h", 0.0)) or math.log(x) / kernel.support
        table = run.primes(x)
        p = table.primes[: table.upto(x)]
        coeffs = dict(zip(p.tolist(), kernel.phi_hat(np.log(p) / h).tolist()))
        rep = mean_value_check(coeffs, x, k, T, int(c["n"]), int(c["seed"]), float(c["limit"]))
        rep.params["h"] = h
        reports.append(rep)
    return reports


def cmd_primes_meanvalue(run):
    rep = _meanvalue_reports(run, [run.cfg["k"]])[0]
    run.write_report(rep, "meanvalue.json")
    st = rep.statistics
    print(f"k={rep.params['k']}: moment {st['moment']:.4g}, bound {st['diagonal_bound']:.4g}, "
          f"ratio {st['ratio']:.3f} (upper CI {st['ratio_ci_hi']:.3f})")
    return 0 if rep.passed else 1


def _samples(run, T, n, mode="raw", h=None):
    kernel = run.kernel() if mode == "averaged" else None
    return stats.draw_samples(float(T), int(n), int(run.cfg["seed"]), mode=mode, h=h, kernel=kernel,
                              zeta_cfg=run.zcfg(), avg_cfg=run.acfg(), threads=int(run.cfg["threads"]))


def cmd_stats_sample(run):
    c = run.cfg
    ss = _samples(run, c["T"], c["n"], c["mode"], float(c["h"]) if c["mode"] == "averaged" else None)
    rows = [f"{int(i)},{u!r},{v!r}" for i, u, v in zip(ss.index, ss.u.tolist(), ss.values.tolist())]
    run.write("samples.csv", _csv("i,u,value", rows))
    if ss.skipped:
        run.write("skipped.csv", _csv("i,reason", [f"{i},{r}" for i, r in ss.skipped]))
    print(f"{ss.values.size} samples, {len(ss.skipped)} skipped; mean {np.mean(ss.values):.4g}")
    return 0


def cmd_stats_tail(run):
    c = run.cfg
    ss = _samples(run, c["T"], c["n"])
    curve = stats.tail_probability(ss, c["v_grid"])
    run.write("tail.csv", _csv(curve.CSV_HEADER, curve.csv_rows()))
    print(f"tail curve on {len(c['v_grid'])} levels from {curve.n} samples")
    return 0


def cmd_stats_moments(run):
    c = run.cfg
    Ts = c["T"] if isinstance(c["T"], list) else [c["T"]]
    samples = [_samples(run, T, c["n"]) for T in Ts]
    rows, slope = stats.moment_growth_scan(float(c["k"]), Ts, int(c["n"]), int(c["seed"]), samples=samples)
    run.write("moments.csv", _csv("logT,k,nu_hat,stderr",
                                  [f"{r['logT']!r},{r['k']!r},{r['nu_hat']!r},{r['stderr']!r}" for r in rows]))
    print(f"slope of log nu_hat against log log T: {slope:.4f}")
    return 0


def drift_pairs(seed, n, t_min, t_max):
    """Half the pairs uniform on the square, half with t2 - t1 below 2."""
    u = uniforms(seed, 0, 3 * n, "pairs").reshape(n, 3)
    a = t_min + (t_max - t_min) * u[:, 0]
    b = t_min + (t_max - t_min) * u[:, 1]
    close = u[:, 2] >= 0.5
    t1 = np.where(close, np.minimum(a, t_max - 2.0), np.minimum(a, b))
    t2 = np.where(close, np.minimum(t1 + 2.0 * u[:, 1], t_max), np.maximum(a, b))
    return t1, t2


def cmd_verify_prop21(run):
    c = run.cfg
    t1, t2 = drift_pairs(int(c["seed"]), int(c["pairs"]), float(c["t_min"]), float(c["t_max"]))
    slack = rszeta.drift_check(t1, t2, run.zcfg())
    j = int(np.argmin(slack))
    mn = float(slack[j])
    rep = AuditReport("drift", "pass" if mn >= -float(c["limit"]) else "fail", params=run.params(),
                      statistics={"min_slack": mn, "argmin": [float(t1[j]), float(t2[j])],
                                  "negative": int(np.count_nonzero(slack < 0)),
                                  "mean_slack": float(np.mean(slack))},
                      seed=int(c["seed"]))
    run.write_report(rep, "prop21.json")
    print(f"min slack {mn:.4g} over {slack.size} pairs")
    return 0 if rep.passed else 1


def cmd_verify_prop22(run):
    c = run.cfg
    chosen, rows, held = calibration_sweep(float(c["T"]), float(c["V"]), float(c["eps"]), int(c["n"]),
                                           run.kernel(), int(c["seed"]), int(c["holdout_seed"]),
                                           cfg=run.acfg(), within_hypotheses_only=bool(c["strict"]))
    run.write("prop22_sweep.csv", _csv("a,K,premises_hit,counterexamples,within_hypotheses",
                                       [f"{r['a']!r},{r['K']!r},{r['premises_hit']},{r['counterexamples']},"
                                        f"{int(r['within_hypotheses'])}" for r in rows]))
    if held is None:
        rep = AuditReport("iteration-event", "inconclusive", params=run.params(),
                          statistics={"chosen": None}, seed=int(c["seed"]))
    else:
        rep = held
        rep.statistics["chosen"] = {"a": chosen[0], "K": chosen[1]}
    run.write_report(rep, "prop22.json")
    print(f"chosen (a, K) = {chosen}; held-out verdict {rep.verdict}")
    return 1 if rep.verdict == "fail" else 0


def cmd_verify_prop24(run):
    c = run.cfg
    rep = stats.union_bound_audit(float(c["T"]), float(c["V"]), float(c["eps"]), float(c["K"]), run.kernel(),
                                  int(c["n"]), int(c["seed"]), threads=int(c["threads"]),
                                  zeta_cfg=run.zcfg(), avg_cfg=run.acfg(), strict=bool(c["strict"]))
    run.write_report(rep, "prop24.json")
    st = rep.statistics
    print(f"left {st['left']:.4g} vs right {st['right']:.4g}: {rep.verdict}")
    return 1 if rep.verdict == "fail" else 0


def cmd_verify_prop31(run):
    c = run.cfg
    n = int(c["n"])
    rows, res = _residual_rows(run, float(c["tau_min"]), float(c["tau_max"]), n)
    rows2, res2 = _residual_rows(run, float(c["tau_min"]), float(c["ext_tau_max"]), n, stream_offset=2 * n)
    run.write("prop31_base.csv", _csv(PrimeSumDecomposition.CSV_HEADER, rows))
    run.write("prop31_ext.csv", _csv(PrimeSumDecomposition.CSV_HEADER, rows2))
    m1 = float(np.max(np.abs(res)))
    m2 = float(np.max(np.abs(res2)))
    ok = m1 <= float(c["limit"]) and m2 <= float(c["growth"]) * m1
    rep = AuditReport("prime-sum-residual", "pass" if ok else "fail", params=run.params(),
                      statistics={"max_abs_residual": m1, "max_abs_residual_ext": m2,
                                  "growth_ratio": m2 / m1 if m1 > 0 else math.inf},
                      seed=int(c["seed"]))
    run.write_report(rep, "prop31.json")
    print(f"max |residual| {m1:.4g} (base), {m2:.4g} (extended)")
    return 0 if ok else 1


def cmd_verify_prop32(run):
    reps = _meanvalue_reports(run, run.cfg["k"])
    ok = True
    for rep in reps:
        run.write_report(rep, f"prop32_k{rep.params['k']}.json")
        st = rep.statistics
        print(f"k={rep.params['k']}: ratio {st['ratio']:.3f} (upper CI {st['ratio_ci_hi']:.3f})")
        ok &= rep.passed
    return 0 if ok else 1


def cmd_report(run):
    out = run.cfg["out_dir"]
    rows, lines = [], []
    for name in sorted(os.listdir(out)):
        if not name.endswith(".json") or name == "manifest.json" or name == "kernel.json":
            continue
        with open(os.path.join(out, name)) as fh:
            doc = json.load(fh)
        if "verdict" not in doc:
            continue
        rows.append(f"{name},{doc['name']},{doc['verdict']}")
        stats_ = {k: v for k, v in doc.get("statistics", {}).items() if isinstance(v, (int, float))}
        lines.append(f"{name}: {doc['name']} -> {doc['verdict']} " +
                     ", ".join(f"{k}={v:.4g}" if isinstance(v, float) else f"{k}={v}"
                               for k, v in sorted(stats_.items())))
    run.write("summary.csv", _csv("file,audit,verdict", rows))
    run.write("summary.txt", "\n".join(lines) + ("\n" if lines else ""))
    print("\n".join(lines) if lines else "no audit reports found")
    return 0


HANDLERS = {
    ("kernel", "inspect"): cmd_kernel_inspect,
    ("zeta", "point"): cmd_zeta_point,
    ("zeta", "zeros"): cmd_zeta_zeros,
    ("zeta", "scan"): cmd_zeta_scan,
    ("avg", "point"): cmd_avg_point,
    ("primes", "residual"): cmd_primes_residual,
    ("primes", "meanvalue"): cmd_primes_meanvalue,
    ("stats", "sample"): cmd_stats_sample,
    ("stats", "tail"): cmd_stats_tail,
    ("stats", "moments"): cmd_stats_moments,
    ("verify", "prop21"): cmd_verify_prop21,
    ("verify", "prop22"): cmd_verify_prop22,
    ("verify", "prop24"): cmd_verify_prop24,
    ("verify", "prop31"): cmd_verify_prop31,
    ("verify", "prop32"): cmd_verify_prop32,
    ("report",): cmd_report,
}


def _execute(cmd, cfg):
    run = Run(cmd, cfg)
    code = HANDLERS[cmd](run)
    run.manifest()
    return code


def dispatch(argv=None, environ=None):
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    flags = {k: v for k, v in vars(ns).items() if not k.startswith("_") and k not in ("group", "action")}
    cmd = ns._cmd
    try:
        if cmd == ("rerun",):
            with open(flags.pop("manifest")) as fh:
                doc = json.load(fh)
            cmd = tuple(doc["command"])
            cfg = dict(doc["config"])
            cfg["threads"] = COMMON["threads"]
            if "out_dir" in flags:
                cfg["out_dir"] = flags["out_dir"]
            return _execute(cmd, cfg)
        defaults = {**COMMON, **COMMANDS[cmd]}
        cfg = resolve(defaults, flags, flags.pop("config", None), environ)
        return _execute(cmd, cfg)
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, PreconditionError, ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
