"""Run every audit at its full size and summarise the verdicts.

    python3 scripts/run_audits.py --out-dir results [--quick]

Each audit writes into its own subdirectory together with a manifest, so any
of them can be replayed with ``zal rerun results/<name>/manifest.json``.
A final ``report`` collects all JSON verdicts into ``results/summary``.
``--quick`` shrinks the sample sizes for a smoke run of a few minutes.
"""
import argparse
import os
import shutil
import sys
import time

from zal.cli import dispatch

FULL = {
    "zeros": ["zeta", "zeros", "--t-min", "0", "--t-max", "1e4", "--zeros", "data/zeros_1e4.txt"],
    "drift": ["verify", "prop21", "--t-min", "2", "--t-max", "1e6", "--pairs", "10000"],
    "calibration": ["verify", "prop22", "--T", "1e6", "--V", "4", "--eps", "0.25", "--n", "10000"],
    "union": ["verify", "prop24", "--T", "1e6", "--V", "4", "--eps", "0.25", "--K", "2", "--n", "100000",
              "--seed", "11"],
    "residual": ["verify", "prop31", "--n", "1000"],
    "meanvalue": ["verify", "prop32", "--k", "1,2,3", "--T", "1e6", "--n", "10000"],
    "tails": ["stats", "tail", "--T", "1e6", "--n", "100000", "--seed", "11"],
    "moments": ["stats", "moments", "--k", "1", "--T", "1e4,1e5,1e6", "--n", "100000", "--seed", "11"],
}

QUICK = {"drift": {"--pairs": "500"}, "calibration": {"--n": "1000"}, "union": {"--n": "2000"},
         "residual": {"--n": "10"}, "meanvalue": {"--n": "1000"}, "tails": {"--n": "5000"},
         "moments": {"--n": "5000"}, "zeros": {"--t-max": "1000"}}


def _shrink(name, args):
    args = list(args)
    for flag, value in QUICK.get(name, {}).items():
        args[args.index(flag) + 1] = value
    return args


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="results")
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--only", default="", help="comma-separated subset of " + ",".join(FULL))
    ns = ap.parse_args()
    names = [n for n in FULL if not ns.only or n in ns.only.split(",")]
    codes = {}
    for name in names:
        args = _shrink(name, FULL[name]) if ns.quick else FULL[name]
        out = os.path.join(ns.out_dir, name)
        t0 = time.perf_counter()
        codes[name] = dispatch(args + ["--out-dir", out])
        print(f"[{name}] exit {codes[name]} in {time.perf_counter() - t0:.0f}s", flush=True)
    summary = os.path.join(ns.out_dir, "summary")
    os.makedirs(summary, exist_ok=True)
    for name in names:
        for f in os.listdir(os.path.join(ns.out_dir, name)):
            if f.endswith(".json") and f not in ("manifest.json", "kernel.json"):
                shutil.copy(os.path.join(ns.out_dir, name, f), os.path.join(summary, f))
    dispatch(["report", "--out-dir", summary])
    return max(codes.values(), default=0)


if __name__ == "__main__":
    sys.exit(main())
