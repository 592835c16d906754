"""Write a reference table of zeta-zero ordinates computed with mpmath.

    python scripts/make_reference_table.py --t-max 1e4 --out data/zeros_1e4.txt

Uses mpmath's own Riemann-Siegel code (``fp.siegelz``, accurate to ~1e-12 for
the ordinates here) and checks the total against ``mpmath.nzeros``,
so the table is independent of ``zal.rszeta``. Published tables (Odlyzko's
``zeros1`` for instance) can be used in its place; the format is the same.
"""
import argparse
import math
import sys
import time

import mpmath
import numpy as np


def gram_points(n_max):
    fp = mpmath.fp
    out = []
    g = 9.6669
    for n in range(-1, n_max + 1):
        for _ in range(50):
            step = (fp.siegeltheta(g) - n * math.pi) / (0.5 * math.log(g / (2 * math.pi)))
            g -= step
            if abs(step) < 1e-12:
                break
        out.append(g)
        g += 2 * math.pi / math.log(g / (2 * math.pi))
    return np.array(out)


def scan(lo, hi, per_interval, z):
    ts = np.linspace(lo, hi, per_interval + 1)
    vals = np.array([z(t) for t in ts])
    return [(ts[i], ts[i + 1], vals[i], vals[i + 1])
            for i in range(per_interval) if vals[i] * vals[i + 1] < 0]


def refine(a, b, fa, fb, z):
    # Illinois iteration in double precision
    for _ in range(100):
        c = b - fb * (b - a) / (fb - fa)
        fc = z(c)
        if fc == 0 or abs(b - a) < 1e-13:
            break
        if fc * fb < 0:
            a, fa = b, fb
        else:
            fa *= 0.5
        b, fb = c, fc
    return c


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t-max", type=float, default=1e4)
    ap.add_argument("--digits", type=int, default=10, help="decimal places written")
    ap.add_argument("--out", default="data/zeros_1e4.txt")
    args = ap.parse_args(argv)

    z = mpmath.fp.siegelz
    expected = int(mpmath.nzeros(args.t_max))
    theta_max = mpmath.fp.siegeltheta(args.t_max)
    grams = gram_points(int(theta_max / math.pi) + 1)
    start = time.time()
    # Z < 0 on (0, 14); the first Gram point is g_{-1} ~ 9.67.
    m = int(np.searchsorted(grams, args.t_max))
    edges = list(grams[:m]) + [args.t_max]
    per_interval = [scan(edges[i], edges[i + 1], 4, z) for i in range(len(edges) - 1)]
    signs = [z(g) for g in grams[:m]]
    good = [i for i in range(m) if (-1) ** (i - 1) * signs[i] > 0] + [len(edges) - 1]
    # Rosser-style accounting: a Gram block [g_j, g_k) should hold k - j zeros.
    for j, k in zip(good[:-1], good[1:]):
        for dense in (64, 1024):
            if sum(len(per_interval[i]) for i in range(j, k)) >= k - j:
                break
            for i in range(j, k):
                per_interval[i] = scan(edges[i], edges[i + 1], dense, z)
    brackets = [b for found in per_interval for b in found]
    print(f"scan: {len(brackets)} brackets, expected {expected}, {time.time() - start:.0f}s",
          file=sys.stderr)
    if len(brackets) != expected:
        raise SystemExit(f"count mismatch: found {len(brackets)}, nzeros says {expected}")

    with open(args.out, "w") as fh:
        fh.write(f"# zeta zero ordinates 0 < gamma <= {args.t_max:g}, {expected} entries\n")
        fh.write(f"# source: mpmath {mpmath.__version__} siegelz, count checked with nzeros\n")
        for k, (a, b, fa, fb) in enumerate(brackets):
            gamma = refine(a, b, fa, fb, z)
            fh.write(f"{gamma:.{args.digits}f}\n")
            if (k + 1) % 1000 == 0:
                print(f"{k + 1} refined, {time.time() - start:.0f}s", file=sys.stderr)
    print(f"wrote {expected} ordinates to {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
