"""Generate Chebyshev coefficients of the Riemann-Siegel correction functions.

    python scripts/gen_rs_coefficients.py > src/zal/_rs_coeffs.py

The remainder of the Riemann-Siegel formula for Z(t) is

    (-1)^(N-1) a^(-1/2) sum_k C_k(p) a^(-k),    a = sqrt(t / 2 pi), p = frac(a).

C_k is assembled from derivatives of

    F(z) = (exp(pi i (z^2/2 + 3/8)) - i sqrt(2) cos(pi z / 2)) / (2 cos(pi z))

at z = 1 - 2p, weighted by the d[n, l] recursion of Arias de Reyna (Math. Comp.
2011, part II, section 3.17), multiplied by the series of exp(i (theta(t) - theta_0(t)))
where theta_0 is the leading part of the Riemann-Siegel theta function.
Everything is done in mpmath at high precision and then projected onto
Chebyshev polynomials in z on [-1, 1].
"""
import argparse
import sys

import mpmath

mp = mpmath.mp


def f_taylor(deg):
    pi, i = mp.pi, mp.mpc(0, 1)
    num = [mp.mpc(0)] * (deg + 1)
    e38 = mp.expj(3 * pi / 8)
    for j in range(deg // 2 + 1):
        num[2 * j] += e38 * (i * pi / 2) ** j / mp.factorial(j)
        num[2 * j] -= i * mp.sqrt(2) * (-1) ** j * (pi / 2) ** (2 * j) / mp.factorial(2 * j)
    den = [mp.mpf(0)] * (deg + 1)
    for j in range(deg // 2 + 1):
        den[2 * j] = 2 * (-1) ** j * pi ** (2 * j) / mp.factorial(2 * j)
    out = []
    for n in range(deg + 1):
        out.append((num[n] - sum(out[k] * den[n - k] for k in range(n))) / den[0])
    return out


def derivative(coeffs, k):
    return [coeffs[n] * mp.factorial(n) / mp.factorial(n - k) for n in range(k, len(coeffs))]


def d_table(order):
    d = {(0, 0): mp.mpf(1)}
    get = lambda n, k: d.get((n, k), mp.mpf(0))  # noqa: E731
    for n in range(1, order + 1):
        for k in range(3 * n // 2 + 1):
            m = 3 * n - 2 * k
            if m:
                d[n, k] = -(m + 1) * get(n - 1, k - 2) + get(n - 1, k) / (4 * m)
            else:
                d[n, k] = -sum((-1) ** (k - r) * get(n, r) * mp.factorial(2 * k - 2 * r)
                               / mp.factorial(k - r) for r in range(k))
    return d


def theta_tail_exp(order):
    """Series of exp(i (theta - theta_0)) in powers of 1/a."""
    i = mp.mpc(0, 1)
    dth = [mp.mpf(0)] * (order + 1)
    k = 1
    while 2 * (2 * k - 1) <= order:
        ck = (1 - mp.mpf(2) ** (1 - 2 * k)) * abs(mp.bernoulli(2 * k)) / (4 * k * (2 * k - 1))
        dth[2 * (2 * k - 1)] = ck * (2 * mp.pi) ** (1 - 2 * k)
        k += 1
    e = [mp.mpc(1)] + [mp.mpc(0)] * order
    for n in range(1, order + 1):
        e[n] = sum(j * i * dth[j] * e[n - j] for j in range(1, n + 1)) / n
    return e


def correction_polys(order, deg):
    pi, i = mp.pi, mp.mpc(0, 1)
    f = f_taylor(deg + 3 * order)
    d = d_table(order)
    g = []
    for m in range(order + 1):
        acc = [mp.mpc(0)] * (deg + 1)
        for ell in range(3 * m // 2 + 1):
            fd = derivative(f, 3 * m - 2 * ell)
            w = d[m, ell] / (pi ** (2 * m - ell) * (2 * i) ** ell)
            for j in range(deg + 1):
                acc[j] += w * fd[j]
        g.append(acc)
    e = theta_tail_exp(order)
    polys = []
    for n in range(order + 1):
        acc = [mp.mpf(0)] * (deg + 1)
        for j in range(n + 1):
            if e[j] != 0:
                for c in range(deg + 1):
                    acc[c] += 2 * mp.re(e[j] * g[n - j][c])
        polys.append(acc)
    return polys


def chebyshev(poly, nodes):
    xs = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / nodes) for k in range(nodes)]
    vals = [mp.polyval(poly[::-1], x) for x in xs]
    out = []
    for j in range(nodes):
        s = sum(v * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / nodes) for k, v in enumerate(vals))
        out.append(s * 2 / nodes)
    out[0] /= 2
    return out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=12)
    ap.add_argument("--degree", type=int, default=140)
    ap.add_argument("--nodes", type=int, default=64)
    ap.add_argument("--dps", type=int, default=140)
    args = ap.parse_args(argv)
    mp.dps = args.dps
    polys = correction_polys(args.order, args.degree)
    print('"""Chebyshev coefficients (in z = 1 - 2p on [-1, 1]) of the Riemann-Siegel')
    print('correction functions C_0 .. C_{}. Generated by scripts/gen_rs_coefficients.py."""'
          .format(args.order))
    print()
    print("CHEB = [")
    for poly in polys:
        cheb = chebyshev(poly, args.nodes)
        scale = max(abs(c) for c in cheb)
        while len(cheb) > 1 and abs(cheb[-1]) < 1e-20 * scale:
            cheb.pop()
        print("    [")
        for c in cheb:
            c = c if abs(c) > 1e-30 * scale else mp.mpf(0)
            print(f"        {mp.nstr(c, 17, min_fixed=1, max_fixed=0)},")
        print("    ],")
    print("]")
    print(f"generated order {args.order}", file=sys.stderr)


if __name__ == "__main__":
    main()
