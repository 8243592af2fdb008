"""Slow, direct reference computations used only by the tests."""
from __future__ import annotations

import cmath
import math

import mpmath as mp


def cubes(p: int) -> set[int]:
    return {pow(x, 3, p) for x in range(1, p)}


def transition_counts(labels, p: int, d: int = 1) -> list[list[int]]:
    n = [[0] * 3 for _ in range(3)]
    for b in range(1, p):
        if (b + d) % p == 0:
            continue
        n[labels[b]][labels[(b + d) % p]] += 1
    return n


def convolve(f, g, p: int) -> list[int]:
    return [sum(f[(a - b) % p] * g[b] for b in range(p)) for a in range(p)]


def xi_eta_direct(p: int, A: int, i: int) -> tuple[float, float]:
    """Branch parameters in their unsimplified radical form."""
    if i == 0:
        return 2.0, 0.0
    if i == 1:
        den = p * p - 3 * p - A
        return -(p * p - 6 * p + 2 * A) / den, 6 * math.sqrt(p) * (p - 4) / den
    sign = 1 if i == 2 else -1
    root = math.sqrt(p * (p + 4 * A + 16))
    den = p * A + 3 * p - 1
    xi = (-2 * p * A - 9 * p - 4 + sign * 3 * root) / (2 * den)
    eta = (3 * math.sqrt(p) * (p + 2) - sign * 3 * p * math.sqrt(p + 4 * A + 16)) / den
    return xi, eta


def canonical_mp(p: int, A: int, B: int, i: int, dps: int = 60) -> list:
    """Canonical solution i evaluated at high precision from (xi1, eta1) alone."""
    with mp.workdps(dps):
        u = mp.sqrt(p)
        if i == 1:
            den = p * p - 3 * p - A
            xi, eta = -mp.mpf(p * p - 6 * p + 2 * A) / den, 6 * u * (p - 4) / den
        else:
            sign = 1 if i == 2 else -1
            den = mp.mpf(p * A + 3 * p - 1)
            xi = (-2 * p * A - 9 * p - 4 + sign * 3 * mp.sqrt(p * (p + 4 * A + 16))) / (2 * den)
            eta = (3 * u * (p + 2) - sign * 3 * p * mp.sqrt(p + 4 * A + 16)) / den
        a1 = -mp.mpf(p - 4) / 3 - mp.mpf(p - 1) / 3 * xi
        b1 = -mp.mpf(A + 2) / 6 * eta
        g1 = -mp.sqrt(3) / 2 * B * eta
        a2 = mp.sqrt(mp.mpc(a1 * a1 - mp.mpf(4) / 3 * (xi + 1)))
        if i in (1, 2):
            if mp.im(a2) < 0:
                a2 = -a2
        else:
            d3 = -4 * mp.mpf(p * A + 3 * p - 1) / (u * u + u * mp.sqrt(p + 4 * A + 16) + 2)
            a2 = -abs(a2) if d3 > 0 else abs(a2)
        b2 = (a1 * b1 + mp.mpf(2) / 3 * eta) / a2
        g2 = a1 * g1 / a2
        th = mp.acos(A / (2 * u)) / 3
        out = []
        for j in range(3):
            ph = th - 2 * mp.pi * j / 3
            out.append((a1 + a2) / 2 + (b1 + b2) / 2 * mp.cos(ph) + (g1 + g2) / 2 * mp.sin(ph))
        return out


def reduced_residual_mp(p: int, n01: int, n02: int, n12: int, c, dps: int = 60):
    with mp.workdps(dps):
        c = [mp.mpc(z) for z in c]
        worst = mp.mpf(0)
        for a in range(3):
            c0, c1, c2 = c[a], c[(a + 1) % 3], c[(a + 2) % 3]
            val = (c0 + 1 / c0 + mp.mpf(p - 4) / 3 + n12 * (c2 / c1 + c1 / c2)
                   + n02 * (c0 / c2 + c2 / c0) + n01 * (c1 / c0 + c0 / c1))
            worst = max(worst, abs(val))
        return worst


def cyclic_equations_direct(z) -> float:
    """Residual of the p cyclic equations by explicit nested products."""
    p = len(z)
    worst = 0.0
    for d in range(1, p):
        total = 0j
        for j in range(p):
            prod = 1 + 0j
            for k in range(d):
                prod *= z[(j + k) % p]
            total += prod
        worst = max(worst, abs(total))
    prod = 1 + 0j
    for zj in z:
        prod *= zj
    return max(worst, abs(prod - 1))


def gauss_sum_direct(p: int) -> complex:
    return sum(cmath.exp(2j * math.pi * (j ** 3 % p) / p) for j in range(p))
