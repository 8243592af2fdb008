"""Scalenity, the limit triangle, finite-p bounds and the large-p tables."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .arith import PrimeContext, build_context
from .solver import SolutionTriple, canonical_solution, trig_basis

UNIMODULAR_TOL = 1e-8


class NotOnCircle(ValueError):
    pass


def _as_array(c) -> np.ndarray:
    return c.as_array() if isinstance(c, SolutionTriple) else np.asarray(c, dtype=complex)


def circumcenter(c) -> complex:
    a, b, d = _as_array(c)
    # solve |w-a| = |w-b| = |w-d| as two linear equations in (Re w, Im w)
    M = np.array([[(b - a).real, (b - a).imag], [(d - a).real, (d - a).imag]])
    rhs = 0.5 * np.array([abs(b) ** 2 - abs(a) ** 2, abs(d) ** 2 - abs(a) ** 2])
    scale = max(abs(b - a), abs(d - a)) ** 2
    if abs(np.linalg.det(M)) <= 1e-12 * scale:
        raise NotOnCircle("points are collinear; no circumscribed circle")
    x, y = np.linalg.solve(M, rhs)
    return complex(x, y)


def scalenity(c) -> float:
    """max_j |1/2 + cos(phi_{j+2} - phi_{j+1})| for angles about the circumcentre."""
    v = _as_array(c)
    if np.max(np.abs(np.abs(v) - 1.0)) <= UNIMODULAR_TOL:
        h = np.roll(v, -2) / np.roll(v, -1) + np.roll(v, -1) / np.roll(v, -2)
        return float(0.5 * np.max(np.abs(1.0 + h.real)))
    w = circumcenter(v)
    phi = np.angle(v - w)
    gaps = np.roll(phi, -2) - np.roll(phi, -1)
    return float(np.max(np.abs(0.5 + np.cos(gaps))))


def limit_triangle(theta: float) -> np.ndarray:
    """d_j = exp(2i (theta - 2 pi j / 3))."""
    return np.exp(2j * (theta - 2 * np.pi * np.arange(3) / 3))


def max_norm(a, b=None) -> float:
    a = _as_array(a)
    return float(np.max(np.abs(a if b is None else a - _as_array(b))))


@dataclass(frozen=True)
class ScalenityReport:
    p: int
    scal1: float
    scal2: float
    dist_c1_plus_d: float
    dist_c2_minus_d: float
    dist_c1_plus_c2: float

    @property
    def bound1(self) -> float:
        return 7 / (2 * math.sqrt(self.p))

    @property
    def bound2(self) -> float:
        return 21 / (5 * math.sqrt(self.p))

    @property
    def bound_d1(self) -> float:
        return 3 / math.sqrt(self.p)

    @property
    def bound_d2(self) -> float:
        return 21 / (5 * math.sqrt(self.p))

    @property
    def sum_bound(self) -> float:
        return 36 / (5 * math.sqrt(self.p))

    def checks(self) -> dict[str, tuple[float, float, bool]]:
        """name -> (observed, bound, holds)."""
        pairs = {
            "scal_c1": (self.scal1, self.bound1),
            "scal_c2": (self.scal2, self.bound2),
            "c1_plus_d": (self.dist_c1_plus_d, self.bound_d1),
            "c2_minus_d": (self.dist_c2_minus_d, self.bound_d2),
            "c1_plus_c2": (self.dist_c1_plus_c2, self.sum_bound),
        }
        return {k: (obs, bound, obs <= bound) for k, (obs, bound) in pairs.items()}

    def failures(self) -> list[str]:
        return [k for k, (_, _, ok) in self.checks().items() if not ok]

    @property
    def ok(self) -> bool:
        return not self.failures()


def bound_suite(ctx: PrimeContext) -> ScalenityReport:
    c1 = canonical_solution(ctx, 1).as_array()
    c2 = canonical_solution(ctx, 2).as_array()
    d = limit_triangle(ctx.theta)
    return ScalenityReport(
        p=ctx.p,
        scal1=scalenity(c1),
        scal2=scalenity(c2),
        dist_c1_plus_d=max_norm(c1 + d),
        dist_c2_minus_d=max_norm(c2 - d),
        dist_c1_plus_c2=max_norm(c1 + c2),
    )


@dataclass(frozen=True)
class PairwiseCheck:
    p1: int
    p2: int
    branch: int
    distance: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.distance <= self.bound


def pairwise_bound(ctx1: PrimeContext, ctx2: PrimeContext, branch: int = 1) -> PairwiseCheck:
    """||c' - c''|| against 2|theta' - theta''| + K/sqrt(p') + K/sqrt(p'')."""
    if branch not in (1, 2):
        raise ValueError("pairwise bound applies to the unimodular branches")
    k = 3.0 if branch == 1 else 21 / 5
    dist = max_norm(canonical_solution(ctx1, branch), canonical_solution(ctx2, branch))
    bound = 2 * abs(ctx1.theta - ctx2.theta) + k / math.sqrt(ctx1.p) + k / math.sqrt(ctx2.p)
    return PairwiseCheck(ctx1.p, ctx2.p, branch, dist, bound)


@dataclass(frozen=True)
class ThirdBranchReport:
    p: int
    ratios: tuple[float, float, float]
    limit_reciprocals: tuple[float, float, float]
    min_abs_ratio: float

    @property
    def margin(self) -> float:
        """Observed min |c_j| / sqrt(p) minus the asymptotic lower bound 1/2."""
        return self.min_abs_ratio - 0.5


def third_branch_ratios(ctx: PrimeContext) -> ThirdBranchReport:
    """c^(3)_j / sqrt(p), and the values -2 cos(theta - 2 pi j/3) that
    sqrt(p) / c^(3)_j approach as p grows with theta fixed."""
    c3 = canonical_solution(ctx, 3).as_array().real
    ratios = c3 / math.sqrt(ctx.p)
    cos_t, _ = trig_basis(ctx.theta)
    return ThirdBranchReport(ctx.p, tuple(float(r) for r in ratios),
                             tuple(float(x) for x in -2 * cos_t),
                             float(np.min(np.abs(ratios))))


# --------------------------------------------------------------------------
# tables


TABLE_COLUMNS: dict[int, tuple[str, ...]] = {
    1: ("p", "A", "B", "theta", "c0", "c1", "c2", "scal"),
    2: ("p", "A", "B", "theta", "c0", "c1", "c2", "scal"),
    3: ("p", "A", "B", "theta", "c0", "c1", "c2", "r0", "r1", "r2"),
    4: ("p", "A", "B", "theta", "arg_c1_0", "two_theta_minus_pi", "arg_c2_0",
        "two_theta", "scal"),
    5: ("p", "A", "B", "theta", "r0", "r1", "r2"),
}


def table_row(which: int, ctx: PrimeContext) -> dict:
    """One row with exactly the columns of table ``which``."""
    base = {"p": ctx.p, "A": ctx.A, "B": ctx.B, "theta": ctx.theta}
    if which in (1, 2):
        c = canonical_solution(ctx, which).as_array()
        row = {**base, "c0": complex(c[0]), "c1": complex(c[1]), "c2": complex(c[2]),
               "scal": scalenity(c)}
    elif which == 3:
        c = canonical_solution(ctx, 3).as_array().real
        r = c / math.sqrt(ctx.p)
        row = {**base, "c0": float(c[0]), "c1": float(c[1]), "c2": float(c[2]),
               "r0": float(r[0]), "r1": float(r[1]), "r2": float(r[2])}
    elif which == 4:
        c1 = canonical_solution(ctx, 1).as_array()
        c2 = canonical_solution(ctx, 2).as_array()
        row = {**base, "arg_c1_0": float(np.angle(c1[0])),
               "two_theta_minus_pi": 2 * ctx.theta - math.pi,
               "arg_c2_0": float(np.angle(c2[0])), "two_theta": 2 * ctx.theta,
               "scal": scalenity(c1)}
    elif which == 5:
        rep = third_branch_ratios(ctx)
        row = {**base, "r0": rep.ratios[0], "r1": rep.ratios[1], "r2": rep.ratios[2]}
    else:
        raise ValueError(f"table must be 1..5, got {which}")
    assert tuple(row) == TABLE_COLUMNS[which]
    return row


def table(which: int, primes: Sequence[int]) -> list[dict]:
    return [table_row(which, build_context(p)) for p in primes]


def report_dict(report) -> dict:
    return asdict(report)
