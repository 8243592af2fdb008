"""All 20 solutions of the reduced three-equation system.

For a simple index-3 sequence normalised by x_0 = 1 with coset values
(c0, c1, c2), the cyclic p-root equations collapse to

    c_a + 1/c_a = -(p-4)/3 - n12 (c_{a+2}/c_{a+1} + c_{a+1}/c_{a+2})
                           - n02 (c_a/c_{a+2} + c_{a+2}/c_a)
                           - n01 (c_{a+1}/c_a + c_a/c_{a+1}),   a = 0, 1, 2.

Solutions are built branch by branch from the ratio sums
h_j = xi1 + eta1 cos(theta - 2 pi j/3), then lifted to (c0, c1, c2) through
the cos/sin decomposition of f_j = c_j + 1/c_j and g_j = c_j - 1/c_j.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, replace
from typing import Literal, Sequence

import numpy as np

from .arith import PrimeContext, TransitionTable, build_context

SQRT3 = math.sqrt(3.0)
TWO_PI_3 = 2.0 * math.pi / 3.0
POLISH_COND_LIMIT = 1e8

Kind = Literal["epsilon_plus", "epsilon_minus", "canonical"]


def trig_basis(theta: float) -> tuple[np.ndarray, np.ndarray]:
    """cos(theta - 2 pi j/3) and sin(theta - 2 pi j/3) for j = 0, 1, 2."""
    phases = theta - TWO_PI_3 * np.arange(3)
    return np.cos(phases), np.sin(phases)


# --------------------------------------------------------------------------
# branch parameters


@dataclass(frozen=True)
class BranchData:
    i: int
    xi1: float
    eta1: float
    s1: float
    s2: float
    s3: float
    a: float
    u: float
    v: float


@dataclass(frozen=True)
class _Radicals:
    """u = sqrt(p), v = sqrt(p + 4A + 16) and cancellation-free combinations."""

    u: float
    v: float
    w: float  # u + v
    delta: float  # v - u
    s_plus: float  # sqrt(u+v+4) sqrt(u+v-4)
    s_minus: float  # sqrt(4+u-v) sqrt(4-u+v)
    d2: float  # u^2 + uv + 2
    d3: float  # u^2 - uv + 2


def _radicals(p: int, A: int, B: int) -> _Radicals:
    u = math.sqrt(p)
    v = math.sqrt(p + 4 * A + 16)
    w = u + v
    # v - u and u^2 - uv + 2 suffer cancellation when evaluated directly
    delta = 4.0 * (A + 4) / w
    s_plus = math.sqrt((w - 4.0) * (w + 4.0))
    s_minus = 12.0 * SQRT3 * B / s_plus
    d2 = u * w + 2.0
    d3 = -4.0 * (p * A + 3 * p - 1) / d2
    return _Radicals(u, v, w, delta, s_plus, s_minus, d2, d3)


def branch_parameters(ctx: PrimeContext, i: int) -> BranchData:
    """(xi1, eta1) and the symmetric data (s1, s2, s3, a) of branch i."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"branch index must be 0..3, got {i}")
    p, A, B = ctx.p, ctx.A, ctx.B
    r = _radicals(p, A, B)
    u = r.u
    if i == 0:
        return BranchData(0, 2.0, 0.0, 6.0, 12.0, 8.0, 0.0, u, r.v)
    if i == 1:
        den = p * p - 3 * p - A
        if den <= 0:
            raise ArithmeticError("p^2 - 3p - A must be positive")
        xi1 = -(p * p - 6 * p + 2 * A) / den
        eta1 = 6.0 * u * (p - 4) / den
        s1 = (18 * p - 3 * p * p - 6 * A) / den
        s2 = 3.0 * (4 * p * p * A - 24 * p * A + 4 * A * A + p**4 - 21 * p**3
                    + 108 * p * p - 144 * p) / den**2
        s3 = (20 * p * p * A - 96 * p * A + 8 * A * A - p**4 + 42 * p**3
              - 360 * p * p + 864 * p) / den**2
        a = -729.0 * p * (p - 4) ** 3 * B / den**3
        return BranchData(1, xi1, eta1, s1, s2, s3, a, u, r.v)
    uv = u * r.v
    if i == 2:
        d = r.d2
        uw = u * r.w  # u^2 + uv
        xi1 = -(uw - 4.0) / d
        eta1 = -12.0 * u / d
        s1 = -3.0 * (uw - 4.0) / d
        s2 = 3.0 * (uw + 6 * u - 4.0) * (uw - 6 * u - 4.0) / d**2
        s3 = -(uw * uw - 176.0 * p + 40.0 * uv - 32.0) / d**2
    else:
        d = r.d3
        um = -u * r.delta  # u^2 - uv
        xi1 = -(um - 4.0) / d
        eta1 = -12.0 * u / d
        s1 = -3.0 * (um - 4.0) / d
        s2 = 3.0 * (um + 6 * u - 4.0) * (um - 6 * u - 4.0) / d**2
        s3 = -(um * um - 176.0 * p - 40.0 * uv - 32.0) / d**2
    a = 5832.0 * B * p / d**3
    return BranchData(i, xi1, eta1, s1, s2, s3, a, u, r.v)


def h_values(b: BranchData, theta: float) -> tuple[float, float, float]:
    cos_t, _ = trig_basis(theta)
    h = b.xi1 + b.eta1 * cos_t
    return tuple(float(x) for x in h)


def det_m_factors(ctx: PrimeContext, s1: float) -> tuple[float, float]:
    """The quadratic factors q(s1), r(s1) of det M (besides s1 - 6)."""
    p, A = ctx.p, ctx.A
    q = (p * p - 3 * p - A) * s1 + (6 * A + 3 * p * p - 18 * p)
    r = ((p * A + 3 * p - 1) * s1 * s1 + (6 * p * A + 27 * p + 12) * s1
         + (9 * p * A + 54 * p - 36))
    return q, r


def det_m_root_gap(ctx: PrimeContext, s1: float) -> float:
    """min(|q(s1)|, |r(s1)|), each relative to the sum of its term sizes."""
    p, A = ctx.p, ctx.A
    q_terms = ((p * p - 3 * p - A) * s1, 6 * A + 3 * p * p - 18 * p)
    r_terms = ((p * A + 3 * p - 1) * s1 * s1, (6 * p * A + 27 * p + 12) * s1,
               9 * p * A + 54 * p - 36)
    return min(abs(sum(t)) / max(1.0, sum(abs(x) for x in t)) for t in (q_terms, r_terms))


def discriminant_gap(b: BranchData) -> float:
    """a^2 minus the discriminant polynomial in (s1, s2, s3), relative."""
    s1, s2, s3 = b.s1, b.s2, b.s3
    disc = (s1 * s1 * s2 * s2 - 4 * s1**3 * s3 - 4 * s2**3
            + 18 * s1 * s2 * s3 - 27 * s3 * s3)
    return abs(b.a * b.a - disc) / max(1.0, abs(disc), b.a * b.a)


def theta_identity_gap(ctx: PrimeContext, b: BranchData) -> float:
    """|B (2 s1^3 - 9 s1 s2 + 27 s3) + A a|, relative to the term sizes."""
    shape = 2 * b.s1**3 - 9 * b.s1 * b.s2 + 27 * b.s3
    lhs = ctx.B * shape + ctx.A * b.a
    return abs(lhs) / max(1.0, abs(ctx.B * shape), abs(ctx.A * b.a))


# --------------------------------------------------------------------------
# solution triples


@dataclass(frozen=True)
class SolutionTriple:
    c: tuple[complex, complex, complex]
    kind: Kind
    branch: int | None = None
    shift: int = 0
    inverted: bool = False

    def as_array(self) -> np.ndarray:
        return np.array(self.c, dtype=complex)

    def is_unimodular(self, tol: float = 1e-10) -> bool:
        return bool(np.all(np.abs(np.abs(self.as_array()) - 1.0) <= tol))

    def is_real(self, tol: float = 1e-10) -> bool:
        arr = self.as_array()
        return bool(np.all(np.abs(arr.imag) <= tol * np.maximum(1.0, np.abs(arr))))

    def shifted(self, k: int) -> "SolutionTriple":
        c = self.c
        return replace(self, c=(c[k % 3], c[(k + 1) % 3], c[(k + 2) % 3]),
                       shift=(self.shift + k) % 3)

    def reciprocal(self) -> "SolutionTriple":
        return replace(self, c=tuple(1 / z for z in self.c), inverted=not self.inverted)

    @property
    def label(self) -> str:
        if self.kind != "canonical":
            return self.kind
        return f"c{self.branch}" + ("^-1" if self.inverted else "") + f"<<{self.shift}"


def epsilon_values(p: int) -> tuple[float, float]:
    """(2 - p + sqrt(p(p-4)))/2 and (2 - p - sqrt(p(p-4)))/2."""
    minus = (2.0 - p - math.sqrt(p * (p - 4.0))) / 2.0
    # the '+' root cancels; the two roots multiply to 1
    return 1.0 / minus, minus


def epsilon_solutions(p: int) -> tuple[SolutionTriple, SolutionTriple]:
    plus, minus = epsilon_values(p)
    return (SolutionTriple((complex(plus),) * 3, "epsilon_plus"),
            SolutionTriple((complex(minus),) * 3, "epsilon_minus"))


# --------------------------------------------------------------------------
# reduced system


def reduced_system(ctx: PrimeContext, c: Sequence[complex]) -> np.ndarray:
    """Left minus right side of the three reduced equations."""
    F, _ = _system_and_jacobian(ctx.transitions, ctx.p, np.asarray(c, dtype=complex))
    return F


def _system_and_jacobian(n: TransitionTable, p: int, c: np.ndarray):
    F, J, _ = _system_jacobian_scale(n, p, c)
    return F, J


def _system_jacobian_scale(n: TransitionTable, p: int, c: np.ndarray):
    """F, its Jacobian, and the largest single term (sets the rounding floor)."""
    n12, n02, n01 = n.n12, n.n02, n.n01
    F = np.zeros(3, dtype=complex)
    J = np.zeros((3, 3), dtype=complex)
    scale = (p - 4) / 3

    def pair(x, y):
        return x / y + y / x

    def dpair(x, y):  # d/dx of x/y + y/x
        return 1 / y - y / (x * x)

    for a in range(3):
        i0, i1, i2 = a, (a + 1) % 3, (a + 2) % 3
        c0, c1, c2 = c[i0], c[i1], c[i2]
        terms = (c0 + 1 / c0, n12 * pair(c2, c1), n02 * pair(c0, c2), n01 * pair(c1, c0))
        F[a] = sum(terms) + (p - 4) / 3
        scale = max(scale, *(abs(t) for t in terms))
        J[a, i0] += 1 - 1 / (c0 * c0) + n02 * dpair(c0, c2) + n01 * dpair(c0, c1)
        J[a, i1] += n12 * dpair(c1, c2) + n01 * dpair(c1, c0)
        J[a, i2] += n12 * dpair(c2, c1) + n02 * dpair(c2, c0)
    return F, J, scale


def residual(ctx: PrimeContext, c: SolutionTriple | Sequence[complex]) -> float:
    arr = c.as_array() if isinstance(c, SolutionTriple) else np.asarray(c, dtype=complex)
    if np.any(arr == 0):
        raise ZeroDivisionError("solution components must be nonzero")
    return float(np.max(np.abs(reduced_system(ctx, arr))))


def residual_from_table(table: TransitionTable, c: SolutionTriple | Sequence[complex]) -> float:
    """Residual of c_a + 1/c_a + sum_ik n_ik c_{k+a}/c_{i+a} = 0 for any table."""
    arr = c.as_array() if isinstance(c, SolutionTriple) else np.asarray(c, dtype=complex)
    if np.any(arr == 0):
        raise ZeroDivisionError("solution components must be nonzero")
    worst = 0.0
    for a in range(3):
        total = arr[a] + 1 / arr[a]
        for i, k in itertools.product(range(3), repeat=2):
            total += table[i, k] * arr[(k + a) % 3] / arr[(i + a) % 3]
        worst = max(worst, abs(total))
    return worst


def newton_polish(ctx: PrimeContext, c: Sequence[complex], max_steps: int = 3) -> np.ndarray:
    """Newton steps on the reduced system, kept only while the residual drops.

    Stops once the residual is within a few ulps of the largest term: below
    that level the residual is rounding noise and steps only add error. No
    step is taken when the Jacobian is too ill-conditioned for a double
    precision solve (this happens for p beyond about 10^10).
    """
    c = np.asarray(c, dtype=complex)
    n = ctx.transitions
    F, J, scale = _system_jacobian_scale(n, ctx.p, c)
    if np.linalg.cond(J) > POLISH_COND_LIMIT:
        return c
    best = np.max(np.abs(F))
    for _ in range(max_steps):
        if best <= 8 * np.finfo(float).eps * scale:
            break
        try:
            trial = c - np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            break
        F_t, J_t, scale_t = _system_jacobian_scale(n, ctx.p, trial)
        r = np.max(np.abs(F_t))
        if not r < best:
            break
        c, F, J, best, scale = trial, F_t, J_t, r, scale_t
    return c


# --------------------------------------------------------------------------
# coefficient sextuples


@dataclass(frozen=True)
class CoefficientSextuple:
    """f_j = alpha1 + beta1 cos + gamma1 sin, g_j likewise with index 2."""

    alpha1: complex
    beta1: complex
    gamma1: complex
    alpha2: complex
    beta2: complex
    gamma2: complex

    @property
    def alpha(self) -> complex:
        return (self.alpha1 + self.alpha2) / 2

    @property
    def beta(self) -> complex:
        return (self.beta1 + self.beta2) / 2

    @property
    def gamma(self) -> complex:
        return (self.gamma1 + self.gamma2) / 2

    def flipped(self) -> "CoefficientSextuple":
        """Sign change of the g-block; evaluates to the componentwise reciprocal."""
        return replace(self, alpha2=-self.alpha2, beta2=-self.beta2, gamma2=-self.gamma2)

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.alpha1, self.beta1, self.gamma1, self.alpha2, self.beta2, self.gamma2)

    def evaluate(self, theta: float) -> np.ndarray:
        cos_t, sin_t = trig_basis(theta)
        return self.alpha + self.beta * cos_t + self.gamma * sin_t


def coefficient_sextuple(ctx: PrimeContext, i: int,
                         method: Literal["closed", "generic"] = "closed") -> CoefficientSextuple:
    """Coefficients of f_j and g_j for canonical branch i in {1, 2, 3}.

    ``closed`` evaluates the explicit per-branch expressions in a
    cancellation-free form; ``generic`` derives them from (xi1, eta1) through
    the f-coefficient formulas and the square-root step, which loses digits
    as p grows but is independent of the closed forms.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"canonical branch must be 1..3, got {i}")
    if method == "generic":
        return _sextuple_generic(ctx, i)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    p, A, B = ctx.p, ctx.A, ctx.B
    r = _radicals(p, A, B)
    u = r.u
    if i == 1:
        den = p * p - 3 * p - A
        q = math.sqrt(p - 4)
        lin = p * A - 2 * p - 2 * A
        return CoefficientSextuple(
            alpha1=complex(lin / den),
            beta1=complex(-u * (p - 4) * (A + 2) / den),
            gamma1=complex(-3 * SQRT3 * u * (p - 4) * B / den),
            alpha2=1j * 3 * SQRT3 * u * q * B / den,
            beta2=-1j * 3 * SQRT3 * q * (p - 2) * B / den,
            gamma2=1j * q * lin / den,
        )
    uw = u * r.w  # u^2 + uv
    um = -u * r.delta  # u^2 - uv
    if i == 2:
        d = r.d2
        return CoefficientSextuple(
            alpha1=complex(-(um - 4) / d),
            beta1=complex(2 * (A + 2) * u / d),
            gamma1=complex(6 * SQRT3 * B * u / d),
            alpha2=1j * u * r.s_minus / d,
            beta2=0.5j * (uw + 4) * r.s_minus / d,
            gamma2=0.5j * (um - 4) * r.s_plus / d,
        )
    d = r.d3
    return CoefficientSextuple(
        alpha1=complex(-(uw - 4) / d),
        beta1=complex(2 * (A + 2) * u / d),
        gamma1=complex(6 * SQRT3 * B * u / d),
        alpha2=complex(-u * r.s_plus / d),
        beta2=complex(-0.5 * (um + 4) * r.s_plus / d),
        gamma2=complex(0.5 * (uw - 4) * r.s_minus / d),
    )


def _sextuple_generic(ctx: PrimeContext, i: int) -> CoefficientSextuple:
    p, A, B = ctx.p, ctx.A, ctx.B
    b = branch_parameters(ctx, i)
    xi1, eta1, zeta1 = b.xi1, b.eta1, 0.0
    alpha1 = -(p - 4) / 3 - (p - 1) / 3 * xi1
    beta1 = -(A + 2) / 6 * eta1
    gamma1 = -SQRT3 / 2 * B * eta1
    radicand = alpha1 * alpha1 - 4.0 / 3.0 * (xi1 + 1)
    if radicand == 0:
        raise ArithmeticError("alpha1^2 - 4/3 (xi1 + 1) vanishes")
    alpha2 = cmath.sqrt(radicand)
    if i in (1, 2):
        if alpha2.imag < 0:
            alpha2 = -alpha2
    else:
        r = _radicals(p, A, B)
        alpha2 = complex(-math.copysign(abs(alpha2.real), r.d3))
    beta2 = (alpha1 * beta1 + 2.0 / 3.0 * eta1) / alpha2
    gamma2 = (alpha1 * gamma1 + 2.0 / 3.0 * zeta1) / alpha2
    return CoefficientSextuple(complex(alpha1), complex(beta1), complex(gamma1),
                               alpha2, beta2, gamma2)


def t_check(sx: CoefficientSextuple, theta: float) -> tuple[complex, complex, complex]:
    """The three expressions that vanish iff g-block values are reciprocal-compatible."""
    a1, b1, g1, a2, b2, g2 = sx.as_tuple()
    c3, s3 = math.cos(3 * theta), math.sin(3 * theta)
    quad = 0.5 * (b1 * b1 - b2 * b2 - g1 * g1 + g2 * g2)
    cross = b1 * g1 - b2 * g2
    t1 = (a1 * a1 - a2 * a2) + 0.5 * (b1 * b1 - b2 * b2) + 0.5 * (g1 * g1 - g2 * g2) - 4
    t2 = 2 * (a1 * b1 - a2 * b2) + quad * c3 + cross * s3
    t3 = 2 * (a1 * g1 - a2 * g2) + quad * s3 - cross * c3
    return complex(t1), complex(t2), complex(t3)


def canonical_solution(ctx: PrimeContext, i: int, polish: bool = True,
                       inverted: bool = False) -> SolutionTriple:
    """c^(i)_j = alpha + beta cos(theta - 2 pi j/3) + gamma sin(theta - 2 pi j/3).

    With ``inverted`` the g-block sign is flipped, giving the componentwise
    reciprocal. ``polish`` applies Newton refinement on the reduced system;
    near theta = pi/6 the third branch otherwise loses about two digits to
    cancellation between alpha and the sine term.
    """
    sx = coefficient_sextuple(ctx, i)
    if inverted:
        sx = sx.flipped()
    c = sx.evaluate(ctx.theta)
    if i == 3:
        c = c.real.astype(complex)
    if polish:
        c = newton_polish(ctx, c)
        if i == 3:
            c = c.real.astype(complex)
    return SolutionTriple(tuple(complex(z) for z in c), "canonical", i, 0, inverted)


def all_solutions(ctx: PrimeContext, polish: bool = True,
                  min_separation: float = 1e-6) -> list[SolutionTriple]:
    """The 20 solutions: two epsilon, then per branch three shifts of the
    canonical triple followed by three shifts of its reciprocal."""
    out = list(epsilon_solutions(ctx.p))
    for i in (1, 2, 3):
        for inverted in (False, True):
            base = canonical_solution(ctx, i, polish=polish, inverted=inverted)
            out.extend(base.shifted(k) for k in range(3))
    arr = np.array([s.c for s in out])
    gaps = np.max(np.abs(arr[:, None, :] - arr[None, :, :]), axis=2)
    np.fill_diagonal(gaps, np.inf)
    if gaps.min() <= min_separation:
        raise RuntimeError(f"solutions not distinct at p={ctx.p}: gap {gaps.min():.3g}")
    return out


def min_pairwise_distance(solutions: Sequence[SolutionTriple]) -> float:
    arr = np.array([s.c for s in solutions])
    gaps = np.max(np.abs(arr[:, None, :] - arr[None, :, :]), axis=2)
    np.fill_diagonal(gaps, np.inf)
    return float(gaps.min())


# --------------------------------------------------------------------------
# cos/sin decompositions


def trig_decompose(a: Sequence[complex], theta: float) -> tuple[complex, complex, complex]:
    """Unique (rho, sigma, tau) with a_j = rho + sigma cos(.) + tau sin(.)."""
    cos_t, sin_t = trig_basis(theta)
    M = np.column_stack([np.ones(3), cos_t, sin_t])
    rho, sigma, tau = np.linalg.solve(M, np.asarray(a, dtype=complex))
    return complex(rho), complex(sigma), complex(tau)


def ratio_sums(c: Sequence[complex]) -> tuple[np.ndarray, np.ndarray]:
    """h_j = c_{j+2}/c_{j+1} + c_{j+1}/c_{j+2} and k_j with a minus sign."""
    c = np.asarray(c, dtype=complex)
    nxt, nxt2 = np.roll(c, -1), np.roll(c, -2)
    return nxt2 / nxt + nxt / nxt2, nxt2 / nxt - nxt / nxt2


def hk_coefficients_predicted(sx: CoefficientSextuple) -> tuple[complex, ...]:
    """(xi1, eta1, zeta1, xi2, eta2, zeta2) implied by an f/g sextuple."""
    a1, b1, g1, a2, b2, g2 = sx.as_tuple()
    return (
        0.75 * (a1 * a1 - a2 * a2) - 1,
        -1.5 * (a1 * b1 - a2 * b2),
        -1.5 * (a1 * g1 - a2 * g2),
        SQRT3 / 4 * (b2 * g1 - b1 * g2),
        SQRT3 / 2 * (g2 * a1 - g1 * a2),
        SQRT3 / 2 * (a2 * b1 - a1 * b2),
    )


# --------------------------------------------------------------------------
# Gaussian cubic sum


def gaussian_cubic_sum(p: int) -> complex:
    j = np.arange(p, dtype=np.int64)
    cubes = (j * j % p) * j % p
    return complex(np.exp(2j * np.pi * cubes / p).sum())


def gauss_sum_match(ctx: PrimeContext) -> tuple[int, float]:
    """Index j where G = 2 sqrt(p) cos(theta - 2 pi j/3), with the gap to it."""
    G = gaussian_cubic_sum(ctx.p)
    cos_t, _ = trig_basis(ctx.theta)
    roots = 2 * math.sqrt(ctx.p) * cos_t
    gaps = np.abs(roots - G)
    j = int(np.argmin(gaps))
    return j, float(gaps[j])


def solve(p: int) -> list[SolutionTriple]:
    return all_solutions(build_context(p))
