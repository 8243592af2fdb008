"""Integer arithmetic for primes p = 1 (mod 6).

Cubic-residue cosets, transition (cyclotomic) numbers computed both by
direct counting and in closed form from the Gauss pair (A, B), and the
convolution identities between the coset indicators.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Labels are tabulated for every residue below this bound; above it they are
# computed one at a time from the cubic character.
LABEL_TABLE_LIMIT = 10**7

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_admissible_prime(p: int) -> bool:
    return p >= 2 and p % 6 == 1 and is_prime(p)


class NotAdmissible(ValueError):
    pass


def check_admissible(p: int) -> None:
    if not isinstance(p, (int, np.integer)) or p < 2:
        raise NotAdmissible(f"{p!r} is not an integer >= 2")
    if p % 6 != 1:
        raise NotAdmissible(f"{p} ≢ 1 (mod 6)")
    if not is_prime(p):
        raise NotAdmissible(f"{p} is not prime")


def prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out.append(n)
    return out


def smallest_primitive_root(p: int) -> int:
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


def gauss_decomposition(p: int) -> tuple[int, int]:
    """The unique (A, B) with 4p = A^2 + 27 B^2, A = 1 (mod 3), B > 0."""
    check_admissible(p)
    four_p = 4 * p
    for B in range(1, math.isqrt(four_p // 27) + 1):
        rest = four_p - 27 * B * B
        a = math.isqrt(rest)
        if a * a == rest:
            return (a, B) if a % 3 == 1 else (-a, B)
    raise ArithmeticError(f"no representation 4*{p} = A^2 + 27B^2")


def all_gauss_pairs(p: int) -> list[tuple[int, int]]:
    """Every integer (A, B), B > 0, with 4p = A^2 + 27 B^2 (no congruence filter)."""
    pairs = []
    for B in range(1, math.isqrt(4 * p // 27) + 1):
        rest = 4 * p - 27 * B * B
        a = math.isqrt(rest)
        if a * a == rest:
            pairs.extend([(a, B), (-a, B)] if a else [(0, B)])
    return pairs


@dataclass(frozen=True)
class TransitionTable:
    """3x3 transition numbers n[i][k]."""

    n: tuple[tuple[int, int, int], ...]

    def __getitem__(self, ik: tuple[int, int]) -> int:
        i, k = ik
        return self.n[i % 3][k % 3]

    @property
    def n01(self) -> int:
        return self.n[0][1]

    @property
    def n02(self) -> int:
        return self.n[0][2]

    @property
    def n12(self) -> int:
        return self.n[1][2]

    def as_array(self) -> np.ndarray:
        return np.array(self.n, dtype=np.int64)

    @classmethod
    def from_array(cls, arr) -> "TransitionTable":
        return cls(tuple(tuple(int(v) for v in row) for row in arr))

    def check_relations(self, p: int) -> dict[str, bool]:
        """Linear and quadratic relations every transition table must satisfy."""
        s = (p - 1) // 3
        n = self.as_array()
        n01, n02, n12 = self.n01, self.n02, self.n12
        return {
            "symmetric": bool((n == n.T).all()),
            "row_sums": list(n.sum(axis=1)) == [s - 1, s, s],
            "diagonal": n01 + n12 + n[2, 0] == s,
            "nlist": (
                n[1, 1] == n[2, 0] == n02
                and n[2, 2] == n[1, 0] == n01
                and n12 == n[2, 1] == s - n01 - n02
                and n[0, 0] == s - 1 - n01 - n02
            ),
            "quadratic": n01 * n02 + n01 * n12 + n02 * n12
            == n01**2 + n02**2 + n12**2 - n12,
        }


def transition_numbers_closed_form(p: int, A: int, B: int) -> TransitionTable:
    s = (p - 1) // 3
    num12, num02, num01 = p + A + 1, 2 * p - A + 9 * B - 4, 2 * p - A - 9 * B - 4
    if num12 % 9 or num02 % 18 or num01 % 18:
        raise ArithmeticError(f"(A, B) = ({A}, {B}) is not the normalized Gauss pair of {p}")
    n12, n02, n01 = num12 // 9, num02 // 18, num01 // 18
    n00 = s - 1 - n01 - n02
    return TransitionTable(((n00, n01, n02), (n01, n02, n12), (n02, n12, n01)))


def _powmod_array(base: np.ndarray, e: int, p: int) -> np.ndarray:
    # products stay below p^2 < 2^63 for p < 3e9
    result = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


def _raw_labels(p: int, g: int, values: np.ndarray) -> np.ndarray:
    """Coset index k of each value (g^(k+3m)); -1 for multiples of p."""
    if p > 3_000_000_000:
        raise OverflowError("vectorised labelling needs p^2 < 2^63")
    s = (p - 1) // 3
    zeta = pow(g, s, p)
    power = _powmod_array(values.astype(np.int64), s, p)
    lab = np.full(values.shape, -1, dtype=np.int8)
    lab[power == 1] = 0
    lab[power == zeta] = 1
    lab[power == zeta * zeta % p] = 2
    return lab


@dataclass(frozen=True)
class PrimeContext:
    """Arithmetic ground truth for one admissible prime.

    Coset data (generator orientation, labels) is derived lazily so that very
    large primes can still be used for the Gauss pair and angle alone.
    """

    p: int
    s: int
    A: int
    B: int
    theta: float

    @cached_property
    def primitive_root(self) -> int:
        return smallest_primitive_root(self.p)

    @cached_property
    def _swap(self) -> bool:
        # n01 and n02 under the unswapped labelling; G1 <-> G2 if n02 < n01
        p, g = self.p, self.primitive_root
        counts = np.zeros(3, dtype=np.int64)
        chunk = 1 << 20
        for start in range(1, p - 1, chunk):
            b = np.arange(start, min(start + chunk, p - 1), dtype=np.int64)
            lb = _raw_labels(p, g, b)
            lb1 = _raw_labels(p, g, b + 1)
            counts += np.bincount(lb1[lb == 0], minlength=3)
        n01, n02 = int(counts[1]), int(counts[2])
        if n01 == n02:
            raise ArithmeticError("n01 == n02 contradicts B > 0")
        return n02 < n01

    @cached_property
    def g(self) -> int:
        """Generator whose powers g^(k+3m) enumerate G_k with n02 > n01."""
        g0 = self.primitive_root
        if not self._swap:
            return g0
        for j in range(self.p):
            e = 2 + 3 * j
            if math.gcd(e, self.p - 1) == 1:
                return pow(g0, e, self.p)
        raise ArithmeticError("no coprime exponent 2+3j")

    @cached_property
    def labels(self) -> np.ndarray:
        """label[j] in {0,1,2} for j != 0; label[0] = -1."""
        if self.p > LABEL_TABLE_LIMIT:
            raise MemoryError(f"label table not built above p = {LABEL_TABLE_LIMIT}")
        return _raw_labels(self.p, self.g, np.arange(self.p, dtype=np.int64))

    def label(self, j: int) -> int:
        j %= self.p
        if j == 0:
            raise ValueError("0 lies in no coset")
        if self.p <= LABEL_TABLE_LIMIT:
            return int(self.labels[j])
        t = pow(j, self.s, self.p)
        zeta = pow(self.g, self.s, self.p)
        return 0 if t == 1 else 1 if t == zeta else 2

    @cached_property
    def cosets(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        lab = self.labels
        return tuple(np.flatnonzero(lab == k) for k in range(3))

    @cached_property
    def transitions(self) -> TransitionTable:
        return transition_numbers_closed_form(self.p, self.A, self.B)


def build_context(p: int) -> PrimeContext:
    check_admissible(p)
    A, B = gauss_decomposition(p)
    theta = math.acos(A / (2.0 * math.sqrt(p))) / 3.0
    return PrimeContext(p=p, s=(p - 1) // 3, A=A, B=B, theta=theta)


def transition_numbers_bruteforce(ctx: PrimeContext, d: int = 1) -> TransitionTable:
    """n_ik(d) = #{b in G_i : b + d in G_k, b != p - d}, by direct counting."""
    p = ctx.p
    if d % p == 0:
        raise ValueError("d must be nonzero mod p")
    lab = ctx.labels
    b = np.arange(1, p, dtype=np.int64)
    b = b[b != p - d % p]
    i = lab[b].astype(np.int64)
    k = lab[(b + d) % p].astype(np.int64)
    counts = np.bincount(3 * i + k, minlength=9).reshape(3, 3)
    return TransitionTable.from_array(counts)


def _cyclic_convolution(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """(f*g)(a) = sum_b f(a-b) g(b) over Z_p, exact for integer inputs."""
    p = len(f)
    raw = np.fft.irfft(np.fft.rfft(f, p) * np.fft.rfft(g, p), p)
    out = np.rint(raw)
    if np.max(np.abs(raw - out)) > 1e-3:
        raise ArithmeticError("FFT convolution lost integrality")
    return out.astype(np.int64)


def convolution_identity_check(ctx: PrimeContext) -> bool:
    p, s = ctx.p, ctx.s
    n = ctx.transitions
    gam = [(ctx.labels == k).astype(np.float64) for k in range(3)]
    gam_int = [g.astype(np.int64) for g in gam]
    delta = np.zeros(p, dtype=np.int64)
    delta[0] = 1
    for i in range(3):
        lhs = _cyclic_convolution(gam[i], gam[i])
        rhs = (n[i, i] * gam_int[0] + n[i + 2, i + 2] * gam_int[1]
               + n[i + 1, i + 1] * gam_int[2] + s * delta)
        if not np.array_equal(lhs, rhs):
            return False
        lhs = _cyclic_convolution(gam[i], gam[(i + 1) % 3])
        rhs = (n[i, i + 1] * gam_int[0] + n[i + 2, i] * gam_int[1]
               + n[i + 1, i + 2] * gam_int[2])
        if not np.array_equal(lhs, rhs):
            return False
    return True


def admissible_primes(lo: int, hi: int) -> list[int]:
    """Admissible primes in [lo, hi]."""
    start = max(lo, 7)
    start += (1 - start) % 6
    return [q for q in range(start, hi + 1, 6) if is_prime(q)]
