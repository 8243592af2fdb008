"""Index-3 sequences, cyclic p-roots, Fourier checks, counting and Hadamard matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .arith import PrimeContext
from .solver import SolutionTriple, all_solutions

DEDUP_TOL = 1e-8
SEPARATION_FLOOR = 1e-4
ENUMERATION_P_MAX = 101


def omega_powers(p: int, exponents) -> np.ndarray:
    """omega^e with omega = exp(2 pi i / p), reducing e mod p first."""
    e = np.asarray(exponents, dtype=np.int64) % p
    return np.exp(2j * np.pi * e / p)


@dataclass(frozen=True)
class IndexThreeSequence:
    p: int
    values: np.ndarray
    r: int = 0
    l: int = 0
    triple: SolutionTriple | None = None
    b: complex = 1.0


@dataclass(frozen=True)
class CyclicRoot:
    p: int
    z: np.ndarray


def _coefficient_pattern(ctx: PrimeContext, c: Sequence[complex], l: int) -> np.ndarray:
    """c_k at positions j with j - l in G_k, and 1 at j = l."""
    lab = ctx.labels[(np.arange(ctx.p) - l) % ctx.p]
    table = np.append(np.asarray(c, dtype=complex), 1.0)  # index -1 -> 1
    return table[lab]


def build_sequence(ctx: PrimeContext, c: SolutionTriple | Sequence[complex], r: int = 0,
                   l: int = 0, normalize: bool = True, b: complex = 1.0) -> IndexThreeSequence:
    """x_j = b omega^(rj) c_k for 0 != j - l in G_k, and x_l = b omega^(rl)."""
    triple = c if isinstance(c, SolutionTriple) else None
    cvals = triple.c if triple is not None else tuple(c)
    if any(z == 0 for z in cvals):
        raise ValueError("solution components must be nonzero")
    p = ctx.p
    r, l = r % p, l % p
    x = b * omega_powers(p, r * np.arange(p)) * _coefficient_pattern(ctx, cvals, l)
    if normalize:
        b = b / x[0]
        x = x / x[0]
    return IndexThreeSequence(p, x, r, l, triple, complex(b))


def _values(x) -> np.ndarray:
    return x.values if isinstance(x, IndexThreeSequence) else np.asarray(x, dtype=complex)


def x_to_z(x) -> CyclicRoot:
    """z_j = x_{j+1} / x_j, indices mod p."""
    v = _values(x)
    if np.any(v == 0):
        raise ZeroDivisionError("sequence has a zero entry")
    return CyclicRoot(len(v), np.roll(v, -1) / v)


def cyclic_sums(z) -> np.ndarray:
    """S_d = sum_j z_j z_{j+1} ... z_{j+d-1} for d = 1..p."""
    z = z.z if isinstance(z, CyclicRoot) else np.asarray(z, dtype=complex)
    p = len(z)
    sums = np.empty(p, dtype=complex)
    window = z.copy()
    for d in range(1, p + 1):
        sums[d - 1] = window.sum()
        if d < p:
            window = window * np.roll(z, -d)
    return sums


def cyclic_root_residual(z) -> float:
    """Largest defect over the p equations; the last is prod z_j = 1."""
    sums = cyclic_sums(z)
    p = len(sums)
    defects = np.abs(sums[:-1])
    prod_defect = abs(sums[-1] / p - 1.0)
    return float(max(defects.max(initial=0.0), prod_defect))


def _dft_matrix(p: int) -> np.ndarray:
    j = np.arange(p, dtype=np.int64)
    return omega_powers(p, np.outer(j, j)) / np.sqrt(p)


def dft(x) -> np.ndarray:
    """Normalised transform sum_j x_j omega^(j nu) / sqrt(p), evaluated directly."""
    v = _values(x)
    return _dft_matrix(len(v)) @ v


def autocorrelation(x) -> np.ndarray:
    """gamma_k = sum_j conj(x_j) x_{j+k}."""
    v = _values(x)
    p = len(v)
    idx = (np.arange(p)[:, None] + np.arange(p)[None, :]) % p  # [k, j] -> j + k
    return (np.conj(v)[None, :] * v[idx]).sum(axis=1)


def is_biunimodular(x, tol: float = 1e-8) -> bool:
    v = _values(x)
    if np.max(np.abs(np.abs(v) - 1.0)) > tol:
        return False
    return bool(np.max(np.abs(np.abs(dft(v)) - 1.0)) <= tol)


# --------------------------------------------------------------------------
# counting


def _distinct_rows(rows: np.ndarray, tol: float = DEDUP_TOL,
                   floor: float = SEPARATION_FLOOR) -> tuple[np.ndarray, float]:
    """Indices of the first row of each cluster in max-norm, plus the closest
    distance between rows in different clusters (inf if none within floor).

    Rows are sorted along a fixed random projection normalised so that
    projection gaps never exceed max-norm gaps; only neighbours within the
    floor in projection need comparing.
    """
    n, p = rows.shape
    rng = np.random.default_rng(20240131)
    w = rng.normal(size=p) + 1j * rng.normal(size=p)
    w /= np.abs(w.real).sum() + np.abs(w.imag).sum()
    proj = (rows.real @ w.real) + (rows.imag @ w.imag)
    order = np.argsort(proj, kind="stable")
    proj, rows = proj[order], rows[order]
    keep = np.ones(n, dtype=bool)
    closest = np.inf
    # compare each row with the k-th next one in projection order, for every
    # k that still has some pair within the floor
    for k in range(1, n):
        near = np.flatnonzero(proj[k:] - proj[:-k] <= floor)
        if near.size == 0:
            break
        gaps = np.max(np.abs(rows[near + k] - rows[near]), axis=1)
        keep[near[gaps <= tol] + k] = False
        far = gaps[gaps > tol]
        if far.size:
            closest = min(closest, float(far.min()))
    return np.sort(order[keep]), float(closest)


class SeparationError(RuntimeError):
    pass


@dataclass
class EnumerationResult:
    p: int
    kind: str
    count: int
    by_family: dict[str, int] = field(default_factory=dict)
    raw_total: int = 0
    min_separation: float = np.inf
    representatives: np.ndarray | None = None

    def as_dict(self) -> dict:
        return {"p": self.p, "kind": self.kind, "count": self.count,
                "by_family": dict(self.by_family), "raw_total": self.raw_total,
                "min_separation": self.min_separation}


def _family(s: SolutionTriple) -> str:
    return "epsilon" if s.kind != "canonical" else f"branch{s.branch}"


def _grid_vectors(ctx: PrimeContext, triples: Iterable[SolutionTriple],
                  as_roots: bool) -> tuple[np.ndarray, list[str]]:
    p = ctx.p
    j = np.arange(p)
    modulation = omega_powers(p, np.outer(j, j))  # row r is omega^(r j)
    blocks, fams = [], []
    for t in triples:
        for l in range(p):
            x = modulation * _coefficient_pattern(ctx, t.c, l)
            blocks.append(np.roll(x, -1, axis=1) / x if as_roots else x / x[:, :1])
            fams.extend([_family(t)] * p)
    return np.concatenate(blocks), fams


def _enumerate(ctx: PrimeContext, triples: list[SolutionTriple], kind: str,
               as_roots: bool, tol: float) -> EnumerationResult:
    if ctx.p > ENUMERATION_P_MAX:
        raise ValueError(
            f"enumeration capped at p <= {ENUMERATION_P_MAX}: p={ctx.p} needs "
            f"{len(triples) * ctx.p**2} vectors of length {ctx.p}")
    rows, fams = _grid_vectors(ctx, triples, as_roots)
    keep, closest = _distinct_rows(rows, tol)
    if closest <= SEPARATION_FLOOR:
        raise SeparationError(f"distinct items only {closest:.3g} apart; tolerance {tol} unsafe")
    fams_arr = np.array(fams)
    by_family = {}
    for fam in dict.fromkeys(fams):
        sub_keep, _ = _distinct_rows(rows[fams_arr == fam], tol)
        by_family[fam] = len(sub_keep)
    return EnumerationResult(ctx.p, kind, len(keep), by_family, len(rows), closest, rows[keep])


def enumerate_biunimodular(ctx: PrimeContext, tol: float = DEDUP_TOL) -> EnumerationResult:
    """Distinct normalised sequences from the 12 unimodular triples over all (r, l)."""
    triples = [s for s in all_solutions(ctx) if s.kind == "canonical" and s.branch in (1, 2)]
    return _enumerate(ctx, triples, "biunimodular", as_roots=False, tol=tol)


def enumerate_cyclic_roots(ctx: PrimeContext, tol: float = DEDUP_TOL) -> EnumerationResult:
    """Distinct z-images of all index-3 sequences from the 20 triples over all (r, l)."""
    return _enumerate(ctx, all_solutions(ctx), "cyclic_roots", as_roots=True, tol=tol)


def gaussian_parameters(x, tol: float = 1e-8) -> tuple[int, int] | None:
    """(m, n) with x_j = x_0 omega^(m j^2 + n j), or None."""
    v = _values(x)
    p = len(v)
    v = v / v[0]
    j = np.arange(p, dtype=np.int64)
    n = int(round(np.angle(v[1]) * p / (2 * np.pi)))  # m + n
    for m in range(p):
        cand = omega_powers(p, m * j * j + (n - m) * j)
        if np.max(np.abs(cand - v)) <= tol:
            return m, (n - m) % p
    return None


def gaussian_root_parameters(z, tol: float = 1e-8) -> tuple[int, int] | None:
    """(m, n) with z_j = omega^(m j + n), or None."""
    z = z.z if isinstance(z, CyclicRoot) else np.asarray(z, dtype=complex)
    p = len(z)
    j = np.arange(p, dtype=np.int64)
    n = int(round(np.angle(z[0]) * p / (2 * np.pi))) % p
    m = int(round(np.angle(z[1] / z[0]) * p / (2 * np.pi))) % p
    if np.max(np.abs(omega_powers(p, m * j + n) - z)) <= tol:
        return m, n
    return None


# --------------------------------------------------------------------------
# circulant Hadamard matrices


class NotBiunimodular(ValueError):
    pass


@dataclass(frozen=True)
class HadamardReport:
    matrix: np.ndarray
    entry_deviation: float
    gram_deviation: float
    convention: str = "H[j, k] = x[(j - k) mod p]"

    def passes(self, tol: float = 1e-8) -> bool:
        return self.entry_deviation <= tol and self.gram_deviation <= tol


def circulant(x) -> np.ndarray:
    v = _values(x)
    p = len(v)
    idx = (np.arange(p)[:, None] - np.arange(p)[None, :]) % p
    return v[idx]


def hadamard_matrix(x, tol: float = 1e-8) -> HadamardReport:
    v = _values(x)
    p = len(v)
    entry_dev = float(np.max(np.abs(np.abs(v) - 1.0)))
    fourier_dev = float(np.max(np.abs(np.abs(dft(v)) - 1.0)))
    if max(entry_dev, fourier_dev) > tol:
        raise NotBiunimodular(
            f"not bi-unimodular: max | |x|-1 | = {entry_dev:.3g}, "
            f"max | |x^|-1 | = {fourier_dev:.3g}")
    H = circulant(v)
    gram = float(np.max(np.abs(H @ H.conj().T - p * np.eye(p))))
    return HadamardReport(H, entry_dev, gram)


def write_matrix(path: str | Path, H: np.ndarray) -> None:
    """One row per line, entries 're,im' separated by ';'."""
    lines = [";".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row) for row in H]
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix(path: str | Path) -> np.ndarray:
    rows = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            rows.append([complex(float(a), float(b))
                         for a, b in (e.split(",") for e in line.split(";"))])
    return np.array(rows, dtype=complex)
