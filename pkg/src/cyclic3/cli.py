"""Command-line front end.

Every command builds a report with named checks (observed value, tolerance,
verdict). Exit status: 0 if every check passes, 1 if any fails, 2 for
invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import arith, asymptotics, expand, solver
from .arith import NotAdmissible, build_context

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
COSET_PRINT_LIMIT = 50
HADAMARD_TOL = 1e-8
IDENTITY_TOL = 1e-8


class InputError(ValueError):
    pass


# --------------------------------------------------------------------------
# serialisation


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def from_jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        if set(obj) == {"re", "im"}:
            return complex(obj["re"], obj["im"])
        return {k: from_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [from_jsonable(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), indent=2, allow_nan=True)


def loads(text: str) -> Any:
    return from_jsonable(json.loads(text))


def format_complex(z: complex, decimals: int = 6) -> str:
    return f"{z.real:.{decimals}f}{z.imag:+.{decimals}f}i"


def _csv_cell(v: Any) -> str:
    if isinstance(v, (complex, np.complexfloating)):
        return format_complex(complex(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return f"{v:.3e}" if 0 < abs(v) < 1e-3 else f"{v:.6f}"
    return str(v)


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow(_csv_cell(v) for v in row.values())
    return buf.getvalue()


def parse_primes(text: str) -> list[int]:
    """'lo:hi' (admissible primes in range) or a comma list of primes."""
    text = text.strip()
    if ":" in text:
        lo, hi = (int(x) for x in text.split(":", 1))
        return arith.admissible_primes(lo, hi)
    primes = [int(x) for x in text.split(",") if x.strip()]
    for q in primes:
        arith.check_admissible(q)
    return primes


# --------------------------------------------------------------------------
# reports


@dataclass
class Check:
    name: str
    observed: Any
    tolerance: Any
    passed: bool


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: Any = None
    checks: list[Check] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    rows: list[dict] | None = None  # flat view used for CSV

    def check(self, name: str, observed: Any, tolerance: Any, passed: bool) -> bool:
        self.checks.append(Check(name, observed, tolerance, bool(passed)))
        return bool(passed)

    def check_le(self, name: str, observed: float, tolerance: float) -> bool:
        return self.check(name, observed, tolerance, observed <= tolerance)

    def check_eq(self, name: str, observed: Any, expected: Any) -> bool:
        return self.check(name, observed, expected, observed == expected)

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        yield
        self.timings[name] = self.timings.get(name, 0.0) + time.perf_counter() - t0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [vars(c) for c in self.checks],
            "passed": self.passed,
            "timings": self.timings,
        }

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            rows = self.rows if self.rows is not None else [
                {"check": c.name, "observed": c.observed, "tolerance": c.tolerance,
                 "passed": c.passed} for c in self.checks]
            return to_csv(rows)
        return dumps(self.as_dict())


# --------------------------------------------------------------------------
# commands


def _solution_row(ctx, s: solver.SolutionTriple) -> dict:
    return {
        "label": s.label, "kind": s.kind, "branch": s.branch if s.branch else "",
        "shift": s.shift, "inverted": s.inverted,
        "c0": s.c[0], "c1": s.c[1], "c2": s.c[2],
        "residual": solver.residual(ctx, s),
        "unimodular": s.is_unimodular(1e-10), "real": s.is_real(1e-10),
    }


def cmd_context(args) -> RunReport:
    ctx = build_context(args.p)
    rep = RunReport("context", {"p": args.p})
    closed = ctx.transitions
    res = {"p": ctx.p, "s": ctx.s, "A": ctx.A, "B": ctx.B, "theta": ctx.theta,
           "n_closed_form": closed.as_array()}
    if ctx.p <= arith.LABEL_TABLE_LIMIT:
        with rep.stage("cosets"):
            res["g"] = ctx.g
            if ctx.s <= COSET_PRINT_LIMIT:
                res["cosets"] = [c.tolist() for c in ctx.cosets]
            else:
                res["cosets"] = f"{ctx.s} elements each (elided)"
        with rep.stage("bruteforce"):
            brute = arith.transition_numbers_bruteforce(ctx)
        res["n_bruteforce"] = brute.as_array()
        rep.check_eq("transition_numbers_agree", brute == closed, True)
    else:
        res["cosets"] = "not tabulated above the label limit"
    res.update(n01=closed.n01, n02=closed.n02, n12=closed.n12)
    rep.results = res
    rep.rows = [{"p": ctx.p, "s": ctx.s, "A": ctx.A, "B": ctx.B, "theta": ctx.theta,
                 "n01": closed.n01, "n02": closed.n02, "n12": closed.n12}]
    return rep


def cmd_solve(args) -> RunReport:
    ctx = build_context(args.p)
    rep = RunReport("solve", {"p": args.p, "tol": args.tol})
    with rep.stage("solve"):
        sols = solver.all_solutions(ctx)
    rows = [_solution_row(ctx, s) for s in sols]
    rep.results = rows
    rep.rows = rows
    rep.check_eq("count", len(sols), 20)
    rep.check_le("max_residual", max(r["residual"] for r in rows), args.tol)
    rep.check_eq("unimodular", sum(r["unimodular"] for r in rows), 12)
    rep.check_eq("real", sum(r["real"] for r in rows), 8)
    return rep


def verify_prime(p: int, tol: float, rep: RunReport) -> dict:
    """Run the full check battery for one prime, recording into ``rep``."""
    ctx = build_context(p)
    ok = True
    with rep.stage("arith"):
        brute = arith.transition_numbers_bruteforce(ctx)
        ok &= rep.check_eq(f"{p}:transition_numbers", brute == ctx.transitions, True)
        ok &= rep.check_eq(f"{p}:quadratic_identity",
                           ctx.transitions.check_relations(p)["quadratic"], True)
        pairs = [ab for ab in arith.all_gauss_pairs(p) if ab[0] % 3 == 1]
        ok &= rep.check_eq(f"{p}:gauss_pair_unique", pairs, [(ctx.A, ctx.B)])
        ok &= rep.check_eq(f"{p}:convolution", arith.convolution_identity_check(ctx), True)
    with rep.stage("branches"):
        for i in range(4):
            b = solver.branch_parameters(ctx, i)
            ok &= rep.check_le(f"{p}:b{i}:discriminant", solver.discriminant_gap(b), IDENTITY_TOL)
            if i:
                ok &= rep.check_le(f"{p}:b{i}:det_m_root",
                                   solver.det_m_root_gap(ctx, b.s1), IDENTITY_TOL)
                ok &= rep.check_le(f"{p}:b{i}:theta_identity",
                                   solver.theta_identity_gap(ctx, b), IDENTITY_TOL)
    with rep.stage("solutions"):
        sols = solver.all_solutions(ctx)
        worst = max(solver.residual(ctx, s) for s in sols)
        ok &= rep.check_le(f"{p}:max_residual", worst, tol)
        ok &= rep.check_eq(f"{p}:split", (sum(s.is_unimodular() for s in sols),
                                          sum(s.is_real() for s in sols)), (12, 8))
        sep = solver.min_pairwise_distance(sols)
        ok &= rep.check(f"{p}:separation", sep, 1e-6, sep > 1e-6)
    with rep.stage("bounds"):
        bounds = asymptotics.bound_suite(ctx)
        for name, (obs, bound, holds) in bounds.checks().items():
            ok &= rep.check(f"{p}:{name}", obs, bound, holds)
    return {"p": p, "A": ctx.A, "B": ctx.B, "max_residual": worst,
            "min_separation": sep, "passed": bool(ok)}


def cmd_verify(args) -> RunReport:
    rep = RunReport("verify", {"p_min": args.p_min, "p_max": args.p_max, "tol": args.tol})
    primes = arith.admissible_primes(args.p_min, args.p_max)
    if not primes:
        rep.results = {"notice": f"no admissible primes in [{args.p_min}, {args.p_max}]",
                       "primes": []}
        rep.rows = []
        return rep
    rows = [verify_prime(p, args.tol, rep) for p in primes]
    # keep the JSON readable: per-prime summaries plus only the failing checks
    rep.results = {"primes": rows, "count": len(rows),
                   "failures": [vars(c) for c in rep.failures()]}
    rep.rows = rows
    return rep


def expected_count(p: int, kind: str) -> int:
    if kind == "biuni":
        return 336 if p == 7 else 12 * p * p
    return 434 if p == 7 else 20 * p * p


def cmd_enumerate(args) -> RunReport:
    if args.p > expand.ENUMERATION_P_MAX:
        n = (12 if args.kind == "biuni" else 20) * args.p**2
        raise InputError(f"p={args.p} exceeds the enumeration cap {expand.ENUMERATION_P_MAX}: "
                         f"{n} vectors of length {args.p}, about {16 * n * args.p / 1e6:.0f} MB")
    ctx = build_context(args.p)
    rep = RunReport("enumerate", {"p": args.p, "kind": args.kind})
    with rep.stage("enumerate"):
        if args.kind == "biuni":
            res = expand.enumerate_biunimodular(ctx)
        else:
            res = expand.enumerate_cyclic_roots(ctx)
    rep.results = res.as_dict()
    rep.rows = [{"p": args.p, "kind": args.kind, "count": res.count,
                 **{f"n_{k}": v for k, v in res.by_family.items()}}]
    rep.check_eq("count", res.count, expected_count(args.p, args.kind))
    rep.check("separation", res.min_separation, expand.SEPARATION_FLOOR,
              res.min_separation > expand.SEPARATION_FLOOR)
    return rep


def cmd_table(args) -> RunReport:
    primes = parse_primes(args.primes)
    rep = RunReport("table", {"which": args.which, "primes": primes})
    with rep.stage("table"):
        rows = asymptotics.table(args.which, primes)
    rep.results = rows
    rep.rows = rows
    return rep


def cmd_hadamard(args) -> RunReport:
    ctx = build_context(args.p)
    if args.branch not in (1, 2):
        raise InputError("hadamard needs a unimodular branch (1 or 2)")
    rep = RunReport("hadamard", {"p": args.p, "branch": args.branch, "r": args.r,
                                 "l": args.l, "out": args.out})
    with rep.stage("build"):
        c = solver.canonical_solution(ctx, args.branch)
        x = expand.build_sequence(ctx, c, args.r, args.l)
        try:
            h = expand.hadamard_matrix(x, HADAMARD_TOL)
        except expand.NotBiunimodular as exc:
            rep.check("biunimodular", str(exc), HADAMARD_TOL, False)
            return rep
    if args.out:
        expand.write_matrix(args.out, h.matrix)
    rep.results = {"convention": h.convention, "entry_deviation": h.entry_deviation,
                   "gram_deviation": h.gram_deviation, "first_row": h.matrix[0]}
    rep.check_le("entry_deviation", h.entry_deviation, HADAMARD_TOL)
    rep.check_le("gram_deviation", h.gram_deviation, HADAMARD_TOL)
    return rep


# --------------------------------------------------------------------------
# argument parsing


def _common(parser: argparse.ArgumentParser, defaults: bool) -> None:
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    parser.add_argument("--format", choices=("json", "csv"),
                        **({"default": "json"} if defaults else kw))
    parser.add_argument("--tol", type=float, **({"default": 1e-9} if defaults else kw))
    parser.add_argument("--out", **({"default": None} if defaults else kw))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic3", description="Cyclic p-roots of index 3 and their Hadamard matrices.")
    _common(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        _common(sp, defaults=False)
        sp.set_defaults(func=func)
        return sp

    add("context", cmd_context, "cosets, Gauss pair and transition numbers") \
        .add_argument("--p", type=int, required=True)
    add("solve", cmd_solve, "all 20 solutions of the reduced system") \
        .add_argument("--p", type=int, required=True)
    sp = add("verify", cmd_verify, "sweep every check over a prime range")
    sp.add_argument("--p-max", type=int, default=10_000)
    sp.add_argument("--p-min", type=int, default=7)
    sp = add("enumerate", cmd_enumerate, "count bi-unimodular sequences or cyclic roots")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--kind", choices=("biuni", "roots"), required=True)
    sp = add("table", cmd_table, "reproduce a results table")
    sp.add_argument("--which", type=int, choices=range(1, 6), required=True)
    sp.add_argument("--primes", required=True, help="'lo:hi' or comma separated")
    sp = add("hadamard", cmd_hadamard, "circulant Hadamard matrix from a canonical solution")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--branch", type=int, default=1)
    sp.add_argument("--r", type=int, default=0)
    sp.add_argument("--l", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "hadamard":
        # --out names the matrix file; the report goes to stdout
        out_report = None
    else:
        out_report = args.out
    try:
        rep = args.func(args)
    except (NotAdmissible, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = rep.render(args.format)
    if out_report:
        with open(out_report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if rep.command == "verify" and not rep.results.get("primes"):
        print(rep.results["notice"], file=sys.stderr)
    for c in rep.failures()[:5]:
        print(f"FAILED {c.name}: observed {c.observed!r}, tolerance {c.tolerance!r}",
              file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
