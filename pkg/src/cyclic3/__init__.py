"""Cyclic p-roots of index 3 for primes p = 1 (mod 6)."""
from .arith import PrimeContext, TransitionTable, build_context, gauss_decomposition
from .solver import SolutionTriple, all_solutions, canonical_solution

__all__ = [
    "PrimeContext",
    "TransitionTable",
    "build_context",
    "gauss_decomposition",
    "SolutionTriple",
    "all_solutions",
    "canonical_solution",
]
