"""Count distinct bi-unimodular sequences and cyclic roots of index 3 for small primes."""
import argparse

from cyclic3.arith import admissible_primes, build_context
from cyclic3.expand import ENUMERATION_P_MAX, enumerate_biunimodular, enumerate_cyclic_roots


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=31)
    args = ap.parse_args()
    print("p,biunimodular,cyclic_roots,roots_by_family")
    for p in admissible_primes(7, min(args.p_max, ENUMERATION_P_MAX)):
        ctx = build_context(p)
        bi = enumerate_biunimodular(ctx)
        roots = enumerate_cyclic_roots(ctx)
        fams = " ".join(f"{k}={v}" for k, v in roots.by_family.items())
        print(f"{p},{bi.count},{roots.count},{fams}")


if __name__ == "__main__":
    main()
