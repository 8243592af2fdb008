"""Print the five reference tables as computed from scratch."""
import argparse

from cyclic3.arith import admissible_primes
from cyclic3.asymptotics import table
from cyclic3.cli import to_csv

PRIMES = {
    1: admissible_primes(7, 181), 2: admissible_primes(7, 181), 3: admissible_primes(7, 181),
    4: [1003273, 1003279, 100205473],
    5: [67521601729, 67544557351, 250004500027, 250018500349],
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("which", nargs="*", type=int, default=[1, 2, 3, 4, 5])
    args = ap.parse_args()
    for k in args.which:
        print(f"# table {k}")
        print(to_csv(table(k, PRIMES[k])))


if __name__ == "__main__":
    main()
