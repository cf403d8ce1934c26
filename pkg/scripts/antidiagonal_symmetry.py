"""Is the signed distance antisymmetric under the anti-diagonal pairing?

For the product and diagonal pairings, D(b,a) is provably the negation
of D(a,b). The anti-diagonal case is left open here as an experiment:
this sweep draws random nested (normal) mass assignments, including ones
whose level boundaries differ, and counts violations of

    D(a,b) == -D(b,a)   (anti-diagonal pairing, signed cells)

printing the first counterexample if one shows up.

Usage: python scripts/antidiagonal_symmetry.py [--trials N] [--seed S]
"""

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fdist import MassAssignment, Strategy, distance, iu  # noqa: E402


def random_nested_mass(rng: random.Random) -> MassAssignment:
    """A random chain of shrinking intervals with random masses."""
    lo = Fraction(rng.randint(-16, 0), 2)
    hi = lo + Fraction(rng.randint(4, 20), 2)
    chain = [(lo, hi)]
    for _ in range(rng.randint(0, 3)):
        lo2 = chain[-1][0] + Fraction(rng.randint(0, 8), 4)
        hi2 = chain[-1][1] - Fraction(rng.randint(0, 8), 4)
        if lo2 > hi2:
            break
        if (lo2, hi2) != chain[-1]:
            chain.append((lo2, hi2))
    weights = [rng.randint(1, 4) for _ in chain]
    total = sum(weights)
    return MassAssignment(
        (iu(p), Fraction(w, total)) for p, w in zip(chain, weights)
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=20260817)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    violations = 0
    first = None
    for _ in range(args.trials):
        a, b = random_nested_mass(rng), random_nested_mass(rng)
        fwd = distance(a, b, directional=True, strategy=Strategy.ANTIDIAGONAL).mass
        rev = distance(b, a, directional=True, strategy=Strategy.ANTIDIAGONAL).mass
        if fwd != rev.negated():
            violations += 1
            if first is None:
                first = (a, b, fwd, rev)

    print(f"{args.trials} random nested pairs, seed {args.seed}")
    if violations == 0:
        print("no antisymmetry violations under the anti-diagonal pairing")
    else:
        a, b, fwd, rev = first
        print(f"{violations} violations; first counterexample:")
        print(f"  a = {a}")
        print(f"  b = {b}")
        print(f"  D(a,b)  = {fwd}")
        print(f"  D(b,a)  = {rev}")
        print(f"  -D(b,a) = {rev.negated()}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
