"""The one-generator free Novikov algebra satisfies the identity
(a o a) o (((a o a) o a) o a) = ((a o a) o a) o ((a o a) o a).

Prints both expansions and searches degree 6 for all such coincidences
between pairs of bracketings built from the same number of leaves.
"""

import argparse
from dataclasses import dataclass
from itertools import combinations

from gdnbasis.algebra import Alphabet
from gdnbasis.novikov import Circ, Gen, embed, format_gdn, nonfree_witness


@dataclass
class Config:
    degree: int = 6


def bracketings(n: int):
    if n == 1:
        yield Gen(0)
        return
    for k in range(1, n):
        for left in bracketings(k):
            for right in bracketings(n - k):
                yield Circ(left, right)


def main(cfg: Config) -> None:
    A = Alphabet(["a"])
    lhs, rhs = nonfree_witness()
    print("lhs =", A.format(lhs))
    print("rhs =", A.format(rhs))
    print("difference =", A.format(lhs - rhs))

    classes: dict = {}
    for e in bracketings(cfg.degree):
        classes.setdefault(embed(e), []).append(e)
    print(f"degree {cfg.degree}: {sum(map(len, classes.values()))} bracketings, "
          f"{len(classes)} distinct images")
    shown = 0
    for polys in classes.values():
        for x, y in combinations(polys, 2):
            if shown < 5:
                print(f"  {format_gdn(x, A)}  ==  {format_gdn(y, A)}")
            shown += 1
    print(f"  ({shown} coinciding pairs)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--degree", type=int, default=6)
    main(Config(p.parse_args().degree))
