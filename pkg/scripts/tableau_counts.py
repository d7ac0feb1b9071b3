"""Dimensions of the homogeneous components of free Novikov algebras.

Counts tableaux per degree and checks them against weight -1 monomials.
"""

import argparse
from dataclasses import dataclass

from gdnbasis.algebra import weight_minus_one_monomials
from gdnbasis.novikov import tableau_enumerate, tableau_leading


@dataclass
class Config:
    max_gens: int = 3
    max_degree: int = 8


def main(cfg: Config) -> None:
    print("gens \\ degree " + " ".join(f"{d:>6}" for d in range(1, cfg.max_degree + 1)))
    for n in range(1, cfg.max_gens + 1):
        row = []
        for d in range(1, cfg.max_degree + 1):
            ts = tableau_enumerate(n, d)
            leads = {tableau_leading(t) for t in ts}
            assert leads == set(weight_minus_one_monomials(n, d))
            row.append(len(ts))
        print(f"{n:>14} " + " ".join(f"{c:>6}" for c in row))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-gens", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=8)
    a = p.parse_args()
    main(Config(a.max_gens, a.max_degree))
