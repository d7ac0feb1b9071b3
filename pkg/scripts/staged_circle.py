"""Staged construction for the single relation a o a.

Prints, stage by stage, how many compositions were checked or skipped and
which elements entered or left the basis.
"""

import argparse
from dataclasses import dataclass

from gdnbasis.algebra import Alphabet
from gdnbasis.groebner import RelationSet, complete_homogeneous
from gdnbasis.parse import parse_poly


@dataclass
class Config:
    stages: int = 10
    relation: str = "a o a"


def main(cfg: Config) -> None:
    A = Alphabet(["a"])
    S = RelationSet(A, [parse_poly(cfg.relation, A)])
    state = complete_homogeneous(S, cfg.stages, max_dx=cfg.stages)
    for rec in state.history:
        print(f"stage {rec.stage} -> {rec.stage + 1}: checked {rec.checked}, skipped {rec.skipped}")
        for p in rec.replaced:
            print(f"    + {A.format(p)}")
        for p in rec.removed:
            print(f"    - {A.format(p)}")
    print(f"basis up to dx-length {cfg.stages}:")
    for p in state.stable():
        print(f"  [{p.lm.dx_length:2d}] {A.format(p)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--stages", type=int, default=10)
    p.add_argument("--relation", default="a o a")
    a = p.parse_args()
    main(Config(a.stages, a.relation))
