"""Four-dimensional Novikov algebra e2 o e1 = e3, e3 o e1 = e4.

Runs the bounded Gröbner-Shirshov check at increasing caps, prints the
multiplication table recovered by reduction and the sizes of the capped
completions of the differential envelope.
"""

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from gdnbasis.algebra import circle
from gdnbasis.groebner import buchberger_capped, irr_enumerate
from gdnbasis.novikov import check_gsb_gdn, nf_gdn
from gdnbasis.parse import load_session

DATA = Path(__file__).resolve().parent.parent / "data" / "novikov4.gdn"


@dataclass
class Config:
    caps: tuple[int, ...] = (5, 6, 7, 8, 9)
    completion_caps: tuple[int, ...] = (3, 4, 5, 6, 7)


def main(cfg: Config) -> None:
    S = load_session(str(DATA)).relation_set()
    E = S.alphabet
    print("bounded check over critical common multiples")
    for cap in cfg.caps:
        t = time.perf_counter()
        rep = check_gsb_gdn(S, cap)
        print(f"  cap {cap}: {rep.checked:5d} compositions, nontrivial {len(rep.nontrivial)}"
              f"  ({time.perf_counter() - t:.2f}s)")

    print("multiplication table (row o column)")
    gens = E.gens()
    print("      " + "".join(f"{n:>10}" for n in E.names))
    for i, x in enumerate(gens):
        row = [E.format(nf_gdn(circle(x, y), S)) for y in gens]
        print(f"  {E.names[i]:>4}" + "".join(f"{r:>10}" for r in row))

    print("capped completion of the differential envelope")
    for cap in cfg.completion_caps:
        t = time.perf_counter()
        done = buchberger_capped(S, cap)
        irr = irr_enumerate(done.basis, 3, -1)
        print(f"  cap {cap}: {len(done.basis):3d} elements, {done.rounds} rounds, "
              f"weight -1 irreducibles up to length 3: {len(irr)}  ({time.perf_counter() - t:.2f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--caps", type=int, nargs="+", default=list(Config.caps))
    a = p.parse_args()
    main(Config(caps=tuple(a.caps)))
