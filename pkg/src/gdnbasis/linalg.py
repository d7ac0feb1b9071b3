"""Sparse row echelon form over the rationals.

Vectors are dicts ``key -> Fraction``; a ``sort_key`` picks the pivot (the
largest key of a row).  Used as a brute-force span oracle, so it knows
nothing about monomial divisibility.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping


class Echelon:
    def __init__(self, sort_key: Callable[[Hashable], object]):
        self.sort_key = sort_key
        self.rows: dict[Hashable, dict[Hashable, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: Mapping[Hashable, Fraction]) -> dict[Hashable, Fraction]:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        done: dict[Hashable, Fraction] = {}
        while v:
            piv = max(v, key=self.sort_key)
            row = self.rows.get(piv)
            if row is None:
                done[piv] = v.pop(piv)
                continue
            c = v[piv]
            for k, rc in row.items():
                s = v.get(k, 0) - c * rc
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
        return done

    def add(self, vec: Mapping[Hashable, Fraction]) -> bool:
        """Insert a row; returns False if it was already in the span."""
        r = self._reduce(vec)
        if not r:
            return False
        piv = max(r, key=self.sort_key)
        c = r[piv]
        self.rows[piv] = {k: x / c for k, x in r.items()}
        return True

    def contains(self, vec: Mapping[Hashable, Fraction]) -> bool:
        return not self._reduce(vec)

    def rank(self) -> int:
        return len(self.rows)
