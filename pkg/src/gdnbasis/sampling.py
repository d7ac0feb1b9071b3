"""Seeded random monomials and polynomials for demos and property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import DVar, Monomial, Polynomial


def random_dvar(rng: random.Random, ngens: int, max_bracket: int) -> DVar:
    return DVar(rng.randint(-1, max_bracket), rng.randrange(ngens))


def random_monomial(
    rng: random.Random, ngens: int, max_len: int = 4, max_bracket: int = 3
) -> Monomial:
    n = rng.randint(0, max_len)
    return Monomial([random_dvar(rng, ngens, max_bracket) for _ in range(n)])


def random_coeff(rng: random.Random) -> Fraction:
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return c or Fraction(1)


def random_poly(
    rng: random.Random,
    ngens: int,
    max_terms: int = 3,
    max_len: int = 3,
    max_bracket: int = 3,
) -> Polynomial:
    terms: dict[Monomial, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(rng, ngens, max_len, max_bracket)
        terms[m] = terms.get(m, 0) + random_coeff(rng)
    return Polynomial(terms)
