"""Free commutative differential algebra k{X} over the rationals.

A generator ``a`` of X is the variable ``a[-1]``; its ``(i+1)``-st derivative
is ``a[i]``.  Monomials are finite multisets of such variables, polynomials
are finite rational combinations of monomials.  The product is the usual
commutative one, ``D`` acts by the Leibniz rule and ``f o g = (Df) g``.

Variables are ordered by ``(bracket, generator index)`` and monomials by
length first, then lexicographically on their variables listed in
descending order.  This is a monomial well-order compatible with both the
product and the derivation (the leading monomial of ``Du`` is obtained by
raising the top variable of ``u``).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

__all__ = [
    "Alphabet",
    "DVar",
    "Monomial",
    "Polynomial",
    "ONE",
    "ZERO",
    "dvar_compare",
    "mono_compare",
    "mono_stats",
    "poly_add",
    "poly_scale",
    "poly_mul",
    "derive",
    "circle",
    "leading",
    "leading_of_derived",
]

Coeff = Union[int, Fraction]


class DVar(NamedTuple):
    """``gen[bracket]``, i.e. ``D^(bracket+1)`` applied to generator ``gen``."""

    bracket: int
    gen: int

    def bump(self, t: int = 1) -> "DVar":
        return DVar(self.bracket + t, self.gen)


class Alphabet:
    """Finite, well-ordered generator set; declaration order is the order."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and other.names == self.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def var(self, name: str, bracket: int = -1) -> "Polynomial":
        if bracket < -1:
            raise ValueError(f"bracket must be >= -1, got {bracket}")
        return Polynomial.monomial(Monomial([DVar(bracket, self.index(name))]))

    def gens(self) -> list["Polynomial"]:
        return [self.var(n) for n in self.names]

    # -- rendering --------------------------------------------------------
    def format_dvar(self, v: DVar) -> str:
        return f"{self.names[v.gen]}[{v.bracket}]"

    def format_monomial(self, m: "Monomial") -> str:
        if not m.vars:
            return "1"
        parts = []
        for v, k in m.runs():
            s = self.format_dvar(v)
            parts.append(s if k == 1 else f"{s}^{k}")
        return "*".join(parts)

    def format(self, f: "Polynomial") -> str:
        if not f.terms:
            return "0"
        out = []
        for m, c in f.items_desc():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m.vars:
                body = _fmt_rational(a)
            elif a == 1:
                body = self.format_monomial(m)
            else:
                body = f"{_fmt_rational(a)}*{self.format_monomial(m)}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def _fmt_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Monomial:
    """Commutative word in the variables ``a[i]``, stored sorted descending."""

    __slots__ = ("vars", "_hash", "_counts")

    def __init__(self, vars_: Iterable[DVar] = ()):
        vs = []
        for v in vars_:
            v = DVar(*v)
            if v.bracket < -1:
                raise ValueError(f"bracket must be >= -1, got {v.bracket}")
            vs.append(v)
        vs.sort(reverse=True)
        self.vars: tuple[DVar, ...] = tuple(vs)
        self._hash = hash(self.vars)
        self._counts = None

    @classmethod
    def _sorted(cls, vars_: tuple[DVar, ...]) -> "Monomial":
        m = cls.__new__(cls)
        m.vars = vars_
        m._hash = hash(vars_)
        m._counts = None
        return m

    @property
    def counts(self) -> Counter:
        if self._counts is None:
            self._counts = Counter(self.vars)
        return self._counts

    def runs(self) -> list[tuple[DVar, int]]:
        """Run-length view ``[(var, multiplicity), ...]`` in descending order."""
        out: list[tuple[DVar, int]] = []
        for v in self.vars:
            if out and out[-1][0] == v:
                out[-1] = (v, out[-1][1] + 1)
            else:
                out.append((v, 1))
        return out

    # -- statistics -------------------------------------------------------
    def __len__(self) -> int:
        return len(self.vars)

    @property
    def weight(self) -> int:
        return sum(v.bracket for v in self.vars)

    @property
    def dx_length(self) -> int:
        """Number of occurrences of D and of generators: ``weight + 2*length``."""
        return self.weight + 2 * len(self.vars)

    @property
    def top(self) -> DVar:
        return self.vars[0]

    @property
    def max_bracket(self) -> int:
        return self.vars[0].bracket if self.vars else -1

    # -- ordering ---------------------------------------------------------
    @property
    def key(self) -> tuple:
        return (len(self.vars), self.vars)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.vars == other.vars

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return (len(self.vars), self.vars) < (len(other.vars), other.vars)

    def __le__(self, other: "Monomial") -> bool:
        return (len(self.vars), self.vars) <= (len(other.vars), other.vars)

    def __gt__(self, other: "Monomial") -> bool:
        return (len(self.vars), self.vars) > (len(other.vars), other.vars)

    def __ge__(self, other: "Monomial") -> bool:
        return (len(self.vars), self.vars) >= (len(other.vars), other.vars)

    # -- monoid structure -------------------------------------------------
    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.vars:
            return self
        if not self.vars:
            return other
        return Monomial._sorted(tuple(sorted(self.vars + other.vars, reverse=True)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial._sorted(tuple(sorted(self.vars * k, reverse=True)))

    def divides(self, other: "Monomial") -> bool:
        if len(self.vars) > len(other.vars):
            return False
        oc = other.counts
        return all(oc.get(v, 0) >= k for v, k in self.counts.items())

    def quotient(self, other: "Monomial") -> "Monomial | None":
        """``other / self`` if ``self`` divides ``other``, else ``None``."""
        if not self.divides(other):
            return None
        rest = other.counts - self.counts
        return Monomial._sorted(tuple(sorted(rest.elements(), reverse=True)))

    def lcm(self, other: "Monomial") -> "Monomial":
        c = self.counts | other.counts
        return Monomial._sorted(tuple(sorted(c.elements(), reverse=True)))

    def gcd_is_one(self, other: "Monomial") -> bool:
        return not (self.counts & other.counts)

    def shifted(self, t: int) -> "Monomial":
        """Leading monomial of ``D^t`` of this monomial: raise the top variable."""
        if t == 0:
            return self
        if not self.vars:
            raise ValueError("D annihilates the unit monomial")
        top = self.vars[0].bump(t)
        return Monomial._sorted((top,) + self.vars[1:])

    def derivative(self) -> dict["Monomial", int]:
        """``D`` of this monomial as ``{monomial: integer coefficient}``."""
        out: dict[Monomial, int] = {}
        for v, k in self.runs():
            rest = list(self.vars)
            rest.remove(v)
            rest.append(v.bump())
            m = Monomial._sorted(tuple(sorted(rest, reverse=True)))
            out[m] = out.get(m, 0) + k
        return out

    def __repr__(self) -> str:
        if not self.vars:
            return "Monomial(1)"
        return "Monomial(" + "*".join(f"x{v.gen}[{v.bracket}]" for v in self.vars) + ")"


ONE_MONOMIAL = Monomial()


def _key(m: Monomial) -> tuple:
    return (len(m.vars), m.vars)


class Polynomial:
    """Immutable element of k{X}: a map monomial -> nonzero Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, m: Monomial, c: Coeff = 1) -> "Polynomial":
        return cls({m: c})

    @classmethod
    def constant(cls, c: Coeff) -> "Polynomial":
        return cls({ONE_MONOMIAL: c})

    # -- inspection -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def items_desc(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: _key(mc[0]), reverse=True)

    def coeff(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def leading(self) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("no leading term: zero polynomial")
        m = max(self.terms, key=_key)
        return m, self.terms[m]

    @property
    def lm(self) -> Monomial:
        return self.leading()[0]

    @property
    def lc(self) -> Fraction:
        return self.leading()[1]

    def monic(self) -> "Polynomial":
        return self.scale(1 / self.lc)

    def dx_lengths(self) -> set[int]:
        return {m.dx_length for m in self.terms}

    def weights(self) -> set[int]:
        return {m.weight for m in self.terms}

    def lengths(self) -> set[int]:
        return {len(m) for m in self.terms}

    def is_dx_homogeneous(self) -> bool:
        return len(self.dx_lengths()) <= 1

    def is_weight_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    # -- equality ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.constant(other) if other else not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Monomial):
            return Polynomial.monomial(other)
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c: Coeff) -> "Polynomial":
        if not c:
            return ZERO
        c = Fraction(c)
        return Polynomial._raw({m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, u: Monomial, c: Coeff = 1) -> "Polynomial":
        c = Fraction(c)
        return Polynomial._raw({u * m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def derive(self, t: int = 1) -> "Polynomial":
        return derive(self, t)

    def circle(self, other: "Polynomial") -> "Polynomial":
        return circle(self, other)

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial(0)"
        body = " + ".join(f"{c}*{m!r}" for m, c in self.items_desc())
        return f"Polynomial({body})"


ZERO = Polynomial()
ONE = Polynomial.constant(1)


# ---------------------------------------------------------------------------
# functional surface


def dvar_compare(x: DVar, y: DVar) -> int:
    """-1, 0, 1 comparing ``(bracket, generator)`` lexicographically."""
    x, y = DVar(*x), DVar(*y)
    return (x > y) - (x < y)


def mono_compare(u: Monomial, v: Monomial) -> int:
    ku, kv = _key(u), _key(v)
    return (ku > kv) - (ku < kv)


def mono_stats(w: Monomial) -> tuple[int, int, int]:
    """``(weight, length, dx_length)``."""
    return w.weight, len(w), w.dx_length


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_scale(f: Polynomial, c: Coeff) -> Polynomial:
    return f.scale(c)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def _derive_once(f: Polynomial) -> Polynomial:
    out: dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        for dm, k in m.derivative().items():
            s = out.get(dm, 0) + c * k
            if s:
                out[dm] = s
            else:
                out.pop(dm, None)
    return Polynomial._raw(out)


@lru_cache(maxsize=4096)
def _derive_cached(f: Polynomial, t: int) -> Polynomial:
    if t == 0:
        return f
    return _derive_once(_derive_cached(f, t - 1))


def derive(f: Polynomial, t: int = 1) -> Polynomial:
    """Apply the Leibniz derivation ``t`` times."""
    if t < 0:
        raise ValueError("derivation count must be >= 0")
    return _derive_cached(f, t)


def circle(f: Polynomial, g: Polynomial) -> Polynomial:
    return derive(f, 1) * g


def leading(f: Polynomial) -> tuple[Monomial, Fraction]:
    return f.leading()


def leading_of_derived(f: Polynomial, t: int) -> Monomial:
    """Leading monomial of ``D^t f`` without expanding it.

    In characteristic 0 the top-variable bump of ``lm(f)`` appears in
    ``D^t f`` with coefficient ``LC(f)`` times a positive integer, and every
    other monomial of ``D^t f`` is smaller.
    """
    return f.lm.shifted(t)


# ---------------------------------------------------------------------------
# enumeration


def dvars(ngens: int, max_bracket: int) -> list[DVar]:
    """All variables with bracket in ``[-1, max_bracket]``, descending."""
    return [DVar(b, g) for b in range(max_bracket, -2, -1) for g in range(ngens - 1, -1, -1)]


def monomials_of_length(ngens: int, n: int, max_bracket: int) -> Iterator[Monomial]:
    from itertools import combinations_with_replacement

    for combo in combinations_with_replacement(dvars(ngens, max_bracket), n):
        yield Monomial._sorted(combo)


def monomials_by_dx(ngens: int, max_dx: int, min_dx: int = 0) -> Iterator[Monomial]:
    """Every monomial with ``min_dx <= dx_length <= max_dx``.

    A variable ``a[i]`` costs ``i + 2`` towards the dx-length.
    """
    pool = dvars(ngens, max_dx - 2) if max_dx >= 1 else []

    def rec(start: int, budget: int, acc: tuple[DVar, ...]):
        if max_dx - budget >= min_dx:
            yield Monomial._sorted(acc)
        for k in range(start, len(pool)):
            v = pool[k]
            cost = v.bracket + 2
            if cost <= budget:
                yield from rec(k, budget - cost, acc + (v,))

    yield from rec(0, max_dx, ())


def weight_minus_one_monomials(ngens: int, n: int) -> list[Monomial]:
    """All monomials of length ``n`` and weight -1 (a basis of free GDN, degree n)."""
    if n < 1:
        return []
    return [m for m in monomials_of_length(ngens, n, n - 2 if n >= 2 else -1) if m.weight == -1]
