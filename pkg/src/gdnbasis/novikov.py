"""Free Gelfand-Dorfman-Novikov algebras inside k{X}.

``x o y = (Dx) y`` makes k{X} a right Novikov algebra; the subalgebra
generated by the ``a[-1]`` is free and equals the span of the weight -1
monomials.  Everything here works through that embedding:

* expression trees over ``o`` and their evaluation (:func:`embed`);
* tableau bases of the free algebra and their leading monomials;
* Novikov compositions over critical common multiples, checked up to a
  dx-length cap (:func:`check_gsb_gdn`);
* membership and normal forms in ``GDN(X|S)`` by reduction in the
  differential envelope, restricted to weight -1;
* an independent brute-force span oracle based on exact elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator, Union

from .algebra import (
    Alphabet,
    DVar,
    Monomial,
    Polynomial,
    circle,
    derive,
    monomials_by_dx,
)
from .errors import WeightError
from .groebner import (
    RelationSet,
    buchberger_capped,
    complete_homogeneous,
    normal_form,
)
from .linalg import Echelon


# ---------------------------------------------------------------------------
# expressions


@dataclass(frozen=True)
class Gen:
    gen: int


@dataclass(frozen=True)
class Circ:
    left: "GdnExpr"
    right: "GdnExpr"


GdnExpr = Union[Gen, Circ]


def o(x: GdnExpr, y: GdnExpr) -> Circ:
    return Circ(x, y)


def leaves(e: GdnExpr) -> int:
    if isinstance(e, Gen):
        return 1
    return leaves(e.left) + leaves(e.right)


@lru_cache(maxsize=None)
def embed(e: GdnExpr) -> Polynomial:
    """Image of ``e`` under ``a -> a[-1]``; weight -1, length = number of leaves."""
    if isinstance(e, Gen):
        return Polynomial.monomial(Monomial([DVar(-1, e.gen)]))
    return circle(embed(e.left), embed(e.right))


def left_normed(items: list[GdnExpr]) -> GdnExpr:
    out = items[0]
    for x in items[1:]:
        out = Circ(out, x)
    return out


def right_normed(items: list[GdnExpr]) -> GdnExpr:
    out = items[-1]
    for x in reversed(items[:-1]):
        out = Circ(x, out)
    return out


def format_gdn(e: GdnExpr, alphabet: Alphabet) -> str:
    if isinstance(e, Gen):
        return alphabet.names[e.gen]
    left = format_gdn(e.left, alphabet)
    right = format_gdn(e.right, alphabet)
    if isinstance(e.left, Circ):
        left = f"({left})"
    if isinstance(e.right, Circ):
        right = f"({right})"
    return f"{left} o {right}"


def parse_gdn(text: str, alphabet: Alphabet) -> GdnExpr:
    """Parse a pure ``o``-expression over generator names."""
    from .parse import to_gdn_expr

    return to_gdn_expr(text, alphabet)


def check_identities(
    x: Polynomial, y: Polynomial, z: Polynomial
) -> tuple[Polynomial, Polynomial]:
    """Defects of right-symmetry and left-commutativity; both should be 0."""
    c = circle
    right_sym = c(x, c(y, z)) - c(c(x, y), z) - c(x, c(z, y)) + c(c(x, z), y)
    left_comm = c(x, c(y, z)) - c(y, c(x, z))
    return right_sym, left_comm


def nonfree_witness() -> tuple[Polynomial, Polynomial]:
    """Both sides of ``(a o a) o (((a o a) o a) o a) = ((a o a) o a) o ((a o a) o a)``."""
    a = Gen(0)
    aa = Circ(a, a)
    aaa = Circ(aa, a)
    lhs = embed(Circ(aa, Circ(aaa, a)))
    rhs = embed(Circ(aaa, aaa))
    return lhs, rhs


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class Tableau:
    """Novikov diagram filling.

    ``rows[0]`` is the first row including the extra box, so it holds
    ``r_1 + 1`` entries; ``rows[i]`` holds ``r_{i+1}`` entries.  Entries are
    generator indices.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(not r for r in rows):
            raise ValueError("tableau rows must be nonempty")
        r = self.row_lengths
        if r[0] == 0 and len(rows) > 1:
            raise ValueError("a lone box cannot sit above further rows")
        if any(r[i] < r[i + 1] for i in range(len(r) - 1)):
            raise ValueError(f"row lengths must be non-increasing, got {r}")
        for i in range(len(r) - 1):
            if r[i] == r[i + 1] and rows[i][0] < rows[i + 1][0]:
                raise ValueError(f"first column must not increase between equal rows {i}, {i + 1}")
        seq = self.tail_sequence()
        if any(seq[k] > seq[k + 1] for k in range(len(seq) - 1)):
            raise ValueError(f"tail sequence must be non-decreasing, got {seq}")

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return (len(self.rows[0]) - 1,) + tuple(len(r) for r in self.rows[1:])

    @property
    def degree(self) -> int:
        return sum(self.row_lengths) + 1

    def tail_sequence(self) -> tuple[int, ...]:
        seq: list[int] = []
        for row in reversed(self.rows):
            seq.extend(row[1:])
        return tuple(seq)

    def to_expr(self) -> GdnExpr:
        ys = [left_normed([Gen(x) for x in row]) for row in self.rows]
        # Y_p o (Y_{p-1} o ( ... (Y_2 o Y_1)))
        return right_normed(list(reversed(ys)))

    def to_json(self) -> dict:
        return {"row_lengths": list(self.row_lengths), "entries": [list(r) for r in self.rows]}


def tableau_to_poly(t: Tableau) -> Polynomial:
    return embed(t.to_expr())


def tableau_leading(t: Tableau) -> Monomial:
    """Closed-form leading monomial: product of the row factors."""
    rows, r = t.rows, t.row_lengths
    vs: list[DVar] = []
    if r[0] == 0:
        vs.append(DVar(-1, rows[0][0]))
    else:
        vs.append(DVar(r[0] - 1, rows[0][0]))
        vs.extend(DVar(-1, x) for x in rows[0][1:])
    for i in range(1, len(rows)):
        vs.append(DVar(r[i] - 1, rows[i][0]))
        vs.extend(DVar(-1, x) for x in rows[i][1:])
    return Monomial(vs)


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def tableau_enumerate(ngens: int, degree: int) -> list[Tableau]:
    """All valid tableaux of the given degree over ``ngens`` generators."""
    if degree <= 0:
        raise ValueError("degree must be >= 1")
    if degree == 1:
        return [Tableau(((g,),)) for g in range(ngens)]
    out = []
    for shape in _partitions(degree - 1):
        p = len(shape)
        groups: list[int] = []
        for k, ri in enumerate(shape):
            if k and ri == shape[k - 1]:
                groups[-1] += 1
            else:
                groups.append(1)
        firsts_choices = [
            list(combinations_with_replacement(range(ngens - 1, -1, -1), size)) for size in groups
        ]
        for seq in combinations_with_replacement(range(ngens), degree - p):
            for firsts in product(*firsts_choices):
                heads = [x for grp in firsts for x in grp]
                # fill tails from the bottom row up
                tails: list[tuple[int, ...]] = [()] * p
                pos = 0
                for i in range(p - 1, -1, -1):
                    width = shape[i] if i == 0 else shape[i] - 1
                    tails[i] = seq[pos : pos + width]
                    pos += width
                rows = tuple((heads[i],) + tails[i] for i in range(p))
                out.append(Tableau(rows))
    return out


def gdn_basis_size(ngens: int, degree: int) -> int:
    return len(tableau_enumerate(ngens, degree))


# ---------------------------------------------------------------------------
# critical common multiples


@dataclass(frozen=True)
class CriticalMultiple:
    lcm: Monomial
    positive: tuple[DVar, ...]  # d_1[m_1] >= ... >= d_p[m_p], all m_j > 0
    negative: tuple[int, ...]  # c_1 >= ... >= c_q, each padding c[-1]
    w: Monomial
    case: str


def _contains_product(w: Monomial, u: Monomial, v: Monomial) -> bool:
    need = u.counts + v.counts
    wc = w.counts
    return all(wc.get(x, 0) >= k for x, k in need.items())


def critical_multiples(
    f: Polynomial, t1: int, g: Polynomial, t2: int, cap: int, ngens: int
) -> list[CriticalMultiple]:
    """Critical weight -1 common multiples of ``lm(D^t1 f)``, ``lm(D^t2 g)``.

    The positive paddings of the ``wt(lcm) < -1`` case have no a priori
    bracket bound; ``cap`` bounds the dx-length of the multiples returned.
    """
    u, v = f.lm.shifted(t1), g.lm.shifted(t2)
    if u.gcd_is_one(v):
        return []
    L = u.lcm(v)
    wt = L.weight
    out: list[CriticalMultiple] = []

    def emit(pos: tuple[DVar, ...], case: str) -> None:
        q = L.weight + sum(d.bracket for d in pos) + 1
        base = L * Monomial._sorted(pos) if pos else L
        if base.dx_length + q > cap:
            return
        for negs in combinations_with_replacement(range(ngens - 1, -1, -1), q):
            w = base * Monomial._sorted(tuple(DVar(-1, c) for c in negs)) if negs else base
            if _contains_product(w, u, v):
                continue
            out.append(CriticalMultiple(L, pos, negs, w, case))

    if wt == -1:
        if L.dx_length <= cap:
            out.append(CriticalMultiple(L, (), (), L, "ii"))
    elif wt > -1:
        emit((), "i")
    else:
        max_m = cap - L.dx_length - 2
        pool = [DVar(m, d) for m in range(max_m, 0, -1) for d in range(ngens - 1, -1, -1)]

        def rec(start: int, weight: int, budget: int, acc: tuple[DVar, ...]):
            for k in range(start, len(pool)):
                d = pool[k]
                cost = d.bracket + 2
                if cost > budget:
                    continue
                nw = weight + d.bracket
                if nw >= -1:
                    emit(acc + (d,), "iii")
                else:
                    rec(k, nw, budget - cost, acc + (d,))

        rec(0, wt, cap - L.dx_length, ())
    return out


def gdn_composition(
    f: Polynomial, t1: int, g: Polynomial, t2: int, w: Monomial
) -> Polynomial:
    df, dg = derive(f, t1), derive(g, t2)
    (l1, a1), (l2, a2) = df.leading(), dg.leading()
    return df.mul_monomial(l1.quotient(w), 1 / a1) - dg.mul_monomial(l2.quotient(w), 1 / a2)


@dataclass
class GdnReport:
    cap: int
    pairs: int = 0
    checked: int = 0
    nontrivial: list = field(default_factory=list)
    note: str = "bounded: certifies the Gröbner-Shirshov property only up to the cap"

    @property
    def clean(self) -> bool:
        return not self.nontrivial


def _require_gdn(S: RelationSet) -> None:
    bad = [S.alphabet.format(r) for r in S if r.weights() != {-1}]
    if bad:
        raise WeightError(f"relations are not in GDN(X) (weight -1): {bad}")


def check_gsb_gdn(S: RelationSet, cap: int) -> GdnReport:
    """Check every Novikov composition over critical multiples up to ``cap``."""
    _require_gdn(S)
    ngens = len(S.alphabet)
    report = GdnReport(cap)
    rels = S.relations
    for i in range(len(rels)):
        for j in range(i, len(rels)):
            f, g = rels[i], rels[j]
            for t1 in range(max(0, cap - f.lm.dx_length + 1)):
                for t2 in range(max(0, cap - g.lm.dx_length + 1)):
                    if i == j and t1 >= t2:
                        continue
                    cms = critical_multiples(f, t1, g, t2, cap, ngens)
                    if cms:
                        report.pairs += 1
                    for cm in cms:
                        h = gdn_composition(f, t1, g, t2, cm.w)
                        report.checked += 1
                        r = normal_form(h, S)
                        if r:
                            report.nontrivial.append((i, t1, j, t2, cm.w, r))
    return report


# ---------------------------------------------------------------------------
# membership in GDN(X|S)


@dataclass(frozen=True)
class GdnResult:
    normal_form: Polynomial
    member: bool
    mode: str
    basis: RelationSet


def _require_weight(f: Polynomial) -> None:
    if f and f.weights() != {-1}:
        raise WeightError(f"expression is not in GDN(X): weights {sorted(f.weights())}")


def gdn_reduce(f: Polynomial, S: RelationSet, cap: int | None = None) -> GdnResult:
    """Normal form of a weight -1 element modulo ``Id(S)``.

    For homogeneous ``S`` this reduces against the staged completion of the
    differential envelope and is exact.  Otherwise it reduces against a
    capped completion and the answer is only bounded.
    """
    _require_weight(f)
    _require_gdn(S)
    n = max((m.dx_length for m in f.terms), default=0)
    if S.is_dx_homogeneous:
        basis = complete_homogeneous(S, n).current
        mode = "exact"
    else:
        c = max(cap or 0, n)
        basis = buchberger_capped(S, c).basis
        mode = f"bounded({c})"
    r = normal_form(f, basis)
    return GdnResult(r, r.is_zero(), mode, basis)


def nf_gdn(f: Polynomial, S: RelationSet, cap: int | None = None) -> Polynomial:
    return gdn_reduce(f, S, cap).normal_form


def member_gdn(f: Polynomial, S: RelationSet, cap: int | None = None) -> bool:
    return gdn_reduce(f, S, cap).member


# ---------------------------------------------------------------------------
# brute-force oracle


def _mkey(m: Monomial) -> tuple:
    return (len(m.vars), m.vars)


def span_oracle(f: Polynomial, S: RelationSet, cap: int, *, gdn: bool = False) -> bool:
    """Is ``f`` in the span of all S-words with leading dx-length <= ``cap``?

    With ``gdn=True`` only S-words of leading weight -1 are used (the ideal
    ``Id(S)`` of the free Novikov algebra).  Exact for dx-homogeneous ``S``
    once ``cap`` reaches the dx-length of ``f``; otherwise a True answer is
    sound and a False one inconclusive.
    """
    ngens = len(S.alphabet)
    targets = f.dx_lengths() if S.is_dx_homogeneous else None
    ech = Echelon(_mkey)
    for s in S.relations:
        lm = s.lm
        for t in range(max(0, cap - lm.dx_length + 1)):
            base = lm.dx_length + t
            ds = derive(s, t)
            if not ds:
                continue
            if targets is None:
                us = monomials_by_dx(ngens, cap - base)
            else:
                us = (
                    u
                    for k in sorted(targets)
                    if base <= k <= cap
                    for u in monomials_by_dx(ngens, k - base, k - base)
                )
            for u in us:
                if gdn and u.weight + lm.weight + t != -1:
                    continue
                ech.add(ds.mul_monomial(u).terms)
    return ech.contains(f.terms)


__all__ = [
    "Gen",
    "Circ",
    "GdnExpr",
    "o",
    "embed",
    "leaves",
    "left_normed",
    "right_normed",
    "format_gdn",
    "parse_gdn",
    "check_identities",
    "nonfree_witness",
    "Tableau",
    "tableau_to_poly",
    "tableau_leading",
    "tableau_enumerate",
    "CriticalMultiple",
    "critical_multiples",
    "gdn_composition",
    "GdnReport",
    "check_gsb_gdn",
    "GdnResult",
    "gdn_reduce",
    "nf_gdn",
    "member_gdn",
    "span_oracle",
]
