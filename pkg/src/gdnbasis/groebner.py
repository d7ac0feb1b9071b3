"""Gröbner-Shirshov bases in the free commutative differential algebra k{X}.

An *S-word* is ``u * D^t s`` for a monomial ``u`` and a relation ``s``; the
ideal ``Id[S]`` is their linear span.  Reduction subtracts S-words whose
leading monomial ``u * lm(D^t s)`` matches the current leading monomial.

Two completion drivers are provided:

* :func:`complete_homogeneous` runs the terminating staged construction for a
  finite set of relations homogeneous in the dx-length (occurrences of ``D``
  and generators).  After stage ``n`` every basis element of dx-length at most
  ``n`` is final, which makes :func:`member_diff` an exact decision procedure.
* :func:`buchberger_capped` saturates compositions whose ambiguity monomial
  has dx-length at most a cap.  For inhomogeneous input this is only a
  semi-decision device.

Certificates are sparse maps ``SWord -> coefficient``.  When tracking is
enabled each basis element carries one expressed in S-words of the *input*
relations, so membership answers can be checked independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import (
    Alphabet,
    Monomial,
    Polynomial,
    ZERO,
    derive,
    monomials_of_length,
)
from .errors import NotHomogeneousError, ResourceCapExceeded

ONE_M = Monomial()


@dataclass(frozen=True)
class SWord:
    """``cofactor * D^shift (relation)``; ``relation`` indexes a relation list."""

    cofactor: Monomial
    shift: int
    relation: int

    def expand(self, relations: Sequence[Polynomial]) -> Polynomial:
        return derive(relations[self.relation], self.shift).mul_monomial(self.cofactor)

    def leading(self, relations: Sequence[Polynomial]) -> Monomial:
        return self.cofactor * relations[self.relation].lm.shifted(self.shift)


Certificate = dict  # SWord -> Fraction


class RelationSet:
    """Ordered, finite list of nonzero relations over a fixed alphabet."""

    def __init__(self, alphabet: Alphabet, relations: Iterable[Polynomial]):
        self.alphabet = alphabet
        rels = tuple(relations)
        for r in rels:
            if not isinstance(r, Polynomial):
                raise TypeError(f"relation must be a Polynomial, got {type(r).__name__}")
            if r.is_zero():
                raise ValueError("relation set may not contain the zero polynomial")
        self.relations = rels
        self.leading_monomials = tuple(r.lm for r in rels)
        self.is_dx_homogeneous = all(r.is_dx_homogeneous() for r in rels)
        self.is_weight_homogeneous = all(r.is_weight_homogeneous() for r in rels)

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.relations)

    def __getitem__(self, i: int) -> Polynomial:
        return self.relations[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RelationSet)
            and self.alphabet == other.alphabet
            and self.relations == other.relations
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.relations))

    def __repr__(self) -> str:
        body = ", ".join(self.alphabet.format(r) for r in self.relations)
        return f"RelationSet([{body}])"

    def is_gdn(self) -> bool:
        """All relations lie in the weight -1 subspace (the free GDN algebra)."""
        return all(r.weights() == {-1} for r in self.relations)

    def format(self) -> list[str]:
        return [self.alphabet.format(r) for r in self.relations]


# ---------------------------------------------------------------------------
# division


def divides(u: Monomial, w: Monomial) -> Monomial | None:
    """The quotient ``q`` with ``u * q == w``, or ``None``."""
    return u.quotient(w)


def _reductions(w: Monomial, lms: Sequence[Monomial]) -> Iterator[SWord]:
    for i, lm in enumerate(lms):
        if len(lm) > len(w):
            continue
        if not lm.vars:
            yield SWord(w, 0, i)
            continue
        for t in range(w.max_bracket - lm.top.bracket + 1):
            q = lm.shifted(t).quotient(w)
            if q is not None:
                yield SWord(q, t, i)


def find_reduction(w: Monomial, S: RelationSet) -> SWord | None:
    """First S-word (by relation index, then shift) whose leading monomial is ``w``."""
    return next(_reductions(w, S.leading_monomials), None)


def find_reductions(w: Monomial, S: RelationSet) -> list[SWord]:
    return list(_reductions(w, S.leading_monomials))


def _key(m: Monomial) -> tuple:
    return (len(m.vars), m.vars)


def _reduce(
    f: Polynomial,
    relations: Sequence[Polynomial],
    lms: Sequence[Monomial],
    rng: random.Random | None = None,
    witness: bool = False,
) -> tuple[Polynomial, Certificate | None]:
    p = dict(f.terms)
    rem: dict[Monomial, Fraction] = {}
    cert: Certificate | None = {} if witness else None
    while p:
        m = max(p, key=_key)
        c = p[m]
        if rng is None:
            hit = next(_reductions(m, lms), None)
        else:
            hits = list(_reductions(m, lms))
            hit = rng.choice(hits) if hits else None
        if hit is None:
            rem[m] = p.pop(m)
            continue
        g = derive(relations[hit.relation], hit.shift)
        factor = c / g.lc
        u = hit.cofactor
        for gm, gc in g.terms.items():
            mm = u * gm
            s = p.get(mm, 0) - factor * gc
            if s:
                p[mm] = s
            else:
                p.pop(mm, None)
        if cert is not None:
            cert[hit] = cert.get(hit, 0) + factor
    return Polynomial._raw(rem), cert


def normal_form(
    f: Polynomial,
    S: RelationSet,
    *,
    rng: random.Random | None = None,
    witness: bool = False,
):
    """Fully reduce ``f`` modulo ``S``.

    The default strategy always uses :func:`find_reduction`; passing ``rng``
    picks a random applicable S-word instead.  With ``witness=True`` returns
    ``(nf, cert)`` where ``f - nf`` equals the certificate's S-word sum.
    """
    nf, cert = _reduce(f, S.relations, S.leading_monomials, rng=rng, witness=witness)
    return (nf, cert) if witness else nf


def is_trivial(h: Polynomial, S: RelationSet) -> bool:
    return normal_form(h, S).is_zero()


# ---------------------------------------------------------------------------
# certificates


def certificate_value(cert: Certificate, relations: Sequence[Polynomial]) -> Polynomial:
    out = ZERO
    for sw, c in cert.items():
        out = out + sw.expand(relations).scale(c)
    return out


def verify_certificate(
    f: Polynomial, cert: Certificate, relations: Sequence[Polynomial]
) -> bool:
    return certificate_value(cert, relations) == f


def _cert_add(a: Certificate, b: Certificate, scale: Fraction = Fraction(1)) -> Certificate:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _cert_derive(cert: Certificate) -> Certificate:
    # D(u D^t s) = D(u) D^t s + u D^{t+1} s
    out: Certificate = {}
    for sw, c in cert.items():
        contrib = {SWord(sw.cofactor, sw.shift + 1, sw.relation): 1}
        if sw.cofactor.vars:
            for du, k in sw.cofactor.derivative().items():
                contrib[SWord(du, sw.shift, sw.relation)] = k
        for k2, v in contrib.items():
            s = out.get(k2, 0) + c * v
            if s:
                out[k2] = s
            else:
                out.pop(k2, None)
    return out


def _cert_lift(cert: Certificate, u: Monomial, t: int) -> Certificate:
    """Certificate of ``u * D^t g`` given a certificate of ``g``."""
    for _ in range(t):
        cert = _cert_derive(cert)
    if not u.vars:
        return cert
    return {SWord(u * sw.cofactor, sw.shift, sw.relation): c for sw, c in cert.items()}


def _cert_scale(cert: Certificate, c: Fraction) -> Certificate:
    return {k: v * c for k, v in cert.items()}


# ---------------------------------------------------------------------------
# compositions


def composition(
    f: Polynomial, t1: int, g: Polynomial, t2: int
) -> tuple[Monomial, Polynomial] | None:
    """Intersection/inclusion composition of ``D^t1 f`` and ``D^t2 g``.

    Returns ``(w, h)`` with ``w`` the lcm of the two shifted leading
    monomials, or ``None`` when that lcm is trivial (coprime leading words).
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("composition of a zero polynomial")
    df, dg = derive(f, t1), derive(g, t2)
    if df.is_zero() or dg.is_zero():
        return None
    (lm1, a1), (lm2, a2) = df.leading(), dg.leading()
    if lm1.gcd_is_one(lm2):
        return None
    w = lm1.lcm(lm2)
    h = df.mul_monomial(lm1.quotient(w), 1 / a1) - dg.mul_monomial(lm2.quotient(w), 1 / a2)
    return w, h


@dataclass(eq=False)
class Entry:
    """A basis element with its provenance and optional certificate."""

    poly: Polynomial
    origin: str
    cert: Certificate | None = None


def _input_entries(S: RelationSet, track: bool) -> list[Entry]:
    out = []
    for i, r in enumerate(S.relations):
        cert = {SWord(ONE_M, 0, i): Fraction(1)} if track else None
        out.append(Entry(r, f"input[{i}]", cert))
    return out


def _monic(e: Entry) -> Entry:
    lc = e.poly.lc
    if lc == 1:
        return e
    cert = _cert_scale(e.cert, 1 / lc) if e.cert is not None else None
    return Entry(e.poly.scale(1 / lc), e.origin, cert)


def _reduce_entry(e: Entry, others: Sequence[Entry], track: bool) -> Entry:
    polys = [o.poly for o in others]
    nf, wit = _reduce(e.poly, polys, [p.lm for p in polys], witness=track)
    cert = None
    if track:
        cert = dict(e.cert)
        for sw, c in wit.items():
            cert = _cert_add(cert, _cert_lift(others[sw.relation].cert, sw.cofactor, sw.shift), -c)
    return Entry(nf, e.origin, cert)


def _minimalize_entries(entries: Sequence[Entry], track: bool) -> list[Entry]:
    work: list[Entry] = []
    seen: set[Polynomial] = set()
    for e in entries:
        if e.poly.is_zero():
            continue
        e = _monic(e)
        if e.poly in seen:
            continue
        seen.add(e.poly)
        work.append(e)
    changed = True
    while changed:
        changed = False
        lms = [e.poly.lm for e in work]
        for idx, e in enumerate(work):
            others_lms = lms[:idx] + lms[idx + 1 :]
            if next(_reductions(lms[idx], others_lms), None) is None:
                continue
            others = work[:idx] + work[idx + 1 :]
            r = _reduce_entry(e, others, track)
            if r.poly.is_zero():
                del work[idx]
            else:
                r = _monic(r)
                work[idx] = Entry(r.poly, f"reduced({e.origin})", r.cert)
            changed = True
            break
    return work


def minimalize(S: RelationSet) -> RelationSet:
    """Interreduce leading monomials so no one is a multiple of another's shift.

    Reducible elements are replaced by their (monic) normal form modulo the
    rest, or dropped when that is zero.  The generated ideal is unchanged.
    """
    entries = _minimalize_entries(_input_entries(S, False), False)
    return RelationSet(S.alphabet, [e.poly for e in entries])


def _pairs(entries: Sequence[Entry], max_shift_of) -> Iterator[tuple[int, int, int, int]]:
    for i in range(len(entries)):
        for j in range(i, len(entries)):
            for t1 in range(max_shift_of(i) + 1):
                for t2 in range(max_shift_of(j) + 1):
                    if i == j and t1 >= t2:
                        continue
                    yield i, j, t1, t2


def _compose_entries(
    alphabet: Alphabet, e1: Entry, t1: int, e2: Entry, t2: int, track: bool, label: str
) -> tuple[Monomial, Entry] | None:
    res = composition(e1.poly, t1, e2.poly, t2)
    if res is None:
        return None
    w, h = res
    cert = None
    if track:
        d1, d2 = derive(e1.poly, t1), derive(e2.poly, t2)
        cert = _cert_add(
            _cert_scale(_cert_lift(e1.cert, d1.lm.quotient(w), t1), 1 / d1.lc),
            _cert_scale(_cert_lift(e2.cert, d2.lm.quotient(w), t2), 1 / d2.lc),
            Fraction(-1),
        )
    origin = (
        f"composition({label}; D^{t1}({e1.origin}), D^{t2}({e2.origin}); "
        f"w={alphabet.format_monomial(w)})"
    )
    return w, Entry(h, origin, cert)


# ---------------------------------------------------------------------------
# staged construction for dx-homogeneous relations


@dataclass(frozen=True)
class StageRecord:
    stage: int
    checked: int
    skipped: int
    added: tuple[Polynomial, ...]
    replaced: tuple[Polynomial, ...]
    removed: tuple[Polynomial, ...]


@dataclass
class CompletionState:
    """``S^(n)`` together with the stage history that produced it."""

    alphabet: Alphabet
    source: RelationSet
    stage: int
    entries: list[Entry]
    previous: frozenset | None = None
    history: list[StageRecord] = field(default_factory=list)
    track: bool = False
    max_dx: int | None = None

    @property
    def current(self) -> RelationSet:
        return RelationSet(self.alphabet, [e.poly for e in self.entries])

    @property
    def provenance(self) -> list[str]:
        return [e.origin for e in self.entries]

    def stable(self) -> RelationSet:
        """Elements with dx-length <= stage: final by the stability property."""
        return RelationSet(
            self.alphabet, [e.poly for e in self.entries if e.poly.lm.dx_length <= self.stage]
        )


def _require_dx_homogeneous(S: RelationSet) -> None:
    if not S.is_dx_homogeneous:
        bad = [S.alphabet.format(r) for r in S if not r.is_dx_homogeneous()]
        raise NotHomogeneousError(
            "relations are not D∪X-homogeneous (use buchberger_capped for a "
            f"bounded semi-decision): {bad}"
        )


def initial_state(
    S: RelationSet, track: bool = False, max_dx: int | None = None
) -> CompletionState:
    """``S^(0)``: the minimalized input, truncated to dx-length <= ``max_dx``.

    Truncation is exact below the bound: an element of larger dx-length can
    neither divide a smaller monomial nor take part in a composition whose
    ambiguity lies below the bound.
    """
    _require_dx_homogeneous(S)
    entries = _minimalize_entries(_input_entries(S, track), track)
    if max_dx is not None:
        entries = [e for e in entries if e.poly.lm.dx_length <= max_dx]
    return CompletionState(S.alphabet, S, 0, entries, None, [], track, max_dx)


def stage_step(state: CompletionState, max_size: int | None = None) -> CompletionState:
    """Pass from ``S^(n)`` to ``S^(n+1)``: compositions with shifts <= n+1."""
    n = state.stage
    cur = state.entries
    _require_dx_homogeneous(state.current)
    polys = [e.poly for e in cur]
    prev = state.previous
    added: list[Entry] = []
    added_polys: set[Polynomial] = set()
    checked = skipped = 0
    bound = state.max_dx
    for i, j, t1, t2 in _pairs(cur, lambda k: n + 1):
        if bound is not None:
            l1, l2 = polys[i].lm.shifted(t1), polys[j].lm.shifted(t2)
            if l1.dx_length > bound or l2.dx_length > bound or l1.lcm(l2).dx_length > bound:
                continue
        if (
            prev is not None
            and t1 <= n
            and t2 <= n
            and polys[i] in prev
            and polys[j] in prev
        ):
            skipped += 1
            continue
        res = _compose_entries(state.alphabet, cur[i], t1, cur[j], t2, state.track, f"stage {n}")
        if res is None:
            continue
        checked += 1
        _, e = res
        r = _reduce_entry(e, cur, state.track)
        if r.poly.is_zero():
            continue
        r = _monic(r)
        if r.poly in added_polys:
            continue
        added_polys.add(r.poly)
        added.append(r)
    new_entries = _minimalize_entries(list(cur) + added, state.track)
    if max_size is not None and len(new_entries) > max_size:
        raise ResourceCapExceeded(
            f"basis grew to {len(new_entries)} elements at stage {n + 1} (limit {max_size})"
        )
    old = set(polys)
    new = {e.poly for e in new_entries}
    record = StageRecord(
        stage=n,
        checked=checked,
        skipped=skipped,
        added=tuple(e.poly for e in added),
        replaced=tuple(e.poly for e in new_entries if e.poly not in old),
        removed=tuple(p for p in polys if p not in new),
    )
    return CompletionState(
        state.alphabet,
        state.source,
        n + 1,
        new_entries,
        frozenset(old),
        state.history + [record],
        state.track,
        state.max_dx,
    )


_STAGE_CACHE: dict[tuple, list[CompletionState]] = {}


def complete_homogeneous(
    S: RelationSet,
    n: int,
    *,
    max_dx: int | None = None,
    track: bool = False,
    max_size: int | None = None,
) -> CompletionState:
    """Minimalize then run ``n`` stage steps; results are memoized per input.

    Only elements of dx-length <= ``max_dx`` (default ``n``) are built.  The
    untruncated construction is doubly exponential in practice and its part
    above ``n`` is not final anyway.
    """
    if n < 0:
        raise ValueError("stage must be >= 0")
    _require_dx_homogeneous(S)
    if max_dx is None:
        max_dx = n
    states = _STAGE_CACHE.setdefault((S, track, max_dx), [])
    if not states:
        states.append(initial_state(S, track, max_dx))
    while len(states) <= n:
        states.append(stage_step(states[-1], max_size=max_size))
    return states[n]


@dataclass(frozen=True)
class Membership:
    member: bool
    normal_form: Polynomial
    mode: str
    basis: RelationSet
    certificate: Certificate | None = None  # over the *input* relations


def decide_diff(f: Polynomial, S: RelationSet, *, certify: bool = False) -> Membership:
    """Exact membership in ``Id[S]`` for finite dx-homogeneous ``S``."""
    _require_dx_homogeneous(S)
    n = max((m.dx_length for m in f.terms), default=0)
    state = complete_homogeneous(S, n, track=certify)
    basis = state.current
    nf, wit = _reduce(f, basis.relations, basis.leading_monomials, witness=certify)
    cert = _lift_witness(wit, state.entries) if certify and nf.is_zero() else None
    return Membership(nf.is_zero(), nf, "exact", basis, cert)


def _lift_witness(wit: Certificate, entries: Sequence[Entry]) -> Certificate:
    cert: Certificate = {}
    for sw, c in wit.items():
        cert = _cert_add(cert, _cert_lift(entries[sw.relation].cert, sw.cofactor, sw.shift), c)
    return cert


def member_diff(f: Polynomial, S: RelationSet) -> bool:
    return decide_diff(f, S).member


# ---------------------------------------------------------------------------
# capped Buchberger-Shirshov completion


@dataclass
class CappedCompletion:
    basis: RelationSet
    status: str
    cap: int
    provenance: list[str]
    rounds: int
    entries: list[Entry] = field(repr=False, default_factory=list)

    def __iter__(self):
        yield self.basis
        yield self.status


def buchberger_capped(
    S: RelationSet,
    cap: int,
    *,
    track: bool = False,
    max_size: int | None = None,
    max_rounds: int | None = None,
) -> CappedCompletion:
    """Saturate all compositions whose ambiguity has dx-length <= ``cap``.

    Results are memoized per input.
    """
    key = (S, cap, track)
    hit = _CAPPED_CACHE.get(key)
    if hit is not None:
        if max_size is not None and len(hit.entries) > max_size:
            raise ResourceCapExceeded(
                f"basis grew to {len(hit.entries)} elements under cap {cap} (limit {max_size})"
            )
        return hit
    done = _buchberger_capped(S, cap, track, max_size, max_rounds)
    _CAPPED_CACHE[key] = done
    return done


_CAPPED_CACHE: dict[tuple, CappedCompletion] = {}


def _buchberger_capped(
    S: RelationSet, cap: int, track: bool, max_size: int | None, max_rounds: int | None
) -> CappedCompletion:
    entries = _minimalize_entries(_input_entries(S, track), track)
    done: set[tuple[Polynomial, int, Polynomial, int]] = set()
    rounds = 0
    while True:
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            raise ResourceCapExceeded(f"no saturation after {max_rounds} rounds")
        polys = [e.poly for e in entries]
        shifts = [max(-1, cap - p.lm.dx_length) for p in polys]
        added: list[Entry] = []
        added_polys: set[Polynomial] = set()
        for i, j, t1, t2 in _pairs(entries, lambda k: shifts[k]):
            key = (polys[i], t1, polys[j], t2)
            if key in done:
                continue
            done.add(key)
            l1, l2 = polys[i].lm.shifted(t1), polys[j].lm.shifted(t2)
            if l1.gcd_is_one(l2) or l1.lcm(l2).dx_length > cap:
                continue
            res = _compose_entries(S.alphabet, entries[i], t1, entries[j], t2, track, f"cap {cap}")
            if res is None:
                continue
            r = _reduce_entry(res[1], entries, track)
            if r.poly.is_zero():
                continue
            r = _monic(r)
            if r.poly in added_polys:
                continue
            added_polys.add(r.poly)
            added.append(r)
        if not added:
            break
        entries = _minimalize_entries(entries + added, track)
        if max_size is not None and len(entries) > max_size:
            raise ResourceCapExceeded(
                f"basis grew to {len(entries)} elements under cap {cap} (limit {max_size})"
            )
    basis = RelationSet(S.alphabet, [e.poly for e in entries])
    return CappedCompletion(
        basis, "saturated-under-cap", cap, [e.origin for e in entries], rounds, entries
    )


def decide_capped(
    f: Polynomial, S: RelationSet, cap: int, *, certify: bool = False
) -> Membership:
    """Membership against a capped completion; only "true" answers are sound."""
    cap = max(cap, max((m.dx_length for m in f.terms), default=0))
    done = buchberger_capped(S, cap, track=certify)
    basis = done.basis
    nf, wit = _reduce(f, basis.relations, basis.leading_monomials, witness=certify)
    cert = _lift_witness(wit, done.entries) if certify and nf.is_zero() else None
    return Membership(nf.is_zero(), nf, f"bounded({cap})", basis, cert)


# ---------------------------------------------------------------------------
# irreducible words


def irr_enumerate(
    S: RelationSet,
    max_len: int,
    weight: int | None = None,
    *,
    max_dx: int | None = None,
    max_bracket: int | None = None,
) -> list[Monomial]:
    """Monomials of length <= ``max_len`` not divisible by any ``lm(D^t s)``.

    Brackets must be bounded by one of ``weight`` (with the length bound),
    ``max_dx`` or ``max_bracket``.
    """
    bounds = []
    if weight is not None:
        bounds.append(weight + max_len - 1)
    if max_dx is not None:
        bounds.append(max_dx - 2)
    if max_bracket is not None:
        bounds.append(max_bracket)
    if not bounds:
        raise ValueError("irr_enumerate needs a weight, max_dx or max_bracket bound")
    b = max(-1, min(bounds))
    ngens = len(S.alphabet)
    out = []
    for n in range(max_len + 1):
        for m in monomials_of_length(ngens, n, b):
            if weight is not None and m.weight != weight:
                continue
            if max_dx is not None and m.dx_length > max_dx:
                continue
            if next(_reductions(m, S.leading_monomials), None) is None:
                out.append(m)
    out.sort(key=_key)
    return out


__all__ = [
    "SWord",
    "RelationSet",
    "Entry",
    "CompletionState",
    "StageRecord",
    "Membership",
    "CappedCompletion",
    "divides",
    "find_reduction",
    "find_reductions",
    "normal_form",
    "is_trivial",
    "composition",
    "minimalize",
    "initial_state",
    "stage_step",
    "complete_homogeneous",
    "decide_diff",
    "member_diff",
    "decide_capped",
    "buchberger_capped",
    "irr_enumerate",
    "certificate_value",
    "verify_certificate",
]
